// descpoly: exact descent-polynomial computations, verification sweeps and
// root-locus emitters.  Exit codes: 0 ok, 1 theorem violation, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "descpoly/coefficients.hpp"
#include "descpoly/oracle.hpp"
#include "descpoly/sweeps.hpp"

namespace dp = descpoly;

namespace {

struct Flags {
  std::string set;
  long long n = 0;
  std::string basis = "a";
  int max_m = 9;
  std::string checks;
  std::string out;
  std::string in;
  int t_max = 40;
  double tol = 1e-6;
  unsigned workers = 1;
  std::string cache;
  bool json = false;
  std::string poly = "d";
  int m_filter = -1;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size() && !s.empty()) {
    const auto comma = s.find(',', pos);
    out.push_back(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void print_vector(std::ostream& os, const dp::CoeffVector& v) {
  os << '[';
  for (int k = 0; k < v.length(); ++k) {
    if (k) os << ", ";
    const auto& c = v.coeffs()[k];
    if (boost::multiprecision::denominator(c) == 1)
      os << boost::multiprecision::numerator(c);
    else
      os << c;
  }
  os << "]\n";
}

int cmd_eval(const Flags& f) {
  const dp::DescentSet I = dp::DescentSet::parse(f.set);
  std::cout << dp::descent_value(I, dp::Int(f.n)) << "\n";
  return 0;
}

int cmd_coeffs(const Flags& f) {
  const dp::DescentSet I = dp::DescentSet::parse(f.set);
  const dp::BasisTag tag = dp::parse_basis(f.basis);
  print_vector(std::cout, dp::convert(dp::descent_poly(I), tag));
  return 0;
}

int cmd_oracle(const Flags& f, bool positions) {
  const dp::DescentSet I = dp::DescentSet::parse(f.set);
  if (positions) {
    const dp::HeightVector counts = dp::position_statistics(I);
    for (int k = 1; k <= counts.max_position(); ++k)
      std::cout << k << ' ' << counts.at(k) << "\n";
    return 0;
  }
  std::cout << dp::count_descents(I, static_cast<int>(f.n)) << "\n";
  return 0;
}

int cmd_roots(const Flags& f) {
  const dp::DescentSet I = dp::DescentSet::parse(f.set);
  dp::ExactPoly p;
  if (f.poly == "d")
    p = dp::to_exact_poly(dp::descent_poly(I));
  else if (f.poly == "abar")
    p = dp::abar_gen_poly(I);
  else
    throw CLI::ValidationError("--poly must be 'd' or 'abar'");
  const dp::RootSet rs = dp::find_roots(p);
  if (f.json) {
    nlohmann::json j;
    j["set"] = I.encode();
    j["poly"] = f.poly;
    j["degree"] = rs.degree;
    j["clustered"] = rs.clustered;
    j["roots"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
      j["roots"].push_back({{"re", dp::format_sig(rs.roots[i].real())},
                            {"im", dp::format_sig(rs.roots[i].imag())},
                            {"radius", dp::format_sig(rs.radii[i])}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    std::cout << dp::format_sig(rs.roots[i].real()) << ' ' << dp::format_sig(rs.roots[i].imag())
              << ' ' << dp::format_sig(rs.radii[i]) << "\n";
  return 0;
}

int cmd_verify(const Flags& f) {
  dp::VerifyOptions options;
  options.max_m = f.max_m;
  options.tolerance = f.tol;
  options.workers = f.workers;
  if (!f.checks.empty()) options.checks = split_list(f.checks);
  const dp::Report report = dp::run_verify(options);
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "pass" : (c.informational ? "info" : "FAIL")) << "  " << c.name
              << "  [" << c.universe << "]";
    if (!c.violations.empty()) std::cout << "  violations=" << c.violations.size();
    std::cout << "\n";
    for (const auto& note : c.notes) std::cout << "      " << note << "\n";
    for (std::size_t i = 0; i < c.violations.size() && i < 5; ++i)
      std::cout << "      {" << c.violations[i].set << "} " << c.violations[i].detail << "\n";
  }
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) throw std::runtime_error("cannot open output file: " + f.out);
    file << report.to_json().dump(2) << "\n";
  }
  return report.all_required_passed() ? 0 : 1;
}

int cmd_sweep(const Flags& f) {
  const auto rows = dp::root_sweep(f.max_m, f.workers);
  std::ofstream file;
  dp::write_roots_csv(open_or_stdout(f.out, file), rows);
  return 0;
}

int cmd_plot(const Flags& f) {
  std::ifstream in(f.in);
  if (!in) throw std::runtime_error("cannot open input file: " + f.in);
  const auto rows = dp::read_roots_csv(in);
  std::ofstream file;
  dp::write_roots_svg(open_or_stdout(f.out, file), rows,
                      f.m_filter >= 0 ? std::optional<int>(f.m_filter) : std::nullopt);
  return 0;
}

int cmd_table1(const Flags& f) {
  dp::CensusParams params;
  params.max_max = f.max_m;
  const dp::Table1 table = dp::make_table1(params);
  std::cout << "  t | gap-bound | small-cond | big-cond | headroom\n";
  for (const auto& r : table.rows) {
    std::printf("%4s | %9s | %10s | %8s | %8s\n", r.t_label.c_str(), r.gap_bound.c_str(),
                r.small_threshold.c_str(), r.big_threshold.c_str(),
                r.headroom_threshold.c_str());
  }
  std::cout << "census over max(I) <= " << params.max_max << ": " << table.census.exceptional
            << " sets fail the three closed-form conditions, " << table.census.fail_more_room
            << " of them also fail the headroom inequality\n";
  if (f.json) {
    nlohmann::json j;
    j["exceptional"] = table.census.exceptional;
    j["fail_more_room"] = table.census.fail_more_room;
    j["sets"] = nlohmann::json::array();
    for (const auto& e : table.census.entries)
      j["sets"].push_back({{"set", e.set.encode()},
                           {"base", e.base.encode()},
                           {"t", e.t},
                           {"fails_more_room", e.fails_more_room}});
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_cluster(const Flags& f) {
  const dp::DescentSet I = dp::DescentSet::parse(f.set);
  const dp::ClusterReport rep = dp::real_root_clustering(I, f.t_max, f.tol);
  if (f.json) {
    nlohmann::json j;
    j["set"] = rep.set;
    j["t_max"] = rep.t_max;
    j["first_all_targets"] = rep.first_all ? nlohmann::json(*rep.first_all) : nlohmann::json();
    j["first_sans_minus_one"] =
        rep.first_sans_minus_one ? nlohmann::json(*rep.first_sans_minus_one) : nlohmann::json();
    j["persists"] = rep.persists;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows)
      j["rows"].push_back({{"t", r.t},
                           {"degree", r.degree},
                           {"all_targets", r.all_targets},
                           {"targets_sans_minus_one", r.targets_sans_minus_one},
                           {"roots_real", r.roots_real},
                           {"max_im", dp::format_sig(r.max_im)},
                           {"unmatched", r.unmatched_targets}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& r : rep.rows) {
    std::cout << "t=" << r.t << " degree=" << r.degree
              << " targets-held=" << (r.targets_sans_minus_one ? "yes" : "no")
              << " (-1 included: " << (r.all_targets ? "yes" : "no") << ")"
              << " real=" << (r.roots_real ? "yes" : "no")
              << " max|Im|=" << dp::format_sig(r.max_im) << "\n";
  }
  std::cout << "first t with every target except -1 matched: "
            << (rep.first_sans_minus_one ? std::to_string(*rep.first_sans_minus_one) : "none")
            << (rep.persists ? " (persists through t_max)" : "") << "\n";
  std::cout << "the full target list (including -1) exceeds the root count by one and was never "
               "matched\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact descent-polynomial library and verification CLI"};
  app.require_subcommand(1);
  Flags f;

  app.add_option("--cache", f.cache, "coefficient cache file (or env DESCPOLY_CACHE)");

  auto* eval = app.add_subcommand("eval", "evaluate d(I, n) exactly");
  eval->add_option("--set", f.set, "descent set, e.g. 1,2,5 (empty for the empty set)");
  eval->add_option("--n", f.n, "evaluation point (any integer)")->required();

  auto* coeffs = app.add_subcommand("coeffs", "print a coefficient vector");
  coeffs->add_option("--set", f.set);
  coeffs->add_option("--basis", f.basis, "a | c | abar | ctilde | binomial | power");

  auto* oracle = app.add_subcommand("oracle", "brute-force enumeration counts");
  oracle->add_option("--set", f.set);
  oracle->add_option("--n", f.n, "permutation size (guarded, <= 12)");
  bool positions = false;
  oracle->add_flag("--positions", positions, "print the position statistic at n = m+1");

  auto* roots = app.add_subcommand("roots", "certified complex roots");
  roots->add_option("--set", f.set);
  roots->add_option("--poly", f.poly, "d (default) or abar");
  roots->add_flag("--json", f.json);

  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  verify->add_option("--max-m", f.max_m);
  verify->add_option("--checks", f.checks, "comma list; default all");
  verify->add_option("--tol", f.tol);
  verify->add_option("--workers", f.workers);
  verify->add_option("--out", f.out, "write the JSON report here");

  auto* sweep = app.add_subcommand("sweep", "write the root CSV for max(I) <= max-m");
  sweep->add_option("--max-m", f.max_m);
  sweep->add_option("--workers", f.workers);
  sweep->add_option("--out", f.out);

  auto* plot = app.add_subcommand("plot", "render a roots CSV as SVG");
  plot->add_option("--in", f.in)->required();
  plot->add_option("--out", f.out);
  plot->add_option("--m", f.m_filter, "only plot this maximum");

  auto* table1 = app.add_subcommand("table1", "threshold table and exceptional census");
  table1->add_option("--max-m", f.max_m, "census horizon on max(I)")->default_val(10);
  table1->add_flag("--json", f.json);

  auto* cluster = app.add_subcommand("cluster", "real-root clustering of the extended sets");
  cluster->add_option("--set", f.set)->required();
  cluster->add_option("--t-max", f.t_max);
  cluster->add_option("--tol", f.tol);
  cluster->add_flag("--json", f.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (f.cache.empty())
    if (const char* env = std::getenv("DESCPOLY_CACHE")) f.cache = env;
  try {
    if (!f.cache.empty() && std::filesystem::exists(f.cache))
      dp::descent_cache().load_file(f.cache);

    int rc = 0;
    if (eval->parsed()) rc = cmd_eval(f);
    else if (coeffs->parsed()) rc = cmd_coeffs(f);
    else if (oracle->parsed()) rc = cmd_oracle(f, positions);
    else if (roots->parsed()) rc = cmd_roots(f);
    else if (verify->parsed()) rc = cmd_verify(f);
    else if (sweep->parsed()) rc = cmd_sweep(f);
    else if (plot->parsed()) rc = cmd_plot(f);
    else if (table1->parsed()) rc = cmd_table1(f);
    else if (cluster->parsed()) rc = cmd_cluster(f);

    if (!f.cache.empty()) dp::descent_cache().save_file(f.cache);
    return rc;
  } catch (const dp::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
