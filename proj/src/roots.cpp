#include "descpoly/roots.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "descpoly/coefficients.hpp"
#include "descpoly/complex_eval.hpp"

namespace descpoly {

namespace {

namespace mp = boost::multiprecision;
using F50 = mp::cpp_bin_float_50;
using F100 = mp::cpp_bin_float_100;
using F200 = mp::number<mp::cpp_bin_float<200>>;
using F400 = mp::number<mp::cpp_bin_float<400>>;

constexpr int kPrecisionLevels[] = {16, 50, 100, 200, 400};
constexpr int kMaxIterations = 1000;

template <class Real>
Real to_real(const Int& v) {
  if constexpr (std::is_same_v<Real, double>)
    return v.convert_to<double>();
  else
    return Real(v);
}

template <class Real>
Cx<Real> horner(const std::vector<Real>& c, const Cx<Real>& z) {
  Cx<Real> acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Cx<Real>{*it, Real(0)};
  return acc;
}

template <class Real>
struct AberthOutcome {
  std::vector<Cx<Real>> z;
  bool converged = false;
  int iterations = 0;
};

// Simultaneous-correction iteration on a deterministic initial circle.
// The radius is the smaller of the Cauchy bound 1 + max|c_k/c_d| and the
// Fujiwara bound 2 max_k |c_{d-k}/c_d|^{1/k}; the Cauchy bound alone grows
// like the largest coefficient ratio and stalls the iteration for the
// high-degree extended sets.
template <class Real>
AberthOutcome<Real> aberth(const std::vector<Int>& ic) {
  const int d = static_cast<int>(ic.size()) - 1;
  std::vector<Real> c(d + 1), dc(d);
  for (int k = 0; k <= d; ++k) c[k] = to_real<Real>(ic[k]);
  for (int k = 1; k <= d; ++k) dc[k - 1] = c[k] * Real(k);

  using std::abs;
  using std::pow;
  Real cauchy = 0, fujiwara = 0;
  for (int k = 0; k < d; ++k) {
    const Real ratio = abs(c[k] / c[d]);
    cauchy = std::max(cauchy, ratio);
    fujiwara = std::max(fujiwara, Real(pow(ratio, Real(1) / Real(d - k))));
  }
  cauchy += 1;
  fujiwara *= 2;
  const Real radius = std::min(cauchy, std::max(fujiwara, Real(0.5)));

  AberthOutcome<Real> out;
  out.z.resize(d);
  const double step = 2.0 * std::numbers::pi / d;
  const double offset = std::numbers::pi / (2.0 * d);
  for (int i = 0; i < d; ++i) {
    const double th = step * i + offset;
    out.z[i] = Cx<Real>{radius * Real(std::cos(th)), radius * Real(std::sin(th))};
  }

  const Real tol = std::is_same_v<Real, double>
                       ? Real(1e-14)
                       : Real(pow(Real(10), -(std::numeric_limits<Real>::digits10 - 2)));
  // Corrections bottom out at the local rounding floor, which can sit above
  // tol for badly scaled coefficients; accept a stagnated iterate once the
  // floor is small (the certification step is exact either way).
  const Real stagnation_accept = sqrt(tol);
  Real best_worst = std::numeric_limits<Real>::max();
  int stalled = 0;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    Real worst = 0;
    for (int i = 0; i < d; ++i) {
      const Cx<Real> pz = horner(c, out.z[i]);
      if (pz.re == 0 && pz.im == 0) continue;
      const Cx<Real> dpz = horner(dc, out.z[i]);
      Cx<Real> w;
      if (dpz.re == 0 && dpz.im == 0) {
        // Stationary point: nudge off it deterministically.
        w = Cx<Real>{tol * (1 + cx_abs(out.z[i])), tol};
      } else {
        const Cx<Real> newton = pz / dpz;
        Cx<Real> repulsion{};
        for (int j = 0; j < d; ++j) {
          if (j == i) continue;
          repulsion = repulsion + Cx<Real>{Real(1), Real(0)} / (out.z[i] - out.z[j]);
        }
        const Cx<Real> denom = Cx<Real>{Real(1), Real(0)} - newton * repulsion;
        w = (denom.re == 0 && denom.im == 0) ? newton : newton / denom;
      }
      out.z[i] = out.z[i] - w;
      worst = std::max(worst, Real(cx_abs(w) / (1 + cx_abs(out.z[i]))));
    }
    out.iterations = iter;
    if (worst <= tol) {
      out.converged = true;
      break;
    }
    if (worst < best_worst / 2) {
      best_worst = worst;
      stalled = 0;
    } else {
      ++stalled;
    }
    if (stalled >= 12 && worst <= stagnation_accept) {
      out.converged = true;
      break;
    }
  }
  return out;
}

// Exact |p(z)| upper estimate at a double point: rational complex Horner on
// the integer coefficients, square modulus exact, square root in F50.
F50 exact_abs_at(const std::vector<Int>& ic, std::complex<double> z) {
  const Rat x(z.real()), y(z.imag());
  Rat ar = 0, ai = 0;
  for (auto it = ic.rbegin(); it != ic.rend(); ++it) {
    const Rat t = ar * x - ai * y + Rat(*it);
    ai = ar * y + ai * x;
    ar = t;
  }
  const Rat n2 = ar * ar + ai * ai;
  return sqrt(F50(n2)) * (1 + F50(1e-40));
}

std::vector<double> certify_radii(const std::vector<Int>& ic,
                                  const std::vector<std::complex<double>>& roots) {
  const int d = static_cast<int>(roots.size());
  const F50 lead = F50(abs(ic.back()));
  std::vector<double> radii(d);
  for (int i = 0; i < d; ++i) {
    F50 denom = lead;
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      const double dx = roots[i].real() - roots[j].real();
      const double dy = roots[i].imag() - roots[j].imag();
      denom *= sqrt(F50(dx) * F50(dx) + F50(dy) * F50(dy)) * (1 - F50(1e-40));
    }
    if (denom == 0) {
      radii[i] = std::numeric_limits<double>::infinity();
      continue;
    }
    const F50 r = F50(d) * exact_abs_at(ic, roots[i]) / denom * (1 + F50(1e-30));
    radii[i] = r.convert_to<double>() * (1 + 4e-16);
  }
  return radii;
}

bool disks_disjoint(const std::vector<std::complex<double>>& roots,
                    const std::vector<double>& radii) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!std::isfinite(radii[i])) return false;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= radii[i] + radii[j]) return false;
  }
  return true;
}

template <class Real>
std::vector<std::complex<double>> round_roots(const std::vector<Cx<Real>>& z) {
  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (const auto& r : z)
    out.emplace_back(r.re.template convert_to<double>(), r.im.template convert_to<double>());
  return out;
}

template <>
std::vector<std::complex<double>> round_roots<double>(const std::vector<Cx<double>>& z) {
  std::vector<std::complex<double>> out;
  out.reserve(z.size());
  for (const auto& r : z) out.emplace_back(r.re, r.im);
  return out;
}

struct SolveAttempt {
  std::vector<std::complex<double>> roots;
  bool converged = false;
  int iterations = 0;
};

SolveAttempt solve_at(const std::vector<Int>& ic, int digits) {
  switch (digits) {
    case 16: {
      auto r = aberth<double>(ic);
      return {round_roots<double>(r.z), r.converged, r.iterations};
    }
    case 50: {
      auto r = aberth<F50>(ic);
      return {round_roots<F50>(r.z), r.converged, r.iterations};
    }
    case 100: {
      auto r = aberth<F100>(ic);
      return {round_roots<F100>(r.z), r.converged, r.iterations};
    }
    case 200: {
      auto r = aberth<F200>(ic);
      return {round_roots<F200>(r.z), r.converged, r.iterations};
    }
    case 400: {
      auto r = aberth<F400>(ic);
      return {round_roots<F400>(r.z), r.converged, r.iterations};
    }
    default:
      throw std::logic_error("unsupported precision level");
  }
}

ExactPoly poly_gcd(ExactPoly a, ExactPoly b) {
  while (!b.is_zero()) {
    ExactPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a.scale(Rat(1) / a.leading());
  return a;
}

// Yun's square-free decomposition; the product of factor^multiplicity equals
// p up to a constant.  Multiple roots defeat the simultaneous iteration (the
// correction plateaus at any working precision), so each square-free factor
// is solved on its own.
std::vector<std::pair<ExactPoly, int>> square_free_factors(const ExactPoly& p) {
  std::vector<std::pair<ExactPoly, int>> out;
  const ExactPoly dp = p.derivative();
  ExactPoly g = poly_gcd(p, dp);
  if (g.degree() < 1) {
    out.emplace_back(p, 1);
    return out;
  }
  ExactPoly b = p.divide_exact(g);
  ExactPoly d = dp.divide_exact(g) - b.derivative();
  for (int mult = 1; b.degree() > 0; ++mult) {
    ExactPoly a = poly_gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, mult);
    b = b.divide_exact(a);
    d = d.divide_exact(a) - b.derivative();
  }
  return out;
}

void sort_by_angle(std::vector<std::complex<double>>& roots, std::vector<double>& radii) {
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double aa = std::atan2(roots[a].imag(), roots[a].real());
    const double ab = std::atan2(roots[b].imag(), roots[b].real());
    if (aa != ab) return aa < ab;
    return std::abs(roots[a]) < std::abs(roots[b]);
  });
  std::vector<std::complex<double>> rs(roots.size());
  std::vector<double> rr(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rs[i] = roots[order[i]];
    rr[i] = radii[order[i]];
  }
  roots = std::move(rs);
  radii = std::move(rr);
}

}  // namespace

RootSet find_roots(const ExactPoly& p, int precision_digits) {
  if (p.is_zero()) throw std::invalid_argument("find_roots: zero polynomial");
  if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be >= 1");

  RootSet out;
  out.degree = p.degree();
  out.precision_digits = precision_digits;

  // Exact roots at the origin first.
  ExactPoly reduced = p;
  while (reduced.coeff(0) == 0) {
    std::vector<Rat> shifted(reduced.coeffs().begin() + 1, reduced.coeffs().end());
    reduced = ExactPoly(std::move(shifted));
    out.roots.emplace_back(0.0, 0.0);
    out.radii.push_back(0.0);
  }

  int start = 0;
  while (kPrecisionLevels[start] < precision_digits && start + 1 < 5) ++start;
  const int last = std::min(start + 2, 4);

  for (const auto& [factor, multiplicity] : square_free_factors(reduced)) {
    if (factor.degree() < 1) continue;
    const std::vector<Int> ic = factor.cleared_coeffs();
    SolveAttempt best;
    std::vector<double> best_radii;
    bool accepted = false;
    for (int level = start; level <= last; ++level) {
      best = solve_at(ic, kPrecisionLevels[level]);
      best_radii = certify_radii(ic, best.roots);
      out.precision_digits = std::max(out.precision_digits, kPrecisionLevels[level]);
      if (best.converged && disks_disjoint(best.roots, best_radii)) {
        accepted = true;
        break;
      }
    }
    if (!best.converged)
      throw std::runtime_error("find_roots: no convergence within the iteration cap");
    if (!accepted) out.clustered = true;
    out.iterations = std::max(out.iterations, best.iterations);
    for (std::size_t i = 0; i < best.roots.size(); ++i)
      for (int rep = 0; rep < multiplicity; ++rep) {
        out.roots.push_back(best.roots[i]);
        out.radii.push_back(best_radii[i]);
      }
  }
  if (!disks_disjoint(out.roots, out.radii)) out.clustered = true;
  sort_by_angle(out.roots, out.radii);
  return out;
}

Region Region::disk(std::complex<double> center, double radius) {
  if (radius <= 0) throw std::invalid_argument("disk radius must be positive");
  return Region{Kind::Disk, center, radius, 0, 0};
}

Region Region::rm_shifted(int m) {
  if (m < 1) throw std::invalid_argument("region parameter m must be >= 1");
  return Region{Kind::RmShifted, {}, 0, m, 0};
}

Region Region::half_plane_re_ge(double bound) { return Region{Kind::HalfPlaneReGE, {}, 0, 0, bound}; }

Membership in_Rm(std::complex<double> z, int m) {
  // The region is closed under conjugation; normalize to Im >= 0, where
  // every principal argument lies in [0, pi] and arg(z) >= 0 is automatic.
  if (z.imag() < 0) z = std::conj(z);
  double arg_sum = 0, lipschitz = 0;
  for (int i = 1; i <= m; ++i) {
    const std::complex<double> w = z - std::complex<double>(i - 1, 0);
    if (w == 0.0) return {false, true, 0.0};  // argument branch point
    arg_sum += std::atan2(w.imag(), w.real());
    lipschitz += 1.0 / std::abs(w);
  }
  const double margin = (std::numbers::pi - arg_sum) / lipschitz;
  return {arg_sum < std::numbers::pi, false, margin};
}

Membership in_region(std::complex<double> z, const Region& r) {
  switch (r.kind) {
    case Region::Kind::Disk: {
      const double margin = r.radius - std::abs(z - r.center);
      return {margin >= 0, margin == 0, margin};
    }
    case Region::Kind::HalfPlaneReGE: {
      const double margin = z.real() - r.bound;
      return {margin >= 0, margin == 0, margin};
    }
    case Region::Kind::RmShifted:
      return in_Rm(std::complex<double>(r.m - 2, 0) - z, r.m);
  }
  throw std::logic_error("unreachable");
}

RegionReport check_root_regions(const DescentSet& I, double tolerance) {
  if (I.empty()) throw std::invalid_argument("region check needs a nonempty set");
  RegionReport rep;
  rep.set = I.encode();
  const int m = I.m();
  rep.m = m;
  rep.gap_case = I.size() == 1 || I.at(I.size()) - I.at(I.size() - 1) >= 2;
  rep.roots = find_roots(to_exact_poly(descent_poly(I)));
  rep.clustered = rep.roots.clustered;

  double widen = 0;
  if (rep.clustered)
    for (double r : rep.roots.radii) widen = std::max(widen, r);

  auto note = [&](std::vector<std::string>& sink, bool& flag, const std::string& what,
                  std::complex<double> z) {
    flag = false;
    sink.push_back("{" + rep.set + "} root (" + std::to_string(z.real()) + ", " +
                   std::to_string(z.imag()) + "): " + what);
  };

  for (std::size_t i = 0; i < rep.roots.roots.size(); ++i) {
    const std::complex<double> z = rep.roots.roots[i];
    const double slack = tolerance + rep.roots.radii[i] + widen;
    if (std::abs(z) > m + slack) note(rep.violations, rep.theorem_ok, "|z| > m", z);
    if (std::abs(std::complex<double>(m, 0) - z) > m + 1 + slack)
      note(rep.violations, rep.theorem_ok, "|m - z| > m + 1", z);
    if (z.real() < -1 - slack) note(rep.violations, rep.theorem_ok, "Re z < -1", z);
    if (rep.gap_case && std::abs(std::complex<double>(m - 1, 0) - z) > m + slack)
      note(rep.violations, rep.theorem_ok, "|m - 1 - z| > m", z);
    const Membership excl = in_Rm(std::complex<double>(m - 2, 0) - z, m);
    if (!excl.boundary && excl.inside && excl.margin > slack)
      note(rep.violations, rep.theorem_ok, "inside the excluded shifted region", z);
    if (std::abs(z - std::complex<double>((m - 1) / 2.0, 0)) > (m + 1) / 2.0 + slack)
      note(rep.conjecture_violations, rep.conjecture_ok, "outside the conjectured disk", z);
  }
  return rep;
}

ClusterReport real_root_clustering(const DescentSet& I, int t_max, double tolerance) {
  if (I.empty()) throw std::invalid_argument("clustering needs a nonempty set");
  if (I.contains(I.m() - 1))
    throw std::invalid_argument("clustering requires m-1 not in I");
  ClusterReport rep;
  rep.set = I.encode();
  rep.t_max = t_max;
  rep.tolerance = tolerance;

  for (int t = 0; t <= t_max; ++t) {
    const DescentSet K = I.extended(t);
    const int top = K.m();
    // Near-integer roots make the power basis ill-conditioned, so ask for
    // working precision proportional to the degree.
    const int digits = std::max(16, 3 * top + 10);
    const RootSet rs = find_roots(to_exact_poly(descent_poly(K)), digits);

    ClusterRow row;
    row.t = t;
    row.degree = rs.degree;
    row.roots_real = true;
    row.roots_in_interval = true;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      const double slack = tolerance + rs.radii[i];
      row.max_im = std::max(row.max_im, std::abs(rs.roots[i].imag()));
      if (std::abs(rs.roots[i].imag()) > slack) row.roots_real = false;
      if (rs.roots[i].real() < -1 - slack || rs.roots[i].real() > top + slack)
        row.roots_in_interval = false;
    }
    row.all_targets = true;
    row.targets_sans_minus_one = true;
    for (int v = -1; v <= top; ++v) {
      if (v == I.m() - 1) continue;
      int hits = 0;
      for (const auto& z : rs.roots)
        if (std::abs(z - std::complex<double>(v, 0)) <= 0.25) ++hits;
      if (hits != 1) {
        row.all_targets = false;
        if (v != -1) row.targets_sans_minus_one = false;
        row.unmatched_targets.push_back(v);
      }
    }
    if (row.all_targets && row.roots_real && !rep.first_all) rep.first_all = t;
    if (row.targets_sans_minus_one && row.roots_real && !rep.first_sans_minus_one)
      rep.first_sans_minus_one = t;
    rep.rows.push_back(std::move(row));
  }
  if (rep.first_sans_minus_one) {
    rep.persists = true;
    for (int t = *rep.first_sans_minus_one; t <= t_max; ++t) {
      const ClusterRow& row = rep.rows[t];
      if (!(row.targets_sans_minus_one && row.roots_real)) rep.persists = false;
    }
  }
  return rep;
}

}  // namespace descpoly
