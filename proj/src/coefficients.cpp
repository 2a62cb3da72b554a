#include "descpoly/coefficients.hpp"

#include <fstream>
#include <sstream>

namespace descpoly {

namespace {

const CoeffVector kOne(BasisTag::ABase, 0, std::vector<Int>{1});

void check_nonnegative_or_throw(const CoeffVector& v, const DescentSet& I, const char* what) {
  for (int k = 0; k < v.length(); ++k)
    if (v.coeffs()[k] < 0)
      throw TheoremViolation(std::string(what) + " coefficient negative for {" + I.encode() +
                             "} at index " + std::to_string(k));
}

}  // namespace

std::optional<CoeffVector> MemoCache::find(const DescentSet& I) const {
  std::lock_guard lock(mu_);
  auto it = map_.find(I.encode());
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(const DescentSet& I, const CoeffVector& v) {
  std::lock_guard lock(mu_);
  map_.emplace(I.encode(), v);
}

std::size_t MemoCache::size() const {
  std::lock_guard lock(mu_);
  return map_.size();
}

void MemoCache::clear() {
  std::lock_guard lock(mu_);
  map_.clear();
}

void MemoCache::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto p1 = line.find(';');
    const auto p2 = line.find(';', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw std::runtime_error("bad cache record: " + line);
    const DescentSet I = DescentSet::parse(line.substr(0, p1));
    const int m = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
    if (m != I.m()) throw std::runtime_error("cache record m mismatch: " + line);
    std::vector<Int> coeffs;
    std::stringstream rest(line.substr(p2 + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) coeffs.emplace_back(tok);
    insert(I, CoeffVector(BasisTag::ABase, m, std::move(coeffs)));
  }
}

void MemoCache::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file: " + path);
  std::lock_guard lock(mu_);
  for (const auto& [key, v] : map_) {
    out << key << ';' << v.m() << ';';
    for (int k = 0; k < v.length(); ++k) {
      if (k) out << ',';
      out << v.int_at(k);
    }
    out << '\n';
  }
}

MemoCache& descent_cache() {
  static MemoCache cache;
  return cache;
}

MemoCache& additive_cache() {
  static MemoCache cache;
  return cache;
}

CoeffVector descent_poly(const DescentSet& I, MemoCache& cache) {
  if (I.empty()) return kOne;
  if (auto hit = cache.find(I)) return *hit;

  const DescentSet prev = I.minus_last();
  const CoeffVector sub = descent_poly(prev, cache);
  const int m = I.m();
  const int mp = prev.m();
  const Int d_prev_at_m = evaluate_int(sub, m);

  // C(n,m) = sum_j C(n-m,j) C(m,j) and C(n-mp,k) = sum_j C(n-m,j) C(m-mp,k-j).
  std::vector<Int> a(m + 1);
  for (int j = 0; j <= m; ++j) {
    Int rebased = 0;
    for (int k = j; k <= mp; ++k) rebased += sub.int_at(k) * binomial(m - mp, k - j);
    a[j] = d_prev_at_m * binomial(m, j) - rebased;
  }
  CoeffVector result(BasisTag::ABase, m, std::move(a));
  check_nonnegative_or_throw(result, I, "a");
  cache.insert(I, result);
  return result;
}

CoeffVector descent_poly(const DescentSet& I) { return descent_poly(I, descent_cache()); }

CoeffVector descent_poly_additive(const DescentSet& I) {
  if (I.empty()) return kOne;
  MemoCache& cache = additive_cache();
  if (auto hit = cache.find(I)) return *hit;

  const int m = I.m();
  const DescentSet iprime = I.prime();
  const DescentSet idprime = I.double_prime();
  std::vector<CoeffVector> shift_terms, drop_terms;
  for (int t = 1; t <= I.size(); ++t) {
    const int e = I.at(t);
    if (e == m) continue;
    if (idprime.contains(e)) shift_terms.push_back(descent_poly_additive(I.shifted(t)));
    if (iprime.contains(e)) drop_terms.push_back(descent_poly_additive(I.drop_shifted(t)));
  }
  const DescentSet prev = I.minus_last();
  const Int d_prev = evaluate_int(descent_poly_additive(prev), m - 1);

  // Accumulate values d(I, m..2m) from the difference equation, then take
  // forward differences at base point m to obtain the ABase entries.
  std::vector<Int> values(m + 1);
  values[0] = 0;  // d(I, m)
  for (int s = 0; s < m; ++s) {
    const Int n = m + s;
    Int delta = d_prev * binomial(n, m - 1);
    for (const auto& q : shift_terms) delta += evaluate_int(q, n);
    for (const auto& q : drop_terms) delta += evaluate_int(q, n);
    values[s + 1] = values[s] + delta;
  }
  std::vector<Int> diffs = values;
  for (int level = 1; level <= m; ++level)
    for (int j = m; j >= level; --j) diffs[j] -= diffs[j - 1];

  CoeffVector result(BasisTag::ABase, m, std::move(diffs));
  check_nonnegative_or_throw(result, I, "a");
  cache.insert(I, result);
  return result;
}

Int descent_value(const DescentSet& I, const Int& n) { return evaluate_int(descent_poly(I), n); }

CoeffVector a_coeffs(const DescentSet& I) { return descent_poly(I); }

CoeffVector c_coeffs(const DescentSet& I) {
  CoeffVector c = convert(descent_poly(I), BasisTag::CBase);
  check_nonnegative_or_throw(c, I, "c");
  return c;
}

CoeffVector abar_coeffs(const DescentSet& I) {
  if (I.empty()) throw std::invalid_argument("abar coefficients need a nonempty set");
  CoeffVector v = convert(descent_poly(I), BasisTag::ABarBase);
  check_nonnegative_or_throw(v, I, "abar");
  return v;
}

CoeffVector ctilde_coeffs(const DescentSet& I) {
  return convert(descent_poly(I), BasisTag::CTildeBase);
}

Int c_recurrence_step(const DescentSet& I, int k) {
  if (I.empty()) throw std::invalid_argument("c recurrence needs a nonempty set");
  const int m = I.m();
  if (k < 0 || k > m - 1) throw std::out_of_range("c recurrence step index");
  const DescentSet iprime = I.prime();
  const DescentSet idprime = I.double_prime();
  Int acc = evaluate_int(descent_poly(I.minus_last()), m - 1);
  for (int t = 1; t <= I.size(); ++t) {
    const int e = I.at(t);
    if (e == m) continue;
    if (idprime.contains(e)) acc += c_coeffs(I.shifted(t)).int_at(k);
    if (iprime.contains(e)) acc += c_coeffs(I.drop_shifted(t)).int_at(k);
  }
  return acc;
}

ExactPoly a_gen_poly(const DescentSet& I) {
  const CoeffVector a = a_coeffs(I);
  return ExactPoly(std::vector<Rat>(a.coeffs().begin(), a.coeffs().end()));
}

ExactPoly abar_gen_poly(const DescentSet& I) {
  const CoeffVector abar = abar_coeffs(I);
  return ExactPoly(std::vector<Rat>(abar.coeffs().begin(), abar.coeffs().end()));
}

}  // namespace descpoly
