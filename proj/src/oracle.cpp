#include "descpoly/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace descpoly {

namespace {

void check_oracle_n(const DescentSet& I, int n) {
  if (n <= I.m()) throw std::invalid_argument("oracle requires n > max(I)");
  if (n < 1 || n > kMaxOracleN) throw std::invalid_argument("oracle guard: n must be in [1, 12]");
}

std::vector<int> descent_positions(const std::vector<int>& pi) {
  std::vector<int> des;
  for (int i = 0; i + 1 < static_cast<int>(pi.size()); ++i)
    if (pi[i] > pi[i + 1]) des.push_back(i + 1);
  return des;
}

}  // namespace

Int count_descents(const DescentSet& I, int n) {
  check_oracle_n(I, n);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  Int count = 0;
  do {
    if (descent_positions(pi) == I.elements()) ++count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

std::map<DescentSet, Int> descent_census(int n) {
  if (n < 1 || n > kMaxOracleN) throw std::invalid_argument("oracle guard: n must be in [1, 12]");
  std::map<DescentSet, Int> tally;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    tally[DescentSet(descent_positions(pi))] += 1;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return tally;
}

std::vector<Int> position_counts(const DescentSet& I, int n) {
  if (I.empty()) throw std::invalid_argument("position statistics need a nonempty set");
  check_oracle_n(I, n);
  const int m = I.m();
  std::vector<Int> counts(m + 1);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    if (descent_positions(pi) == I.elements()) {
      const int k = pi[m];  // value at position m+1, 1-based
      if (k <= m) counts[k] += 1;
      // k > m cannot occur: position m+1 starts the final ascending run.
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return counts;
}

HeightVector::HeightVector(std::vector<Int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("empty height vector");
}

const Int& HeightVector::at(int k) const {
  if (k < 1 || k > max_position()) throw std::out_of_range("height vector index");
  return counts_[k];
}

Int HeightVector::total() const {
  Int s = 0;
  for (const auto& c : counts_) s += c;
  return s;
}

HeightVector position_statistics(const DescentSet& I) {
  return HeightVector(position_counts(I, I.m() + 1));
}

Poset::Poset(int size, const std::vector<std::pair<int, int>>& below_pairs) : n_(size) {
  if (size < 1 || size > kMaxPosetSize)
    throw std::invalid_argument("poset guard: size must be in [1, 8]");
  less_.assign(n_, std::vector<bool>(n_, false));
  for (auto [a, b] : below_pairs) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
      throw std::invalid_argument("bad cover pair");
    less_[a][b] = true;
  }
  // Warshall closure.
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (less_[i][k])
        for (int j = 0; j < n_; ++j)
          if (less_[k][j]) less_[i][j] = true;
  for (int i = 0; i < n_; ++i)
    if (less_[i][i]) throw std::invalid_argument("relation has a cycle");
}

Poset Poset::zigzag(const DescentSet& I) {
  const int m = I.m();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m; ++i) {
    if (I.contains(i))
      pairs.emplace_back(i, i - 1);  // u_{i+1} below u_i
    else
      pairs.emplace_back(i - 1, i);
  }
  return Poset(m + 1, pairs);
}

std::vector<std::vector<int>> linear_extensions(const Poset& P) {
  const int n = P.size();
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (P.below(a, b) && rank[a] > rank[b]) ok = false;
    if (ok) out.push_back(rank);
  } while (std::next_permutation(rank.begin(), rank.end()));
  return out;
}

std::vector<Int> height_polynomial(const Poset& P, int v) {
  if (v < 0 || v >= P.size()) throw std::out_of_range("poset element");
  std::vector<Int> coeffs(P.size());
  for (const auto& ext : linear_extensions(P)) coeffs[ext[v] - 1] += 1;
  return coeffs;
}

}  // namespace descpoly
