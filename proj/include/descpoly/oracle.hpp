#pragma once

#include <map>
#include <utility>
#include <vector>

#include "descpoly/bigint.hpp"
#include "descpoly/descent_set.hpp"

namespace descpoly {

// Enumeration guards: n! permutations resp. |P|! rank assignments.
inline constexpr int kMaxOracleN = 12;
inline constexpr int kMaxPosetSize = 8;

/// Number of permutations of [n] with descent set exactly I, by full
/// enumeration of S_n in lexicographic order.
Int count_descents(const DescentSet& I, int n);

/// One pass over S_n, tallied by descent set.  Sets absent from the map
/// have count 0 (only sets with max < n occur).
std::map<DescentSet, Int> descent_census(int n);

/// counts[k] = #{pi in D(I,n) : pi_{m+1} = k} for k = 1..m (index 0 unused);
/// entries for k > m are always zero and are not stored.
std::vector<Int> position_counts(const DescentSet& I, int n);

/// Position statistic of the (m+1)-st entry over D(I, m+1).
class HeightVector {
 public:
  explicit HeightVector(std::vector<Int> counts);  // counts[k], k = 1..m at index k
  int max_position() const { return static_cast<int>(counts_.size()) - 1; }
  const Int& at(int k) const;  // k in [1, m]
  Int total() const;

 private:
  std::vector<Int> counts_;
};

HeightVector position_statistics(const DescentSet& I);

/// Finite poset given by its strict order relation (transitive closure of
/// the covers passed in).  Elements are 0-based.
class Poset {
 public:
  Poset(int size, const std::vector<std::pair<int, int>>& below_pairs);

  /// Chain-or-reversed-chain order on u_1..u_{m+1} (0-based internally):
  /// u_i > u_{i+1} when i is in I, u_i < u_{i+1} otherwise.
  static Poset zigzag(const DescentSet& I);

  int size() const { return n_; }
  bool below(int a, int b) const { return less_[a][b]; }

 private:
  int n_;
  std::vector<std::vector<bool>> less_;
};

/// All order-preserving bijections to the chain [1..size], lexicographic by
/// rank vector.  ext[i] is the rank assigned to element i.
std::vector<std::vector<int>> linear_extensions(const Poset& P);

/// Exponent-indexed height polynomial of element v: coeffs[k] counts the
/// extensions with rank(v) = k + 1.
std::vector<Int> height_polynomial(const Poset& P, int v);

}  // namespace descpoly
