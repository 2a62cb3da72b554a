#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace descpoly {

/// A finite set of positive integers I, the index object of every descent
/// statistic.  m is max(I u {0}), so m == 0 exactly for the empty set.
///
/// Textual encoding (CLI flags, cache keys, CSV columns): comma-separated
/// ascending integers, empty string for the empty set.
class DescentSet {
 public:
  DescentSet() = default;
  explicit DescentSet(std::vector<int> elements);

  static DescentSet parse(std::string_view text);
  std::string encode() const;

  bool empty() const { return elements_.empty(); }
  int size() const { return static_cast<int>(elements_.size()); }
  int m() const { return elements_.empty() ? 0 : elements_.back(); }
  const std::vector<int>& elements() const { return elements_; }
  int at(int t) const;  // 1-based, t in [1, size()]
  bool contains(int x) const;

  // Set transforms used by the recursions.
  DescentSet minus_last() const;         // drop the maximum
  DescentSet shifted(int t) const;       // decrement entries from position t on, drop a 0
  DescentSet drop_shifted(int t) const;  // remove position t, decrement the tail
  DescentSet prime() const;              // entries whose predecessor is absent
  DescentSet double_prime() const;       // prime() minus {1}
  DescentSet complement() const;         // [m] minus I
  DescentSet extended(int t) const;      // append m+1 .. m+t

  auto operator<=>(const DescentSet&) const = default;

 private:
  std::vector<int> elements_;  // strictly increasing, all >= 1
};

/// All nonempty descent sets with maximum <= max_m, in deterministic order
/// (by maximum, then lexicographically by elements).
std::vector<DescentSet> all_descent_sets(int max_m);

}  // namespace descpoly
