#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "descpoly/bigint.hpp"
#include "descpoly/descent_set.hpp"

namespace descpoly {

/// Outcome of a sequence-shape check.  On failure, `index` is the first
/// violating position and `witness` holds the entries involved.
struct SequenceVerdict {
  std::string property;
  bool holds = true;
  int index = -1;
  std::vector<Int> witness;
  bool zero_adjacent = false;  // a log-concavity violation next to a zero entry
};

SequenceVerdict check_log_concave(std::span<const Int> seq);
SequenceVerdict check_monotone(std::span<const Int> seq, bool nondecreasing);
SequenceVerdict check_nonnegative(std::span<const Int> seq);

/// (-1)^m d(I,-n) >= 0 for n = 1..horizon, strictly positive from n = 2 on.
SequenceVerdict check_negative_evaluations(const DescentSet& I, int horizon);

/// sum_{k<m} |c_k - c_{k+1}| <= c_m, exact.
struct CtildeSumResult {
  bool holds;
  Int lhs;
  Int rhs;
};
CtildeSumResult check_ctilde_sum(const DescentSet& I);

/// Least thresholds making the two sufficient root-bound conditions hold
/// for every m from the threshold on (verified across [1, horizon] together
/// with eventual monotonicity of the margin; absent when the condition
/// fails near the horizon).
///
///   small:  t/(t+1) * (1 - 1/(2m+t-1))^(m-2) < 1/2
///   big:    (m-1)(2m+1) < C(t+m-1, t)
struct ConditionThresholds {
  int t;
  std::optional<int> m0_small;
  std::optional<int> m0_big;
};
ConditionThresholds condition_thresholds(int t, int horizon = 200);

/// Exact per-set inequalities on the complement polynomial, for I with
/// m-1 not in I:  doubling 2 d(Ic,k) <= d(Ic,k+1) for m <= k < m+t, and
/// headroom d(Ic,m)(2m+1) <= d(Ic,m+t).
struct GrowthCondition {
  SequenceVerdict doubling;
  SequenceVerdict more_room;
};
GrowthCondition check_growth_condition(const DescentSet& I, int t);

/// Census of the sets not covered by any closed-form root-bound condition.
/// Every set K decomposes canonically as I^t with t one less than the
/// length of the trailing run of consecutive elements (so m-1 is not in I).
/// t = 0 sets are covered by the last-gap bound.  For t >= 1 a set is
/// exceptional when m < m0_small(t) and the big condition misses too;
/// `thresholds` semantics compares m against m0_big(t) (never satisfied for
/// t = 1, 2), per-case semantics evaluates (m-1)(2m+1) < C(t+m-1,t) directly.
struct CensusParams {
  int max_max = 10;                // bound on max(K)
  bool threshold_semantics = true;
};
struct CensusEntry {
  DescentSet set;   // K itself
  DescentSet base;  // I of the canonical decomposition
  int t;
  bool fails_more_room;
};
struct CensusResult {
  int exceptional = 0;
  int fail_more_room = 0;
  std::vector<CensusEntry> entries;
};
CensusResult exceptional_census(const CensusParams& params);

/// Canonical decomposition K = I^t used by the census: t is the trailing
/// run length minus one.
std::pair<DescentSet, int> canonical_extension_split(const DescentSet& K);

/// Exploratory check of the subtraction recursion written on c-entries:
///   c_k(I) = d(I-, m) - (-1)^(m - m^-) c_k(I-)    (c_k(I-) = 0 for k > m^-)
/// Reports the k for which equality fails, if any.
struct CSubtractionIdentity {
  bool all_hold = true;
  std::vector<int> failing_k;
};
CSubtractionIdentity check_c_subtraction_identity(const DescentSet& I);

}  // namespace descpoly
