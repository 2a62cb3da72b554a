#include "descpoly/analysis.hpp"

#include <stdexcept>

#include "descpoly/coefficients.hpp"

namespace descpoly {

SequenceVerdict check_log_concave(std::span<const Int> seq) {
  SequenceVerdict v{.property = "log-concave"};
  for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
    if (seq[k - 1] * seq[k + 1] > seq[k] * seq[k]) {
      v.holds = false;
      v.index = static_cast<int>(k);
      v.witness = {seq[k - 1], seq[k], seq[k + 1]};
      v.zero_adjacent = seq[k - 1] == 0 || seq[k] == 0 || seq[k + 1] == 0;
      return v;
    }
  }
  return v;
}

SequenceVerdict check_monotone(std::span<const Int> seq, bool nondecreasing) {
  SequenceVerdict v{.property = nondecreasing ? "nondecreasing" : "nonincreasing"};
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const bool bad = nondecreasing ? seq[k - 1] > seq[k] : seq[k - 1] < seq[k];
    if (bad) {
      v.holds = false;
      v.index = static_cast<int>(k);
      v.witness = {seq[k - 1], seq[k]};
      return v;
    }
  }
  return v;
}

SequenceVerdict check_nonnegative(std::span<const Int> seq) {
  SequenceVerdict v{.property = "nonnegative"};
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] < 0) {
      v.holds = false;
      v.index = static_cast<int>(k);
      v.witness = {seq[k]};
      return v;
    }
  }
  return v;
}

SequenceVerdict check_negative_evaluations(const DescentSet& I, int horizon) {
  if (I.empty()) throw std::invalid_argument("negative evaluations need a nonempty set");
  SequenceVerdict v{.property = "alternating-sign-at-negatives"};
  const CoeffVector p = descent_poly(I);
  const int sign = I.m() % 2 == 0 ? 1 : -1;
  for (int n = 1; n <= horizon; ++n) {
    const Int value = sign * evaluate_int(p, Int(-n));
    const bool bad = n == 1 ? value < 0 : value <= 0;
    if (bad) {
      v.holds = false;
      v.index = n;
      v.witness = {value};
      return v;
    }
  }
  return v;
}

CtildeSumResult check_ctilde_sum(const DescentSet& I) {
  if (I.empty()) throw std::invalid_argument("ctilde sum needs a nonempty set");
  const std::vector<Int> c = c_coeffs(I).ints();
  const int m = I.m();
  Int lhs = 0;
  for (int k = 0; k < m; ++k) lhs += abs(c[k] - c[k + 1]);
  return {lhs <= c[m], lhs, c[m]};
}

namespace {

// t/(t+1) * ((2m+t-2)/(2m+t-1))^(m-2) < 1/2, cleared to integers.
// For m = 1 the exponent is negative; compare with the power on the left.
bool small_condition_holds(int m, int t) {
  const Int base_num = 2 * m + t - 2;
  const Int base_den = 2 * m + t - 1;
  Int lhs = 2 * t;
  Int rhs = t + 1;
  const int e = m - 2;
  if (e >= 0) {
    lhs *= pow(base_num, e);
    rhs *= pow(base_den, e);
  } else {
    lhs *= pow(base_den, -e);
    rhs *= pow(base_num, -e);
  }
  return lhs < rhs;
}

// (m-1)(2m+1) < C(t+m-1, t); strict, which is what reproduces the
// published thresholds (non-strict would move m0(4) from 3 to 1).
bool big_condition_holds(int m, int t) {
  return Int((m - 1)) * (2 * m + 1) < binomial(Int(t + m - 1), t);
}

std::optional<int> last_failure_threshold(int t, int horizon, bool (*cond)(int, int)) {
  int last_fail = 0;
  for (int m = 1; m <= horizon; ++m)
    if (!cond(m, t)) last_fail = m;
  if (last_fail >= horizon - 10) return std::nullopt;  // still failing near the horizon
  return last_fail + 1;
}

}  // namespace

ConditionThresholds condition_thresholds(int t, int horizon) {
  if (t < 1) throw std::invalid_argument("condition thresholds need t >= 1");
  ConditionThresholds out{.t = t, .m0_small = std::nullopt, .m0_big = std::nullopt};
  out.m0_small = last_failure_threshold(t, horizon, &small_condition_holds);
  out.m0_big = last_failure_threshold(t, horizon, &big_condition_holds);
  return out;
}

GrowthCondition check_growth_condition(const DescentSet& I, int t) {
  if (I.empty()) throw std::invalid_argument("growth condition needs a nonempty set");
  const int m = I.m();
  if (I.contains(m - 1)) throw std::invalid_argument("growth condition requires m-1 not in I");
  const CoeffVector comp = descent_poly(I.complement());

  GrowthCondition out;
  out.doubling.property = "complement-doubling";
  for (int k = m; k < m + t; ++k) {
    const Int lhs = 2 * evaluate_int(comp, k);
    const Int rhs = evaluate_int(comp, k + 1);
    if (lhs > rhs) {
      out.doubling.holds = false;
      out.doubling.index = k;
      out.doubling.witness = {lhs, rhs};
      break;
    }
  }
  out.more_room.property = "complement-headroom";
  const Int lhs = evaluate_int(comp, m) * (2 * m + 1);
  const Int rhs = evaluate_int(comp, m + t);
  if (lhs > rhs) {
    out.more_room.holds = false;
    out.more_room.index = m;
    out.more_room.witness = {lhs, rhs};
  }
  return out;
}

std::pair<DescentSet, int> canonical_extension_split(const DescentSet& K) {
  if (K.empty()) throw std::invalid_argument("cannot split the empty set");
  const auto& e = K.elements();
  int run = 1;
  for (int j = static_cast<int>(e.size()) - 1; j > 0 && e[j - 1] == e[j] - 1; --j) ++run;
  const int t = run - 1;
  std::vector<int> base(e.begin(), e.end() - t);
  return {DescentSet(std::move(base)), t};
}

CensusResult exceptional_census(const CensusParams& params) {
  CensusResult out;
  std::optional<int> small_cache[5], big_cache[5];
  for (int t = 1; t <= 4; ++t) {
    const auto th = condition_thresholds(t);
    small_cache[t] = th.m0_small;
    big_cache[t] = th.m0_big;
  }
  for (const DescentSet& K : all_descent_sets(params.max_max)) {
    auto [base, t] = canonical_extension_split(K);
    if (t == 0) continue;  // last gap >= 2, covered by the shifted-disk bound
    const int m = base.m();
    bool small_ok, big_ok;
    if (params.threshold_semantics) {
      small_ok = t <= 4 && small_cache[t] && m >= *small_cache[t];
      big_ok = t <= 4 ? (big_cache[t] && m >= *big_cache[t]) : true;  // t >= 5: threshold 1
    } else {
      small_ok = t <= 4 && small_condition_holds(m, t);
      big_ok = big_condition_holds(m, t);
    }
    if (small_ok || big_ok) continue;
    const bool fails_room = !check_growth_condition(base, t).more_room.holds;
    out.entries.push_back({K, base, t, fails_room});
    ++out.exceptional;
    if (fails_room) ++out.fail_more_room;
  }
  return out;
}

CSubtractionIdentity check_c_subtraction_identity(const DescentSet& I) {
  if (I.empty()) throw std::invalid_argument("identity check needs a nonempty set");
  CSubtractionIdentity out;
  const int m = I.m();
  const DescentSet prev = I.minus_last();
  const int mp = prev.m();
  const std::vector<Int> c = c_coeffs(I).ints();
  const std::vector<Int> cp = c_coeffs(prev).ints();
  const Int d_prev = descent_value(prev, m);
  const int sign = (m - mp) % 2 == 0 ? 1 : -1;
  for (int k = 0; k <= m; ++k) {
    const Int rhs = d_prev - sign * (k <= mp ? cp[k] : Int(0));
    if (c[k] != rhs) {
      out.all_hold = false;
      out.failing_k.push_back(k);
    }
  }
  return out;
}

}  // namespace descpoly
