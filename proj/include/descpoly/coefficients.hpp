#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

#include "descpoly/basis.hpp"
#include "descpoly/descent_set.hpp"

namespace descpoly {

/// Raised when a proved coefficient fact (non-negativity of the a-, c- or
/// abar-sequence) fails; indicates an implementation bug.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// Content-addressed memo of ABase vectors keyed by set encoding.  Entries
/// are deterministic functions of the key, so concurrent insert races are
/// benign; first write wins.
class MemoCache {
 public:
  std::optional<CoeffVector> find(const DescentSet& I) const;
  void insert(const DescentSet& I, const CoeffVector& v);
  std::size_t size() const;
  void clear();

  /// Flat-file persistence, one record per line:
  ///   <set-encoding>;<m>;<comma-separated ABase integers>
  void load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, CoeffVector> map_;
};

MemoCache& descent_cache();   // backing the subtraction recursion
MemoCache& additive_cache();  // backing the additive recursion, kept separate

/// ABase vector of d(I, .) via the subtraction recursion
///   d(I,n) = C(n,m) d(I-,m) - d(I-,n),  d(empty,n) = 1,
/// carried out on integer ABase vectors (Vandermonde rebase), memoized.
CoeffVector descent_poly(const DescentSet& I);
CoeffVector descent_poly(const DescentSet& I, MemoCache& cache);

/// Same polynomial by the additive recursion
///   d(I,n+1) = d(I,n) + sum_{i_t in I''\{m}} d(I_t,n)
///            + sum_{i_t in I'\{m}} d(I^_t,n) + d(I-,m-1) C(n,m-1)
/// anchored at d(I,m) = 0, reconstructed from values by forward differences.
/// Never consults the subtraction-path cache.
CoeffVector descent_poly_additive(const DescentSet& I);

/// d(I, n) for any integer n (polynomial evaluation, exact).
Int descent_value(const DescentSet& I, const Int& n);

CoeffVector a_coeffs(const DescentSet& I);
CoeffVector c_coeffs(const DescentSet& I);
CoeffVector abar_coeffs(const DescentSet& I);   // requires nonempty I
CoeffVector ctilde_coeffs(const DescentSet& I);

/// Right-hand side of the c-sequence recurrence
///   c_{k+1}(I) = sum_{i_t in I''\{m}} c_k(I_t) + sum_{i_t in I'\{m}} c_k(I^_t)
///              + d(I-, m-1)
/// for 0 <= k <= m-1.
Int c_recurrence_step(const DescentSet& I, int k);

ExactPoly a_gen_poly(const DescentSet& I);     // a(I,x) = sum a_k x^k
ExactPoly abar_gen_poly(const DescentSet& I);  // abar(I,x) = sum abar_k x^k

}  // namespace descpoly
