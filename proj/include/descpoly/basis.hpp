#pragma once

#include <string>
#include <vector>

#include "descpoly/bigint.hpp"
#include "descpoly/exact_poly.hpp"

namespace descpoly {

/// The six coefficient systems for degree-m polynomials.  A vector tagged
/// with a basis represents p through:
///
///   ABase          p(n) = sum_k v_k * C(n-m, k),            k = 0..m
///   CBase          p(n) = sum_k (-1)^(m-k) v_k * C(n+1, k), k = 0..m
///   ABarBase       p(n) = sum_k v_k * C(n-m+k, k+1),        k = 0..m-1
///   CTildeBase     p(n) = sum_k (-1)^(m-k) v_k * C(n, k),   k = 0..m
///   PlainBinomial  p(n) = sum_k (-1)^(m-k) v_k * C(n, k),   k = 0..m
///   Power          p(n) = sum_k v_k * n^k,                  k = 0..m
///
/// CTildeBase keeps the sign convention of the reflected expansion: its
/// entries w satisfy (-1)^m p(m-1-n) = sum_k w_k C(n-m+k, k), which makes
/// them coincide entrywise with the PlainBinomial entries.  ABarBase spans
/// only the polynomials vanishing at n = m (every C(k, k+1) is 0).
enum class BasisTag { ABase, CBase, ABarBase, CTildeBase, PlainBinomial, Power };

int expected_length(BasisTag basis, int m);
std::string basis_name(BasisTag basis);
BasisTag parse_basis(const std::string& name);  // "a", "c", "abar", "ctilde", "binomial", "power"

/// Exact coefficient sequence in one of the named bases.  Entries are
/// integers except in the Power basis, where rationals are permitted.
class CoeffVector {
 public:
  CoeffVector(BasisTag basis, int m, std::vector<Int> coeffs);
  CoeffVector(BasisTag basis, int m, std::vector<Rat> coeffs);

  BasisTag basis() const { return basis_; }
  int m() const { return m_; }
  int length() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Int int_at(int k) const;       // throws if the entry is not an integer
  std::vector<Int> ints() const;

  bool operator==(const CoeffVector&) const = default;

 private:
  BasisTag basis_;
  int m_;
  std::vector<Rat> coeffs_;
};

/// The k-th basis polynomial of the family (degree k, except ABarBase: k+1).
ExactPoly basis_poly(BasisTag basis, int m, int k);

ExactPoly to_exact_poly(const CoeffVector& v);

/// Expand p in the target basis with degree parameter m.  Throws if
/// deg p > m, if ABarBase is requested for a p with p(m) != 0, or if a
/// non-Power expansion comes out non-integral.
CoeffVector from_exact_poly(const ExactPoly& p, BasisTag target, int m);

/// Exact change of basis; round-trips exactly and preserves evaluation.
CoeffVector convert(const CoeffVector& v, BasisTag target);

Rat evaluate(const CoeffVector& v, const Rat& n);
Int evaluate_int(const CoeffVector& v, const Int& n);

}  // namespace descpoly
