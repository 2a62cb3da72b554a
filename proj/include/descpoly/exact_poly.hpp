#pragma once

#include <utility>
#include <vector>

#include "descpoly/bigint.hpp"

namespace descpoly {

/// Dense polynomial over exact rationals, power basis, index = exponent.
/// Normalized so the leading coefficient is nonzero; the zero polynomial
/// has an empty coefficient vector and degree -1.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<Rat> coeffs);
  static ExactPoly constant(const Rat& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;

  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly operator*(const ExactPoly& o) const;
  ExactPoly& scale(const Rat& s);
  bool operator==(const ExactPoly&) const = default;

  Rat operator()(const Rat& x) const;  // exact Horner

  /// p(x + s), exact.
  ExactPoly shifted_arg(const Rat& s) const;

  ExactPoly derivative() const;

  /// Euclidean division: returns {quotient, remainder}.
  std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& divisor) const;

  /// Quotient of an exact division; throws if the remainder is nonzero.
  ExactPoly divide_exact(const ExactPoly& divisor) const;

  /// Coefficients times the denominator lcm: an integer-coefficient
  /// polynomial with the same roots.  Throws on the zero polynomial.
  std::vector<Int> cleared_coeffs() const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

ExactPoly operator+(ExactPoly a, const ExactPoly& b);
ExactPoly operator-(ExactPoly a, const ExactPoly& b);

}  // namespace descpoly
