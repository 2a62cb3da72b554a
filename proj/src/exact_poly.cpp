#include "descpoly/exact_poly.hpp"

#include <stdexcept>

namespace descpoly {

ExactPoly::ExactPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

ExactPoly ExactPoly::constant(const Rat& c) { return ExactPoly(std::vector<Rat>{c}); }

void ExactPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat ExactPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

const Rat& ExactPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

ExactPoly ExactPoly::operator*(const ExactPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return ExactPoly(std::move(out));
}

ExactPoly& ExactPoly::scale(const Rat& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Rat ExactPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactPoly ExactPoly::shifted_arg(const Rat& s) const {
  // Horner in (x + s): acc <- acc * (x + s) + c_k.
  ExactPoly acc;
  const ExactPoly lin(std::vector<Rat>{s, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * lin;
    acc += ExactPoly::constant(*it);
  }
  return acc;
}

ExactPoly ExactPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Rat(k);
  return ExactPoly(std::move(out));
}

std::pair<ExactPoly, ExactPoly> ExactPoly::divmod(const ExactPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  ExactPoly rem = *this;
  if (rem.degree() < divisor.degree()) return {ExactPoly{}, rem};
  std::vector<Rat> q(rem.degree() - divisor.degree() + 1);
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const Rat factor = rem.leading() / divisor.leading();
    q[shift] = factor;
    std::vector<Rat> sub(shift + divisor.coeffs().size());
    for (std::size_t k = 0; k < divisor.coeffs().size(); ++k)
      sub[shift + k] = divisor.coeffs()[k] * factor;
    rem -= ExactPoly(std::move(sub));
  }
  return {ExactPoly(std::move(q)), rem};
}

ExactPoly ExactPoly::divide_exact(const ExactPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("polynomial division left a remainder");
  return q;
}

std::vector<Int> ExactPoly::cleared_coeffs() const {
  if (is_zero()) throw std::invalid_argument("cleared_coeffs of zero polynomial");
  Int lcm = 1;
  for (const auto& c : coeffs_) lcm = denominator_lcm(c, lcm);
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    const Rat scaled = c * Rat(lcm);
    out.push_back(boost::multiprecision::numerator(scaled));
  }
  return out;
}

ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }

}  // namespace descpoly
