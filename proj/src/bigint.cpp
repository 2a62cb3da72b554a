#include "descpoly/bigint.hpp"

#include <stdexcept>

namespace descpoly {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

Int binomial(const Int& upper, long k) {
  if (k < 0) return 0;
  Int num = 1;
  for (long j = 0; j < k; ++j) num *= upper - j;
  return num / factorial(k);  // exact: k! divides any product of k consecutive integers
}

Rat binomial_rat(const Rat& upper, long k) {
  if (k < 0) return 0;
  Rat num = 1;
  for (long j = 0; j < k; ++j) num *= upper - j;
  return num / Rat(factorial(k));
}

Int denominator_lcm(const Rat& a, const Int& acc) {
  const Int d = boost::multiprecision::denominator(a);
  return acc / boost::multiprecision::gcd(acc, d) * d;
}

}  // namespace descpoly
