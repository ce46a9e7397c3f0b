#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// Dense univariate polynomial with rational coefficients, index = degree,
// kept trimmed (no trailing zeros; the zero polynomial is empty).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  long deg() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& lead() const;

  Rational eval(const Rational& x) const;
  RatPoly derivative() const;
  RatPoly reflect() const;  // q(-Y)
  // Divides out the largest power of Y; returns the exponent removed.
  std::pair<RatPoly, unsigned> strip_zero_root() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& a);
// Euclidean division; DomainError on a zero divisor.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd (zero only when both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

enum class RealInterval { Positive, Negative, All };

// Sturm chain q, q', -rem, ... with each member scaled by 1/|lead|.
std::vector<RatPoly> sturm_chain(const RatPoly& q);
// Number of distinct real roots in the open interval; DomainError on zero.
unsigned sturm_count(const RatPoly& q, RealInterval where);
// gcd(q, q') is constant, i.e. all complex roots are simple.
bool sturm_squarefree_check(const RatPoly& q);
// Every real root of q inside the interval is simple.
bool real_roots_simple(const RatPoly& q, RealInterval where);

std::string to_string(const RatPoly& q);

}  // namespace trop
