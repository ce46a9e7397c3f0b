#pragma once

#include <utility>
#include <vector>

#include "trop/ratpoly.hpp"
#include "trop/spoly.hpp"

namespace trop {

// Finite Puiseux series Σ c_i t^{e_i} with rational exponents, terms kept
// in strictly decreasing exponent order; valuation = largest exponent.
class PSeries {
 public:
  struct Term {
    Rational coeff;
    Rational exp;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PSeries() = default;
  // Terms in any order; equal exponents are merged, zeros dropped.
  explicit PSeries(std::vector<Term> terms);
  static PSeries constant(const Rational& c) { return PSeries({{c, Rational(0)}}); }
  static PSeries monomial(const Rational& c, const Rational& e) { return PSeries({{c, e}}); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  GVal valuation() const;
  const Rational& dominant_coeff() const;  // DomainError on zero
  int sign() const;                        // sign of the dominant coefficient; 0 for zero

  friend bool operator==(const PSeries& a, const PSeries& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

PSeries operator+(const PSeries& a, const PSeries& b);
PSeries operator-(const PSeries& a);
PSeries operator-(const PSeries& a, const PSeries& b);
PSeries operator*(const PSeries& a, const PSeries& b);

// Signed valuation: Zero, or El(sign of dc(f), v(f)).
SVal sv(const PSeries& f);

// Dense polynomial in Y over Puiseux series, index = degree, trimmed.
class FPoly {
 public:
  FPoly() = default;
  explicit FPoly(std::vector<PSeries> coeffs);
  bool is_zero() const noexcept { return c_.empty(); }
  long deg() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<PSeries>& coeffs() const noexcept { return c_; }
  PSeries coeff(std::size_t k) const { return k < c_.size() ? c_[k] : PSeries(); }
  friend bool operator==(const FPoly& a, const FPoly& b) { return a.c_ == b.c_; }

 private:
  std::vector<PSeries> c_;
};

FPoly operator*(const FPoly& a, const FPoly& b);
// Π (Y − x_i).
FPoly expand_linear_product(const std::vector<PSeries>& roots);

SPoly sv_poly(const FPoly& p);
// Coefficient-wise valuation.
TPoly valuation_poly(const FPoly& p);

// Σ_{k∈sat(r, sv P)} dc(P_k) Y^k. DomainError when r is Zero or |r| is
// not a corner of |sv P|.
RatPoly initial_form(const FPoly& p, const SVal& r);

std::string to_string(const PSeries& f);

}  // namespace trop
