#pragma once

#include <compare>
#include <optional>
#include <string>

#include "trop/rational.hpp"

namespace trop {

// Element of T_max over the rationals: Bot (the tropical zero) or a finite
// rational. Addition is max, multiplication is rational addition.
class GVal {
 public:
  GVal() = default;
  static GVal bot() { return GVal(); }
  static GVal fin(Rational q) {
    GVal g;
    g.v_ = std::move(q);
    return g;
  }
  static GVal fin(long num, long den = 1) { return fin(rat(num, den)); }

  bool is_bot() const noexcept { return !v_.has_value(); }
  bool is_fin() const noexcept { return v_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const GVal& a, const GVal& b);
  friend std::strong_ordering operator<=>(const GVal& a, const GVal& b);

 private:
  std::optional<Rational> v_;
};

GVal t_add(const GVal& a, const GVal& b);
GVal t_mul(const GVal& a, const GVal& b);
GVal t_pow(const GVal& a, unsigned long n);
// Throws DomainError when b is Bot.
GVal t_div(const GVal& a, const GVal& b);

// "-inf" for Bot, rational literal otherwise.
std::string to_string(const GVal& g);

}  // namespace trop
