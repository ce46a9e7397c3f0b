#include "trop/tmax.hpp"

#include "trop/errors.hpp"

namespace trop {

const Rational& GVal::value() const {
  if (!v_) throw DomainError("Bot has no finite value");
  return *v_;
}

bool operator==(const GVal& a, const GVal& b) {
  if (a.is_bot() || b.is_bot()) return a.is_bot() == b.is_bot();
  return *a.v_ == *b.v_;
}

std::strong_ordering operator<=>(const GVal& a, const GVal& b) {
  if (a.is_bot()) return b.is_bot() ? std::strong_ordering::equal : std::strong_ordering::less;
  if (b.is_bot()) return std::strong_ordering::greater;
  int c = cmp(*a.v_, *b.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

GVal t_add(const GVal& a, const GVal& b) { return a < b ? b : a; }

GVal t_mul(const GVal& a, const GVal& b) {
  if (a.is_bot() || b.is_bot()) return GVal::bot();
  return GVal::fin(a.value() + b.value());
}

GVal t_pow(const GVal& a, unsigned long n) {
  if (n == 0) return GVal::fin(0);
  if (a.is_bot()) return GVal::bot();
  return GVal::fin(a.value() * Rational(n));
}

GVal t_div(const GVal& a, const GVal& b) {
  if (b.is_bot()) throw DomainError("division by tropical zero");
  if (a.is_bot()) return GVal::bot();
  return GVal::fin(a.value() - b.value());
}

std::string to_string(const GVal& g) { return g.is_bot() ? "-inf" : to_string(g.value()); }

}  // namespace trop
