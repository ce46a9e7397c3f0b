#include "trop/smax.hpp"

#include "trop/errors.hpp"

namespace trop {

Sign sign_mul(Sign a, Sign b) noexcept {
  if (a == Sign::Bal || b == Sign::Bal) return Sign::Bal;
  return a == b ? Sign::Pos : Sign::Neg;
}

Sign sign_neg(Sign a) noexcept {
  switch (a) {
    case Sign::Pos: return Sign::Neg;
    case Sign::Neg: return Sign::Pos;
    case Sign::Bal: break;
  }
  return Sign::Bal;
}

SVal SVal::el(Sign s, Rational mag) {
  SVal v;
  v.sign_ = s;
  v.mag_ = std::move(mag);
  return v;
}

Sign SVal::sign() const {
  if (!mag_) throw DomainError("zero has no sign tag");
  return sign_;
}

const Rational& SVal::mag() const {
  if (!mag_) throw DomainError("zero has no finite magnitude");
  return *mag_;
}

GVal SVal::modulus() const { return mag_ ? GVal::fin(*mag_) : GVal::bot(); }

bool operator==(const SVal& a, const SVal& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.sign_ == b.sign_ && *a.mag_ == *b.mag_;
}

bool display_before(const SVal& a, const SVal& b) {
  auto ma = a.modulus(), mb = b.modulus();
  if (ma != mb) return ma > mb;
  if (a.is_zero()) return false;
  return static_cast<int>(a.sign()) < static_cast<int>(b.sign());
}

SVal s_add(const SVal& a, const SVal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int c = cmp(a.mag(), b.mag());
  if (c > 0) return a;
  if (c < 0) return b;
  if (a.sign() == b.sign()) return a;
  return SVal::bal(a.mag());
}

SVal s_mul(const SVal& a, const SVal& b) {
  if (a.is_zero() || b.is_zero()) return SVal::zero();
  return SVal::el(sign_mul(a.sign(), b.sign()), a.mag() + b.mag());
}

SVal s_neg(const SVal& a) {
  if (a.is_zero()) return a;
  return SVal::el(sign_neg(a.sign()), a.mag());
}

SVal s_sub(const SVal& a, const SVal& b) { return s_add(a, s_neg(b)); }

SVal s_bal(const SVal& a) {
  if (a.is_zero()) return a;
  return SVal::bal(a.mag());
}

SVal s_pow(const SVal& a, unsigned long n) {
  if (n == 0) return SVal::one();
  if (a.is_zero()) return a;
  Sign s = a.sign();
  if (s == Sign::Neg && n % 2 == 0) s = Sign::Pos;
  return SVal::el(s, a.mag() * Rational(n));
}

SVal s_inv(const SVal& a) {
  if (!a.is_tangible()) throw DomainError("only tangible elements are invertible");
  return SVal::el(a.sign(), -a.mag());
}

GVal s_mod(const SVal& a) { return a.modulus(); }

bool balance(const SVal& a, const SVal& b) { return s_sub(a, b).is_balanced(); }

bool order_natural(const SVal& a, const SVal& b) { return s_add(a, b) == b; }

bool order_circ(const SVal& a, const SVal& b) {
  if (b.is_signed()) return a == b;
  return a.modulus() <= b.modulus();
}

SVal tangible_balance(const SVal& a1, const SVal& a2) {
  if (!balance(a1, a2)) throw DomainError("tangible balancing needs a1 ∇ a2");
  if (a1.is_signed()) return a1;
  if (a2.is_signed()) return a2;
  return SVal::pos(a1.mag() < a2.mag() ? a1.mag() : a2.mag());
}

// B_s. Encoded on the sign pattern: One and MinusOne are opposite,
// BalOne absorbs at the (single) nonzero layer.
BsVal bs_add(BsVal a, BsVal b) noexcept {
  if (a == BsVal::Zero) return b;
  if (b == BsVal::Zero) return a;
  if (a == b) return a;
  return BsVal::BalOne;
}

BsVal bs_mul(BsVal a, BsVal b) noexcept {
  if (a == BsVal::Zero || b == BsVal::Zero) return BsVal::Zero;
  if (a == BsVal::BalOne || b == BsVal::BalOne) return BsVal::BalOne;
  return a == b ? BsVal::One : BsVal::MinusOne;
}

BsVal bs_neg(BsVal a) noexcept {
  if (a == BsVal::One) return BsVal::MinusOne;
  if (a == BsVal::MinusOne) return BsVal::One;
  return a;
}

bool bs_balance(BsVal a, BsVal b) noexcept {
  BsVal d = bs_add(a, bs_neg(b));
  return d == BsVal::Zero || d == BsVal::BalOne;
}

SVal embed(BsVal s, const GVal& g) {
  if ((s == BsVal::Zero) != g.is_bot())
    throw DomainError("layer pairs zero sign with bottom modulus only");
  switch (s) {
    case BsVal::Zero: return SVal::zero();
    case BsVal::One: return SVal::pos(g.value());
    case BsVal::MinusOne: return SVal::neg(g.value());
    case BsVal::BalOne: break;
  }
  return SVal::bal(g.value());
}

std::pair<BsVal, GVal> project(const SVal& v) {
  if (v.is_zero()) return {BsVal::Zero, GVal::bot()};
  BsVal s = v.sign() == Sign::Pos ? BsVal::One : v.sign() == Sign::Neg ? BsVal::MinusOne : BsVal::BalOne;
  return {s, v.modulus()};
}

SVal bs_to_sval(BsVal a) { return embed(a, a == BsVal::Zero ? GVal::bot() : GVal::fin(0)); }

BsVal sval_to_bs(const SVal& v) {
  if (!v.is_zero() && v.mag() != 0) throw DomainError("B_s coefficient must have magnitude 0");
  return project(v).first;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Pos: return "+";
    case Sign::Neg: return "-";
    case Sign::Bal: break;
  }
  return "o";
}

std::string to_string(const SVal& v) {
  if (v.is_zero()) return "_";
  std::string m = to_string(v.mag());
  if (v.mag() < 0) m = "(" + m + ")";
  switch (v.sign()) {
    case Sign::Pos: return m;
    case Sign::Neg: return "-" + m;
    case Sign::Bal: break;
  }
  return m + "*";
}

std::string to_string(BsVal v) {
  switch (v) {
    case BsVal::Zero: return "_";
    case BsVal::One: return "1";
    case BsVal::MinusOne: return "-1";
    case BsVal::BalOne: break;
  }
  return "1*";
}

}  // namespace trop
