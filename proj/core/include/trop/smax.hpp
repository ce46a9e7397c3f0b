#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "trop/tmax.hpp"

namespace trop {

enum class Sign : std::uint8_t { Pos, Neg, Bal };

Sign sign_mul(Sign a, Sign b) noexcept;
Sign sign_neg(Sign a) noexcept;

// Element of S_max stored canonically as (sign tag, magnitude), with a
// distinguished zero of magnitude Bot.
class SVal {
 public:
  SVal() = default;
  static SVal zero() { return SVal(); }
  static SVal el(Sign s, Rational mag);
  static SVal pos(Rational mag) { return el(Sign::Pos, std::move(mag)); }
  static SVal neg(Rational mag) { return el(Sign::Neg, std::move(mag)); }
  static SVal bal(Rational mag) { return el(Sign::Bal, std::move(mag)); }
  static SVal pos(long n, long d = 1) { return pos(rat(n, d)); }
  static SVal neg(long n, long d = 1) { return neg(rat(n, d)); }
  static SVal bal(long n, long d = 1) { return bal(rat(n, d)); }
  static SVal one() { return pos(0); }

  bool is_zero() const noexcept { return !mag_.has_value(); }
  Sign sign() const;
  const Rational& mag() const;
  GVal modulus() const;

  // Signed elements (S^v): zero, positive or negative.
  bool is_signed() const noexcept { return is_zero() || sign_ != Sign::Bal; }
  // Tangible elements: nonzero signed.
  bool is_tangible() const noexcept { return !is_zero() && sign_ != Sign::Bal; }
  // Balanced elements (S°): zero or sign tag Bal.
  bool is_balanced() const noexcept { return is_zero() || sign_ == Sign::Bal; }

  friend bool operator==(const SVal& a, const SVal& b);

 private:
  Sign sign_ = Sign::Pos;
  std::optional<Rational> mag_;
};

// Deterministic total order used for sorting root lists: decreasing
// modulus, then Pos < Neg < Bal. Not an algebraic order.
bool display_before(const SVal& a, const SVal& b);

SVal s_add(const SVal& a, const SVal& b);
SVal s_mul(const SVal& a, const SVal& b);
SVal s_neg(const SVal& a);
SVal s_sub(const SVal& a, const SVal& b);
SVal s_bal(const SVal& a);
SVal s_pow(const SVal& a, unsigned long n);
// Inverse of a tangible element; DomainError otherwise.
SVal s_inv(const SVal& a);
GVal s_mod(const SVal& a);

// a ∇ b: a ⊖ b is balanced or zero.
bool balance(const SVal& a, const SVal& b);
// a ⊕ b = b.
bool order_natural(const SVal& a, const SVal& b);
// b = a ⊕ c for some balanced-or-zero c.
bool order_circ(const SVal& a, const SVal& b);

// Tangible balancing witness: for a1 ∇ a2 returns a signed a with a1 ∇ a
// and a ∇ a2. Balanced inputs yield the positive element of largest
// admissible modulus. DomainError when a1 and a2 do not balance.
SVal tangible_balance(const SVal& a1, const SVal& a2);

// The sign system B_s, i.e. S_max over the trivial group.
enum class BsVal : std::uint8_t { Zero, One, MinusOne, BalOne };

BsVal bs_add(BsVal a, BsVal b) noexcept;
BsVal bs_mul(BsVal a, BsVal b) noexcept;
BsVal bs_neg(BsVal a) noexcept;
bool bs_balance(BsVal a, BsVal b) noexcept;
inline bool bs_is_signed(BsVal a) noexcept { return a != BsVal::BalOne; }

// Layered-extension isomorphism between B_s^* x T_max^* (plus zero) and S_max.
// embed throws DomainError for a nonzero sign paired with Bot or vice versa.
SVal embed(BsVal s, const GVal& g);
std::pair<BsVal, GVal> project(const SVal& v);

// Identification of B_s with the magnitude-0 layer of S_max.
SVal bs_to_sval(BsVal a);
BsVal sval_to_bs(const SVal& v);  // DomainError unless magnitude is 0 or zero

std::string to_string(Sign s);
std::string to_string(const SVal& v);
std::string to_string(BsVal v);

}  // namespace trop
