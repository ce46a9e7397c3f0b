#pragma once

#include <climits>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "trop/tmax.hpp"

namespace trop {

inline constexpr long kZeroPolyDeg = LONG_MIN;   // deg of the zero polynomial
inline constexpr long kZeroPolyUval = LONG_MAX;  // uval of the zero polynomial

// Formal polynomial over T_max, sparse; Bot coefficients are never stored.
class TPoly {
 public:
  using Terms = std::map<unsigned, Rational>;

  TPoly() = default;
  explicit TPoly(Terms terms) : terms_(std::move(terms)) {}
  TPoly(std::initializer_list<std::pair<const unsigned, Rational>> init) : terms_(init) {}
  static TPoly monomial(const GVal& c, unsigned k);

  GVal coeff(unsigned k) const;
  void set(unsigned k, const GVal& v);  // Bot erases the term

  bool is_zero() const noexcept { return terms_.empty(); }
  long deg() const noexcept;
  long uval() const noexcept;
  const Terms& terms() const noexcept { return terms_; }

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

struct Corner {
  GVal value;
  unsigned mult = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};
using CornerList = std::vector<Corner>;

struct HullVertex {
  unsigned degree = 0;
  Rational value;
};

GVal t_eval(const TPoly& p, const GVal& y);

// Vertices of the upper hull of {(k, P_k)}, left to right; collinear
// points are dropped so each edge is maximal.
std::vector<HullVertex> newton_polygon(const TPoly& p);

// Corners, strictly decreasing, with (Bot, uval) last when uval > 0.
// DomainError on the zero polynomial.
CornerList corners(const TPoly& p);
// Corners repeated by multiplicity: c_1 >= ... >= c_n.
std::vector<GVal> expand_corners(const CornerList& cl);

// Largest formal polynomial with the same function (full support on [uval, deg]).
TPoly concave_hull(const TPoly& p);
// Legendre-Fenchel route to the same polynomial; DomainError on zero.
TPoly canonical_form(const TPoly& p);

struct TFactorization {
  GVal lead;
  std::vector<GVal> roots;  // length deg, decreasing
};
TFactorization t_factor(const TPoly& p);
// lead ⊙ Π (Y ⊕ c_i)
TPoly t_expand(const GVal& lead, const std::vector<GVal>& roots);

// Full support between uval and deg and concave coefficient map.
bool is_factored_formal(const TPoly& p);

TPoly t_add_poly(const TPoly& p, const TPoly& q);
TPoly t_mul_poly(const TPoly& p, const TPoly& q);

}  // namespace trop
