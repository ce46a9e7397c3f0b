#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "trop/smax.hpp"
#include "trop/tpoly.hpp"

namespace trop {

// Formal polynomial over S_max, sparse; Zero coefficients are never stored.
class SPoly {
 public:
  using Terms = std::map<unsigned, SVal>;

  SPoly() = default;
  explicit SPoly(Terms terms);
  SPoly(std::initializer_list<std::pair<const unsigned, SVal>> init);
  static SPoly monomial(const SVal& c, unsigned k);

  SVal coeff(unsigned k) const;
  void set(unsigned k, const SVal& v);  // Zero erases the term

  bool is_zero() const noexcept { return terms_.empty(); }
  long deg() const noexcept;
  long uval() const noexcept;
  const Terms& terms() const noexcept { return terms_; }
  const SVal& lead() const;

  // Every coefficient lies in S^v (no balanced coefficients).
  bool all_signed() const noexcept;
  // Coefficient-wise modulus |P|.
  TPoly abs() const;

  friend bool operator==(const SPoly& a, const SPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

SVal s_eval(const SPoly& p, const SVal& y);

SPoly s_add_poly(const SPoly& p, const SPoly& q);
SPoly s_mul_poly(const SPoly& p, const SPoly& q);
SPoly s_scale(const SPoly& p, const SVal& c);
// P(a Y)
SPoly s_compose_scaled(const SPoly& p, const SVal& a);
// Y ⊖ r
SPoly linear_factor(const SVal& r);

// Coefficient-wise relations.
bool poly_balance(const SPoly& p, const SPoly& q);
bool poly_order_natural(const SPoly& p, const SPoly& q);

struct RootCandidate {
  SVal value;
  bool is_root = false;
};

// Zero (when uval > 0) and ±c for each finite corner c of |P|, in display
// order. DomainError on zero or non-signed input.
std::vector<SVal> root_candidates(const SPoly& p);
std::vector<RootCandidate> signed_roots(const SPoly& p);

struct Factorization {
  SVal lead;
  std::vector<SVal> roots;  // sorted by display_before
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Sorted copy of the roots with `lead`; tangible lead, signed roots.
Factorization make_factorization(SVal lead, std::vector<SVal> roots);

// Sufficient condition: when |P| is factored, r_i ⊙ P_{n-i+1} = ⊖P_{n-i}.
// nullopt stands for "not factored by the sufficient condition".
std::optional<Factorization> factor_function(const SPoly& p);

// lead ⊙ Π (Y ⊖ r_i), expanded over S_max.
SPoly sharp_representative(const Factorization& f);

// Points at which two polynomial functions are compared: for every
// breakpoint and two interior points of every gap, the positive, negative
// and balanced elements of that modulus, plus Zero.
std::vector<SVal> function_sample_points(const SPoly& p, const SPoly& q);
bool same_function(const SPoly& p, const SPoly& q);

// Every factorization of the function of P: root moduli range over the
// corners of |P|, signs over all splits of each corner multiplicity.
std::vector<Factorization> enumerate_factorizations(const SPoly& p);

enum class Uniqueness { Unique, NonUnique, Unknown };

struct UniquenessReport {
  Uniqueness kind = Uniqueness::Unknown;
  std::optional<Factorization> factorization;  // set when Unique
  std::vector<Factorization> witnesses;        // >= 2 entries when NonUnique
};

UniquenessReport unique_factorization(const SPoly& p);

std::string to_string(Uniqueness u);

}  // namespace trop
