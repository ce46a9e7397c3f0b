#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trop/spoly.hpp"

namespace trop {

enum class MultPath { ZeroRoot, SignChange, RecursiveOracle };
std::string to_string(MultPath p);

struct MultReport {
  SVal root;
  unsigned mult = 0;
  std::vector<unsigned> sat;  // increasing degrees
  SPoly sat_poly;             // coefficients in {Zero, ±𝟙}
  MultPath path = MultPath::SignChange;
};

// Degrees attaining |P(r)|, i.e. where |P_i| + i|r| is maximal. r nonzero.
std::vector<unsigned> saturation_set(const SPoly& p, const SVal& r);
// Σ_{i∈sat} |P(r)|^{-1} ⊙ r^i ⊙ P_i Y^i, all magnitudes 0.
SPoly saturation_polynomial(const SPoly& p, const SVal& r);

// Sign changes among the nonzero coefficients; DomainError if a
// coefficient is balanced or has magnitude ≠ 0.
unsigned sign_changes(const SPoly& q);

// Fast path: uval for Zero, sign changes of the saturation polynomial
// otherwise. DomainError on zero or non-signed P.
MultReport mult(const SPoly& p, const SVal& r);

inline constexpr unsigned kDefaultOracleCap = 8;

// Dense B_s polynomial, index = degree, no trailing Zero.
using BsPoly = std::vector<BsVal>;
BsPoly to_bs_poly(const SPoly& p);  // DomainError unless magnitudes are 0
SPoly from_bs_poly(const BsPoly& q);

// Exhaustive evaluation of the recursive definition over B_s:
// mult_a(Q) = 1 + max mult_a(Q') over λ ∈ {𝟙, ⊖𝟙} and all signed Q' of
// degree deg Q − 1 with λQ ∇ (Y ⊖ a)Q', and 0 when a is not a root.
// Results are memoized for the lifetime of the object.
class BsOracle {
 public:
  explicit BsOracle(unsigned cap = kDefaultOracleCap) : cap_(cap) {}
  unsigned mult(const BsPoly& q, BsVal a);
  unsigned cap() const noexcept { return cap_; }

 private:
  unsigned search(const BsPoly& q, BsVal a);
  unsigned cap_;
  std::array<std::unordered_map<std::uint64_t, unsigned>, 3> memo_;
};

unsigned mult_recursive_bs(const BsPoly& q, BsVal a, unsigned cap = kDefaultOracleCap);
// Reduction to B_s through the saturation polynomial at |r|, then the
// oracle at the sign of r. Zero root follows the definition directly.
unsigned mult_recursive_smax(const SPoly& p, const SVal& r, unsigned cap = kDefaultOracleCap);
MultReport mult_oracle_report(const SPoly& p, const SVal& r, unsigned cap = kDefaultOracleCap);

struct DivisionWitness {
  SVal lambda;
  SPoly quotient;
};

// λ and signed Q with λP ∇ (Y ⊖ r)Q coefficient-wise; DomainError if r is
// not a root of P or P is not signed.
DivisionWitness divide_witness(const SPoly& p, const SVal& r);
bool is_division_witness(const SPoly& p, const SVal& r, const DivisionWitness& w);

struct CornerTally {
  GVal corner;
  unsigned corner_mult = 0;
  unsigned mult_pos = 0;  // at El(Pos,c), or at Zero for the Bot corner
  unsigned mult_neg = 0;  // at El(Neg,c); 0 for the Bot corner
};

struct MultSum {
  unsigned total = 0;
  std::vector<CornerTally> per_corner;
  bool corner_bounds_hold = true;  // mult_r + mult_{⊖r} <= corner multiplicity
  bool degree_bound_holds = true;  // total <= deg
};

MultSum mult_sum_check(const SPoly& p);

// Successive support degrees k < l of every saturation polynomial at a
// finite corner satisfy l-k = 1, or l-k = 2 with opposite signs.
bool gap_condition(const SPoly& p);

struct MultFactorResult {
  std::optional<Factorization> factorization;  // nullopt = cannot conclude
  unsigned total = 0;
  bool gap_condition = false;
  bool function_matches = false;
};

MultFactorResult factor_from_multiplicities(const SPoly& p);

// Occurrence counts in the unique factorization, in display order.
// DomainError unless unique_factorization(p) is Unique.
std::vector<std::pair<SVal, unsigned>> mult_from_unique_factorization(const SPoly& p);

}  // namespace trop

namespace trop {

// All (λ, Q') accepted by one level of the recursive definition over B_s,
// with Q' ranging over every nonzero signed coefficient tuple of length deg Q.
std::vector<std::pair<BsVal, BsPoly>> bs_quotients(const BsPoly& q, BsVal a);

}  // namespace trop
