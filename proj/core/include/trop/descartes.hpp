#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trop/puiseux.hpp"

namespace trop {

// Weight k -> ω_k used by Viro lifts; must be strictly concave and
// integer-valued so that u^{ω_k} stays rational.
using Omega = std::function<Rational(unsigned)>;
Rational omega_quadratic(unsigned k);  // -k^2
bool strictly_concave(const Omega& omega, unsigned n);

// Σ ε_k u^{ω_k} t^{|P_k|} Y^k. DomainError when P is not signed, u <= 0,
// ω is not strictly concave on {0..deg} or takes a non-integer value.
FPoly viro_lift(const SPoly& p, const Rational& u, const Omega& omega = omega_quadratic);

// Tally of sv over known roots, in display order.
std::vector<std::pair<SVal, unsigned>> count_roots_by_sv(const std::vector<PSeries>& roots);

struct RootCheck {
  SVal root;
  unsigned mult = 0;          // multiplicity of the root of sv(P)
  unsigned lifted_count = 0;  // real roots of the lift with this signed valuation
  bool determined = true;     // count certified (simple real roots in the initial form)
  bool equal = false;
  bool bound_ok = false;      // lifted_count <= mult
  bool mod2_ok = false;       // lifted_count ≡ mult (mod 2)
};

struct DescartesOptions {
  Rational u_start = 2;
  unsigned u_cap = 12;  // number of u values tried: u, u^2, u^4, ...
  Omega omega = omega_quadratic;
};

struct DescartesReport {
  bool success = false;
  std::optional<Rational> witness_u;
  unsigned attempts = 0;
  std::vector<RootCheck> roots;  // one per root candidate of P
  FPoly lift;                    // tight lift when success
  std::string diagnostics;
};

// Searches u for a Viro lift whose per-root real root counts equal the
// multiplicities. Failure is reported, not thrown.
DescartesReport verify_descartes(const SPoly& p, const DescartesOptions& opt = {});

// Counts real roots of an arbitrary lift per signed valuation through its
// initial forms and checks the bound and the parity congruence.
std::vector<RootCheck> check_lift(const FPoly& lift);

// Lift given in product form Π (Y − x_i) · C: the x_i are real roots
// counted with multiplicity, and the real roots of the cofactor C are
// certified through its initial forms (determined = false otherwise).
std::vector<RootCheck> check_product_lift(const std::vector<PSeries>& real_roots, const FPoly& cofactor);

struct KapranovReport {
  bool holds = false;
  std::vector<GVal> root_valuations;  // decreasing
  std::vector<GVal> corners;          // of the valuation polynomial, expanded
};

KapranovReport kapranov_check(const std::vector<PSeries>& roots);

}  // namespace trop
