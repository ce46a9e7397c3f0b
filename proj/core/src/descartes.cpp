#include "trop/descartes.hpp"

#include <algorithm>
#include <optional>

#include "trop/errors.hpp"
#include "trop/multiplicity.hpp"

namespace trop {

namespace {

Rational rational_pow(const Rational& u, long e) {
  mpz_class num, den;
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), u.get_num_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), u.get_den_mpz_t(), a);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

void fill_verdict(RootCheck& rc) {
  rc.equal = rc.lifted_count == rc.mult;
  rc.bound_ok = rc.lifted_count <= rc.mult;
  rc.mod2_ok = rc.lifted_count % 2 == rc.mult % 2;
}

// Root count with signed valuation r from the initial form at |r|.
RootCheck count_at(const FPoly& lift, const SPoly& p, const SVal& r) {
  RootCheck rc;
  rc.root = r;
  rc.mult = mult(p, r).mult;
  if (r.is_zero()) {
    rc.lifted_count = static_cast<unsigned>(p.uval());
  } else {
    RatPoly q = initial_form(lift, r).strip_zero_root().first;
    RealInterval side = r.sign() == Sign::Pos ? RealInterval::Positive : RealInterval::Negative;
    rc.lifted_count = sturm_count(q, side);
    rc.determined = real_roots_simple(q, side);
  }
  fill_verdict(rc);
  return rc;
}

// Real roots of c with signed valuation r, certified through the initial
// form; nullopt when the initial form has a repeated root on that side.
std::optional<unsigned> cofactor_count(const FPoly& c, const SVal& r) {
  SPoly s = sv_poly(c);
  if (r.is_zero()) return static_cast<unsigned>(s.uval());
  if (s.deg() <= 0) return 0u;
  bool corner = false;
  for (const auto& cr : corners(s.abs())) corner = corner || cr.value == r.modulus();
  if (!corner) return 0u;
  RatPoly q = initial_form(c, r).strip_zero_root().first;
  RealInterval side = r.sign() == Sign::Pos ? RealInterval::Positive : RealInterval::Negative;
  if (!real_roots_simple(q, side)) return std::nullopt;
  return sturm_count(q, side);
}

}  // namespace

Rational omega_quadratic(unsigned k) { return Rational(-static_cast<long>(k) * static_cast<long>(k)); }

bool strictly_concave(const Omega& omega, unsigned n) {
  for (unsigned k = 1; k + 1 <= n; ++k)
    if (omega(k + 1) - omega(k) >= omega(k) - omega(k - 1)) return false;
  return true;
}

FPoly viro_lift(const SPoly& p, const Rational& u, const Omega& omega) {
  if (p.is_zero() || !p.all_signed()) throw DomainError("Viro lift needs a nonzero signed polynomial");
  if (u <= 0) throw DomainError("Viro lift needs u > 0");
  const unsigned n = static_cast<unsigned>(p.deg());
  if (!strictly_concave(omega, n)) throw DomainError("omega is not strictly concave");
  std::vector<PSeries> c(n + 1);
  for (const auto& [k, v] : p.terms()) {
    Rational w = omega(k);
    if (w.get_den() != 1) throw DomainError("omega must be integer-valued");
    Rational coeff = rational_pow(u, w.get_num().get_si());
    if (v.sign() == Sign::Neg) coeff = -coeff;
    c[k] = PSeries::monomial(coeff, v.mag());
  }
  return FPoly(std::move(c));
}

std::vector<std::pair<SVal, unsigned>> count_roots_by_sv(const std::vector<PSeries>& roots) {
  std::vector<SVal> s;
  for (const auto& x : roots) s.push_back(sv(x));
  std::sort(s.begin(), s.end(), display_before);
  std::vector<std::pair<SVal, unsigned>> out;
  for (const auto& v : s) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

DescartesReport verify_descartes(const SPoly& p, const DescartesOptions& opt) {
  if (p.is_zero() || !p.all_signed()) throw DomainError("verify_descartes needs a nonzero signed polynomial");
  if (opt.u_start <= 1) throw DomainError("u schedule must start above 1");
  const std::vector<SVal> cands = root_candidates(p);
  DescartesReport rep;
  Rational u = opt.u_start, last = u;
  for (unsigned attempt = 1; attempt <= opt.u_cap; ++attempt, u = u * u) {
    rep.attempts = attempt;
    last = u;
    FPoly lift = viro_lift(p, u, opt.omega);
    std::vector<RootCheck> checks;
    bool ok = true;
    for (const auto& r : cands) {
      RootCheck rc = count_at(lift, p, r);
      if (!r.is_zero() && !sturm_squarefree_check(initial_form(lift, r).strip_zero_root().first)) {
        rc.determined = false;
        ok = false;
      }
      ok = ok && rc.equal;
      checks.push_back(rc);
    }
    rep.roots = std::move(checks);
    if (ok) {
      rep.success = true;
      rep.witness_u = u;
      rep.lift = std::move(lift);
      return rep;
    }
  }
  rep.diagnostics = "no tight lift within " + std::to_string(opt.u_cap) + " values of u (last u = " +
                    to_string(last) + ")";
  return rep;
}

std::vector<RootCheck> check_lift(const FPoly& lift) {
  SPoly p = sv_poly(lift);
  std::vector<RootCheck> out;
  for (const auto& r : root_candidates(p)) out.push_back(count_at(lift, p, r));
  return out;
}

std::vector<RootCheck> check_product_lift(const std::vector<PSeries>& real_roots, const FPoly& cofactor) {
  if (cofactor.is_zero()) throw DomainError("cofactor must be nonzero");
  FPoly lift = expand_linear_product(real_roots) * cofactor;
  SPoly p = sv_poly(lift);
  auto known = count_roots_by_sv(real_roots);
  std::vector<RootCheck> out;
  for (const auto& r : root_candidates(p)) {
    RootCheck rc;
    rc.root = r;
    rc.mult = mult(p, r).mult;
    for (const auto& [v, n] : known)
      if (v == r) rc.lifted_count += n;
    if (auto extra = cofactor_count(cofactor, r)) rc.lifted_count += *extra;
    else rc.determined = false;
    fill_verdict(rc);
    out.push_back(rc);
  }
  return out;
}

KapranovReport kapranov_check(const std::vector<PSeries>& roots) {
  KapranovReport rep;
  for (const auto& x : roots) rep.root_valuations.push_back(x.valuation());
  std::sort(rep.root_valuations.begin(), rep.root_valuations.end(), std::greater<>());
  TPoly v = valuation_poly(expand_linear_product(roots));
  rep.corners = v.deg() > 0 ? expand_corners(corners(v)) : std::vector<GVal>{};
  rep.holds = rep.corners == rep.root_valuations;
  return rep;
}

}  // namespace trop
