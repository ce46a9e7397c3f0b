#include "trop/multiplicity.hpp"

#include <algorithm>
#include <functional>

#include "trop/errors.hpp"

namespace trop {

std::string to_string(MultPath p) {
  switch (p) {
    case MultPath::ZeroRoot: return "ZeroRoot";
    case MultPath::SignChange: return "SignChange";
    case MultPath::RecursiveOracle: break;
  }
  return "RecursiveOracle";
}

namespace {

void require_signed_poly(const SPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (!p.all_signed()) throw DomainError("balanced coefficient in input polynomial");
}

void require_signed_root(const SVal& r) {
  if (!r.is_signed()) throw DomainError("roots are signed elements; got " + to_string(r));
}

Rational saturation_level(const SPoly& p, const SVal& r) {
  std::optional<Rational> best;
  for (const auto& [k, c] : p.terms()) {
    Rational v = c.mag() + Rational(k) * r.mag();
    if (!best || v > *best) best = v;
  }
  return *best;
}

std::uint64_t bs_key(const BsPoly& q) {
  std::uint64_t code = 0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) code = code * 4 + static_cast<std::uint64_t>(*it);
  return code * 16 + q.size();
}

BsVal bs_eval(const BsPoly& q, BsVal a) {
  BsVal acc = BsVal::Zero, pw = BsVal::One;
  for (BsVal c : q) {
    acc = bs_add(acc, bs_mul(c, pw));
    pw = bs_mul(pw, a);
  }
  return acc;
}

void check_bs_input(const BsPoly& q, BsVal a) {
  if (q.empty() || q.back() == BsVal::Zero) throw DomainError("B_s polynomial must be nonzero and trimmed");
  for (BsVal c : q)
    if (!bs_is_signed(c)) throw DomainError("balanced coefficient in B_s polynomial");
  if (!bs_is_signed(a)) throw DomainError("roots are signed elements");
}

// Calls visit(λ, cand) for every accepted quotient; visit returns false to stop.
void for_each_quotient(const BsPoly& q, BsVal a,
                       const std::function<bool(BsVal, const BsPoly&)>& visit) {
  const std::size_t n = q.size() - 1;
  const BsVal na = bs_neg(a);
  static constexpr std::array<BsVal, 3> kSigned = {BsVal::Zero, BsVal::One, BsVal::MinusOne};
  for (BsVal lambda : {BsVal::One, BsVal::MinusOne}) {
    BsPoly lq(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) lq[k] = bs_mul(lambda, q[k]);
    BsPoly cand(n, BsVal::Zero);
    bool stop = false;
    // Coefficient k of (Y ⊖ a)·cand only involves cand[k-1] and cand[k],
    // so each level can be checked as soon as cand[k] is fixed.
    std::function<void(std::size_t)> dfs = [&](std::size_t k) {
      if (stop) return;
      if (k == n) {
        BsVal top = n ? cand[n - 1] : BsVal::Zero;
        if (!bs_balance(lq[n], top)) return;
        BsPoly trimmed = cand;
        while (!trimmed.empty() && trimmed.back() == BsVal::Zero) trimmed.pop_back();
        if (trimmed.empty()) return;
        if (!visit(lambda, trimmed)) stop = true;
        return;
      }
      BsVal prev = k ? cand[k - 1] : BsVal::Zero;
      for (BsVal c : kSigned) {
        if (!bs_balance(lq[k], bs_add(prev, bs_mul(na, c)))) continue;
        cand[k] = c;
        dfs(k + 1);
        if (stop) return;
      }
      cand[k] = BsVal::Zero;
    };
    dfs(0);
    if (stop) return;
  }
}

}  // namespace

std::vector<unsigned> saturation_set(const SPoly& p, const SVal& r) {
  require_signed_poly(p);
  if (r.is_zero()) throw DomainError("saturation set needs a nonzero root");
  Rational lvl = saturation_level(p, r);
  std::vector<unsigned> out;
  for (const auto& [k, c] : p.terms())
    if (c.mag() + Rational(k) * r.mag() == lvl) out.push_back(k);
  return out;
}

SPoly saturation_polynomial(const SPoly& p, const SVal& r) {
  SPoly out;
  for (unsigned k : saturation_set(p, r)) {
    Sign s = sign_mul(p.coeff(k).sign(), s_pow(r, k).sign());
    out.set(k, SVal::el(s, 0));
  }
  return out;
}

unsigned sign_changes(const SPoly& q) {
  unsigned count = 0;
  std::optional<Sign> prev;
  for (const auto& [k, c] : q.terms()) {
    if (c.sign() == Sign::Bal || c.mag() != 0)
      throw DomainError("sign changes need coefficients in {0, ±𝟙}");
    if (prev && *prev != c.sign()) ++count;
    prev = c.sign();
  }
  return count;
}

MultReport mult(const SPoly& p, const SVal& r) {
  require_signed_poly(p);
  require_signed_root(r);
  MultReport rep;
  rep.root = r;
  if (r.is_zero()) {
    rep.mult = static_cast<unsigned>(p.uval());
    rep.path = MultPath::ZeroRoot;
    return rep;
  }
  rep.sat = saturation_set(p, r);
  rep.sat_poly = saturation_polynomial(p, r);
  rep.mult = sign_changes(rep.sat_poly);
  rep.path = MultPath::SignChange;
  return rep;
}

BsPoly to_bs_poly(const SPoly& p) {
  if (p.is_zero()) return {};
  BsPoly q(static_cast<std::size_t>(p.deg()) + 1, BsVal::Zero);
  for (const auto& [k, c] : p.terms()) q[k] = sval_to_bs(c);
  return q;
}

SPoly from_bs_poly(const BsPoly& q) {
  SPoly p;
  for (std::size_t k = 0; k < q.size(); ++k) p.set(static_cast<unsigned>(k), bs_to_sval(q[k]));
  return p;
}

std::vector<std::pair<BsVal, BsPoly>> bs_quotients(const BsPoly& q, BsVal a) {
  check_bs_input(q, a);
  std::vector<std::pair<BsVal, BsPoly>> out;
  if (q.size() == 1) return out;
  for_each_quotient(q, a, [&](BsVal l, const BsPoly& c) {
    out.emplace_back(l, c);
    return true;
  });
  return out;
}

unsigned BsOracle::mult(const BsPoly& q, BsVal a) {
  check_bs_input(q, a);
  if (q.size() - 1 > cap_)
    throw CapacityError("oracle degree cap " + std::to_string(cap_) + " exceeded (degree " +
                        std::to_string(q.size() - 1) + ")");
  return search(q, a);
}

unsigned BsOracle::search(const BsPoly& q, BsVal a) {
  auto& memo = memo_[static_cast<std::size_t>(a)];
  const std::uint64_t key = bs_key(q);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  unsigned best = 0;
  if (bs_balance(bs_eval(q, a), BsVal::Zero) && q.size() > 1) {
    const unsigned n = static_cast<unsigned>(q.size() - 1);
    // Each level lowers the degree by one, so n bounds the result.
    for_each_quotient(q, a, [&](BsVal, const BsPoly& c) {
      best = std::max(best, 1 + search(c, a));
      return best < n;
    });
  }
  memo.emplace(key, best);
  return best;
}

unsigned mult_recursive_bs(const BsPoly& q, BsVal a, unsigned cap) {
  BsOracle oracle(cap);
  return oracle.mult(q, a);
}

unsigned mult_recursive_smax(const SPoly& p, const SVal& r, unsigned cap) {
  require_signed_poly(p);
  require_signed_root(r);
  if (p.deg() > static_cast<long>(cap))
    throw CapacityError("oracle degree cap " + std::to_string(cap) + " exceeded (degree " +
                        std::to_string(p.deg()) + ")");
  if (r.is_zero()) {
    // P_0 ∇ 𝟘 forces P_0 = 𝟘, and then λP ∇ Y·Q forces Q = λP/Y by
    // reduction of balances, so the definition unwinds one Y at a time.
    unsigned m = 0;
    while (p.coeff(m).is_zero()) ++m;
    return m;
  }
  SPoly sat = saturation_polynomial(p, SVal::pos(r.mag()));
  BsVal a = r.sign() == Sign::Pos ? BsVal::One : BsVal::MinusOne;
  BsOracle oracle(cap);
  return oracle.mult(to_bs_poly(sat), a);
}

MultReport mult_oracle_report(const SPoly& p, const SVal& r, unsigned cap) {
  MultReport rep;
  rep.root = r;
  rep.mult = mult_recursive_smax(p, r, cap);
  rep.path = MultPath::RecursiveOracle;
  if (!r.is_zero()) {
    rep.sat = saturation_set(p, SVal::pos(r.mag()));
    rep.sat_poly = saturation_polynomial(p, SVal::pos(r.mag()));
  }
  return rep;
}

DivisionWitness divide_witness(const SPoly& p, const SVal& r) {
  require_signed_poly(p);
  require_signed_root(r);
  if (!balance(s_eval(p, r), SVal::zero())) throw DomainError(to_string(r) + " is not a root");
  const unsigned n = static_cast<unsigned>(p.deg());
  DivisionWitness w{SVal::one(), SPoly()};
  if (r.is_zero()) {
    for (const auto& [k, c] : p.terms()) w.quotient.set(k - 1, c);
    return w;
  }
  // Reduce to the root 𝟙 of P(rY), then scale back.
  const SPoly pr = s_compose_scaled(p, r);
  std::vector<SVal> q(n);
  q[n - 1] = pr.coeff(n);
  std::vector<SVal> prefix(n + 1);
  SVal acc = SVal::zero();
  for (unsigned k = 0; k <= n; ++k) prefix[k] = acc = s_add(acc, pr.coeff(k));
  for (unsigned k = n - 1; k-- > 0;) {
    SVal a1 = s_neg(prefix[k]);
    SVal a2 = s_add(pr.coeff(k + 1), q[k + 1]);
    if (!balance(a1, a2)) throw DomainError("division witness: inductive balance failed");
    q[k] = tangible_balance(a1, a2);
  }
  for (unsigned k = 0; k < n; ++k) w.quotient.set(k, s_mul(s_pow(r, n - k - 1), q[k]));
  w.lambda = s_pow(r, n);
  return w;
}

bool is_division_witness(const SPoly& p, const SVal& r, const DivisionWitness& w) {
  if (!w.lambda.is_tangible() || !w.quotient.all_signed()) return false;
  return poly_balance(s_scale(p, w.lambda), s_mul_poly(linear_factor(r), w.quotient));
}

MultSum mult_sum_check(const SPoly& p) {
  require_signed_poly(p);
  MultSum out;
  for (const auto& c : corners(p.abs())) {
    CornerTally t{c.value, c.mult, 0, 0};
    if (c.value.is_bot()) {
      t.mult_pos = mult(p, SVal::zero()).mult;
    } else {
      t.mult_pos = mult(p, SVal::pos(c.value.value())).mult;
      t.mult_neg = mult(p, SVal::neg(c.value.value())).mult;
    }
    if (t.mult_pos + t.mult_neg > t.corner_mult) out.corner_bounds_hold = false;
    out.total += t.mult_pos + t.mult_neg;
    out.per_corner.push_back(t);
  }
  out.degree_bound_holds = out.total <= static_cast<unsigned>(p.deg());
  return out;
}

bool gap_condition(const SPoly& p) {
  require_signed_poly(p);
  for (const auto& c : corners(p.abs())) {
    if (c.value.is_bot()) continue;
    SPoly sat = saturation_polynomial(p, SVal::pos(c.value.value()));
    const auto& t = sat.terms();
    for (auto it = t.begin(); std::next(it) != t.end(); ++it) {
      auto nx = std::next(it);
      unsigned gap = nx->first - it->first;
      if (gap == 1) continue;
      if (gap == 2 && nx->second == s_neg(it->second)) continue;
      return false;
    }
  }
  return true;
}

MultFactorResult factor_from_multiplicities(const SPoly& p) {
  MultSum ms = mult_sum_check(p);
  MultFactorResult res;
  res.total = ms.total;
  res.gap_condition = gap_condition(p);
  if (ms.total != static_cast<unsigned>(p.deg())) return res;
  std::vector<SVal> roots;
  for (const auto& t : ms.per_corner) {
    if (t.corner.is_bot()) {
      roots.insert(roots.end(), t.mult_pos, SVal::zero());
    } else {
      roots.insert(roots.end(), t.mult_pos, SVal::pos(t.corner.value()));
      roots.insert(roots.end(), t.mult_neg, SVal::neg(t.corner.value()));
    }
  }
  Factorization f = make_factorization(p.lead(), std::move(roots));
  res.function_matches = same_function(p, sharp_representative(f));
  if (res.function_matches) res.factorization = std::move(f);
  return res;
}

std::vector<std::pair<SVal, unsigned>> mult_from_unique_factorization(const SPoly& p) {
  UniquenessReport u = unique_factorization(p);
  if (u.kind != Uniqueness::Unique)
    throw DomainError("factorization is not certified unique (" + to_string(u.kind) + ")");
  std::vector<std::pair<SVal, unsigned>> out;
  for (const auto& r : u.factorization->roots) {
    if (!out.empty() && out.back().first == r)
      ++out.back().second;
    else
      out.emplace_back(r, 1);
  }
  return out;
}

}  // namespace trop
