#include "trop/spoly.hpp"

#include <algorithm>
#include <set>

#include "trop/errors.hpp"

namespace trop {

SPoly::SPoly(Terms terms) {
  for (auto& [k, v] : terms) set(k, v);
}

SPoly::SPoly(std::initializer_list<std::pair<const unsigned, SVal>> init) {
  for (const auto& [k, v] : init) set(k, v);
}

SPoly SPoly::monomial(const SVal& c, unsigned k) {
  SPoly p;
  p.set(k, c);
  return p;
}

SVal SPoly::coeff(unsigned k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? SVal::zero() : it->second;
}

void SPoly::set(unsigned k, const SVal& v) {
  if (v.is_zero())
    terms_.erase(k);
  else
    terms_[k] = v;
}

long SPoly::deg() const noexcept {
  return terms_.empty() ? kZeroPolyDeg : static_cast<long>(terms_.rbegin()->first);
}

long SPoly::uval() const noexcept {
  return terms_.empty() ? kZeroPolyUval : static_cast<long>(terms_.begin()->first);
}

const SVal& SPoly::lead() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

bool SPoly::all_signed() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_signed(); });
}

TPoly SPoly::abs() const {
  TPoly out;
  for (const auto& [k, v] : terms_) out.set(k, v.modulus());
  return out;
}

SVal s_eval(const SPoly& p, const SVal& y) {
  SVal acc = SVal::zero();
  for (const auto& [k, c] : p.terms()) acc = s_add(acc, s_mul(c, s_pow(y, k)));
  return acc;
}

SPoly s_add_poly(const SPoly& p, const SPoly& q) {
  SPoly out = p;
  for (const auto& [k, c] : q.terms()) out.set(k, s_add(out.coeff(k), c));
  return out;
}

SPoly s_mul_poly(const SPoly& p, const SPoly& q) {
  SPoly out;
  for (const auto& [i, a] : p.terms())
    for (const auto& [j, b] : q.terms()) out.set(i + j, s_add(out.coeff(i + j), s_mul(a, b)));
  return out;
}

SPoly s_scale(const SPoly& p, const SVal& c) {
  SPoly out;
  for (const auto& [k, v] : p.terms()) out.set(k, s_mul(v, c));
  return out;
}

SPoly s_compose_scaled(const SPoly& p, const SVal& a) {
  SPoly out;
  for (const auto& [k, v] : p.terms()) out.set(k, s_mul(v, s_pow(a, k)));
  return out;
}

SPoly linear_factor(const SVal& r) {
  SPoly f = SPoly::monomial(SVal::one(), 1);
  f.set(0, s_neg(r));
  return f;
}

bool poly_balance(const SPoly& p, const SPoly& q) {
  std::set<unsigned> ks;
  for (const auto& t : p.terms()) ks.insert(t.first);
  for (const auto& t : q.terms()) ks.insert(t.first);
  return std::all_of(ks.begin(), ks.end(), [&](unsigned k) { return balance(p.coeff(k), q.coeff(k)); });
}

bool poly_order_natural(const SPoly& p, const SPoly& q) { return s_add_poly(p, q) == q; }

namespace {

void require_signed(const SPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (!p.all_signed()) throw DomainError("balanced coefficient in input polynomial");
}

}  // namespace

std::vector<SVal> root_candidates(const SPoly& p) {
  require_signed(p);
  std::vector<SVal> out;
  for (const auto& c : corners(p.abs())) {
    if (c.value.is_bot()) {
      out.push_back(SVal::zero());
    } else {
      out.push_back(SVal::pos(c.value.value()));
      out.push_back(SVal::neg(c.value.value()));
    }
  }
  return out;
}

std::vector<RootCandidate> signed_roots(const SPoly& p) {
  std::vector<RootCandidate> out;
  for (const auto& y : root_candidates(p)) out.push_back({y, balance(s_eval(p, y), SVal::zero())});
  return out;
}

Factorization make_factorization(SVal lead, std::vector<SVal> roots) {
  if (!lead.is_tangible()) throw DomainError("factorization lead must be tangible");
  for (const auto& r : roots)
    if (!r.is_signed()) throw DomainError("factorization roots must be signed");
  std::sort(roots.begin(), roots.end(), display_before);
  return {std::move(lead), std::move(roots)};
}

std::optional<Factorization> factor_function(const SPoly& p) {
  require_signed(p);
  if (!is_factored_formal(p.abs())) return std::nullopt;
  const long n = p.deg(), m = p.uval();
  std::vector<SVal> roots;
  for (long i = 1; i <= n; ++i) {
    if (i <= n - m) {
      const SVal& hi = p.coeff(static_cast<unsigned>(n - i + 1));
      const SVal& lo = p.coeff(static_cast<unsigned>(n - i));
      roots.push_back(s_mul(s_neg(lo), s_inv(hi)));
    } else {
      roots.push_back(SVal::zero());
    }
  }
  return make_factorization(p.lead(), std::move(roots));
}

SPoly sharp_representative(const Factorization& f) {
  SPoly acc = SPoly::monomial(f.lead, 0);
  for (const auto& r : f.roots) acc = s_mul_poly(acc, linear_factor(r));
  return acc;
}

std::vector<SVal> function_sample_points(const SPoly& p, const SPoly& q) {
  std::set<Rational> bps;
  for (const SPoly* s : {&p, &q}) {
    if (s->is_zero()) continue;
    for (const auto& c : corners(s->abs()))
      if (c.value.is_fin()) bps.insert(c.value.value());
  }
  std::vector<Rational> mags;
  if (bps.empty()) {
    mags = {rat(-1), rat(0), rat(1)};
  } else {
    std::vector<Rational> b(bps.begin(), bps.end());
    mags.push_back(b.front() - 2);
    mags.push_back(b.front() - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      mags.push_back(b[i]);
      if (i + 1 < b.size()) {
        Rational gap = (b[i + 1] - b[i]) / 3;
        mags.push_back(b[i] + gap);
        mags.push_back(b[i] + 2 * gap);
      }
    }
    mags.push_back(b.back() + 1);
    mags.push_back(b.back() + 2);
  }
  std::vector<SVal> out{SVal::zero()};
  for (const auto& m : mags) {
    out.push_back(SVal::pos(m));
    out.push_back(SVal::neg(m));
    out.push_back(SVal::bal(m));
  }
  return out;
}

bool same_function(const SPoly& p, const SPoly& q) {
  for (const auto& y : function_sample_points(p, q))
    if (s_eval(p, y) != s_eval(q, y)) return false;
  return true;
}

std::vector<Factorization> enumerate_factorizations(const SPoly& p) {
  require_signed(p);
  const CornerList cl = corners(p.abs());
  std::vector<Factorization> out;
  // split[i] = number of positive copies at corner i.
  std::vector<unsigned> split(cl.size(), 0);
  while (true) {
    std::vector<SVal> roots;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (cl[i].value.is_bot()) {
        roots.insert(roots.end(), cl[i].mult, SVal::zero());
        continue;
      }
      const Rational& c = cl[i].value.value();
      roots.insert(roots.end(), split[i], SVal::pos(c));
      roots.insert(roots.end(), cl[i].mult - split[i], SVal::neg(c));
    }
    Factorization f = make_factorization(p.lead(), std::move(roots));
    if (same_function(p, sharp_representative(f))) out.push_back(std::move(f));

    std::size_t i = 0;
    for (; i < cl.size(); ++i) {
      if (cl[i].value.is_bot() || split[i] == cl[i].mult) {
        split[i] = 0;
        continue;
      }
      ++split[i];
      break;
    }
    if (i == cl.size()) break;
  }
  return out;
}

UniquenessReport unique_factorization(const SPoly& p) {
  require_signed(p);
  UniquenessReport rep;
  auto all = enumerate_factorizations(p);
  if (all.size() >= 2) {
    rep.kind = Uniqueness::NonUnique;
    rep.witnesses = std::move(all);
    return rep;
  }
  auto f = factor_function(p);
  if (!f) return rep;
  // Same modulus must carry the same sign.
  for (std::size_t i = 0; i + 1 < f->roots.size(); ++i) {
    const auto &a = f->roots[i], &b = f->roots[i + 1];
    if (!a.is_zero() && !b.is_zero() && a.mag() == b.mag() && a.sign() != b.sign()) return rep;
  }
  rep.kind = Uniqueness::Unique;
  rep.factorization = std::move(f);
  return rep;
}

std::string to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::Unique: return "Unique";
    case Uniqueness::NonUnique: return "NonUnique";
    case Uniqueness::Unknown: break;
  }
  return "Unknown";
}

}  // namespace trop
