#include "trop/tpoly.hpp"

#include <algorithm>

#include "trop/errors.hpp"

namespace trop {

TPoly TPoly::monomial(const GVal& c, unsigned k) {
  TPoly p;
  p.set(k, c);
  return p;
}

GVal TPoly::coeff(unsigned k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GVal::bot() : GVal::fin(it->second);
}

void TPoly::set(unsigned k, const GVal& v) {
  if (v.is_bot())
    terms_.erase(k);
  else
    terms_[k] = v.value();
}

long TPoly::deg() const noexcept {
  return terms_.empty() ? kZeroPolyDeg : static_cast<long>(terms_.rbegin()->first);
}

long TPoly::uval() const noexcept {
  return terms_.empty() ? kZeroPolyUval : static_cast<long>(terms_.begin()->first);
}

GVal t_eval(const TPoly& p, const GVal& y) {
  GVal best = GVal::bot();
  for (const auto& [k, c] : p.terms()) best = t_add(best, t_mul(GVal::fin(c), t_pow(y, k)));
  return best;
}

std::vector<HullVertex> newton_polygon(const TPoly& p) {
  std::vector<HullVertex> h;
  for (const auto& [k, c] : p.terms()) {
    // Pop while the last vertex lies on or below the chord to (k, c).
    while (h.size() >= 2) {
      const auto& o = h[h.size() - 2];
      const auto& a = h.back();
      Rational cross = Rational(a.degree - o.degree) * (c - o.value) -
                       (a.value - o.value) * Rational(k - o.degree);
      if (cross < 0) break;
      h.pop_back();
    }
    h.push_back({k, c});
  }
  return h;
}

CornerList corners(const TPoly& p) {
  if (p.is_zero()) throw DomainError("corners of the zero polynomial");
  auto h = newton_polygon(p);
  CornerList out;
  for (std::size_t i = h.size(); i-- > 1;) {
    const auto& l = h[i - 1];
    const auto& r = h[i];
    unsigned len = r.degree - l.degree;
    Rational slope = (r.value - l.value) / Rational(len);
    out.push_back({GVal::fin(-slope), len});
  }
  if (p.uval() > 0) out.push_back({GVal::bot(), static_cast<unsigned>(p.uval())});
  return out;
}

std::vector<GVal> expand_corners(const CornerList& cl) {
  std::vector<GVal> out;
  for (const auto& c : cl) out.insert(out.end(), c.mult, c.value);
  return out;
}

TPoly concave_hull(const TPoly& p) {
  auto h = newton_polygon(p);
  TPoly out;
  if (h.empty()) return out;
  out.set(h.front().degree, GVal::fin(h.front().value));
  for (std::size_t i = 1; i < h.size(); ++i) {
    const auto& l = h[i - 1];
    const auto& r = h[i];
    Rational slope = (r.value - l.value) / Rational(r.degree - l.degree);
    for (unsigned k = l.degree + 1; k <= r.degree; ++k)
      out.set(k, GVal::fin(l.value + slope * Rational(k - l.degree)));
  }
  return out;
}

TPoly canonical_form(const TPoly& p) {
  if (p.is_zero()) throw DomainError("canonical form of the zero polynomial");
  // Every breakpoint of y -> P(y) - ky is a crossing point of two monomials.
  std::vector<Rational> ys;
  const auto& t = p.terms();
  for (auto i = t.begin(); i != t.end(); ++i)
    for (auto j = std::next(i); j != t.end(); ++j)
      ys.push_back((i->second - j->second) / Rational(j->first - i->first));
  if (ys.empty()) ys.push_back(0);
  std::vector<Rational> vals;
  vals.reserve(ys.size());
  for (const auto& y : ys) vals.push_back(t_eval(p, GVal::fin(y)).value());

  TPoly out;
  for (long k = p.uval(); k <= p.deg(); ++k) {
    Rational best = vals[0] - Rational(k) * ys[0];
    for (std::size_t i = 1; i < ys.size(); ++i) {
      Rational v = vals[i] - Rational(k) * ys[i];
      if (v < best) best = v;
    }
    out.set(static_cast<unsigned>(k), GVal::fin(best));
  }
  return out;
}

TFactorization t_factor(const TPoly& p) {
  if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
  TPoly h = concave_hull(p);
  const long n = p.deg(), m = p.uval();
  TFactorization f{GVal::fin(h.terms().at(static_cast<unsigned>(n))), {}};
  for (long i = 1; i <= n; ++i) {
    if (i <= n - m)
      f.roots.push_back(t_div(h.coeff(static_cast<unsigned>(n - i)), h.coeff(static_cast<unsigned>(n - i + 1))));
    else
      f.roots.push_back(GVal::bot());
  }
  return f;
}

TPoly t_expand(const GVal& lead, const std::vector<GVal>& roots) {
  TPoly acc = TPoly::monomial(lead, 0);
  for (const auto& c : roots) {
    TPoly lin = TPoly::monomial(GVal::fin(0), 1);
    lin.set(0, c);
    acc = t_mul_poly(acc, lin);
  }
  return acc;
}

bool is_factored_formal(const TPoly& p) {
  if (p.is_zero()) return true;
  const auto& t = p.terms();
  if (static_cast<long>(t.size()) != p.deg() - p.uval() + 1) return false;
  // P_{k-1} - P_k must be nonincreasing as k decreases from deg.
  std::optional<Rational> prev;
  for (auto it = t.rbegin(); std::next(it) != t.rend(); ++it) {
    Rational d = std::next(it)->second - it->second;
    if (prev && d > *prev) return false;
    prev = d;
  }
  return true;
}

TPoly t_add_poly(const TPoly& p, const TPoly& q) {
  TPoly out = p;
  for (const auto& [k, c] : q.terms()) out.set(k, t_add(out.coeff(k), GVal::fin(c)));
  return out;
}

TPoly t_mul_poly(const TPoly& p, const TPoly& q) {
  TPoly out;
  for (const auto& [i, a] : p.terms())
    for (const auto& [j, b] : q.terms()) out.set(i + j, t_add(out.coeff(i + j), GVal::fin(a + b)));
  return out;
}

}  // namespace trop
