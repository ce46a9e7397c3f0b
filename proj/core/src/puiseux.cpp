#include "trop/puiseux.hpp"

#include <algorithm>
#include <map>

#include "trop/errors.hpp"
#include "trop/multiplicity.hpp"

namespace trop {

namespace {

struct ExpDesc {
  bool operator()(const Rational& a, const Rational& b) const { return a > b; }
};

PSeries from_map(const std::map<Rational, Rational, ExpDesc>& m) {
  std::vector<PSeries::Term> t;
  for (const auto& [e, c] : m)
    if (c != 0) t.push_back({c, e});
  return PSeries(std::move(t));
}

}  // namespace

PSeries::PSeries(std::vector<Term> terms) {
  std::map<Rational, Rational, ExpDesc> m;
  for (auto& t : terms) m[t.exp] += t.coeff;
  for (const auto& [e, c] : m)
    if (c != 0) terms_.push_back({c, e});
}

GVal PSeries::valuation() const { return terms_.empty() ? GVal::bot() : GVal::fin(terms_.front().exp); }

const Rational& PSeries::dominant_coeff() const {
  if (terms_.empty()) throw DomainError("zero series has no dominant coefficient");
  return terms_.front().coeff;
}

int PSeries::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

PSeries operator+(const PSeries& a, const PSeries& b) {
  std::vector<PSeries::Term> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return PSeries(std::move(t));
}

PSeries operator-(const PSeries& a) {
  std::vector<PSeries::Term> t = a.terms();
  for (auto& x : t) x.coeff = -x.coeff;
  return PSeries(std::move(t));
}

PSeries operator-(const PSeries& a, const PSeries& b) { return a + (-b); }

PSeries operator*(const PSeries& a, const PSeries& b) {
  std::map<Rational, Rational, ExpDesc> m;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) m[x.exp + y.exp] += x.coeff * y.coeff;
  return from_map(m);
}

SVal sv(const PSeries& f) {
  if (f.is_zero()) return SVal::zero();
  return SVal::el(f.sign() > 0 ? Sign::Pos : Sign::Neg, f.valuation().value());
}

FPoly::FPoly(std::vector<PSeries> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FPoly operator*(const FPoly& a, const FPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<PSeries> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = c[i + j] + a.coeffs()[i] * b.coeffs()[j];
  return FPoly(std::move(c));
}

FPoly expand_linear_product(const std::vector<PSeries>& roots) {
  FPoly acc({PSeries::constant(1)});
  for (const auto& x : roots) acc = acc * FPoly({-x, PSeries::constant(1)});
  return acc;
}

SPoly sv_poly(const FPoly& p) {
  SPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.set(static_cast<unsigned>(k), sv(p.coeffs()[k]));
  return out;
}

TPoly valuation_poly(const FPoly& p) {
  TPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.set(static_cast<unsigned>(k), p.coeffs()[k].valuation());
  return out;
}

RatPoly initial_form(const FPoly& p, const SVal& r) {
  if (r.is_zero()) throw DomainError("initial form needs a nonzero root modulus");
  SPoly s = sv_poly(p);
  if (s.is_zero()) throw DomainError("initial form of the zero polynomial");
  bool corner = false;
  for (const auto& c : corners(s.abs()))
    if (c.value == r.modulus()) corner = true;
  if (!corner) throw DomainError(to_string(r.modulus()) + " is not a corner");
  std::vector<Rational> q(static_cast<std::size_t>(p.deg()) + 1);
  for (unsigned k : saturation_set(s, r)) q[k] = p.coeffs()[k].dominant_coeff();
  return RatPoly(std::move(q));
}

std::string to_string(const PSeries& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (s.empty())
      s += t.coeff < 0 ? "-" : "";
    else
      s += t.coeff < 0 ? " - " : " + ";
    s += to_string(Rational(abs(t.coeff)));
    if (t.exp == 0) continue;
    s += "*t";
    if (t.exp == 1) continue;
    if (t.exp.get_den() == 1 && t.exp > 0)
      s += "^" + to_string(t.exp);
    else
      s += "^(" + to_string(t.exp) + ")";
  }
  return s;
}

}  // namespace trop
