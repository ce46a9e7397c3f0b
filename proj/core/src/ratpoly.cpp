#include "trop/ratpoly.hpp"

#include <algorithm>

#include "trop/errors.hpp"

namespace trop {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

enum class End { Zero, MinusInf, PlusInf };

int sign_at(const RatPoly& p, End end) {
  switch (end) {
    case End::Zero: return sgn(p.coeff(0));
    case End::MinusInf: return p.deg() % 2 == 0 ? sgn(p.lead()) : -sgn(p.lead());
    case End::PlusInf: break;
  }
  return sgn(p.lead());
}

unsigned variations(const std::vector<RatPoly>& chain, End end) {
  unsigned v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, end);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(c_); }

const Rational& RatPoly::lead() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(k));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::reflect() const {
  std::vector<Rational> d = c_;
  for (std::size_t k = 1; k < d.size(); k += 2) d[k] = -d[k];
  return RatPoly(std::move(d));
}

std::pair<RatPoly, unsigned> RatPoly::strip_zero_root() const {
  unsigned k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return {RatPoly(std::vector<Rational>(c_.begin() + k, c_.end())), k};
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rational(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (r.size() <= db) return {RatPoly(), a};
  std::vector<Rational> q(r.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    Rational f = r[i] / b.lead();
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return Rational(1) / x.lead() * x;
}

std::vector<RatPoly> sturm_chain(const RatPoly& q) {
  if (q.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  auto normalize = [](const RatPoly& p) { return Rational(1) / abs(p.lead()) * p; };
  std::vector<RatPoly> chain{normalize(q)};
  RatPoly d = q.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(normalize(d));
  while (true) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(normalize(Rational(-1) * r));
  }
  return chain;
}

unsigned sturm_count(const RatPoly& q, RealInterval where) {
  if (q.is_zero()) throw DomainError("root count of the zero polynomial");
  switch (where) {
    case RealInterval::All: {
      auto chain = sturm_chain(q);
      return variations(chain, End::MinusInf) - variations(chain, End::PlusInf);
    }
    case RealInterval::Positive: {
      auto chain = sturm_chain(q.strip_zero_root().first);
      return variations(chain, End::Zero) - variations(chain, End::PlusInf);
    }
    case RealInterval::Negative:
      return sturm_count(q.reflect(), RealInterval::Positive);
  }
  return 0;
}

bool sturm_squarefree_check(const RatPoly& q) {
  if (q.is_zero()) throw DomainError("squarefree test of the zero polynomial");
  return gcd(q, q.derivative()).deg() <= 0;
}

bool real_roots_simple(const RatPoly& q, RealInterval where) {
  if (q.is_zero()) throw DomainError("root test of the zero polynomial");
  RatPoly g = gcd(q, q.derivative());
  return g.deg() <= 0 || sturm_count(g, where) == 0;
}

std::string to_string(const RatPoly& q) {
  if (q.is_zero()) return "0";
  std::string s;
  for (std::size_t k = q.coeffs().size(); k-- > 0;) {
    const Rational& c = q.coeffs()[k];
    if (c == 0) continue;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    s += to_string(Rational(abs(c)));
    if (k >= 1) s += "*Y";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace trop
