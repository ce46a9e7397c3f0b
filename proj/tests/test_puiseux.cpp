#include <gtest/gtest.h>

#include "support.hpp"
#include "trop/errors.hpp"
#include "trop/text.hpp"

using namespace trop;

namespace {

constexpr int kIterations = 300;

PSeries P(const char* s) { return parse_pseries(s); }

// Integer exponents only, so t can be replaced by a rational number.
PSeries integral_series(gen::Gen& g) {
  std::vector<PSeries::Term> t;
  for (int i = 0; i < 3; ++i) t.push_back({g.small_rational(5, 3), Rational(g.uniform(-3, 3))});
  return PSeries(std::move(t));
}

Rational at(const PSeries& f, const Rational& t) {
  Rational s = 0;
  for (const auto& term : f.terms()) {
    long e = term.exp.get_num().get_si();
    Rational p = 1;
    for (long i = 0; i < std::abs(e); ++i) p *= t;
    s += term.coeff * (e < 0 ? 1 / p : p);
  }
  return s;
}

PSeries horner(const FPoly& p, const PSeries& x) {
  PSeries acc;
  for (long k = p.deg(); k >= 0; --k) acc = acc * x + p.coeffs()[static_cast<std::size_t>(k)];
  return acc;
}

const std::vector<PSeries>& factored_roots() {
  static const std::vector<PSeries> r = {P("-1*t^5"), P("t"), P("t"), P("t"), P("t^(-2)")};
  return r;
}

}  // namespace

TEST(Puiseux, SeriesBasics) {
  PSeries f = P("-1*t^5 + 3*t^(1/2) - 2*t^(-2)");
  EXPECT_EQ(f.valuation(), GVal::fin(5));
  EXPECT_EQ(f.dominant_coeff(), -1);
  EXPECT_EQ(sv(f), SVal::neg(5));
  EXPECT_EQ(sv(PSeries()), SVal::zero());
  EXPECT_EQ(PSeries().valuation(), GVal::bot());
  EXPECT_THROW(PSeries().dominant_coeff(), DomainError);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(P("t^(1/2)") * P("t^(1/2)"), P("t"));
}

TEST(Puiseux, RingLawsAndEvaluation) {
  gen::Gen g(61);
  for (int i = 0; i < kIterations; ++i) {
    PSeries a = g.pseries(), b = g.pseries(), c = g.pseries();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    PSeries x = integral_series(g), y = integral_series(g);
    for (Rational t : {rat(2), rat(1, 3), rat(-5, 2)}) {
      EXPECT_EQ(at(x * y, t), at(x, t) * at(y, t));
      EXPECT_EQ(at(x + y, t), at(x, t) + at(y, t));
    }
  }
}

TEST(Puiseux, SignedValuationIsAMorphism) {
  gen::Gen g(62);
  for (int i = 0; i < kIterations; ++i) {
    PSeries a = g.pseries(), b = g.pseries();
    EXPECT_EQ(sv(a * b), s_mul(sv(a), sv(b)));
    SVal s = s_add(sv(a), sv(b));
    EXPECT_TRUE(balance(sv(a + b), s) || order_circ(sv(a + b), s));
    if (s.is_signed()) EXPECT_EQ(sv(a + b), s);
  }
}

TEST(Puiseux, FactoredExample) {
  FPoly p = expand_linear_product(factored_roots());
  ASSERT_EQ(p.deg(), 5);
  EXPECT_EQ(p.coeff(5), P("1"));
  EXPECT_EQ(p.coeff(4), P("t^5 - 3*t - t^(-2)"));
  EXPECT_EQ(p.coeff(3), P("-3*t^6 - t^3 + 3*t^2 + 3*t^(-1)"));
  EXPECT_EQ(p.coeff(2), P("3*t^7 + 3*t^4 - t^3 - 3"));
  EXPECT_EQ(p.coeff(1), P("-1*t^8 - 3*t^5 + t"));
  EXPECT_EQ(p.coeff(0), P("t^6"));
  SPoly s = sv_poly(p);
  EXPECT_EQ(s, parse_spoly("Y^5 + 5 Y^4 - 6 Y^3 + 7 Y^2 - 8 Y + 6"));
  EXPECT_EQ(mult(s, SVal::neg(5)).mult, 1u);
  EXPECT_EQ(mult(s, SVal::pos(1)).mult, 3u);
  EXPECT_EQ(mult(s, SVal::pos(-2)).mult, 1u);
  for (const auto& x : factored_roots()) EXPECT_TRUE(horner(p, x).is_zero());
  auto checks = check_product_lift(factored_roots(), FPoly({P("1")}));
  for (const auto& c : checks) {
    EXPECT_TRUE(c.determined);
    EXPECT_TRUE(c.equal) << to_string(c.root);
  }
}

TEST(Puiseux, ComplexFactorGivesStrictInequality) {
  std::vector<PSeries> real = {P("-1*t^5"), P("t"), P("t^(-2)")};
  FPoly cof({P("t^2"), PSeries(), P("1")});
  FPoly p = expand_linear_product(real) * cof;
  EXPECT_EQ(p.coeff(4), P("t^5 - t - t^(-2)"));
  EXPECT_EQ(p.coeff(3), P("-1*t^6 - t^3 + t^2 + t^(-1)"));
  EXPECT_EQ(p.coeff(2), P("t^7 + t^4 - t^3 - 1"));
  EXPECT_EQ(p.coeff(1), P("-1*t^8 - t^5 + t"));
  EXPECT_EQ(p.coeff(0), P("t^6"));
  EXPECT_EQ(sv_poly(p), parse_spoly("Y^5 + 5 Y^4 - 6 Y^3 + 7 Y^2 - 8 Y + 6"));
  // Initial form at the corner 1: Y (Y − 1)(Y² + 1), up to the power of Y.
  RatPoly in = initial_form(p, SVal::pos(1)).strip_zero_root().first;
  RatPoly expect = RatPoly({Rational(-1), Rational(1)}) * RatPoly({Rational(1), Rational(0), Rational(1)});
  EXPECT_EQ(in, expect);
  for (const auto& lifted : {check_product_lift(real, cof), check_lift(p)}) {
    bool seen = false;
    for (const auto& c : lifted) {
      if (c.root != SVal::pos(1)) continue;
      seen = true;
      EXPECT_EQ(c.mult, 3u);
      EXPECT_EQ(c.lifted_count, 1u);
      EXPECT_TRUE(c.determined);
      EXPECT_FALSE(c.equal);
      EXPECT_TRUE(c.bound_ok);
      EXPECT_TRUE(c.mod2_ok);
    }
    EXPECT_TRUE(seen);
  }
  EXPECT_THROW(initial_form(p, SVal::pos(3)), DomainError);
  EXPECT_THROW(initial_form(p, SVal::zero()), DomainError);
}

TEST(Puiseux, KapranovOnRandomProducts) {
  gen::Gen g(63);
  for (int i = 0; i < kIterations / 3; ++i) {
    std::vector<PSeries> roots;
    int n = g.uniform(1, 5);
    for (int j = 0; j < n; ++j) roots.push_back(g.coin(0.1) ? PSeries() : g.pseries(2));
    KapranovReport k = kapranov_check(roots);
    EXPECT_TRUE(k.holds);
    EXPECT_EQ(k.root_valuations.size(), roots.size());
  }
}

TEST(Descartes, BoundAndParityOnProductLifts) {
  gen::Gen g(64);
  int determined = 0;
  for (int i = 0; i < kIterations / 3; ++i) {
    std::vector<PSeries> real;
    int n = g.uniform(0, 4);
    for (int j = 0; j < n; ++j) real.push_back(g.pseries(2));
    // (Y − a)² + b² has no real roots.
    FPoly cof({P("1")});
    int nq = g.uniform(0, 2);
    for (int j = 0; j < nq; ++j) {
      PSeries a = g.pseries(1), b = g.pseries(1);
      cof = cof * FPoly({a * a + b * b, PSeries::constant(-2) * a, P("1")});
    }
    if (n + nq == 0) continue;
    for (const auto& c : check_product_lift(real, cof)) {
      if (!c.determined) continue;
      ++determined;
      EXPECT_TRUE(c.bound_ok) << to_string(c.root);
      EXPECT_TRUE(c.mod2_ok) << to_string(c.root);
      if (nq == 0) EXPECT_TRUE(c.equal);
    }
  }
  EXPECT_GT(determined, 100);
}

TEST(Descartes, ViroLiftShape) {
  SPoly p = parse_spoly("Y^3 + 2 Y^2 - 2 Y + 2");
  FPoly f = viro_lift(p, rat(2));
  EXPECT_EQ(sv_poly(f), p);
  EXPECT_EQ(f.coeff(3), PSeries::constant(rat(1, 512)));
  EXPECT_EQ(f.coeff(1), PSeries::monomial(rat(-1, 2), 2));
  EXPECT_THROW(viro_lift(p, rat(0)), DomainError);
  EXPECT_THROW(viro_lift(p, rat(2), [](unsigned k) -> Rational { return Rational(k); }), DomainError);
  EXPECT_THROW(viro_lift(p, rat(2), [](unsigned k) -> Rational { return -Rational(k * k) / 2; }), DomainError);
  EXPECT_THROW(viro_lift(parse_spoly("Y + 1*"), rat(2)), DomainError);
}

TEST(Descartes, TightLiftsForRandomPolynomials) {
  gen::Gen g(65);
  for (int i = 0; i < 40; ++i) {
    SPoly p = g.signed_poly(static_cast<unsigned>(g.uniform(1, 5)));
    DescartesReport d = verify_descartes(p);
    ASSERT_TRUE(d.success) << to_string(p) << ": " << d.diagnostics;
    EXPECT_EQ(sv_poly(d.lift), p);
    for (const auto& c : d.roots) {
      EXPECT_TRUE(c.equal);
      EXPECT_TRUE(c.determined);
    }
    auto again = check_lift(d.lift);
    ASSERT_EQ(again.size(), d.roots.size());
    for (std::size_t k = 0; k < again.size(); ++k) EXPECT_EQ(again[k].lifted_count, d.roots[k].lifted_count);
  }
}

TEST(Descartes, NoRootsIsTriviallyTight) {
  DescartesReport d = verify_descartes(parse_spoly("Y^2 + 1"));
  EXPECT_TRUE(d.success);
  EXPECT_EQ(d.attempts, 1u);
  for (const auto& c : d.roots) EXPECT_EQ(c.mult, 0u);
}

TEST(Descartes, CapExhaustionIsReported) {
  DescartesOptions opt;
  opt.u_cap = 0;
  DescartesReport d = verify_descartes(parse_spoly("Y^2 - 0"), opt);
  EXPECT_FALSE(d.success);
  EXPECT_FALSE(d.diagnostics.empty());
}
