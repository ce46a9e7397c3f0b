// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "io.hpp"
#include "support.hpp"
#include "trop/axioms.hpp"
#include "trop/text.hpp"

using namespace trop;

namespace {

// Time budgets, in seconds. All arithmetic is exact, so there are no
// numeric tolerances.
constexpr double kLimit1 = 1e-3;
constexpr double kLimit7 = 60;
constexpr double kLimit8 = 120;
constexpr double kLimit9 = 300;

constexpr std::uint64_t kSeed8 = 0x5eed0008;
constexpr std::uint64_t kSeed9 = 0x5eed0009;
constexpr std::uint64_t kSeed10 = 0x5eed0010;
constexpr std::uint64_t kSeed11 = 0x5eed0011;
constexpr std::size_t kSmaxTuples = 10000;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

SPoly product(const SVal& lead, const std::vector<SVal>& roots) {
  SPoly p = SPoly::monomial(lead, 0);
  for (const auto& r : roots) p = s_mul_poly(p, linear_factor(r));
  return p;
}

std::string cli_out(std::vector<std::string> args) {
  std::istringstream in;
  std::ostringstream out;
  cli::run(args, in, out);
  return out.str();
}

Outcome c1() {
  Outcome o;
  TPoly p = parse_tpoly("Y^5 + 4 Y^3 + Y + 1");
  TPoly expect_hull = parse_tpoly("Y^5 + 2 Y^4 + 4 Y^3 + 3 Y^2 + 2 Y + 1");
  auto t0 = Clock::now();
  CornerList cl = corners(p);
  TPoly h = concave_hull(p);
  TPoly c = canonical_form(p);
  double dt = seconds_since(t0);
  o.require(cl == CornerList{{GVal::fin(2), 2}, {GVal::fin(-1), 3}}, "corners differ");
  o.require(h == expect_hull, "hull differs");
  o.require(c == h, "canonical form differs from hull");
  o.require(cli_out({"corners", "Y^5 + 4 Y^3 + Y + 1", "--format", "json"}).find(
                R"("corners":[{"corner":"2","mult":2},{"corner":"-1","mult":3}])") != std::string::npos,
            "CLI corners output differs");
  o.require(dt < kLimit1, "took " + std::to_string(dt * 1e3) + " ms");
  o.detail = o.pass ? std::to_string(dt * 1e6) + " us" : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  SPoly p = parse_spoly("Y^5 + 4 Y^3 + Y + 1");
  std::vector<SVal> roots;
  for (const auto& c : signed_roots(p))
    if (c.is_root) roots.push_back(c.value);
  o.require(roots == std::vector<SVal>{SVal::neg(-1)}, "root set differs");
  MultReport m = mult(p, SVal::neg(-1));
  o.require(m.sat == std::vector<unsigned>{0, 3}, "saturation set differs");
  o.require(m.mult == 1, "multiplicity differs");
  return o;
}

Outcome c3() {
  Outcome o;
  SVal one = SVal::one(), mone = SVal::neg(0);
  SPoly expect = parse_spoly("Y^4 + 0* Y^3 + 0* Y^2 + 0* Y - 0");
  o.require(product(one, {one, one, one, mone}) == expect, "first expansion differs");
  o.require(product(one, {mone, mone, mone, one}) == expect, "second expansion differs");
  UniquenessReport u = unique_factorization(parse_spoly("Y^4 - 0"));
  o.require(u.kind == Uniqueness::NonUnique, "not reported NonUnique");
  auto has = [&](const Factorization& f) {
    return std::find(u.witnesses.begin(), u.witnesses.end(), f) != u.witnesses.end();
  };
  o.require(has(make_factorization(one, {one, one, one, mone})), "missing witness (Y-1)^3(Y+1)");
  o.require(has(make_factorization(one, {mone, mone, mone, one})), "missing witness (Y+1)^3(Y-1)");
  return o;
}

Outcome c4() {
  Outcome o;
  const char* polys[] = {"Y^4 - 0", "Y^4 + Y^3 + Y^2 + Y - 0", "Y^4 - Y^3 + Y^2 - Y - 0"};
  const unsigned expect[][2] = {{1, 1}, {1, 3}, {3, 1}};
  for (int i = 0; i < 3; ++i) {
    SPoly p = parse_spoly(polys[i]);
    BsPoly q = to_bs_poly(p);
    unsigned fast[2] = {mult(p, SVal::one()).mult, mult(p, SVal::neg(0)).mult};
    unsigned slow[2] = {mult_recursive_bs(q, BsVal::One), mult_recursive_bs(q, BsVal::MinusOne)};
    for (int s = 0; s < 2; ++s) {
      o.require(fast[s] == expect[i][s], std::string("sign-change path differs on ") + polys[i]);
      o.require(slow[s] == expect[i][s], std::string("oracle differs on ") + polys[i]);
    }
  }
  return o;
}

Outcome c5() {
  Outcome o;
  SPoly p = parse_spoly("Y^3 + 2 Y^2 - 2 Y + 2");
  Factorization f = make_factorization(SVal::one(), {SVal::neg(2), SVal::one(), SVal::one()});
  UniquenessReport u = unique_factorization(p);
  o.require(u.kind == Uniqueness::Unique && u.factorization == f, "unique factorization differs");
  o.require(factor_function(p) == f, "sufficient condition factorization differs");
  std::vector<std::pair<SVal, unsigned>> expect = {{SVal::neg(2), 1}, {SVal::one(), 2}};
  o.require(mult_from_unique_factorization(p) == expect, "multiplicities from factorization differ");
  o.require(mult(p, SVal::neg(2)).mult == 1 && mult(p, SVal::one()).mult == 2, "mult differs");
  o.require(mult(p, SVal::pos(2)).mult == 0 && mult(p, SVal::neg(0)).mult == 0, "spurious root");
  auto j = io::json::parse(cli_out({"sfactor", "Y^3 + 2 Y^2 - 2 Y + 2", "--format", "json"}));
  o.require(j["uniqueness"]["kind"] == "Unique" && j["uniqueness"]["factorization"] == io::to_json(f),
            "CLI sfactor differs");
  return o;
}

Outcome c6() {
  Outcome o;
  auto P = [](const char* s) { return parse_pseries(s); };
  std::vector<PSeries> roots = {P("-1*t^5"), P("t"), P("t"), P("t"), P("t^(-2)")};
  SPoly expect = parse_spoly("Y^5 + 5 Y^4 - 6 Y^3 + 7 Y^2 - 8 Y + 6");
  SPoly s = sv_poly(expand_linear_product(roots));
  o.require(s == expect, "sv differs");
  for (auto [r, m] : {std::pair{SVal::neg(5), 1u}, {SVal::pos(1), 3u}, {SVal::pos(-2), 1u}})
    o.require(mult(s, r).mult == m, "multiplicity differs at " + to_string(r));
  o.require(mult_sum_check(s).total == 5, "multiplicities do not sum to 5");
  for (const auto& c : check_product_lift(roots, FPoly({P("1")})))
    o.require(c.determined && c.equal, "Descartes equality fails at " + to_string(c.root));
  o.require(verify_descartes(s).success, "no tight Viro lift");

  std::vector<PSeries> real = {P("-1*t^5"), P("t"), P("t^(-2)")};
  FPoly cof({P("t^2"), PSeries(), P("1")});
  o.require(sv_poly(expand_linear_product(real) * cof) == expect, "second sv differs");
  bool strict = false;
  for (const auto& c : check_product_lift(real, cof))
    if (c.root == SVal::pos(1))
      strict = c.determined && c.mult == 3 && c.lifted_count == 1 && c.mod2_ok && c.bound_ok;
  o.require(strict, "no strict 3 > 1 with parity at root 1");
  return o;
}

std::vector<SPoly> all_signed_bs(unsigned deg) {
  std::vector<SPoly> out;
  const SVal choices[] = {SVal::zero(), SVal::one(), SVal::neg(0)};
  std::vector<int> idx(deg + 1, 0);
  for (;;) {
    SPoly p;
    for (unsigned k = 0; k <= deg; ++k) p.set(k, choices[idx[k]]);
    if (p.deg() == static_cast<long>(deg)) out.push_back(p);
    unsigned k = 0;
    while (k <= deg && ++idx[k] == 3) idx[k++] = 0;
    if (k > deg) break;
  }
  return out;
}

Outcome c7() {
  Outcome o;
  auto t0 = Clock::now();
  BsOracle oracle;
  std::size_t n = 0;
  for (unsigned d = 0; d <= 6; ++d)
    for (const auto& p : all_signed_bs(d)) {
      ++n;
      BsPoly q = to_bs_poly(p);
      o.require(oracle.mult(q, BsVal::One) == mult(p, SVal::one()).mult, "1 differs on " + to_string(p));
      o.require(oracle.mult(q, BsVal::MinusOne) == mult(p, SVal::neg(0)).mult, "-1 differs on " + to_string(p));
      o.require(oracle.mult(q, BsVal::Zero) == mult(p, SVal::zero()).mult, "zero differs on " + to_string(p));
      if (d > 0)
        o.require(gap_condition(p) == (mult_sum_check(p).total == d), "gap biconditional fails on " + to_string(p));
    }
  double dt = seconds_since(t0);
  o.require(dt < kLimit7, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(n) + " polynomials, " + std::to_string(dt) + " s";
  return o;
}

Outcome c8() {
  Outcome o;
  auto t0 = Clock::now();
  gen::Gen g(kSeed8);
  for (int i = 0; i < 500; ++i) {
    SPoly p = g.signed_poly(static_cast<unsigned>(g.uniform(1, 5)));
    for (const auto& r : root_candidates(p))
      o.require(mult(p, r).mult == mult_recursive_smax(p, r), "paths differ on " + to_string(p));
    MultSum s = mult_sum_check(p);
    o.require(s.corner_bounds_hold && s.degree_bound_holds, "bounds fail on " + to_string(p));
    o.require(gap_condition(p) == (s.total == static_cast<unsigned>(p.deg())),
              "gap biconditional fails on " + to_string(p));
  }
  double dt = seconds_since(t0);
  o.require(dt < kLimit8, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(dt) + " s";
  return o;
}

Outcome c9() {
  Outcome o;
  auto t0 = Clock::now();
  gen::Gen g(kSeed9);
  unsigned worst = 0;
  for (int i = 0; i < 100; ++i) {
    SPoly p = g.signed_poly(static_cast<unsigned>(g.uniform(1, 6)));
    DescartesReport d = verify_descartes(p);
    o.require(d.success, "no witness u for " + to_string(p) + ": " + d.diagnostics);
    worst = std::max(worst, d.attempts);
    for (const auto& c : d.roots)
      o.require(c.determined && c.equal, "count differs at " + to_string(c.root) + " for " + to_string(p));
  }
  double dt = seconds_since(t0);
  o.require(dt < kLimit9, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = "max attempts " + std::to_string(worst) + ", " + std::to_string(dt) + " s";
  return o;
}

Outcome c10() {
  Outcome o;
  gen::Gen g(kSeed10);
  for (int i = 0; i < 100; ++i) {
    std::vector<PSeries> roots;
    int n = g.uniform(1, 6);
    for (int j = 0; j < n; ++j) roots.push_back(g.pseries(g.uniform(1, 3)));
    KapranovReport k = kapranov_check(roots);
    o.require(k.holds, "valuations differ from corners");
  }
  return o;
}

Outcome c11() {
  Outcome o;
  auto smax = smax_random_tuples(kSmaxTuples, kSeed11);
  for (Law law : kAllLaws) {
    LawReport b = check_law(System::Bs, law, bs_exhaustive_tuples(law_arity(law)));
    o.require(b.holds, to_string(law) + " fails on B_s: " + b.counterexample);
    LawReport s = check_law(System::Smax, law, smax);
    o.require(s.holds && s.tuples >= kSmaxTuples, to_string(law) + " fails on S_max: " + s.counterexample);
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"max-plus corners, hull and canonical form of Y^5+4Y^3+Y+1", c1},
      {"single signed root -(-1) with sat {0,3} and multiplicity 1", c2},
      {"two factorizations of Y^4 - 1 expand alike; NonUnique with witnesses", c3},
      {"B_s multiplicities (1,1) (1,3) (3,1) by sign changes and oracle", c4},
      {"Y^3+2Y^2-2Y+2 = (Y+2)(Y-1)^2 across sfactor, mult and factorization", c5},
      {"Puiseux product: sv, multiplicities, equality; complex factor 3 > 1", c6},
      {"exhaustive B_s degree <= 6: oracle equals sign-change count", c7},
      {"500 random S_max polynomials: fast path equals oracle, bounds, gaps", c8},
      {"100 random polynomials: tight Viro lift found", c9},
      {"100 random Puiseux products: root valuations equal corners", c10},
      {"axioms exhaustive on B_s and on 10^4 random S_max tuples", c11},
  };
  int failures = 0, id = 0;
  for (const auto& [name, fn] : criteria) {
    ++id;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s  [%2d] %s%s%s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", id - failures, id);
  return failures;
}
