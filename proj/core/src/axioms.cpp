#include "trop/axioms.hpp"

#include <random>

#include "trop/errors.hpp"

namespace trop {

namespace {

struct LawInfo {
  Law law;
  const char* tag;
  unsigned arity;
};

constexpr std::array<LawInfo, 14> kInfo = {{
    {Law::Nabla1, "nabla1", 1}, {Law::Nabla2, "nabla2", 2}, {Law::Nabla3, "nabla3", 2},
    {Law::Nabla4, "nabla4", 4}, {Law::Nabla5, "nabla5", 3}, {Law::Nabla6, "nabla6", 4},
    {Law::Nabla7, "nabla7", 3}, {Law::Nabla8, "nabla8", 2}, {Law::Nabla9, "nabla9", 4},
    {Law::WTB, "WTB", 1},       {Law::TB, "TB", 2},         {Law::TBE, "TBE", 3},
    {Law::BC, "BC", 3},         {Law::BI, "BI", 3},
}};

const LawInfo& info(Law law) {
  for (const auto& i : kInfo)
    if (i.law == law) return i;
  throw DomainError("unknown law");
}

std::string show(const Tuple& t, unsigned arity) {
  std::string s = "(";
  for (unsigned i = 0; i < arity; ++i) {
    if (i) s += ", ";
    s += to_string(t[i]);
  }
  return s + ")";
}

std::vector<SVal> signed_bs() { return {SVal::zero(), SVal::one(), SVal::neg(0)}; }

// Candidate signed witnesses for existential laws: the system's whole
// signed carrier for Bs, otherwise derived from the tuple's moduli.
std::vector<SVal> witness_pool(System sys, std::initializer_list<SVal> seeds) {
  if (sys == System::Bs) return signed_bs();
  std::vector<SVal> pool{SVal::zero()};
  for (const auto& s : seeds) {
    if (s.is_zero()) continue;
    pool.push_back(SVal::pos(s.mag()));
    pool.push_back(SVal::neg(s.mag()));
  }
  return pool;
}

// Returns the failure message, or empty when the law holds on t;
// sets `premise` when the hypotheses were satisfied.
std::string eval_law(System sys, Law law, const Tuple& t, bool& premise) {
  const SVal &a = t[0], &b = t[1], &c = t[2], &d = t[3];
  premise = true;
  switch (law) {
    case Law::Nabla1:
      return balance(a, a) ? "" : "a ∇ a fails";
    case Law::Nabla2:
      return balance(a, b) == balance(b, a) ? "" : "symmetry fails";
    case Law::Nabla3:
      return balance(a, b) == balance(s_sub(a, b), SVal::zero()) ? "" : "a∇b vs a⊖b∇0 differ";
    case Law::Nabla4:
      premise = balance(a, b) && balance(c, d);
      if (!premise) return "";
      return balance(s_add(a, c), s_add(b, d)) ? "" : "additive compatibility fails";
    case Law::Nabla5:
      premise = balance(a, b);
      if (!premise) return "";
      return balance(s_mul(a, c), s_mul(b, c)) ? "" : "multiplicative compatibility fails";
    case Law::Nabla6: {
      // x = t[0], then a = t[1], b = t[2], c = t[3].
      const SVal &x = a, &aa = b, &bb = c, &cc = d;
      premise = x.is_signed() && balance(x, aa) && balance(s_mul(cc, x), bb);
      if (!premise) return "";
      return balance(s_mul(cc, aa), bb) ? "" : "weak substitution fails";
    }
    case Law::Nabla7:
    case Law::TBE: {
      const SVal& x = b;
      premise = x.is_signed() && balance(a, x) && balance(x, c);
      if (!premise) return "";
      return balance(a, c) ? "" : "weak transitivity fails";
    }
    case Law::Nabla8:
      premise = a.is_signed() && b.is_signed() && balance(a, b);
      if (!premise) return "";
      return a == b ? "" : "reduction of balances fails";
    case Law::Nabla9: {
      premise = a.is_signed() && b.is_signed() && c.is_signed() && d.is_signed() &&
                balance(s_add(s_add(a, b), s_add(c, d)), SVal::zero());
      if (!premise) return "";
      GVal top = t_add(t_add(a.modulus(), b.modulus()), t_add(c.modulus(), d.modulus()));
      for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j)
          if (i != j && t[i] == s_neg(t[j]) && t[i].modulus() == top) return "";
      return "no opposite pair of maximal modulus";
    }
    case Law::WTB: {
      SVal w = a.is_signed() ? a : SVal::pos(a.mag());
      if (w.is_signed() && balance(w, a)) return "";
      for (const auto& cand : witness_pool(sys, {a}))
        if (balance(cand, a)) return "";
      return "no signed element balances a";
    }
    case Law::TB: {
      premise = balance(a, b);
      if (!premise) return "";
      if (sys == System::Smax) {
        SVal w = tangible_balance(a, b);
        if (w.is_signed() && balance(a, w) && balance(w, b)) return "";
      }
      for (const auto& cand : witness_pool(sys, {a, b}))
        if (balance(a, cand) && balance(cand, b)) return "";
      return "no signed intermediate element";
    }
    case Law::BC:
      premise = a.is_tangible() && balance(s_mul(a, b), s_mul(a, c));
      if (!premise) return "";
      return balance(b, c) ? "" : "balance cancellation fails";
    case Law::BI: {
      // a, a' signed (t[0], t[2]); a1 = t[1].
      const SVal &x = a, &a1 = b, &xp = c;
      premise = x.is_signed() && xp.is_signed() && balance(s_mul(x, a1), xp);
      if (!premise) return "";
      std::vector<SVal> pool = witness_pool(sys, {a1, xp});
      if (sys == System::Smax) {
        if (x.is_tangible()) pool.insert(pool.begin(), s_mul(xp, s_inv(x)));
        for (const auto& s : {a1}) if (!s.is_zero()) pool.push_back(SVal::pos(s.mag()));
      }
      for (const auto& cand : pool)
        if (balance(cand, a1) && s_mul(x, cand) == xp) return "";
      return "no signed preimage balancing a1";
    }
  }
  return "unknown law";
}

bool in_bs(const SVal& v) { return v.is_zero() || v.mag() == 0; }

}  // namespace

Law parse_law(std::string_view tag) {
  for (const auto& i : kInfo)
    if (tag == i.tag) return i.law;
  throw ParseError("unknown axiom tag '" + std::string(tag) + "'");
}

std::string to_string(Law law) { return info(law).tag; }

unsigned law_arity(Law law) { return info(law).arity; }

LawReport check_law(System sys, Law law, std::span<const Tuple> samples) {
  LawReport r;
  r.law = law;
  const unsigned arity = law_arity(law);
  for (const auto& t : samples) {
    if (sys == System::Bs)
      for (const auto& v : t)
        if (!in_bs(v)) throw DomainError("sample outside B_s: " + to_string(v));
    bool premise = false;
    std::string fail = eval_law(sys, law, t, premise);
    ++r.tuples;
    if (premise) ++r.premises_met;
    if (!fail.empty() && r.holds) {
      r.holds = false;
      r.counterexample = fail + " at " + show(t, arity);
    }
  }
  return r;
}

bool axiom_check(System sys, Law law, std::span<const Tuple> samples) {
  return check_law(sys, law, samples).holds;
}

std::vector<Tuple> bs_exhaustive_tuples(unsigned arity) {
  if (arity > 4) throw DomainError("tuple arity is at most 4");
  const std::array<BsVal, 4> carrier = {BsVal::Zero, BsVal::One, BsVal::MinusOne, BsVal::BalOne};
  std::size_t total = 1;
  for (unsigned i = 0; i < arity; ++i) total *= 4;
  std::vector<Tuple> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Tuple t;
    std::size_t c = code;
    for (unsigned i = 0; i < arity; ++i, c /= 4) t[i] = bs_to_sval(carrier[c % 4]);
    out.push_back(t);
  }
  return out;
}

std::vector<Tuple> smax_random_tuples(std::size_t count, std::uint64_t seed) {
  static const std::array<Rational, 7> grid = {rat(-2), rat(-1), rat(-1, 2), rat(0),
                                               rat(1, 2), rat(1), rat(2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 9), mag(0, grid.size() - 1);
  auto draw = [&]() -> SVal {
    int k = kind(rng);
    const Rational& m = grid[mag(rng)];
    if (k == 0) return SVal::zero();
    if (k <= 4) return SVal::pos(m);
    if (k <= 7) return SVal::neg(m);
    return SVal::bal(m);
  };
  std::vector<Tuple> out(count);
  for (auto& t : out)
    for (auto& v : t) v = draw();
  return out;
}

}  // namespace trop
