#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "trop/descartes.hpp"
#include "trop/multiplicity.hpp"
#include "trop/text.hpp"

namespace trop {

// gtest printers.
inline void PrintTo(const GVal& v, std::ostream* os) { *os << to_string(v); }
inline void PrintTo(const SVal& v, std::ostream* os) { *os << to_string(v); }
inline void PrintTo(const TPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const SPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const PSeries& f, std::ostream* os) { *os << to_string(f); }

}  // namespace trop

namespace trop::gen {

inline const std::vector<Rational>& magnitude_grid() {
  static const std::vector<Rational> g = {rat(-2), rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1), rat(2)};
  return g;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational grid_mag() {
    const auto& g = magnitude_grid();
    return g[static_cast<std::size_t>(uniform(0, static_cast<int>(g.size()) - 1))];
  }
  Rational small_rational(int range = 6, int maxden = 3) { return rat(uniform(-range, range), uniform(1, maxden)); }

  GVal gval(double bot = 0.15) { return coin(bot) ? GVal::bot() : GVal::fin(small_rational()); }

  SVal sval(bool allow_bal = true) {
    int k = uniform(0, 9);
    if (k == 0) return SVal::zero();
    Rational m = small_rational();
    if (allow_bal && k >= 8) return SVal::bal(m);
    return k % 2 ? SVal::pos(m) : SVal::neg(m);
  }

  // Dense-ish random polynomial of exact degree deg with holes.
  TPoly tpoly(unsigned deg, double hole = 0.3) {
    TPoly p;
    for (unsigned k = 0; k < deg; ++k)
      if (!coin(hole)) p.set(k, GVal::fin(small_rational()));
    p.set(deg, GVal::fin(small_rational()));
    return p;
  }

  // Signed polynomial of exact degree deg, magnitudes on the grid.
  SPoly signed_poly(unsigned deg, double hole = 0.25) {
    SPoly p;
    for (unsigned k = 0; k <= deg; ++k) {
      if (k < deg && coin(hole)) continue;
      Rational m = grid_mag();
      p.set(k, coin() ? SVal::pos(m) : SVal::neg(m));
    }
    return p;
  }

  PSeries pseries(int nterms = 3) {
    std::vector<PSeries::Term> t;
    for (int i = 0; i < nterms; ++i) {
      Rational c = rat(uniform(-5, 5), uniform(1, 3));
      if (c == 0) c = 1;
      t.push_back({c, small_rational(6, 2)});
    }
    return PSeries(std::move(t));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace trop::gen
