#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trop/smax.hpp"

namespace trop {

enum class System { Bs, Smax };

// Laws checked by the harness: the nine listed properties of the balance
// relation, and the semiring-system axioms.
enum class Law {
  Nabla1, Nabla2, Nabla3, Nabla4, Nabla5, Nabla6, Nabla7, Nabla8, Nabla9,
  WTB, TB, TBE, BC, BI,
};

inline constexpr std::array<Law, 14> kAllLaws = {
    Law::Nabla1, Law::Nabla2, Law::Nabla3, Law::Nabla4, Law::Nabla5,
    Law::Nabla6, Law::Nabla7, Law::Nabla8, Law::Nabla9, Law::WTB,
    Law::TB,     Law::TBE,    Law::BC,     Law::BI};

// Tags: "nabla1".."nabla9", "WTB", "TB", "TBE", "BC", "BI". ParseError otherwise.
Law parse_law(std::string_view tag);
std::string to_string(Law law);
// Number of tuple components the law reads.
unsigned law_arity(Law law);

using Tuple = std::array<SVal, 4>;

struct LawReport {
  Law law{};
  std::size_t tuples = 0;
  std::size_t premises_met = 0;
  bool holds = true;
  std::string counterexample;  // empty when holds
};

// Evaluates the law on every sample. For Bs every component must lie in
// the magnitude-0 layer (DomainError otherwise) and existential witnesses
// are searched exhaustively; for Smax they are constructed and verified.
LawReport check_law(System sys, Law law, std::span<const Tuple> samples);
bool axiom_check(System sys, Law law, std::span<const Tuple> samples);

// All 4^arity tuples over B_s (unused components left zero).
std::vector<Tuple> bs_exhaustive_tuples(unsigned arity);
// Random tuples over S_max with magnitudes on a small grid so that the
// premises of conditional laws are met often.
std::vector<Tuple> smax_random_tuples(std::size_t count, std::uint64_t seed);

}  // namespace trop
