#pragma once

#include "rwa/cdwa.hpp"
#include "rwa/wavs.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace rwa {
// Independent brute-force references used by tests and the equiv subcommand;
// the main constructions never call these.
namespace oracle {

// Path-sum semantics: the exact sum over all state paths of
// sigma(a0) * delta(a0,x1,a1) * ... * tau(ak). Cost n^(|u|+1).
Rational behavior_pathsum(const Wfa& a, const Word& u);

// All words of length <= max_len in length-then-alphabet order.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len);

using WordFunction = std::function<Rational(const Word&)>;

// First differing word in enumeration order, or nullopt when the functions
// agree on every |u| <= max_len.
std::optional<Word> equiv_bounded(const WordFunction& f, const WordFunction& g,
                                  const Alphabet& alphabet, std::size_t max_len);

// Any of the three automaton models, for pairwise equivalence checks.
using AnyAutomaton = std::variant<Wfa, Cdwa, Wavs>;

enum class Differs { behavior, generated };

struct CompleteEquivResult {
    bool equal;
    Word counterexample; // meaningful when !equal
    Differs which;       // which function differs
};

// Equal iff behavior (and, when complete, the generated function) agree on
// all words of length <= max_len. Walks both word trees incrementally. A
// cdwa argument is compared through its WFA embedding when the generated
// function is required. Throws AlphabetError when the alphabets differ.
CompleteEquivResult complete_equiv_bounded(const AnyAutomaton& a, const AnyAutomaton& b,
                                           std::size_t max_len, bool complete = true);

} // namespace oracle
} // namespace rwa
