#pragma once

#include "rwa/wfa.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rwa {

struct Wavs;

// Crisp-deterministic weighted automaton: named states, one initial state, a
// total deterministic transition table and a terminal weight per state.
struct Cdwa {
    std::vector<std::string> states;
    std::size_t initial;
    Alphabet alphabet;
    std::vector<std::vector<std::size_t>> delta; // [state][letter] -> state
    std::vector<Rational> theta;                 // per state

    bool operator==(const Cdwa& other) const = default;
};

Cdwa make_cdwa(std::vector<std::string> states, std::size_t initial, Alphabet alphabet,
               std::vector<std::vector<std::size_t>> delta, std::vector<Rational> theta);

// Iterated transition from state a along u.
std::size_t delta_star(const Cdwa& d, std::size_t a, const Word& u);

// theta of the state reached from the initial state.
Rational behavior(const Cdwa& d, const Word& u);

// The embedding as a special WFA: indicator initial vector, 0/1 transition
// matrices with one 1 per row, terminal vector theta.
Wfa to_wfa(const Cdwa& d);

// Language-equivalent WAVS with the given vector states realizing the
// bijection (default: standard basis of dimension |states|). Throws
// ValidationError on wrong count, duplicates or mixed lengths.
Wavs to_wavs(const Cdwa& d, const std::optional<std::vector<Vector>>& state_vectors = std::nullopt);

} // namespace rwa
