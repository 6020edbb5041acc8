#pragma once

#include "rwa/wavs.hpp"

#include <optional>

namespace rwa {

enum class ClosureStatus { complete, budget_exhausted };

// Bounded forward closure of {sigma_u} under the transition matrices. The
// automaton is present only when the closure completed: a partial table
// cannot satisfy the Wavs totality invariant. witness_words holds one
// shortest word per discovered state, in BFS discovery order.
struct NerodeResult {
    std::optional<Wavs> automaton;
    ClosureStatus status;
    std::size_t explored;
    std::vector<Word> witness_words;
};

// BFS from sigma under alpha -> alpha * M_x with exact-equality
// deduplication; successors in alphabet order. Stops with budget_exhausted
// as soon as a state beyond max_states would be needed.
NerodeResult nerode(const Wfa& a, std::size_t max_states = 10000);

// Runs linearity_check on the Nerode automaton. The verdict is linear for
// every complete result; a nonlinear verdict is a bug.
LinearityReport nerode_is_linear(const NerodeResult& r);

} // namespace rwa
