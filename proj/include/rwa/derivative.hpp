#pragma once

#include "rwa/nerode.hpp"

#include <optional>
#include <utility>

namespace rwa {

// Columns spanning the forward space span{M_w * tau : w in X*}. Two reached
// vectors sigma_u, sigma_v induce equal derivatives f_u = f_v exactly when
// they agree against these columns, which makes derivative functions finitely
// decidable.
struct ObservabilityBasis {
    std::vector<Vector> columns; // each of length a.dim, linearly independent
    std::size_t dimension() const { return columns.size(); }
};

// Forward closure from tau under all M_x with rank-based independence
// filtering; terminates within dim rounds. dimension() = 0 iff tau = 0.
ObservabilityBasis observability_basis(const Wfa& a);

// The observability key sigma * B deciding the derivative f_u; length
// max(d, 1): the zero word function collapses to the single key [0].
Vector observability_key(const ObservabilityBasis& basis, const Vector& reached);

// f_u(v) = f(uv), the derivative of the behavior with respect to u.
Rational derivative_value(const Wfa& a, const Word& u, const Word& v);

// WAVS whose vector states are observability keys, one per distinct
// derivative f_u. representatives holds one shortest witness word per state.
// The automaton is present only when the closure completed within budget.
struct DerivativeAutomaton {
    std::optional<Wavs> automaton;
    ClosureStatus status;
    std::vector<Word> representatives;
    std::size_t explored;
};

// BFS over keys starting from the key of sigma; transition on x maps the key
// of u to the key of ux; Theta of the state of u is sigma_u * tau = f(u).
DerivativeAutomaton derivative_automaton(const Wfa& a, std::size_t max_states = 10000);

// Exact prefix closure sup_v |f(uv)| when the Nerode closure is complete
// (maximum of |Theta^N| over the states reachable from sigma_u), otherwise a
// lower bound over |v| <= horizon. No infinity is ever fabricated.
struct PrefixClosureValue {
    Rational value;
    bool exact;
};

PrefixClosureValue prefix_closure(const Wfa& a, const Word& u, const NerodeResult& nerode_result,
                                  std::size_t horizon = 12);

// State counts (derivative, nerode); the first never exceeds the second.
std::pair<std::size_t, std::size_t> minimality_gap(const DerivativeAutomaton& da,
                                                   const NerodeResult& nr);

} // namespace rwa
