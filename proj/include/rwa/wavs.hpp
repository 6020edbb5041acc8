#pragma once

#include "rwa/wfa.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rwa {

// Finite weighted automaton over the vector space Q^dim. States are an
// explicit list of pairwise distinct vectors and the transition function is a
// table between state indices, so closure under every delta_x is a
// construction-time invariant.
struct Wavs {
    std::size_t dim;
    Alphabet alphabet;
    std::vector<Vector> states;
    std::size_t initial;
    std::vector<std::vector<std::size_t>> trans; // [state][letter] -> state
    std::vector<Rational> theta;                 // per state

    bool operator==(const Wavs& other) const = default;
};

Wavs make_wavs(Alphabet alphabet, std::vector<Vector> states, std::size_t initial,
               std::vector<std::vector<std::size_t>> trans, std::vector<Rational> theta);

// The vector state reached from the initial state along u.
Vector delta_star(const Wavs& a, const Word& u);
std::size_t delta_star_index(const Wavs& a, std::size_t from, const Word& u);

// Theta at the reached state.
Rational behavior(const Wavs& a, const Word& u);

// ||delta*(sigma, u)||_inf.
Rational generated(const Wavs& a, const Word& u);

// State matrix N (row i = alpha_i), destination matrices N_x (row i =
// delta_x(alpha_i)) per letter, and terminal vector theta, in stored order.
struct TestMatrices {
    Matrix state_matrix;
    std::vector<Matrix> destination_matrices;
    Vector terminal_vector;
};

TestMatrices build_test_matrices(const Wavs& a);

// Outcome of the rank-based linearity test. When the verdict is linear the
// witness satisfies N * M_x = N_x for every letter and N * tau = theta,
// verified by multiplication before the report is returned.
struct LinearityReport {
    bool linear;
    Alphabet alphabet;
    Matrix state_matrix;
    std::vector<Matrix> destination_matrices;
    Vector terminal_vector;
    std::size_t rank_state;
    std::size_t rank_augmented;
    std::optional<std::vector<Matrix>> witness_matrices; // M_x per letter, dim x dim
    std::optional<Vector> witness_tau;
};

// A is linear iff rank(N) = rank([N | N_x1 | ... | N_xs | theta]).
LinearityReport linearity_check(const Wavs& a);

// Thrown by conversions that require a linear automaton.
struct LinearityError : std::runtime_error {
    explicit LinearityError(LinearityReport r);
    LinearityReport report;
};

// Completely language-equivalent WFA built from the linearity witness:
// sigma' is the initial vector state itself. Throws LinearityError when the
// automaton is nonlinear.
Wfa to_wfa(const Wavs& a);

// Human-readable report table: the augmented matrix, its RREF, both ranks,
// the verdict and (when linear) the witness.
std::string format_report(const LinearityReport& r);

} // namespace rwa
