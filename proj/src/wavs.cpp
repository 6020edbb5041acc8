#include "rwa/wavs.hpp"

#include "rwa/errors.hpp"

#include <map>
#include <sstream>

namespace rwa {

Wavs make_wavs(Alphabet alphabet, std::vector<Vector> states, std::size_t initial,
               std::vector<std::vector<std::size_t>> trans, std::vector<Rational> theta) {
    const std::size_t m = states.size();
    if (m == 0) throw ValidationError("wavs needs at least one vector state");
    const std::size_t dim = states.front().size();
    std::map<Vector, std::size_t, VectorLess> seen;
    for (std::size_t i = 0; i < m; ++i) {
        if (states[i].size() != dim)
            throw ValidationError("vector state " + std::to_string(i) + " has length " +
                                  std::to_string(states[i].size()) + ", expected " +
                                  std::to_string(dim));
        if (!seen.emplace(states[i], i).second)
            throw ValidationError("duplicate vector state at index " + std::to_string(i));
    }
    if (initial >= m) throw ValidationError("initial state index out of range");
    if (trans.size() != m)
        throw ValidationError("trans table has " + std::to_string(trans.size()) +
                              " rows, expected " + std::to_string(m));
    for (std::size_t i = 0; i < m; ++i) {
        if (trans[i].size() != alphabet.size())
            throw ValidationError("trans row " + std::to_string(i) + " has " +
                                  std::to_string(trans[i].size()) + " entries, expected " +
                                  std::to_string(alphabet.size()));
        for (std::size_t x = 0; x < alphabet.size(); ++x)
            if (trans[i][x] >= m)
                throw ValidationError("trans(" + std::to_string(i) + ", " + alphabet.name(x) +
                                      ") points outside the state set");
    }
    if (theta.size() != m)
        throw ValidationError("theta has " + std::to_string(theta.size()) + " entries, expected " +
                              std::to_string(m));
    return Wavs{dim,        std::move(alphabet), std::move(states),
                initial,    std::move(trans),    std::move(theta)};
}

std::size_t delta_star_index(const Wavs& a, std::size_t from, const Word& u) {
    if (from >= a.states.size())
        throw ValidationError("unknown state index " + std::to_string(from));
    check_word(a.alphabet, u);
    std::size_t cur = from;
    for (std::size_t x : u) cur = a.trans[cur][x];
    return cur;
}

Vector delta_star(const Wavs& a, const Word& u) {
    return a.states[delta_star_index(a, a.initial, u)];
}

Rational behavior(const Wavs& a, const Word& u) {
    return a.theta[delta_star_index(a, a.initial, u)];
}

Rational generated(const Wavs& a, const Word& u) {
    return max_norm(delta_star(a, u));
}

TestMatrices build_test_matrices(const Wavs& a) {
    const std::size_t m = a.states.size();
    std::vector<Rational> n_grid;
    n_grid.reserve(m * a.dim);
    for (const auto& s : a.states)
        n_grid.insert(n_grid.end(), s.entries().begin(), s.entries().end());
    Matrix state_matrix(m, a.dim, std::move(n_grid));

    std::vector<Matrix> destinations;
    destinations.reserve(a.alphabet.size());
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        std::vector<Rational> grid;
        grid.reserve(m * a.dim);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& dest = a.states[a.trans[i][x]];
            grid.insert(grid.end(), dest.entries().begin(), dest.entries().end());
        }
        destinations.emplace_back(m, a.dim, std::move(grid));
    }
    return TestMatrices{std::move(state_matrix), std::move(destinations),
                        Vector(std::vector<Rational>(a.theta))};
}

LinearityReport linearity_check(const Wavs& a) {
    TestMatrices tm = build_test_matrices(a);
    std::vector<Matrix> blocks{tm.state_matrix};
    for (const auto& d : tm.destination_matrices) blocks.push_back(d);
    blocks.push_back(Matrix::from_column(tm.terminal_vector));

    std::size_t rank_state = rank(tm.state_matrix);
    std::size_t rank_augmented = rank(augment(blocks));

    LinearityReport report{rank_state == rank_augmented,
                           a.alphabet,
                           tm.state_matrix,
                           tm.destination_matrices,
                           tm.terminal_vector,
                           rank_state,
                           rank_augmented,
                           std::nullopt,
                           std::nullopt};
    if (!report.linear) return report;

    // equal ranks guarantee every system is solvable; extract one witness per
    // system and verify by multiplication before reporting
    std::vector<Matrix> witness;
    for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
        auto m_x = solve_right(tm.state_matrix, tm.destination_matrices[x]);
        if (!m_x || !(tm.state_matrix * *m_x == tm.destination_matrices[x]))
            throw std::logic_error("linearity witness extraction failed for letter " +
                                   a.alphabet.name(x));
        witness.push_back(std::move(*m_x));
    }
    auto tau_col = solve_right(tm.state_matrix, Matrix::from_column(tm.terminal_vector));
    if (!tau_col || !(tm.state_matrix * *tau_col == Matrix::from_column(tm.terminal_vector)))
        throw std::logic_error("linearity witness extraction failed for the terminal vector");
    report.witness_matrices = std::move(witness);
    report.witness_tau = tau_col->column(0);
    return report;
}

LinearityError::LinearityError(LinearityReport r)
    : std::runtime_error("automaton is nonlinear: rank(N) = " + std::to_string(r.rank_state) +
                         " != " + std::to_string(r.rank_augmented) + " = rank(N*)"),
      report(std::move(r)) {}

Wfa to_wfa(const Wavs& a) {
    LinearityReport report = linearity_check(a);
    if (!report.linear) throw LinearityError(std::move(report));
    return make_wfa(a.alphabet, a.states[a.initial], std::move(*report.witness_matrices),
                    std::move(*report.witness_tau));
}

std::string format_report(const LinearityReport& r) {
    std::ostringstream os;
    const std::size_t n = r.state_matrix.cols();
    std::vector<Matrix> blocks{r.state_matrix};
    for (const auto& d : r.destination_matrices) blocks.push_back(d);
    blocks.push_back(Matrix::from_column(r.terminal_vector));
    Matrix star = augment(blocks);
    std::vector<std::size_t> widths(r.destination_matrices.size() + 2, n);
    widths.back() = 1;

    os << "linearity report\n";
    os << "  states: " << r.state_matrix.rows() << ", dimension: " << n << "\n";
    os << "  N* = [ N";
    for (const auto& l : r.alphabet.letters()) os << " | N_" << l;
    os << " | theta ]:\n";
    os << format_matrix(star, widths, "    ");
    os << "  RREF(N*):\n";
    os << format_matrix(rref(star), widths, "    ");
    os << "  rank(N)  = " << r.rank_state << "\n";
    os << "  rank(N*) = " << r.rank_augmented << "\n";
    os << "  verdict: " << (r.linear ? "linear" : "nonlinear") << "\n";
    if (r.linear) {
        for (std::size_t x = 0; x < r.alphabet.letters().size(); ++x) {
            os << "  witness M_" << r.alphabet.name(x) << ":\n";
            os << format_matrix((*r.witness_matrices)[x], {}, "    ");
        }
        os << "  witness tau:\n";
        os << format_matrix(Matrix::from_column(*r.witness_tau), {}, "    ");
    }
    return os.str();
}

} // namespace rwa
