#include "rwa/cdwa.hpp"

#include "rwa/errors.hpp"
#include "rwa/wavs.hpp"

#include <set>

namespace rwa {

Cdwa make_cdwa(std::vector<std::string> states, std::size_t initial, Alphabet alphabet,
               std::vector<std::vector<std::size_t>> delta, std::vector<Rational> theta) {
    const std::size_t m = states.size();
    if (m == 0) throw ValidationError("cdwa needs at least one state");
    std::set<std::string> seen;
    for (const auto& s : states) {
        if (s.empty()) throw ValidationError("state names must be non-empty");
        if (!seen.insert(s).second) throw ValidationError("duplicate state name \"" + s + "\"");
    }
    if (initial >= m) throw ValidationError("initial state index out of range");
    if (delta.size() != m)
        throw ValidationError("delta table has " + std::to_string(delta.size()) + " rows, expected " +
                              std::to_string(m));
    for (std::size_t i = 0; i < m; ++i) {
        if (delta[i].size() != alphabet.size())
            throw ValidationError("delta row for state \"" + states[i] + "\" has " +
                                  std::to_string(delta[i].size()) + " entries, expected " +
                                  std::to_string(alphabet.size()));
        for (std::size_t x = 0; x < alphabet.size(); ++x)
            if (delta[i][x] >= m)
                throw ValidationError("delta(" + states[i] + ", " + alphabet.name(x) +
                                      ") points outside the state set");
    }
    if (theta.size() != m)
        throw ValidationError("theta has " + std::to_string(theta.size()) + " entries, expected " +
                              std::to_string(m));
    return Cdwa{std::move(states), initial, std::move(alphabet), std::move(delta), std::move(theta)};
}

std::size_t delta_star(const Cdwa& d, std::size_t a, const Word& u) {
    if (a >= d.states.size()) throw ValidationError("unknown state index " + std::to_string(a));
    check_word(d.alphabet, u);
    std::size_t cur = a;
    for (std::size_t x : u) cur = d.delta[cur][x];
    return cur;
}

Rational behavior(const Cdwa& d, const Word& u) {
    return d.theta[delta_star(d, d.initial, u)];
}

Wfa to_wfa(const Cdwa& d) {
    const std::size_t n = d.states.size();
    std::vector<Rational> sigma(n);
    sigma[d.initial] = 1;
    std::vector<Matrix> matrices;
    matrices.reserve(d.alphabet.size());
    for (std::size_t x = 0; x < d.alphabet.size(); ++x) {
        std::vector<Rational> grid(n * n);
        for (std::size_t i = 0; i < n; ++i) grid[i * n + d.delta[i][x]] = 1;
        matrices.emplace_back(n, n, std::move(grid));
    }
    return make_wfa(d.alphabet, Vector(std::move(sigma)), std::move(matrices),
                    Vector(std::vector<Rational>(d.theta)));
}

Wavs to_wavs(const Cdwa& d, const std::optional<std::vector<Vector>>& state_vectors) {
    const std::size_t m = d.states.size();
    std::vector<Vector> vectors;
    if (state_vectors) {
        if (state_vectors->size() != m)
            throw ValidationError("expected " + std::to_string(m) + " state vectors, got " +
                                  std::to_string(state_vectors->size()));
        vectors = *state_vectors;
    } else {
        // standard basis e_1..e_m keeps the bijection trivial and the result linear
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<Rational> e(m);
            e[i] = 1;
            vectors.emplace_back(std::move(e));
        }
    }
    return make_wavs(d.alphabet, std::move(vectors), d.initial, d.delta,
                     std::vector<Rational>(d.theta));
}

} // namespace rwa
