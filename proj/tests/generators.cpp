#include "generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rwa::testing {

Vector vec(std::initializer_list<int> entries) {
    std::vector<Rational> out;
    for (int e : entries) out.emplace_back(e);
    return Vector(std::move(out));
}

Vector vecq(std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Rational> out;
    for (const auto& [p, q] : entries) out.emplace_back(p, q);
    return Vector(std::move(out));
}

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<Rational>> grid;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (int e : row) r.emplace_back(e);
        grid.push_back(std::move(r));
    }
    return Matrix(grid);
}

Alphabet letters(std::size_t count) {
    static const std::vector<std::string> pool{"x", "y", "z"};
    return Alphabet(std::vector<std::string>(pool.begin(), pool.begin() + count));
}

Wfa swap_wfa() {
    return make_wfa(letters(1), vec({1, 0}), {mat({{0, 1}, {1, 0}})}, vec({1, 0}));
}

Wfa counter_wfa() {
    return make_wfa(letters(1), vec({1, 0}), {mat({{1, 1}, {0, 1}})}, vec({0, 1}));
}

Wfa zero_wfa(std::size_t n) {
    std::vector<Rational> sigma(n);
    sigma[0] = 1;
    return make_wfa(letters(1), Vector(std::move(sigma)), {Matrix::identity(n)}, Vector::zeros(n));
}

Wfa observability_gap_wfa() {
    // x sends e1 to e2, y sends e1 to e3; tau = [1,1,1] collapses everything
    Matrix mx({{0, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    Matrix my({{0, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    return make_wfa(letters(2), vec({1, 0, 0}), {mx, my}, vec({1, 1, 1}));
}

Wavs example41_wavs() {
    std::vector<Vector> states{vec({1, 0}), vec({0, 1}), vec({1, 1})};
    // alpha1 -x-> alpha2, alpha1 -y-> alpha3, alpha2 loops, alpha3 -x-> alpha3, -y-> alpha2
    std::vector<std::vector<std::size_t>> trans{{1, 2}, {1, 1}, {2, 1}};
    std::vector<Rational> theta{0, 0, 1};
    return make_wavs(letters(2), std::move(states), 0, std::move(trans), std::move(theta));
}

Cdwa cycle_cdwa() {
    return make_cdwa({"p", "q"}, 0, letters(1), {{1}, {0}}, {Rational(1), Rational(0)});
}

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
    return Rational(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

Vector random_vector(Rng& rng, std::size_t n, int lo, int hi) {
    std::vector<Rational> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(uniform_int(rng, lo, hi));
    return Vector(std::move(out));
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::vector<Rational> out;
    out.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) out.emplace_back(uniform_int(rng, lo, hi));
    return Matrix(rows, cols, std::move(out));
}

Matrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_num,
                              int max_den) {
    std::vector<Rational> out;
    out.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) out.push_back(random_rational(rng, max_num, max_den));
    return Matrix(rows, cols, std::move(out));
}

Wfa random_wfa(Rng& rng, std::size_t max_dim, std::size_t max_letters, int lo, int hi) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
    const auto s = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_letters)));
    std::vector<Matrix> ms;
    for (std::size_t x = 0; x < s; ++x) ms.push_back(random_matrix(rng, n, n, lo, hi));
    return make_wfa(letters(s), random_vector(rng, n, lo, hi), std::move(ms),
                    random_vector(rng, n, lo, hi));
}

namespace {

Matrix random_signed_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Rational> grid(n * n);
    for (std::size_t i = 0; i < n; ++i) grid[i * n + perm[i]] = uniform_int(rng, 0, 1) ? 1 : -1;
    return Matrix(n, n, std::move(grid));
}

Matrix random_functional(Rng& rng, std::size_t n) {
    std::vector<Rational> grid(n * n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i * n + static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(n) - 1))] = 1;
    return Matrix(n, n, std::move(grid));
}

} // namespace

Wfa random_finite_orbit_wfa(Rng& rng, std::size_t max_dim, std::size_t max_letters) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
    const auto s = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_letters)));
    std::vector<Matrix> ms;
    for (std::size_t x = 0; x < s; ++x)
        ms.push_back(uniform_int(rng, 0, 1) ? random_signed_permutation(rng, n)
                                            : random_functional(rng, n));
    return make_wfa(letters(s), random_vector(rng, n, -2, 2), std::move(ms),
                    random_vector(rng, n, -2, 2));
}

Cdwa random_cdwa(Rng& rng, std::size_t max_states, std::size_t max_letters) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_states)));
    const auto s = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_letters)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("q" + std::to_string(i));
    std::vector<std::vector<std::size_t>> delta(m, std::vector<std::size_t>(s));
    for (auto& row : delta)
        for (auto& d : row) d = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m) - 1));
    std::vector<Rational> theta;
    for (std::size_t i = 0; i < m; ++i) theta.push_back(random_rational(rng, 3, 2));
    return make_cdwa(std::move(names), static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m) - 1)),
                     letters(s), std::move(delta), std::move(theta));
}

std::vector<Vector> random_distinct_vectors(Rng& rng, std::size_t count) {
    const auto len = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    std::map<Vector, bool, VectorLess> seen;
    std::vector<Vector> out;
    while (out.size() < count) {
        Vector v = random_vector(rng, len, -4, 4);
        if (seen.emplace(v, true).second) out.push_back(std::move(v));
    }
    return out;
}

Wavs random_linear_wavs(Rng& rng, std::size_t max_dim, std::size_t max_letters) {
    for (;;) {
        Wfa seed = random_finite_orbit_wfa(rng, max_dim, max_letters);
        // orbit walk of sigma under the sampled matrices; theta from tau
        std::vector<Vector> states{seed.sigma};
        std::map<Vector, std::size_t, VectorLess> index{{seed.sigma, 0}};
        std::vector<std::vector<std::size_t>> trans;
        bool small_enough = true;
        for (std::size_t i = 0; i < states.size() && small_enough; ++i) {
            trans.emplace_back(seed.alphabet.size());
            for (std::size_t x = 0; x < seed.alphabet.size(); ++x) {
                Vector succ = states[i] * seed.matrices[x];
                auto it = index.find(succ);
                if (it == index.end()) {
                    if (states.size() >= 64) {
                        small_enough = false;
                        break;
                    }
                    it = index.emplace(succ, states.size()).first;
                    states.push_back(std::move(succ));
                }
                trans[i][x] = it->second;
            }
        }
        if (!small_enough) continue;
        std::vector<Rational> theta;
        for (const auto& s : states) theta.push_back(dot(s, seed.tau));
        return make_wavs(seed.alphabet, std::move(states), 0, std::move(trans), std::move(theta));
    }
}

Wavs random_table_wavs(Rng& rng, std::size_t max_dim, std::size_t max_states,
                       std::size_t max_letters) {
    const auto dim = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_dim)));
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_states)));
    const auto s = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(max_letters)));
    std::map<Vector, bool, VectorLess> seen;
    std::vector<Vector> states;
    while (states.size() < m) {
        Vector v = random_vector(rng, dim, -3, 3);
        if (seen.emplace(v, true).second) states.push_back(std::move(v));
    }
    std::vector<std::vector<std::size_t>> trans(m, std::vector<std::size_t>(s));
    for (auto& row : trans)
        for (auto& d : row) d = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m) - 1));
    std::vector<Rational> theta;
    for (std::size_t i = 0; i < m; ++i) theta.push_back(Rational(uniform_int(rng, -3, 3)));
    return make_wavs(letters(s), std::move(states), static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m) - 1)),
                     std::move(trans), std::move(theta));
}

} // namespace rwa::testing
