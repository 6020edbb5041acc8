#include "rwa/wavs.hpp"

#include "generators.hpp"
#include "rwa/cdwa.hpp"
#include "rwa/errors.hpp"
#include "rwa/oracle.hpp"

#include <doctest.h>

using namespace rwa;
using testing::mat;
using testing::vec;

namespace {

// states e1, e2 with delta_x swapping them;
// Theta(alpha) = alpha . [1,0], so theta = [1, 0]
Wavs swap_wavs() {
    return make_wavs(testing::letters(1), {vec({1, 0}), vec({0, 1})}, 0, {{1}, {0}},
                     {Rational(1), Rational(0)});
}

} // namespace

TEST_CASE("delta_star walks the table and returns the stored vector") {
    Wavs a = testing::example41_wavs();
    CHECK(delta_star(a, {}) == vec({1, 0}));
    CHECK(delta_star(a, {0}) == vec({0, 1}));        // x
    CHECK(delta_star(a, {1, 0}) == vec({1, 1}));     // y then x loop
    CHECK(delta_star(a, {1, 1}) == vec({0, 1}));     // y then y
    CHECK_THROWS_AS(delta_star(a, {4}), AlphabetError);
}

TEST_CASE("behavior and generated on Example 4.1") {
    Wavs a = testing::example41_wavs();
    CHECK(behavior(a, {}) == 0);
    CHECK(behavior(a, {0}) == 0);
    CHECK(behavior(a, {1}) == 1);
    CHECK(generated(a, {}) == 1);
    CHECK(generated(a, {1}) == 1);

    Wavs zero_start = make_wavs(testing::letters(1), {vec({0, 0})}, 0, {{0}}, {Rational(3)});
    CHECK(generated(zero_start, {}) == 0);
}

TEST_CASE("build_test_matrices stacks states, destinations and theta") {
    Wavs a = testing::example41_wavs();
    TestMatrices tm = build_test_matrices(a);
    CHECK(tm.state_matrix == mat({{1, 0}, {0, 1}, {1, 1}}));
    CHECK(tm.destination_matrices[0] == mat({{0, 1}, {0, 1}, {1, 1}}));
    CHECK(tm.destination_matrices[1] == mat({{1, 1}, {0, 1}, {0, 1}}));
    CHECK(tm.terminal_vector == vec({0, 0, 1}));

    Wavs self = make_wavs(testing::letters(1), {vec({2, 3})}, 0, {{0}}, {Rational(1, 2)});
    TestMatrices tms = build_test_matrices(self);
    CHECK(tms.state_matrix == mat({{2, 3}}));
    CHECK(tms.destination_matrices[0] == mat({{2, 3}}));
    CHECK(tms.terminal_vector == Vector(std::vector<Rational>{Rational(1, 2)}));

    TestMatrices tmb = build_test_matrices(swap_wavs());
    CHECK(tmb.state_matrix == Matrix::identity(2));
    CHECK(tmb.destination_matrices[0] == mat({{0, 1}, {1, 0}}));
}

TEST_CASE("linearity_check reproduces the Example 4.1 verdict") {
    LinearityReport r = linearity_check(testing::example41_wavs());
    CHECK(!r.linear);
    CHECK(r.rank_state == 2);
    CHECK(r.rank_augmented == 3);
    CHECK(!r.witness_matrices.has_value());
}

TEST_CASE("linearity_check extracts and verifies witnesses") {
    LinearityReport r = linearity_check(swap_wavs());
    CHECK(r.linear);
    REQUIRE(r.witness_matrices.has_value());
    CHECK((*r.witness_matrices)[0] == mat({{0, 1}, {1, 0}}));
    CHECK(*r.witness_tau == vec({1, 0}));
}

TEST_CASE("cdwa-derived automata with the default basis are linear") {
    testing::Rng rng(7301);
    for (int trial = 0; trial < 20; ++trial) {
        LinearityReport r = linearity_check(to_wavs(testing::random_cdwa(rng)));
        CHECK(r.linear);
    }
}

TEST_CASE("rank of the augmented matrix never drops below rank of N") {
    testing::Rng rng(7302);
    for (int trial = 0; trial < 60; ++trial) {
        Wavs a = trial % 2 == 0 ? testing::random_table_wavs(rng) : testing::random_linear_wavs(rng);
        LinearityReport r = linearity_check(a);
        CHECK(r.rank_augmented >= r.rank_state);
        if (r.linear) {
            REQUIRE(r.witness_matrices.has_value());
            for (std::size_t x = 0; x < a.alphabet.size(); ++x)
                CHECK(r.state_matrix * (*r.witness_matrices)[x] == r.destination_matrices[x]);
            CHECK(r.state_matrix * Matrix::from_column(*r.witness_tau) ==
                  Matrix::from_column(r.terminal_vector));
        }
    }
}

TEST_CASE("the rank verdict matches per-system solvability") {
    testing::Rng rng(7303);
    for (int trial = 0; trial < 60; ++trial) {
        Wavs a = trial % 2 == 0 ? testing::random_table_wavs(rng) : testing::random_linear_wavs(rng);
        LinearityReport r = linearity_check(a);
        bool all_solvable = true;
        for (const auto& dest : r.destination_matrices)
            all_solvable = all_solvable && solve_right(r.state_matrix, dest).has_value();
        all_solvable = all_solvable &&
                       solve_right(r.state_matrix, Matrix::from_column(r.terminal_vector)).has_value();
        CHECK(r.linear == all_solvable);
    }
}

TEST_CASE("to_wfa keeps the initial vector state and is completely equivalent") {
    Wfa from_swap = to_wfa(swap_wavs());
    CHECK(from_swap.sigma == vec({1, 0}));
    CHECK(from_swap.matrices[0] == mat({{0, 1}, {1, 0}}));
    CHECK(from_swap.tau == vec({1, 0}));

    testing::Rng rng(7304);
    for (int trial = 0; trial < 10; ++trial) {
        Wavs a = testing::random_linear_wavs(rng);
        Wfa b = to_wfa(a);
        auto verdict = oracle::complete_equiv_bounded(a, b, 6);
        CHECK(verdict.equal);
    }
}

TEST_CASE("to_wfa on a nonlinear automaton raises an error carrying the report") {
    try {
        to_wfa(testing::example41_wavs());
        FAIL("expected LinearityError");
    } catch (const LinearityError& e) {
        CHECK(e.report.rank_state == 2);
        CHECK(e.report.rank_augmented == 3);
    }
}

TEST_CASE("cdwa to_wavs to_wfa agrees with the direct embedding") {
    testing::Rng rng(7305);
    for (int trial = 0; trial < 10; ++trial) {
        Cdwa d = testing::random_cdwa(rng, 4, 2);
        Wfa direct = to_wfa(d);
        Wfa via_wavs = to_wfa(to_wavs(d));
        auto verdict = oracle::complete_equiv_bounded(direct, via_wavs, 6);
        CHECK(verdict.equal);
    }
}

TEST_CASE("table-walk composition: delta_u is the composition of the delta_x") {
    testing::Rng rng(7306);
    for (int trial = 0; trial < 20; ++trial) {
        Wavs a = testing::random_table_wavs(rng);
        Word u;
        for (int i = testing::uniform_int(rng, 0, 5); i > 0; --i)
            u.push_back(static_cast<std::size_t>(
                testing::uniform_int(rng, 0, static_cast<int>(a.alphabet.size()) - 1)));
        std::size_t step_by_step = a.initial;
        for (std::size_t x : u) step_by_step = a.trans[step_by_step][x];
        CHECK(delta_star_index(a, a.initial, u) == step_by_step);
    }
}

TEST_CASE("make_wavs rejects duplicate or ragged vector states") {
    CHECK_THROWS_AS(make_wavs(testing::letters(1), {vec({1, 0}), vec({1, 0})}, 0, {{0}, {1}},
                              {Rational(0), Rational(0)}),
                    ValidationError);
    CHECK_THROWS_AS(make_wavs(testing::letters(1), {vec({1, 0}), vec({1})}, 0, {{0}, {1}},
                              {Rational(0), Rational(0)}),
                    ValidationError);
    CHECK_THROWS_AS(make_wavs(testing::letters(1), {vec({1, 0})}, 0, {{4}}, {Rational(0)}),
                    ValidationError);
    CHECK_THROWS_AS(make_wavs(testing::letters(2), {vec({1, 0})}, 0, {{0}}, {Rational(0)}),
                    ValidationError);
}
