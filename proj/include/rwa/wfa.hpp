#pragma once

#include "rwa/linalg.hpp"
#include "rwa/words.hpp"

#include <map>
#include <vector>

namespace rwa {

// Weighted finite automaton in linear representation: dimension n, initial
// weights sigma, one n x n transition matrix per letter, terminal weights tau.
struct Wfa {
    std::size_t dim;
    Alphabet alphabet;
    Vector sigma;
    std::vector<Matrix> matrices; // alphabet order
    Vector tau;

    bool operator==(const Wfa& other) const = default;
};

// Validating constructors. The map variant reports missing/extra letters.
Wfa make_wfa(Alphabet alphabet, Vector sigma, std::vector<Matrix> matrices, Vector tau);
Wfa make_wfa_from_map(Alphabet alphabet, Vector sigma,
                      const std::map<std::string, Matrix>& matrices, Vector tau);

// M_u, the product of letter matrices in word order; identity for the empty
// word.
Matrix word_matrix(const Wfa& a, const Word& u);

// sigma_u = sigma * M_u (sigma itself for the empty word).
Vector reached_vector(const Wfa& a, const Word& u);

// sigma * M_u * tau.
Rational behavior(const Wfa& a, const Word& u);

// Generated function: ||sigma_u||_inf.
Rational generated(const Wfa& a, const Word& u);

} // namespace rwa
