#include "rwa/wfa.hpp"

#include "rwa/errors.hpp"

#include <sstream>

namespace rwa {

Wfa make_wfa(Alphabet alphabet, Vector sigma, std::vector<Matrix> matrices, Vector tau) {
    const std::size_t n = sigma.size();
    if (tau.size() != n)
        throw ValidationError("tau has length " + std::to_string(tau.size()) + ", expected " +
                              std::to_string(n));
    if (matrices.size() != alphabet.size())
        throw ValidationError("expected " + std::to_string(alphabet.size()) +
                              " transition matrices, got " + std::to_string(matrices.size()));
    for (std::size_t x = 0; x < matrices.size(); ++x)
        if (matrices[x].rows() != n || matrices[x].cols() != n)
            throw ValidationError("matrix for letter \"" + alphabet.name(x) + "\" is " +
                                  matrices[x].shape_string() + ", expected " + std::to_string(n) +
                                  "x" + std::to_string(n));
    return Wfa{n, std::move(alphabet), std::move(sigma), std::move(matrices), std::move(tau)};
}

Wfa make_wfa_from_map(Alphabet alphabet, Vector sigma,
                      const std::map<std::string, Matrix>& matrices,
             Vector tau) {
    std::vector<std::string> missing, extra;
    for (const auto& l : alphabet.letters())
        if (!matrices.count(l)) missing.push_back(l);
    for (const auto& [l, m] : matrices)
        if (!alphabet.index_of(l)) extra.push_back(l);
    if (!missing.empty() || !extra.empty()) {
        std::ostringstream os;
        os << "transition matrices do not cover the alphabet;";
        if (!missing.empty()) {
            os << " missing:";
            for (const auto& l : missing) os << " " << l;
        }
        if (!extra.empty()) {
            os << " extra:";
            for (const auto& l : extra) os << " " << l;
        }
        throw ValidationError(os.str());
    }
    std::vector<Matrix> ordered;
    ordered.reserve(alphabet.size());
    for (const auto& l : alphabet.letters()) ordered.push_back(matrices.at(l));
    return make_wfa(std::move(alphabet), std::move(sigma), std::move(ordered), std::move(tau));
}

Matrix word_matrix(const Wfa& a, const Word& u) {
    check_word(a.alphabet, u);
    Matrix m = Matrix::identity(a.dim);
    for (std::size_t x : u) m = m * a.matrices[x];
    return m;
}

Vector reached_vector(const Wfa& a, const Word& u) {
    check_word(a.alphabet, u);
    Vector v = a.sigma;
    for (std::size_t x : u) v = v * a.matrices[x];
    return v;
}

Rational behavior(const Wfa& a, const Word& u) {
    return dot(reached_vector(a, u), a.tau);
}

Rational generated(const Wfa& a, const Word& u) {
    return max_norm(reached_vector(a, u));
}

} // namespace rwa
