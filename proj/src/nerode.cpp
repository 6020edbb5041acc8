#include "rwa/nerode.hpp"

#include "rwa/errors.hpp"

#include <map>

namespace rwa {

NerodeResult nerode(const Wfa& a, std::size_t max_states) {
    if (max_states == 0) throw ValidationError("max_states must be >= 1");

    std::vector<Vector> states;
    std::vector<Word> witnesses;
    std::map<Vector, std::size_t, VectorLess> index;
    std::vector<std::vector<std::size_t>> trans;

    states.push_back(a.sigma);
    witnesses.push_back({});
    index.emplace(a.sigma, 0);

    for (std::size_t next = 0; next < states.size(); ++next) {
        trans.emplace_back(a.alphabet.size());
        for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
            Vector succ = states[next] * a.matrices[x];
            auto it = index.find(succ);
            if (it == index.end()) {
                if (states.size() == max_states)
                    return NerodeResult{std::nullopt, ClosureStatus::budget_exhausted,
                                        states.size(), std::move(witnesses)};
                Word w = witnesses[next];
                w.push_back(x);
                it = index.emplace(std::move(succ), states.size()).first;
                states.push_back(it->first);
                witnesses.push_back(std::move(w));
            }
            trans[next][x] = it->second;
        }
    }

    std::vector<Rational> theta;
    theta.reserve(states.size());
    for (const auto& s : states) theta.push_back(dot(s, a.tau));
    std::size_t explored = states.size();
    Wavs result = make_wavs(a.alphabet, std::move(states), 0, std::move(trans), std::move(theta));
    return NerodeResult{std::move(result), ClosureStatus::complete, explored,
                        std::move(witnesses)};
}

LinearityReport nerode_is_linear(const NerodeResult& r) {
    if (r.status != ClosureStatus::complete)
        throw PreconditionError("nerode_is_linear requires a complete Nerode result");
    return linearity_check(*r.automaton);
}

} // namespace rwa
