#include "rwa/derivative.hpp"

#include "rwa/errors.hpp"

#include <map>

namespace rwa {

namespace {

// Row-echelon accumulator for independence tests: keeps reduced rows, returns
// false when the candidate is a linear combination of what is already there.
class EchelonTracker {
public:
    bool try_add(Vector v) {
        std::vector<Rational> row = v.entries();
        for (const auto& [lead, basis_row] : rows_) {
            if (row[lead] == 0) continue;
            Rational factor = row[lead];
            for (std::size_t j = 0; j < row.size(); ++j) row[j] -= factor * basis_row[j];
        }
        std::size_t lead = row.size();
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) { lead = j; break; }
        if (lead == row.size()) return false;
        Rational inv = Rational(1) / row[lead];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] *= inv;
        rows_.emplace_back(lead, std::move(row));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

} // namespace

ObservabilityBasis observability_basis(const Wfa& a) {
    ObservabilityBasis basis;
    EchelonTracker tracker;
    std::vector<Vector> worklist{a.tau};
    while (!worklist.empty()) {
        Vector v = std::move(worklist.back());
        worklist.pop_back();
        if (!tracker.try_add(v)) continue;
        for (const auto& m : a.matrices) worklist.push_back(m * v);
        basis.columns.push_back(std::move(v));
    }
    return basis;
}

Vector observability_key(const ObservabilityBasis& basis, const Vector& reached) {
    if (basis.columns.empty()) return Vector::zeros(1);
    std::vector<Rational> key;
    key.reserve(basis.columns.size());
    for (const auto& col : basis.columns) key.push_back(dot(reached, col));
    return Vector(std::move(key));
}

Rational derivative_value(const Wfa& a, const Word& u, const Word& v) {
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    return behavior(a, uv);
}

DerivativeAutomaton derivative_automaton(const Wfa& a, std::size_t max_states) {
    if (max_states == 0) throw ValidationError("max_states must be >= 1");
    ObservabilityBasis basis = observability_basis(a);

    std::vector<Vector> keys;
    std::vector<Vector> reached; // one representative sigma_u per key
    std::vector<Word> representatives;
    std::vector<Rational> theta;
    std::map<Vector, std::size_t, VectorLess> index;
    std::vector<std::vector<std::size_t>> trans;

    keys.push_back(observability_key(basis, a.sigma));
    reached.push_back(a.sigma);
    representatives.push_back({});
    theta.push_back(dot(a.sigma, a.tau));
    index.emplace(keys.front(), 0);

    for (std::size_t next = 0; next < keys.size(); ++next) {
        trans.emplace_back(a.alphabet.size());
        for (std::size_t x = 0; x < a.alphabet.size(); ++x) {
            Vector succ_reached = reached[next] * a.matrices[x];
            Vector succ_key = observability_key(basis, succ_reached);
            auto it = index.find(succ_key);
            if (it == index.end()) {
                if (keys.size() == max_states)
                    return DerivativeAutomaton{std::nullopt, ClosureStatus::budget_exhausted,
                                               std::move(representatives), keys.size()};
                Word w = representatives[next];
                w.push_back(x);
                it = index.emplace(succ_key, keys.size()).first;
                keys.push_back(std::move(succ_key));
                theta.push_back(dot(succ_reached, a.tau));
                reached.push_back(std::move(succ_reached));
                representatives.push_back(std::move(w));
            }
            trans[next][x] = it->second;
        }
    }

    std::size_t explored = keys.size();
    Wavs automaton = make_wavs(a.alphabet, std::move(keys), 0, std::move(trans), std::move(theta));
    return DerivativeAutomaton{std::move(automaton), ClosureStatus::complete,
                               std::move(representatives), explored};
}

PrefixClosureValue prefix_closure(const Wfa& a, const Word& u, const NerodeResult& nerode_result,
                                  std::size_t horizon) {
    check_word(a.alphabet, u);
    if (nerode_result.status == ClosureStatus::complete) {
        const Wavs& an = *nerode_result.automaton;
        if (an.dim != a.dim || !(an.alphabet == a.alphabet))
            throw PreconditionError("nerode result does not match the automaton");
        // sup_v |f(uv)| = max |Theta^N| over states reachable from sigma_u
        std::size_t start = delta_star_index(an, an.initial, u);
        std::vector<bool> seen(an.states.size(), false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        Rational best = 0;
        while (!stack.empty()) {
            std::size_t s = stack.back();
            stack.pop_back();
            Rational v = rat_abs(an.theta[s]);
            if (v > best) best = v;
            for (std::size_t x = 0; x < an.alphabet.size(); ++x) {
                std::size_t t = an.trans[s][x];
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        }
        return PrefixClosureValue{std::move(best), true};
    }

    // bounded fallback: max over |v| <= horizon, tagged as a lower bound
    Rational best = 0;
    Vector start = reached_vector(a, u);
    struct Frame {
        Vector state;
        std::size_t depth;
    };
    std::vector<Frame> stack{{start, 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        Rational v = rat_abs(dot(f.state, a.tau));
        if (v > best) best = v;
        if (f.depth == horizon) continue;
        for (const auto& m : a.matrices) stack.push_back({f.state * m, f.depth + 1});
    }
    return PrefixClosureValue{std::move(best), false};
}

std::pair<std::size_t, std::size_t> minimality_gap(const DerivativeAutomaton& da,
                                                   const NerodeResult& nr) {
    if (da.status != ClosureStatus::complete || nr.status != ClosureStatus::complete)
        throw PreconditionError("minimality_gap requires complete constructions");
    return {da.automaton->states.size(), nr.automaton->states.size()};
}

} // namespace rwa
