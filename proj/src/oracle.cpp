#include "rwa/oracle.hpp"

#include "rwa/errors.hpp"

namespace rwa {
namespace oracle {

namespace {

// Depth-first over all state paths; naive on purpose, the closed products of
// the linear representation must reproduce these sums exactly.
Rational pathsum_from(const Wfa& a, const Word& u, std::size_t pos, std::size_t state,
                      const Rational& weight) {
    if (pos == u.size()) return weight * a.tau[state];
    Rational total = 0;
    const Matrix& m = a.matrices[u[pos]];
    for (std::size_t next = 0; next < a.dim; ++next) {
        if (m.at(state, next) == 0) continue;
        total += pathsum_from(a, u, pos + 1, next, weight * m.at(state, next));
    }
    return total;
}

} // namespace

Rational behavior_pathsum(const Wfa& a, const Word& u) {
    check_word(a.alphabet, u);
    Rational total = 0;
    for (std::size_t start = 0; start < a.dim; ++start) {
        if (a.sigma[start] == 0) continue;
        total += pathsum_from(a, u, 0, start, a.sigma[start]);
    }
    return total;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
    std::vector<Word> words{{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = words.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t x = 0; x < alphabet.size(); ++x) {
                Word w = words[i];
                w.push_back(x);
                words.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return words;
}

std::optional<Word> equiv_bounded(const WordFunction& f, const WordFunction& g,
                                  const Alphabet& alphabet, std::size_t max_len) {
    for (const Word& w : enumerate_words(alphabet, max_len))
        if (f(w) != g(w)) return w;
    return std::nullopt;
}

namespace {

// Incremental word-tree cursor per model: O(1) work per appended letter, so
// bounded equivalence does not recompute matrix products from scratch per
// word.
struct Cursor {
    const AnyAutomaton* automaton;
    Vector vec{std::vector<Rational>{Rational(0)}}; // wfa: sigma_u
    std::size_t state = 0;                          // cdwa / wavs: state index

    explicit Cursor(const AnyAutomaton& a) : automaton(&a) {
        if (const Wfa* w = std::get_if<Wfa>(&a)) vec = w->sigma;
        else if (const Cdwa* d = std::get_if<Cdwa>(&a)) state = d->initial;
        else state = std::get<Wavs>(a).initial;
    }

    Cursor step(std::size_t x) const {
        Cursor next = *this;
        if (const Wfa* w = std::get_if<Wfa>(automaton)) next.vec = vec * w->matrices[x];
        else if (const Cdwa* d = std::get_if<Cdwa>(automaton)) next.state = d->delta[state][x];
        else next.state = std::get<Wavs>(*automaton).trans[state][x];
        return next;
    }

    Rational behavior() const {
        if (const Wfa* w = std::get_if<Wfa>(automaton)) return dot(vec, w->tau);
        if (const Cdwa* d = std::get_if<Cdwa>(automaton)) return d->theta[state];
        return std::get<Wavs>(*automaton).theta[state];
    }

    Rational generated() const {
        if (std::holds_alternative<Wfa>(*automaton)) return max_norm(vec);
        return max_norm(std::get<Wavs>(*automaton).states[state]);
    }
};

const Alphabet& alphabet_of(const AnyAutomaton& a) {
    return std::visit([](const auto& m) -> const Alphabet& { return m.alphabet; }, a);
}

} // namespace

CompleteEquivResult complete_equiv_bounded(const AnyAutomaton& a, const AnyAutomaton& b,
                                           std::size_t max_len, bool complete) {
    if (!(alphabet_of(a) == alphabet_of(b)))
        throw AlphabetError("equivalence check requires identical alphabets");
    // the generated function is defined for wfa/wavs; a cdwa is compared
    // through its canonical embedding
    AnyAutomaton ea = a, eb = b;
    if (complete) {
        if (const Cdwa* d = std::get_if<Cdwa>(&ea)) ea = to_wfa(*d);
        if (const Cdwa* d = std::get_if<Cdwa>(&eb)) eb = to_wfa(*d);
    }

    const std::size_t letters = alphabet_of(ea).size();
    struct Node {
        Word word;
        Cursor ca, cb;
    };
    // level-order walk reports the first difference in length-then-alphabet
    // enumeration order
    std::vector<Node> level{{Word{}, Cursor(ea), Cursor(eb)}};
    for (std::size_t len = 0;; ++len) {
        for (const Node& node : level) {
            if (node.ca.behavior() != node.cb.behavior())
                return CompleteEquivResult{false, node.word, Differs::behavior};
            if (complete && node.ca.generated() != node.cb.generated())
                return CompleteEquivResult{false, node.word, Differs::generated};
        }
        if (len == max_len) break;
        std::vector<Node> next;
        next.reserve(level.size() * letters);
        for (const Node& node : level)
            for (std::size_t x = 0; x < letters; ++x) {
                Word w = node.word;
                w.push_back(x);
                next.push_back(Node{std::move(w), node.ca.step(x), node.cb.step(x)});
            }
        level = std::move(next);
    }
    return CompleteEquivResult{true, {}, Differs::behavior};
}

} // namespace oracle
} // namespace rwa
