#include "rwa/words.hpp"

#include "rwa/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rwa {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ValidationError("alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.empty()) throw ValidationError("alphabet letters must be non-empty strings");
        if (!seen.insert(l).second) throw ValidationError("duplicate alphabet letter \"" + l + "\"");
    }
}

std::optional<std::size_t> Alphabet::index_of(const std::string& letter) const {
    auto it = std::find(letters_.begin(), letters_.end(), letter);
    if (it == letters_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - letters_.begin());
}

void check_word(const Alphabet& alphabet, const Word& word) {
    for (std::size_t i : word)
        if (i >= alphabet.size())
            throw AlphabetError("letter index " + std::to_string(i) + " out of range (alphabet size " +
                                std::to_string(alphabet.size()) + ")");
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    if (word.empty()) return "@";
    bool single = std::all_of(alphabet.letters().begin(), alphabet.letters().end(),
                              [](const std::string& l) { return l.size() == 1; });
    std::ostringstream os;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k > 0 && !single) os << ',';
        os << alphabet.name(word[k]);
    }
    return os.str();
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
    if (text == "@") return {};
    bool single = std::all_of(alphabet.letters().begin(), alphabet.letters().end(),
                              [](const std::string& l) { return l.size() == 1; });
    Word word;
    if (single && text.find(',') == std::string::npos) {
        for (char c : text) {
            auto idx = alphabet.index_of(std::string(1, c));
            if (!idx) throw AlphabetError("unknown letter \"" + std::string(1, c) + "\"");
            word.push_back(*idx);
        }
        return word;
    }
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto idx = alphabet.index_of(token);
        if (!idx) throw AlphabetError("unknown letter \"" + token + "\"");
        word.push_back(*idx);
    }
    return word;
}

} // namespace rwa
