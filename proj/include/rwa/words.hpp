#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rwa {

// Words are sequences of alphabet indices; {} is the empty word.
using Word = std::vector<std::size_t>;

class Alphabet {
public:
    // Throws ValidationError if letters is empty, contains duplicates or an
    // empty name.
    explicit Alphabet(std::vector<std::string> letters);

    std::size_t size() const { return letters_.size(); }
    const std::string& name(std::size_t i) const { return letters_[i]; }
    const std::vector<std::string>& letters() const { return letters_; }
    std::optional<std::size_t> index_of(const std::string& letter) const;

    bool operator==(const Alphabet& other) const = default;

private:
    std::vector<std::string> letters_;
};

// Throws AlphabetError naming the letter if some index is out of range.
void check_word(const Alphabet& alphabet, const Word& word);

// The empty word is spelled "@". Letters are joined without separators when
// every letter is a single character, otherwise comma-separated.
std::string format_word(const Alphabet& alphabet, const Word& word);
Word parse_word(const Alphabet& alphabet, const std::string& text);

} // namespace rwa
