#pragma once

#include "rwa/cdwa.hpp"
#include "rwa/wavs.hpp"

#include <string>
#include <variant>

namespace rwa {

// A parsed document: one of the three automaton kinds, or a raw matrix for
// the rref subcommand. Weights in files are JSON integers or strings holding
// "p/q" fractions or exact decimals; serialization always emits canonical
// fraction strings in a fixed field order, so parse(serialize(x)) = x.
using Document = std::variant<Wfa, Cdwa, Wavs, Matrix>;

// Throws ParseError (syntax, with location) or ValidationError (semantic,
// with the offending field path).
Document parse_document(const std::string& text);

std::string serialize_document(const Document& doc);
std::string serialize(const Wfa& a);
std::string serialize(const Cdwa& d);
std::string serialize(const Wavs& a);
std::string serialize(const Matrix& m);

// Bare JSON array of equal-length vectors, e.g. [["1","0"],["0","1"]]; used
// by `from-cdwa --basis`.
std::vector<Vector> parse_vector_list(const std::string& text);

const char* kind_name(const Document& doc);

} // namespace rwa
