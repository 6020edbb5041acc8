#include "rwa/format.hpp"

#include "rwa/errors.hpp"

#include <json.hpp>

#include <set>

namespace rwa {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ValidationError(path + ": " + message);
}

const json& require(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key)) fail(path, "unknown field \"" + key + "\"");
}

Rational parse_scalar(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
    if (j.is_number_float())
        fail(path, "floating-point literals are not exact; quote the value (\"1/4\" or \"0.25\")");
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected a weight (integer or string)");
}

Vector parse_vector(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of weights");
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        entries.push_back(parse_scalar(j[i], path + "[" + std::to_string(i) + "]"));
    return Vector(std::move(entries));
}

Matrix parse_matrix(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string row_path = path + "[" + std::to_string(i) + "]";
        const json& row = j[i];
        if (!row.is_array() || row.empty()) fail(row_path, "expected a non-empty array of weights");
        if (row.size() != j[0].size())
            fail(row_path, "expected " + std::to_string(j[0].size()) + " entries, got " +
                               std::to_string(row.size()));
        std::vector<Rational> entries;
        for (std::size_t k = 0; k < row.size(); ++k)
            entries.push_back(parse_scalar(row[k], row_path + "[" + std::to_string(k) + "]"));
        rows.push_back(std::move(entries));
    }
    return Matrix(rows);
}

Alphabet parse_alphabet(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of letter strings");
    std::vector<std::string> letters;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
        letters.push_back(j[i].get<std::string>());
    }
    try {
        return Alphabet(std::move(letters));
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

std::size_t parse_index(const json& j, const std::string& path, std::size_t bound,
                        const char* what) {
    if (!j.is_number_unsigned())
        fail(path, std::string("expected a non-negative ") + what + " index");
    auto v = j.get<std::uint64_t>();
    if (v >= bound)
        fail(path, what + std::string(" index ") + std::to_string(v) + " out of range (have " +
                       std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

Wfa parse_wfa(const json& j) {
    reject_unknown_keys(j, "wfa", {"kind", "alphabet", "dim", "sigma", "matrices", "tau"});
    Alphabet alphabet = parse_alphabet(require(j, "wfa", "alphabet"), "alphabet");
    const json& jdim = require(j, "wfa", "dim");
    if (!jdim.is_number_unsigned() || jdim.get<std::uint64_t>() == 0)
        fail("dim", "expected a positive integer");
    const std::size_t n = jdim.get<std::size_t>();
    Vector sigma = parse_vector(require(j, "wfa", "sigma"), "sigma");
    if (sigma.size() != n) fail("sigma", "expected length " + std::to_string(n));
    Vector tau = parse_vector(require(j, "wfa", "tau"), "tau");
    if (tau.size() != n) fail("tau", "expected length " + std::to_string(n));

    const json& jm = require(j, "wfa", "matrices");
    if (!jm.is_object()) fail("matrices", "expected an object keyed by letter");
    std::map<std::string, Matrix> matrices;
    for (const auto& [letter, grid] : jm.items()) {
        Matrix m = parse_matrix(grid, "matrices." + letter);
        if (m.rows() != n || m.cols() != n)
            fail("matrices." + letter,
                 "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                     m.shape_string());
        matrices.emplace(letter, std::move(m));
    }
    try {
        return make_wfa_from_map(std::move(alphabet), std::move(sigma), matrices, std::move(tau));
    } catch (const ValidationError& e) {
        fail("matrices", e.what());
    }
}

Cdwa parse_cdwa(const json& j) {
    reject_unknown_keys(j, "cdwa", {"kind", "alphabet", "states", "initial", "delta", "theta"});
    Alphabet alphabet = parse_alphabet(require(j, "cdwa", "alphabet"), "alphabet");
    const json& js = require(j, "cdwa", "states");
    if (!js.is_array() || js.empty()) fail("states", "expected a non-empty array of state names");
    std::vector<std::string> states;
    std::map<std::string, std::size_t> state_index;
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (!js[i].is_string()) fail("states[" + std::to_string(i) + "]", "expected a string");
        std::string name = js[i].get<std::string>();
        if (name.empty()) fail("states[" + std::to_string(i) + "]", "state names must be non-empty");
        if (!state_index.emplace(name, i).second)
            fail("states[" + std::to_string(i) + "]", "duplicate state name \"" + name + "\"");
        states.push_back(std::move(name));
    }
    auto lookup_state = [&](const json& v, const std::string& path) -> std::size_t {
        if (!v.is_string()) fail(path, "expected a state name");
        auto it = state_index.find(v.get<std::string>());
        if (it == state_index.end()) fail(path, "unknown state \"" + v.get<std::string>() + "\"");
        return it->second;
    };
    std::size_t initial = lookup_state(require(j, "cdwa", "initial"), "initial");

    const json& jd = require(j, "cdwa", "delta");
    if (!jd.is_object()) fail("delta", "expected an object keyed by state");
    for (const auto& [name, row] : jd.items())
        if (!state_index.count(name)) fail("delta", "unknown state \"" + name + "\"");
    std::vector<std::vector<std::size_t>> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto it = jd.find(states[i]);
        if (it == jd.end()) fail("delta", "missing row for state \"" + states[i] + "\"");
        const json& row = *it;
        const std::string row_path = "delta." + states[i];
        if (!row.is_object()) fail(row_path, "expected an object keyed by letter");
        for (const auto& [letter, dest] : row.items())
            if (!alphabet.index_of(letter)) fail(row_path, "unknown letter \"" + letter + "\"");
        std::vector<std::size_t> out;
        for (const auto& letter : alphabet.letters()) {
            auto lt = row.find(letter);
            if (lt == row.end()) fail(row_path, "missing transition for letter \"" + letter + "\"");
            out.push_back(lookup_state(*lt, row_path + "." + letter));
        }
        delta.push_back(std::move(out));
    }

    const json& jt = require(j, "cdwa", "theta");
    if (!jt.is_object()) fail("theta", "expected an object keyed by state");
    for (const auto& [name, value] : jt.items())
        if (!state_index.count(name)) fail("theta", "unknown state \"" + name + "\"");
    std::vector<Rational> theta;
    for (const auto& name : states) {
        auto it = jt.find(name);
        if (it == jt.end()) fail("theta", "missing weight for state \"" + name + "\"");
        theta.push_back(parse_scalar(*it, "theta." + name));
    }
    try {
        return make_cdwa(std::move(states), initial, std::move(alphabet), std::move(delta),
                         std::move(theta));
    } catch (const ValidationError& e) {
        fail("cdwa", e.what());
    }
}

Wavs parse_wavs(const json& j) {
    reject_unknown_keys(j, "wavs", {"kind", "alphabet", "dim", "states", "initial", "trans", "theta"});
    Alphabet alphabet = parse_alphabet(require(j, "wavs", "alphabet"), "alphabet");
    const json& jdim = require(j, "wavs", "dim");
    if (!jdim.is_number_unsigned() || jdim.get<std::uint64_t>() == 0)
        fail("dim", "expected a positive integer");
    const std::size_t dim = jdim.get<std::size_t>();

    const json& js = require(j, "wavs", "states");
    if (!js.is_array() || js.empty()) fail("states", "expected a non-empty array of vectors");
    std::vector<Vector> states;
    for (std::size_t i = 0; i < js.size(); ++i) {
        Vector v = parse_vector(js[i], "states[" + std::to_string(i) + "]");
        if (v.size() != dim)
            fail("states[" + std::to_string(i) + "]", "expected length " + std::to_string(dim));
        states.push_back(std::move(v));
    }
    std::size_t initial = parse_index(require(j, "wavs", "initial"), "initial", states.size(), "state");

    const json& jtr = require(j, "wavs", "trans");
    if (!jtr.is_array() || jtr.size() != states.size())
        fail("trans", "expected one row per state (" + std::to_string(states.size()) + ")");
    std::vector<std::vector<std::size_t>> trans;
    for (std::size_t i = 0; i < jtr.size(); ++i) {
        const std::string row_path = "trans[" + std::to_string(i) + "]";
        const json& row = jtr[i];
        if (!row.is_object()) fail(row_path, "expected an object keyed by letter");
        for (const auto& [letter, dest] : row.items())
            if (!alphabet.index_of(letter)) fail(row_path, "unknown letter \"" + letter + "\"");
        std::vector<std::size_t> out;
        for (const auto& letter : alphabet.letters()) {
            auto lt = row.find(letter);
            if (lt == row.end()) fail(row_path, "missing transition for letter \"" + letter + "\"");
            out.push_back(parse_index(*lt, row_path + "." + letter, states.size(), "state"));
        }
        trans.push_back(std::move(out));
    }

    const json& jt = require(j, "wavs", "theta");
    if (!jt.is_array() || jt.size() != states.size())
        fail("theta", "expected one weight per state (" + std::to_string(states.size()) + ")");
    std::vector<Rational> theta;
    for (std::size_t i = 0; i < jt.size(); ++i)
        theta.push_back(parse_scalar(jt[i], "theta[" + std::to_string(i) + "]"));

    try {
        return make_wavs(std::move(alphabet), std::move(states), initial, std::move(trans),
                         std::move(theta));
    } catch (const ValidationError& e) {
        fail("wavs", e.what());
    }
}

Matrix parse_matrix_doc(const json& j) {
    reject_unknown_keys(j, "matrix", {"kind", "entries"});
    return parse_matrix(require(j, "matrix", "entries"), "entries");
}

json scalar_to_json(const Rational& r) { return json(rational_to_string(r)); }

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v[i]));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json alphabet_to_json(const Alphabet& a) {
    json out = json::array();
    for (const auto& l : a.letters()) out.push_back(l);
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!j.is_object()) throw ValidationError("document: expected a JSON object");
    const json& kind = require(j, "document", "kind");
    if (!kind.is_string()) fail("kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "wfa") return parse_wfa(j);
    if (k == "cdwa") return parse_cdwa(j);
    if (k == "wavs") return parse_wavs(j);
    if (k == "matrix") return parse_matrix_doc(j);
    fail("kind", "unknown kind \"" + k + "\" (expected wfa, cdwa, wavs or matrix)");
}

std::string serialize(const Wfa& a) {
    json j;
    j["kind"] = "wfa";
    j["alphabet"] = alphabet_to_json(a.alphabet);
    j["dim"] = a.dim;
    j["sigma"] = vector_to_json(a.sigma);
    json matrices = json::object();
    for (std::size_t x = 0; x < a.alphabet.size(); ++x)
        matrices[a.alphabet.name(x)] = matrix_to_json(a.matrices[x]);
    j["matrices"] = std::move(matrices);
    j["tau"] = vector_to_json(a.tau);
    return dump(j);
}

std::string serialize(const Cdwa& d) {
    json j;
    j["kind"] = "cdwa";
    j["alphabet"] = alphabet_to_json(d.alphabet);
    j["states"] = d.states;
    j["initial"] = d.states[d.initial];
    json delta = json::object();
    for (std::size_t i = 0; i < d.states.size(); ++i) {
        json row = json::object();
        for (std::size_t x = 0; x < d.alphabet.size(); ++x)
            row[d.alphabet.name(x)] = d.states[d.delta[i][x]];
        delta[d.states[i]] = std::move(row);
    }
    j["delta"] = std::move(delta);
    json theta = json::object();
    for (std::size_t i = 0; i < d.states.size(); ++i)
        theta[d.states[i]] = scalar_to_json(d.theta[i]);
    j["theta"] = std::move(theta);
    return dump(j);
}

std::string serialize(const Wavs& a) {
    json j;
    j["kind"] = "wavs";
    j["alphabet"] = alphabet_to_json(a.alphabet);
    j["dim"] = a.dim;
    json states = json::array();
    for (const auto& s : a.states) states.push_back(vector_to_json(s));
    j["states"] = std::move(states);
    j["initial"] = a.initial;
    json trans = json::array();
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        json row = json::object();
        for (std::size_t x = 0; x < a.alphabet.size(); ++x)
            row[a.alphabet.name(x)] = a.trans[i][x];
        trans.push_back(std::move(row));
    }
    j["trans"] = std::move(trans);
    json theta = json::array();
    for (const auto& t : a.theta) theta.push_back(scalar_to_json(t));
    j["theta"] = std::move(theta);
    return dump(j);
}

std::string serialize(const Matrix& m) {
    json j;
    j["kind"] = "matrix";
    j["entries"] = matrix_to_json(m);
    return dump(j);
}

std::string serialize_document(const Document& doc) {
    return std::visit([](const auto& d) { return serialize(d); }, doc);
}

std::vector<Vector> parse_vector_list(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error at byte ") + std::to_string(e.byte) + ": " +
                         e.what());
    }
    if (!j.is_array() || j.empty()) throw ValidationError("basis: expected a non-empty array of vectors");
    std::vector<Vector> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_vector(j[i], "basis[" + std::to_string(i) + "]"));
    return out;
}

const char* kind_name(const Document& doc) {
    switch (doc.index()) {
        case 0: return "wfa";
        case 1: return "cdwa";
        case 2: return "wavs";
        default: return "matrix";
    }
}

} // namespace rwa
