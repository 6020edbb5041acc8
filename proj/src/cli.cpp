#include "rwa/cli.hpp"

#include "rwa/derivative.hpp"
#include "rwa/errors.hpp"
#include "rwa/format.hpp"
#include "rwa/oracle.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace rwa {

namespace {

const char* usage_text = R"(usage: rwa <command> [arguments]

commands:
  eval FILE WORD                      behavior (and generated value) of WORD
  nerode FILE [--max-states K]        Nerode automaton of a wfa (or cdwa)
  linearity FILE                      rank-based linearity test of a wavs
  to-wfa FILE                         wavs (if linear) or cdwa as a wfa
  from-cdwa FILE [--basis FILE]       cdwa as a wavs over chosen vector states
  derivative FILE [--max-states K]    derivative automaton of the behavior
  prefix-closure FILE WORD [--horizon H] [--max-states K]
                                      sup |f(u.v)| over all suffixes v
  equiv FILE1 FILE2 [--max-len L] [--complete]
                                      bounded (complete) language equivalence
  rref FILE                           reduced row echelon form of a matrix

Words on the command line: letters joined ("xyx") when all letters are single
characters, otherwise comma-separated; the empty word is "@".
Exit codes: 0 ok, 1 usage, 2 parse/validation, 3 negative verdict, 4 budget
exhausted.
)";

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{exit_invalid, "cannot open file: " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Document load_document(const std::string& path) {
    try {
        return parse_document(read_file(path));
    } catch (const ParseError& e) {
        throw CliError{exit_invalid, path + ": " + e.what()};
    } catch (const ValidationError& e) {
        throw CliError{exit_invalid, path + ": " + e.what()};
    }
}

// Options of the form --name VALUE plus standalone flags; everything else is
// a positional argument.
struct Options {
    std::vector<std::string> positional;
    std::optional<std::size_t> max_states;
    std::optional<std::size_t> max_len;
    std::optional<std::size_t> horizon;
    std::optional<std::string> basis;
    bool complete = false;
};

std::size_t parse_count(const std::string& text, const std::string& flag) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size() || v == 0) throw std::invalid_argument(text);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw CliError{exit_usage, flag + " expects a positive integer, got \"" + text + "\""};
    }
}

Options parse_options(const std::vector<std::string>& args, std::size_t from) {
    Options o;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto take_value = [&](const char* flag) -> const std::string& {
            if (i + 1 == args.size()) throw CliError{exit_usage, std::string(flag) + " needs a value"};
            return args[++i];
        };
        if (a == "--max-states") o.max_states = parse_count(take_value("--max-states"), a);
        else if (a == "--max-len") o.max_len = parse_count(take_value("--max-len"), a);
        else if (a == "--horizon") o.horizon = parse_count(take_value("--horizon"), a);
        else if (a == "--basis") o.basis = take_value("--basis");
        else if (a == "--complete") o.complete = true;
        else if (a.rfind("--", 0) == 0) throw CliError{exit_usage, "unknown option " + a};
        else o.positional.push_back(a);
    }
    return o;
}

void expect_positional(const Options& o, std::size_t n, const char* what) {
    if (o.positional.size() != n)
        throw CliError{exit_usage, std::string("expected ") + what};
}

const Alphabet& alphabet_of(const Document& doc) {
    return std::visit(
        [](const auto& d) -> const Alphabet& {
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, Matrix>)
                throw CliError{exit_invalid, "matrix documents have no alphabet"};
            else
                return d.alphabet;
        },
        doc);
}

// wfa as-is; cdwa through the canonical embedding. Rejects wavs unless
// allow_linear_wavs, in which case a linear wavs goes through its witness.
Wfa as_wfa(const Document& doc, const std::string& path, bool allow_linear_wavs) {
    if (const Wfa* a = std::get_if<Wfa>(&doc)) return *a;
    if (const Cdwa* d = std::get_if<Cdwa>(&doc)) return to_wfa(*d);
    if (const Wavs* v = std::get_if<Wavs>(&doc)) {
        if (allow_linear_wavs) return to_wfa(*v); // throws LinearityError when nonlinear
        throw CliError{exit_invalid, path + ": expected a wfa or cdwa document, got wavs"};
    }
    throw CliError{exit_invalid, path + ": expected an automaton document, got matrix"};
}

int cmd_eval(const Options& o, std::ostream& out) {
    expect_positional(o, 2, "eval FILE WORD");
    Document doc = load_document(o.positional[0]);
    const Alphabet& alphabet = alphabet_of(doc);
    Word word = parse_word(alphabet, o.positional[1]);
    if (const Wfa* a = std::get_if<Wfa>(&doc)) {
        out << "behavior: " << rational_to_string(behavior(*a, word)) << "\n";
        out << "generated: " << rational_to_string(generated(*a, word)) << "\n";
    } else if (const Cdwa* d = std::get_if<Cdwa>(&doc)) {
        out << "behavior: " << rational_to_string(behavior(*d, word)) << "\n";
    } else {
        const Wavs& v = std::get<Wavs>(doc);
        out << "behavior: " << rational_to_string(behavior(v, word)) << "\n";
        out << "generated: " << rational_to_string(generated(v, word)) << "\n";
    }
    return exit_ok;
}

int cmd_nerode(const Options& o, std::ostream& out, std::ostream& err) {
    expect_positional(o, 1, "nerode FILE");
    Wfa a = as_wfa(load_document(o.positional[0]), o.positional[0], false);
    NerodeResult r = nerode(a, o.max_states.value_or(10000));
    err << "status: " << (r.status == ClosureStatus::complete ? "complete" : "budget-exhausted")
        << "\n";
    err << "states: " << r.explored << (r.status == ClosureStatus::complete ? "" : "+") << "\n";
    for (std::size_t i = 0; i < r.witness_words.size(); ++i)
        err << "state " << i << ": witness " << format_word(a.alphabet, r.witness_words[i]) << "\n";
    if (r.status != ClosureStatus::complete) return exit_exhausted;
    out << serialize(*r.automaton);
    return exit_ok;
}

int cmd_linearity(const Options& o, std::ostream& out) {
    expect_positional(o, 1, "linearity FILE");
    Document doc = load_document(o.positional[0]);
    const Wavs* v = std::get_if<Wavs>(&doc);
    if (!v)
        throw CliError{exit_invalid,
                       o.positional[0] + ": linearity expects a wavs document, got " +
                           std::string(kind_name(doc))};
    LinearityReport report = linearity_check(*v);
    out << format_report(report);
    return report.linear ? exit_ok : exit_negative;
}

int cmd_to_wfa(const Options& o, std::ostream& out, std::ostream& err) {
    expect_positional(o, 1, "to-wfa FILE");
    Document doc = load_document(o.positional[0]);
    if (std::get_if<Matrix>(&doc))
        throw CliError{exit_invalid, o.positional[0] + ": expected an automaton document"};
    try {
        Wfa a = as_wfa(doc, o.positional[0], true);
        out << serialize(a);
        return exit_ok;
    } catch (const LinearityError& e) {
        err << format_report(e.report);
        return exit_negative;
    }
}

int cmd_from_cdwa(const Options& o, std::ostream& out) {
    expect_positional(o, 1, "from-cdwa FILE");
    Document doc = load_document(o.positional[0]);
    const Cdwa* d = std::get_if<Cdwa>(&doc);
    if (!d)
        throw CliError{exit_invalid, o.positional[0] + ": from-cdwa expects a cdwa document, got " +
                                         std::string(kind_name(doc))};
    std::optional<std::vector<Vector>> basis;
    if (o.basis) {
        try {
            basis = parse_vector_list(read_file(*o.basis));
        } catch (const ParseError& e) {
            throw CliError{exit_invalid, *o.basis + ": " + e.what()};
        } catch (const ValidationError& e) {
            throw CliError{exit_invalid, *o.basis + ": " + e.what()};
        }
    }
    out << serialize(to_wavs(*d, basis));
    return exit_ok;
}

int cmd_derivative(const Options& o, std::ostream& out, std::ostream& err) {
    expect_positional(o, 1, "derivative FILE");
    Document doc = load_document(o.positional[0]);
    try {
        Wfa a = as_wfa(doc, o.positional[0], true);
        DerivativeAutomaton r = derivative_automaton(a, o.max_states.value_or(10000));
        err << "status: "
            << (r.status == ClosureStatus::complete ? "complete" : "budget-exhausted") << "\n";
        err << "derivatives found: " << r.explored
            << (r.status == ClosureStatus::complete ? "" : "+") << "\n";
        for (std::size_t i = 0; i < r.representatives.size() && r.status == ClosureStatus::complete;
             ++i)
            err << "state " << i << ": f_" << format_word(a.alphabet, r.representatives[i]) << "\n";
        if (r.status != ClosureStatus::complete) return exit_exhausted;
        out << serialize(*r.automaton);
        return exit_ok;
    } catch (const LinearityError& e) {
        err << format_report(e.report);
        return exit_negative;
    }
}

int cmd_prefix_closure(const Options& o, std::ostream& out, std::ostream& err) {
    expect_positional(o, 2, "prefix-closure FILE WORD");
    Document doc = load_document(o.positional[0]);
    try {
        Wfa a = as_wfa(doc, o.positional[0], true);
        Word word = parse_word(a.alphabet, o.positional[1]);
        NerodeResult nr = nerode(a, o.max_states.value_or(10000));
        PrefixClosureValue v = prefix_closure(a, word, nr, o.horizon.value_or(12));
        if (v.exact) {
            out << "exact " << rational_to_string(v.value) << "\n";
            return exit_ok;
        }
        out << "lower-bound " << rational_to_string(v.value) << "\n";
        err << "Nerode closure exhausted its budget; value is a lower bound over suffixes of "
               "length <= "
            << o.horizon.value_or(12) << "\n";
        return exit_exhausted;
    } catch (const LinearityError& e) {
        err << format_report(e.report);
        return exit_negative;
    }
}

int cmd_equiv(const Options& o, std::ostream& out) {
    expect_positional(o, 2, "equiv FILE1 FILE2");
    Document da = load_document(o.positional[0]);
    Document db = load_document(o.positional[1]);
    auto to_any = [](const Document& d, const std::string& path) -> oracle::AnyAutomaton {
        if (const Wfa* a = std::get_if<Wfa>(&d)) return *a;
        if (const Cdwa* c = std::get_if<Cdwa>(&d)) return *c;
        if (const Wavs* v = std::get_if<Wavs>(&d)) return *v;
        throw CliError{exit_invalid, path + ": expected an automaton document, got matrix"};
    };
    const std::size_t max_len = o.max_len.value_or(8);
    oracle::AnyAutomaton a = to_any(da, o.positional[0]);
    oracle::AnyAutomaton b = to_any(db, o.positional[1]);
    oracle::CompleteEquivResult r = oracle::complete_equiv_bounded(a, b, max_len, o.complete);
    if (r.equal) {
        out << (o.complete ? "completely equal" : "equal") << " (all words of length <= "
            << max_len << ")\n";
        return exit_ok;
    }
    const Alphabet& alphabet =
        std::visit([](const auto& m) -> const Alphabet& { return m.alphabet; }, a);
    out << (r.which == oracle::Differs::behavior ? "behavior" : "generated")
        << " differs at: " << format_word(alphabet, r.counterexample) << "\n";
    return exit_negative;
}

int cmd_rref(const Options& o, std::ostream& out, std::ostream& err) {
    expect_positional(o, 1, "rref FILE");
    Document doc = load_document(o.positional[0]);
    const Matrix* m = std::get_if<Matrix>(&doc);
    if (!m)
        throw CliError{exit_invalid, o.positional[0] + ": rref expects a matrix document, got " +
                                         std::string(kind_name(doc))};
    Matrix r = rref(*m);
    out << serialize(r);
    err << "RREF:\n" << format_matrix(r, {}, "  ");
    err << "rank: " << rank(*m) << "\n";
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        (args.empty() ? err : out) << usage_text;
        return args.empty() ? exit_usage : exit_ok;
    }
    const std::string& command = args[0];
    try {
        Options o = parse_options(args, 1);
        if (command == "eval") return cmd_eval(o, out);
        if (command == "nerode") return cmd_nerode(o, out, err);
        if (command == "linearity") return cmd_linearity(o, out);
        if (command == "to-wfa") return cmd_to_wfa(o, out, err);
        if (command == "from-cdwa") return cmd_from_cdwa(o, out);
        if (command == "derivative") return cmd_derivative(o, out, err);
        if (command == "prefix-closure") return cmd_prefix_closure(o, out, err);
        if (command == "equiv") return cmd_equiv(o, out);
        if (command == "rref") return cmd_rref(o, out, err);
        err << "unknown command \"" << command << "\"\n" << usage_text;
        return exit_usage;
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const AlphabetError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}

} // namespace rwa
