#include "rwa/rational.hpp"

#include "rwa/errors.hpp"

#include <cctype>
#include <sstream>

namespace rwa {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }

    auto fail = [&]() -> Rational {
        throw ParseError("not a rational literal: \"" + text + "\"");
    };

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        Integer d(den);
        if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
        value = Rational(Integer(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(frac)) return fail();
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(Integer(whole) * scale + Integer(frac), scale);
    } else {
        if (!all_digits(s)) return fail();
        value = Rational(Integer(s));
    }
    return negative ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r; // prints "p/q", or "p" when the denominator is 1
    return os.str();
}

} // namespace rwa
