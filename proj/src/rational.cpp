#include "polyflag/rational.hpp"

#include <cctype>

#include "polyflag/exceptions.hpp"

namespace polyflag {

int sgn(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

std::string rat_to_string(const Rational& r) {
    // mpq str() already prints "p/q" or "p"; it is canonical because every
    // value we produce goes through canonicalizing operations.
    return r.str();
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_integer_token(text))
            throw ParseError("invalid rational '" + std::string(text) + "'", 1,
                             1);
        return Rational(Integer{std::string(text)});
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw ParseError("invalid rational '" + std::string(text) + "'", 1, 1);
    Integer numerator_part{std::string(num)};
    Integer denominator_part{std::string(den)};
    if (denominator_part == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'", 1,
                         1);
    // The two-argument constructor canonicalizes (lowest terms, positive
    // denominator); the string constructor does not, so we avoid it.
    return Rational(numerator_part, denominator_part);
}

std::string vec_to_string(const RatVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_to_string(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace polyflag
