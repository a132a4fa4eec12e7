#include "raagpl/rational.hpp"

#include <cctype>

#include "raagpl/errors.hpp"

namespace raagpl {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto bad = [&] { throw input_error("bad rational literal: '" + text + "'"); };
    size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    const size_t slash = text.find('/');
    if (slash == std::string::npos) {
        if (!all_digits(text, start, text.size())) bad();
        return Rational(BigInt(text));
    }
    if (!all_digits(text, start, slash)) bad();
    if (!all_digits(text, slash + 1, text.size())) bad();
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace raagpl
