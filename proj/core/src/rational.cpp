#include "hncomb/rational.hpp"

#include "hncomb/errors.hpp"

#include <sstream>

namespace hncomb {

namespace {

Int parse_int(const std::string& text) {
    if (text.empty())
        throw ParseError("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw ParseError("bad integer literal '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("bad integer literal '" + text + "'");
    return Int(text);
}

}  // namespace

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den <= 0)
        throw ParseError("denominator must be a positive integer in '" + text + "'");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& value) {
    // cpp_rational keeps values reduced with a positive denominator.
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Int rat_floor(const Rat& value) {
    Int num = numerator(value);
    Int den = denominator(value);
    Int q = num / den;  // truncates toward zero
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

Int rat_ceil(const Rat& value) { return -rat_floor(-value); }

bool is_integer(const Rat& value) { return denominator(value) == 1; }

std::string vec_to_string(const RatVec& values, char separator) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out << separator;
        out << rat_to_string(values[i]);
    }
    return out.str();
}

}  // namespace hncomb
