#include "groupchar/rational.hpp"

#include "groupchar/errors.hpp"

namespace groupchar {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Rational rational_from_string(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) {
            throw ValidationError("rational with zero denominator: " + s);
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw ValidationError("malformed rational literal: " + s);
    }
}

}  // namespace groupchar
