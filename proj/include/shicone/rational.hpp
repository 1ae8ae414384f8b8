#pragma once

// Exact rational arithmetic used as the coefficient field everywhere.
// Backed by Boost.Multiprecision; values are always kept canonical
// (lowest terms, denominator > 0, zero is 0/1).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace shicone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" encoding (sign on the numerator, q >= 1, lowest terms).
// This is the form used in all JSON documents.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p" or "p/q"; normalizes to lowest terms.
inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(BigInt(std::string(s)));
        }
        BigInt num{std::string(s.substr(0, slash))};
        BigInt den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("rational_from_string: bad input '") +
                                    std::string(s) + "': " + e.what());
    }
}

// Human-readable form: "5", "-2/3".
inline std::string rational_to_text(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace shicone
