#pragma once

// Dense univariate polynomials over Rational, coefficients stored lowest
// degree first with a nonzero leading coefficient.

#include "shicone/rational.hpp"

#include <optional>
#include <vector>

namespace shicone {

class UniPoly {
public:
    UniPoly() = default;  // zero
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(const Rational& c, unsigned degree);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    Rational coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    friend UniPoly operator*(const Rational& c, const UniPoly& p) { return p * c; }

    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational evaluate(const Rational& x) const;

    // p(x + a).
    UniPoly shifted_argument(const Rational& a) const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

UniPoly pow(const UniPoly& p, unsigned e);

struct UniDivision {
    UniPoly quotient;
    UniPoly remainder;
};
UniDivision divide(const UniPoly& p, const UniPoly& d);

// Throws NotDivisibleError-style std::domain_error when the remainder is nonzero.
UniPoly exact_divide(const UniPoly& p, const UniPoly& d);

}  // namespace shicone
