#include "shicone/unipoly.hpp"

#include <stdexcept>

namespace shicone {

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return UniPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::shifted_argument(const Rational& a) const {
    // Horner in the shifted variable: p(x+a) = (...((c_n)(x+a) + c_{n-1})(x+a) + ...).
    UniPoly shift({a, Rational(1)});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * shift + UniPoly::constant(*it);
    return acc;
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly result = UniPoly::constant(Rational(1));
    UniPoly base = p;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

UniDivision divide(const UniPoly& p, const UniPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("UniPoly divide: division by zero");
    std::vector<Rational> rem(p.coefficients());
    const auto& dc = d.coefficients();
    const std::size_t dn = dc.size();
    if (rem.size() < dn) return {UniPoly(), p};
    std::vector<Rational> quot(rem.size() - dn + 1, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dn - 1] / dc.back();
        if (q == 0) continue;
        quot[k] = q;
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * dc[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_divide(const UniPoly& p, const UniPoly& d) {
    UniDivision div = divide(p, d);
    if (!div.remainder.is_zero())
        throw std::domain_error("UniPoly exact_divide: nonzero remainder");
    return div.quotient;
}

}  // namespace shicone
