#include "shicone/rootsystem.hpp"

#include <sstream>
#include <stdexcept>

namespace shicone {

LinearForm::LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    std::size_t first = coeffs_.size();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            first = i;
            break;
        }
    }
    if (first == coeffs_.size()) throw std::invalid_argument("LinearForm: all coefficients are zero");
    if (coeffs_[first] < 0)
        for (auto& c : coeffs_) c = -c;
}

Poly LinearForm::to_poly() const {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) terms.emplace_back(Monomial::unit(coeffs_.size(), i), coeffs_[i]);
    return Poly::from_terms(coeffs_.size(), terms);
}

LinearForm LinearForm::monic() const {
    Rational lead(0);
    for (const auto& c : coeffs_)
        if (c != 0) {
            lead = c;
            break;
        }
    std::vector<Rational> scaled(coeffs_);
    for (auto& c : scaled) c /= lead;
    return LinearForm(std::move(scaled));
}

Rational LinearForm::evaluate(std::span<const Rational> point) const {
    if (point.size() != coeffs_.size())
        throw std::invalid_argument("LinearForm::evaluate: point dimension mismatch");
    Rational sum(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) sum += coeffs_[i] * point[i];
    return sum;
}

std::string LinearForm::to_string() const {
    std::ostringstream out;
    bool first = true;
    const std::size_t z_slot = coeffs_.size() - 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const std::string var = (i == z_slot) ? "z" : "x" + std::to_string(i + 1);
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            out << (c < 0 ? "-" : "");
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << rational_to_text(mag) << "*";
        out << var;
    }
    return out.str();
}

bool proportional(const LinearForm& a, const LinearForm& b) {
    return a.nvars() == b.nvars() && a.monic() == b.monic();
}

std::vector<LinearForm> positive_roots(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("positive_roots: rank must be >= 1");
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    std::vector<LinearForm> roots;
    roots.reserve(static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank));
    const Rational short_coeff = family == Family::B ? Rational(1) : Rational(2);
    for (int i = 0; i < rank; ++i) {
        std::vector<Rational> c(n, Rational(0));
        c[static_cast<std::size_t>(i)] = short_coeff;
        roots.emplace_back(std::move(c));
    }
    for (int sign : {-1, +1}) {
        for (int p = 0; p < rank; ++p) {
            for (int q = p + 1; q < rank; ++q) {
                std::vector<Rational> c(n, Rational(0));
                c[static_cast<std::size_t>(p)] = 1;
                c[static_cast<std::size_t>(q)] = sign;
                roots.emplace_back(std::move(c));
            }
        }
    }
    return roots;
}

Arrangement shi_cone(Family family, int rank) {
    if (rank < 1) throw std::invalid_argument("shi_cone: rank must be >= 1");
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    Arrangement a{family, rank, {}, 2 * rank};
    std::vector<Rational> zc(n, Rational(0));
    zc[n - 1] = 1;
    a.forms.emplace_back(std::move(zc));
    const std::vector<LinearForm> roots = positive_roots(family, rank);
    for (const LinearForm& alpha : roots) a.forms.push_back(alpha);
    for (const LinearForm& alpha : roots) {
        std::vector<Rational> c = alpha.coefficients();
        c[n - 1] -= 1;
        a.forms.emplace_back(std::move(c));
    }
    return a;
}

Poly defining_poly(const Arrangement& a) {
    const std::size_t n = static_cast<std::size_t>(a.rank) + 1;
    Poly q = Poly::constant(Rational(1), n);
    for (const LinearForm& f : a.forms) q *= f.to_poly();
    return q;
}

}  // namespace shicone
