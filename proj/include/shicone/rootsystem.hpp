#pragma once

// Positive roots of B_l / C_l and the cone over the associated Shi
// arrangement: the linear forms {z} \cup {alpha} \cup {alpha - z} over the
// positive roots alpha, together with the defining polynomial
// Q = z * prod alpha (alpha - z).

#include "shicone/bernoulli.hpp"
#include "shicone/poly.hpp"
#include "shicone/rational.hpp"

#include <string>
#include <vector>

namespace shicone {

// A nonzero linear form in x_1..x_l, z. Stored with the first nonzero
// coefficient positive; scale is otherwise preserved (the C-family root
// 2x_i keeps its factor 2, which feeds into the constant multiple of Q).
class LinearForm {
public:
    explicit LinearForm(std::vector<Rational> coeffs);

    std::size_t nvars() const { return coeffs_.size(); }
    const Rational& coefficient(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Poly to_poly() const;
    // Scale-canonical representative (first nonzero coefficient 1).
    LinearForm monic() const;
    Rational evaluate(std::span<const Rational> point) const;

    bool operator==(const LinearForm& o) const { return coeffs_ == o.coeffs_; }

    // "x1 - x2 - z", "2x1", "z", ...
    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

bool proportional(const LinearForm& a, const LinearForm& b);

struct Arrangement {
    Family family;
    int rank;
    std::vector<LinearForm> forms;
    int coxeter_number;  // 2 * rank for both families
};

// The l^2 positive roots in deterministic order: the short/long roots
// x_i (B) or 2x_i (C) for i = 1..l, then x_p - x_q, then x_p + x_q, each
// over pairs p < q in lexicographic order.
std::vector<LinearForm> positive_roots(Family family, int rank);

// Forms [z] ++ [alpha] ++ [alpha - z] in positive_roots order.
Arrangement shi_cone(Family family, int rank);

// Product of all forms; homogeneous of degree 2*rank^2 + 1.
Poly defining_poly(const Arrangement& a);

}  // namespace shicone
