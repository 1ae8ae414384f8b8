#pragma once

// Exact determinants of polynomial matrices. Everything stays in the
// polynomial ring: no rational-function intermediates.

#include "shicone/poly.hpp"

#include <vector>

namespace shicone {

using PolyMatrix = std::vector<std::vector<Poly>>;

// Cofactor expansion with memoization over row subsets (no divisions).
Poly det_cofactor(const PolyMatrix& m);

// Fraction-free Bareiss elimination; interior divisions are exact by the
// Sylvester identity.
Poly det_bareiss(const PolyMatrix& m);

// Cofactor expansion for n <= 4, Bareiss above that.
Poly det(const PolyMatrix& m);

}  // namespace shicone
