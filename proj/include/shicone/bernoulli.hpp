#pragma once

// The Bernoulli-like polynomials at the heart of the basis construction.
// For each family there is a unique polynomial B_{r,s} with B_{r,s}(0) = 0
// and prescribed first difference B_{r,s}(x+1) - B_{r,s}(x):
//
//   family B:  ((x+1)^r - (-x)^r) / ((x+1) - (-x)) * (x+1)^s (-x)^s
//   family C:  ((x+1)^{r-1} + (-x)^{r-1}) * (x+1)^s (-x)^s
//
// B_{r,s} is odd, of degree r+2s when r is odd and r+2s-1 when r is even.

#include "shicone/poly.hpp"
#include "shicone/unipoly.hpp"

#include <string>

namespace shicone {

enum class Family { B, C };

inline char family_letter(Family f) { return f == Family::B ? 'B' : 'C'; }
Family family_from_string(const std::string& s);

struct BernoulliKey {
    Family family;
    int r;  // >= 1
    int s;  // >= 0

    auto operator<=>(const BernoulliKey&) const = default;
};

// Right-hand side of the defining difference equation.
UniPoly difference_rhs(const BernoulliKey& key);

// The unique polynomial F with F(x+1) - F(x) = g and F(0) = 0, computed in
// the binomial-coefficient basis: if g = sum_k g_k C(x,k) with
// g_k = (Delta^k g)(0), then F = sum_k g_k C(x,k+1).
UniPoly solve_difference(const UniPoly& g);

// B_{r,s} for the given key (memoized).
UniPoly bernoulli(const BernoulliKey& key);

// Homogenization z^{r+2s} B_{r,s}(x/z), emitted into the nvars-variable
// ring with x at slot x_slot and z at the last slot.
Poly homogenize(const BernoulliKey& key, std::size_t x_slot, std::size_t nvars);

// Closed form of the homogenization restricted to z = 0:
// family B gives (-1)^s x^{r+2s}/(r+2s) for odd r and 0 for even r;
// family C gives exactly twice that.
UniPoly restrict_z0(const BernoulliKey& key);

}  // namespace shicone
