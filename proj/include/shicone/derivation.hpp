#pragma once

// Derivations of the polynomial ring in x_1..x_l, z, stored as coefficient
// vectors: theta = z_coeff * d/dz + sum_i x_coeffs[i] * d/dx_{i+1}.
//
// Besides the Euler derivation this module builds, for each 1 <= j <= l,
// the degree-2l derivation phi_j whose d/dx_i coefficient is
//
//   (-1)^j  sum_{N1,N2 disjoint subsets of {x_1..x_{j-1}}}
//             (prod_{t in N1} x_t^2) (prod_{t in N2} (-x_t z))
//           sum_{k2 in {0,1}, 0 <= k3 <= l-j}
//             (-1)^{k2+k3} sigma_{k2}(x_j) sigma_{k3}(x_{j+1}^2..x_l^2)
//             Bbar_{r,s}(x_i, z)
//
// with r = 2l - 2j - k2 - 2k3 + 2 and s = (j-1) - |N1| - |N2|, where Bbar
// is the homogenized Bernoulli-like polynomial of the chosen family.

#include "shicone/bernoulli.hpp"
#include "shicone/poly.hpp"

#include <string>
#include <vector>

namespace shicone {

struct Derivation {
    std::string label;
    Poly z_coeff;
    std::vector<Poly> x_coeffs;

    std::size_t nvars() const { return x_coeffs.size() + 1; }
    int rank() const { return static_cast<int>(x_coeffs.size()); }

    bool operator==(const Derivation& o) const {
        return z_coeff == o.z_coeff && x_coeffs == o.x_coeffs;
    }
};

// theta_E = z d/dz + sum x_i d/dx_i.
Derivation euler_derivation(int rank);

// Action on a polynomial.
Poly apply(const Derivation& d, const Poly& p);

// phi_j by direct enumeration of the 3^{j-1} disjoint pairs (N1, N2).
Derivation phi(Family family, int j, int rank);

// Same derivation with the (N1, N2) sum grouped through the generating
// function prod_{t<j} (x_t^2 - x_t z + y): the prefactor of the s-kernel is
// the coefficient of y^s. Independent evaluation path used for cross-checks.
Derivation phi_generating_function(Family family, int j, int rank);

// Closed form of phi_j^B restricted to z = 0:
//   x_j sum_{k=0}^{l-1} (-1)^k sigma_k(x_1^2..x_l^2 omitting x_j^2)
//       sum_i x_i^{2l-2k-1}/(2l-2k-1) d/dx_i.
// The C-family restriction is exactly twice this.
Derivation solomon_terao_restriction(int j, int rank);

// Coefficient-wise substitution z = 0.
Derivation restrict_z(const Derivation& d);

// Scalar multiple (label preserved).
Derivation scale(const Derivation& d, const Rational& c);

// Common total degree of the coefficients; empty for the zero derivation.
std::optional<int> derivation_degree(const Derivation& d);

}  // namespace shicone
