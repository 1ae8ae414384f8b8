#pragma once

// Executable certification of the basis claims at a chosen rank:
//  - membership of each derivation in D(S): theta(f) divisible by f for
//    every defining form f,
//  - the congruence relations satisfied by the homogenized Bernoulli-like
//    polynomials,
//  - Saito's criterion: det of the coefficient matrix equals a nonzero
//    constant multiple of the defining polynomial Q,
//  - the z = 0 restriction identity against the closed form.

#include "shicone/derivation.hpp"
#include "shicone/matrix.hpp"
#include "shicone/rootsystem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shicone {

struct FormCheck {
    LinearForm form;
    bool divides;
    Poly witness;  // quotient when divides, remainder otherwise
};

struct MembershipReport {
    std::string derivation_label;
    std::vector<FormCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.divides) return false;
        return true;
    }
};

// Divisibility of theta(f) by f for every form of the arrangement.
// Checked by substituting the zero locus of the form (solve for the pivot
// variable), with exact division as an independent second opinion; the two
// must agree.
MembershipReport check_membership(const Derivation& d, const Arrangement& a);

// Both congruence relations of the homogenized Bernoulli-like polynomials:
//   Bbar(x_p,z) + eps*Bbar(x_q,z) == 0                  mod (x_p + eps*x_q)
//   Bbar(x_p,z) + eps*Bbar(x_q,z) == (x_p + eps*x_q)*G  mod (x_p + eps*x_q - z)
// where G is (x_p^r - (eps x_q)^r)/(x_p - eps x_q) * (x_p eps x_q)^s for
// family B and (x_p^{r-1} + (eps x_q)^{r-1}) * (x_p eps x_q)^s for family C.
// p, q are 1-based; eps in {-1, 0, 1}; q is ignored when eps = 0.
bool congruence_check(Family family, int r, int s, int p, int q, int eps, int rank);

enum class SaitoMode { Exact, Probabilistic };

struct SaitoCertificate {
    SaitoMode mode;
    Rational constant_c;
    int degree_det = 0;
    int degree_q = 0;
    int trials = 0;          // probabilistic only
    std::uint64_t seed = 0;  // probabilistic only
    bool passed = false;
    std::string failure;  // "DegreeMismatch" / "NotProportional" when !passed
    std::optional<Poly> determinant;  // exact mode
    std::optional<Poly> q;            // exact mode
};

// Saito's criterion for |basis| = rank+1 derivations against the
// arrangement. Rows are the given derivations in order, columns
// (d/dz, d/dx_1, ..., d/dx_l). Exact mode expands the determinant and
// divides by Q; probabilistic mode compares det/Q at `trials` random
// integer points with coordinates in [-10^6, 10^6] (points on Q = 0 are
// resampled). Failures are reported in the certificate, not thrown.
SaitoCertificate saito_check(const std::vector<Derivation>& basis, const Arrangement& a,
                             SaitoMode mode, std::uint64_t seed = 0, int trials = 8);

struct VerificationReport {
    Family family;
    int rank;
    std::vector<MembershipReport> membership;
    bool restriction_identity = false;
    SaitoCertificate saito;

    bool passed() const {
        if (!restriction_identity || !saito.passed) return false;
        for (const auto& m : membership)
            if (!m.passed()) return false;
        return true;
    }
};

// Runs every check against a caller-supplied basis whose rows are
// (theta_E, phi_1, ..., phi_l) by convention; row i >= 1 is compared against
// the closed-form restriction of phi_i.
VerificationReport verify_basis(const Arrangement& a, const std::vector<Derivation>& basis,
                                SaitoMode mode, std::uint64_t seed = 0, int trials = 8);

// Builds the arrangement and the basis for the family/rank and verifies it.
VerificationReport full_verify(Family family, int rank, SaitoMode mode, std::uint64_t seed = 0,
                               int trials = 8);

}  // namespace shicone
