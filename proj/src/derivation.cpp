#include "shicone/derivation.hpp"

#include <stdexcept>

namespace shicone {

namespace {

void validate_index(int j, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (j < 1 || j > rank) throw std::out_of_range("derivation index j out of range");
}

std::string phi_label(Family family, int j, int rank) {
    return std::string("phi_") + family_letter(family) + "_j" + std::to_string(j) + "_l" +
           std::to_string(rank);
}

// sigma_{k3}(x_{j+1}^2, ..., x_l^2) for k3 = 0..l-j.
std::vector<Poly> tau_table(int j, int rank) {
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    std::vector<Poly> squares;
    for (int t = j; t < rank; ++t) {
        Poly xt = Poly::variable(static_cast<std::size_t>(t), n);
        squares.push_back(xt * xt);
    }
    std::vector<Poly> tau;
    for (int k3 = 0; k3 <= rank - j; ++k3)
        tau.push_back(elementary_symmetric(static_cast<unsigned>(k3), squares, n));
    return tau;
}

// The inner (k2, k3) double sum for fixed s, as a function of the x-slot i:
//   sum (-1)^{k2+k3} sigma_{k2}(x_j) tau_{k3} Bbar_{r,s}(x_i, z).
// r = 2l - 2j - k2 - 2k3 + 2 stays >= 1 on the whole index range.
std::vector<Poly> kernel_by_slot(Family family, int j, int rank, int s,
                                 const std::vector<Poly>& tau) {
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    const Poly xj = Poly::variable(static_cast<std::size_t>(j - 1), n);
    std::vector<Poly> kernel(static_cast<std::size_t>(rank), Poly(n));
    for (int k2 = 0; k2 <= 1; ++k2) {
        for (int k3 = 0; k3 <= rank - j; ++k3) {
            const int r = 2 * rank - 2 * j - k2 - 2 * k3 + 2;
            if (r < 1 || s < 0) throw std::logic_error("phi: index bookkeeping violated");
            Poly outer = k2 == 0 ? tau[static_cast<std::size_t>(k3)]
                                 : xj * tau[static_cast<std::size_t>(k3)];
            if ((k2 + k3) % 2 == 1) outer = -outer;
            for (int i = 0; i < rank; ++i) {
                kernel[static_cast<std::size_t>(i)] +=
                    outer * homogenize({family, r, s}, static_cast<std::size_t>(i), n);
            }
        }
    }
    return kernel;
}

}  // namespace

Derivation euler_derivation(int rank) {
    if (rank < 1) throw std::invalid_argument("euler_derivation: rank must be >= 1");
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    Derivation d{"theta_E", Poly::variable(n - 1, n), {}};
    for (int i = 0; i < rank; ++i) d.x_coeffs.push_back(Poly::variable(static_cast<std::size_t>(i), n));
    return d;
}

Poly apply(const Derivation& d, const Poly& p) {
    if (d.nvars() != p.nvars())
        throw std::invalid_argument("apply: derivation and polynomial ring mismatch");
    const std::size_t n = p.nvars();
    Poly result = d.z_coeff * derivative(p, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) result += d.x_coeffs[i] * derivative(p, i);
    return result;
}

Derivation phi(Family family, int j, int rank) {
    validate_index(j, rank);
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    const std::size_t z_slot = n - 1;
    const std::vector<Poly> tau = tau_table(j, rank);

    std::vector<std::vector<Poly>> kernels;  // indexed by s, then by x-slot
    for (int s = 0; s < j; ++s) kernels.push_back(kernel_by_slot(family, j, rank, s, tau));

    Derivation d{phi_label(family, j, rank), Poly(n), std::vector<Poly>(n - 1, Poly(n))};

    // Each t in {x_1..x_{j-1}} independently joins N1, N2 or neither.
    std::vector<int> choice(static_cast<std::size_t>(j - 1), 0);
    while (true) {
        Poly prefactor = Poly::constant(Rational(1), n);
        int excluded = 0;
        for (int t = 0; t < j - 1; ++t) {
            const Poly xt = Poly::variable(static_cast<std::size_t>(t), n);
            switch (choice[static_cast<std::size_t>(t)]) {
                case 0: ++excluded; break;                                       // outside N1 and N2
                case 1: prefactor *= xt * xt; break;                             // t in N1
                case 2: prefactor *= -(xt * Poly::variable(z_slot, n)); break;   // t in N2
            }
        }
        const auto& kernel = kernels[static_cast<std::size_t>(excluded)];
        for (int i = 0; i < rank; ++i)
            d.x_coeffs[static_cast<std::size_t>(i)] += prefactor * kernel[static_cast<std::size_t>(i)];

        int t = 0;
        while (t < j - 1 && choice[static_cast<std::size_t>(t)] == 2) choice[static_cast<std::size_t>(t++)] = 0;
        if (t == j - 1) break;
        ++choice[static_cast<std::size_t>(t)];
    }

    if (j % 2 == 1)
        for (Poly& c : d.x_coeffs) c = -c;
    return d;
}

Derivation phi_generating_function(Family family, int j, int rank) {
    validate_index(j, rank);
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    const std::size_t z_slot = n - 1;
    const std::vector<Poly> tau = tau_table(j, rank);

    // coeffs_y[s] = coefficient of y^s in prod_{t<j} (x_t^2 - x_t z + y).
    std::vector<Poly> coeffs_y{Poly::constant(Rational(1), n)};
    for (int t = 0; t < j - 1; ++t) {
        const Poly xt = Poly::variable(static_cast<std::size_t>(t), n);
        const Poly base = xt * xt - xt * Poly::variable(z_slot, n);
        std::vector<Poly> next(coeffs_y.size() + 1, Poly(n));
        for (std::size_t s = 0; s < coeffs_y.size(); ++s) {
            next[s] += coeffs_y[s] * base;
            next[s + 1] += coeffs_y[s];
        }
        coeffs_y = std::move(next);
    }

    Derivation d{phi_label(family, j, rank) + "_gf", Poly(n), std::vector<Poly>(n - 1, Poly(n))};
    for (int s = 0; s < j; ++s) {
        const std::vector<Poly> kernel = kernel_by_slot(family, j, rank, s, tau);
        for (int i = 0; i < rank; ++i)
            d.x_coeffs[static_cast<std::size_t>(i)] +=
                coeffs_y[static_cast<std::size_t>(s)] * kernel[static_cast<std::size_t>(i)];
    }
    if (j % 2 == 1)
        for (Poly& c : d.x_coeffs) c = -c;
    return d;
}

Derivation solomon_terao_restriction(int j, int rank) {
    validate_index(j, rank);
    const std::size_t n = static_cast<std::size_t>(rank) + 1;
    std::vector<Poly> squares_without_j;
    for (int t = 0; t < rank; ++t) {
        if (t == j - 1) continue;
        Poly xt = Poly::variable(static_cast<std::size_t>(t), n);
        squares_without_j.push_back(xt * xt);
    }
    const Poly xj = Poly::variable(static_cast<std::size_t>(j - 1), n);

    Derivation d{"xi_j" + std::to_string(j) + "_l" + std::to_string(rank), Poly(n),
                 std::vector<Poly>(n - 1, Poly(n))};
    for (int k = 0; k <= rank - 1; ++k) {
        const int e = 2 * rank - 2 * k - 1;
        Poly sigma = elementary_symmetric(static_cast<unsigned>(k), squares_without_j, n);
        Poly factor = xj * sigma * (Rational(1) / e);
        if (k % 2 == 1) factor = -factor;
        for (int i = 0; i < rank; ++i) {
            Poly xi_pow = pow(Poly::variable(static_cast<std::size_t>(i), n), static_cast<unsigned>(e));
            d.x_coeffs[static_cast<std::size_t>(i)] += factor * xi_pow;
        }
    }
    return d;
}

Derivation restrict_z(const Derivation& d) {
    const std::size_t n = d.nvars();
    const std::map<std::size_t, Poly> at_zero{{n - 1, Poly(n)}};
    Derivation r{d.label + "|z=0", substitute(d.z_coeff, at_zero), {}};
    for (const Poly& c : d.x_coeffs) r.x_coeffs.push_back(substitute(c, at_zero));
    return r;
}

Derivation scale(const Derivation& d, const Rational& c) {
    Derivation r{d.label, d.z_coeff * c, {}};
    for (const Poly& x : d.x_coeffs) r.x_coeffs.push_back(x * c);
    return r;
}

std::optional<int> derivation_degree(const Derivation& d) {
    std::optional<int> deg = d.z_coeff.total_degree();
    for (const Poly& c : d.x_coeffs) {
        auto cd = c.total_degree();
        if (!cd) continue;
        if (!deg || *cd > *deg) deg = cd;
    }
    return deg;
}

}  // namespace shicone
