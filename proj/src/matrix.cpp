#include "shicone/matrix.hpp"

#include <cstdint>
#include <stdexcept>

namespace shicone {

namespace {

std::size_t validate(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    const std::size_t nvars = m[0].empty() ? 0 : m[0][0].nvars();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("det: matrix is not square");
        for (const Poly& p : row)
            if (p.nvars() != nvars) throw std::invalid_argument("det: mixed variable counts");
    }
    return nvars;
}

}  // namespace

Poly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.size();
    const std::size_t nvars = validate(m);
    // dp[mask] = det of the submatrix on rows in `mask` and the first
    // popcount(mask) columns; built one column at a time.
    std::vector<Poly> dp(std::size_t{1} << n, Poly(nvars));
    dp[0] = Poly::constant(Rational(1), nvars);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask);
        Poly acc(nvars);
        int pos = 0;  // index of the row within the sorted subset
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            const Poly& entry = m[i][static_cast<std::size_t>(k - 1)];
            if (!entry.is_zero()) {
                Poly contrib = entry * dp[mask & ~(1u << i)];
                if ((pos + k - 1) % 2 == 0)
                    acc += contrib;
                else
                    acc -= contrib;
            }
            ++pos;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(std::size_t{1} << n) - 1];
}

Poly det_bareiss(const PolyMatrix& input) {
    const std::size_t n = input.size();
    const std::size_t nvars = validate(input);
    PolyMatrix a = input;
    bool negate = false;
    Poly prev = Poly::constant(Rational(1), nvars);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Poly(nvars);  // singular
            std::swap(a[k], a[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = Poly(nvars);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Poly det(const PolyMatrix& m) {
    return m.size() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

}  // namespace shicone
