#include "shicone/bernoulli.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace shicone {

namespace {

void validate(const BernoulliKey& key) {
    if (key.r < 1) throw std::invalid_argument("BernoulliKey: r must be >= 1");
    if (key.s < 0) throw std::invalid_argument("BernoulliKey: s must be >= 0");
}

// C(x, m) = x(x-1)...(x-m+1) / m!
UniPoly binomial_poly(int m) {
    UniPoly p = UniPoly::constant(Rational(1));
    Rational factorial(1);
    for (int t = 0; t < m; ++t) {
        p = p * UniPoly({Rational(-t), Rational(1)});
        factorial *= (t + 1);
    }
    return p * (Rational(1) / factorial);
}

}  // namespace

Family family_from_string(const std::string& s) {
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    throw std::invalid_argument("family must be 'B' or 'C'");
}

UniPoly difference_rhs(const BernoulliKey& key) {
    validate(key);
    const UniPoly x_plus_1({Rational(1), Rational(1)});
    const UniPoly minus_x({Rational(0), Rational(-1)});
    const unsigned r = static_cast<unsigned>(key.r);
    const unsigned s = static_cast<unsigned>(key.s);
    const UniPoly tail = pow(x_plus_1, s) * pow(minus_x, s);
    if (key.family == Family::B) {
        // ((x+1)^r - (-x)^r) / (2x+1); the quotient is always a polynomial.
        UniPoly num = pow(x_plus_1, r) - pow(minus_x, r);
        UniDivision div = divide(num, UniPoly({Rational(1), Rational(2)}));
        if (!div.remainder.is_zero())
            throw std::logic_error("difference_rhs: (x+1)^r - (-x)^r not divisible by 2x+1");
        return div.quotient * tail;
    }
    return (pow(x_plus_1, r - 1) + pow(minus_x, r - 1)) * tail;
}

UniPoly solve_difference(const UniPoly& g) {
    if (g.is_zero()) return UniPoly();
    const int d = *g.degree();
    // Forward differences of g at 0.
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) row.push_back(g.evaluate(Rational(n)));
    UniPoly f;
    for (int k = 0; k <= d; ++k) {
        if (row[0] != 0) f = f + binomial_poly(k + 1) * row[0];
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
    return f;
}

UniPoly bernoulli(const BernoulliKey& key) {
    validate(key);
    static std::map<BernoulliKey, UniPoly> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    UniPoly b = solve_difference(difference_rhs(key));
    const int expected = key.r % 2 == 1 ? key.r + 2 * key.s : key.r + 2 * key.s - 1;
    if (!b.degree() || *b.degree() != expected)
        throw std::logic_error("bernoulli: degree formula violated");
    std::lock_guard lock(mutex);
    return cache.try_emplace(key, std::move(b)).first->second;
}

Poly homogenize(const BernoulliKey& key, std::size_t x_slot, std::size_t nvars) {
    validate(key);
    if (nvars < 2 || x_slot + 1 >= nvars)
        throw std::out_of_range("homogenize: x slot must precede the z slot");
    const UniPoly b = bernoulli(key);
    const int total = key.r + 2 * key.s;
    const std::size_t z_slot = nvars - 1;
    std::vector<std::pair<Monomial, Rational>> terms;
    for (std::size_t d = 0; d < b.coefficients().size(); ++d) {
        const Rational& c = b.coefficients()[d];
        if (c == 0) continue;
        std::vector<int> exps(nvars, 0);
        exps[x_slot] = static_cast<int>(d);
        exps[z_slot] = total - static_cast<int>(d);
        terms.emplace_back(Monomial(std::move(exps)), c);
    }
    return Poly::from_terms(nvars, terms);
}

UniPoly restrict_z0(const BernoulliKey& key) {
    validate(key);
    if (key.r % 2 == 0) return UniPoly();
    const int total = key.r + 2 * key.s;
    Rational c = Rational(1) / total;
    if (key.s % 2 == 1) c = -c;
    if (key.family == Family::C) c *= 2;
    return UniPoly::monomial(c, static_cast<unsigned>(total));
}

}  // namespace shicone
