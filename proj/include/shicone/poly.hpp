#pragma once

// Sparse multivariate polynomials over Rational in a fixed variable ring.
// Convention used throughout the project: a ring with n variables holds
// x_1 .. x_{n-1} at slots 0 .. n-2 and the homogenizing variable z at the
// last slot. Values are immutable in spirit: every operation returns a
// new canonical polynomial (no stored zero coefficients).

#include "shicone/monomial.hpp"
#include "shicone/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace shicone {

class Poly;
struct PolyDivision;

// Exact division failed; carries the division remainder as the witness.
class NotDivisibleError : public std::runtime_error {
public:
    NotDivisibleError(std::string msg, Poly remainder);
    ~NotDivisibleError() override;
    const Poly& remainder() const { return *remainder_; }

private:
    std::shared_ptr<Poly> remainder_;
};

class DivisionByZeroPolyError : public std::invalid_argument {
public:
    DivisionByZeroPolyError() : std::invalid_argument("division by the zero polynomial") {}
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, DegLexLess>;

    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(const Rational& c, std::size_t nvars);
    static Poly variable(std::size_t var, std::size_t nvars);
    // Builds the canonical form: merges duplicate monomials, drops zeros.
    static Poly from_terms(std::size_t nvars, const std::vector<std::pair<Monomial, Rational>>& terms);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_coefficient() const { return coefficient(Monomial(nvars_)); }

    // Max total degree over the terms; empty for the zero polynomial.
    std::optional<int> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first.total_degree();
    }
    // The zero polynomial is homogeneous of every degree.
    bool is_homogeneous(int degree) const {
        for (const auto& [m, c] : terms_)
            if (m.total_degree() != degree) return false;
        return true;
    }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly operator*(const Rational& c) const;
    friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational evaluate(std::span<const Rational> point) const;

private:
    friend PolyDivision divide(const Poly& p, const Poly& d);
    std::size_t nvars_;
    TermMap terms_;
};

Poly pow(const Poly& p, unsigned e);

// d/d(var).
Poly derivative(const Poly& p, std::size_t var);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

// Multivariate division by a single divisor with respect to the degree-lex
// term order. p = quotient * d + remainder, and no term of the remainder is
// divisible by the leading term of d. When d | p the remainder is zero and
// the quotient is the unique exact quotient.
PolyDivision divide(const Poly& p, const Poly& d);

// Quotient if d | p, otherwise empty.
std::optional<Poly> try_exact_divide(const Poly& p, const Poly& d);

// Quotient if d | p, otherwise throws NotDivisibleError carrying the remainder.
Poly exact_divide(const Poly& p, const Poly& d);

// Simultaneous substitution of polynomials for the given variable slots.
Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& assignments);

// sigma_k of the arguments; sigma_0 = 1, sigma_k = 0 for k > args.size().
Poly elementary_symmetric(unsigned k, std::span<const Poly> args, std::size_t nvars);

}  // namespace shicone
