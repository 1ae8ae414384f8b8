#include "shicone/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace shicone {

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("polynomials live in rings with different variable counts");
}

}  // namespace

NotDivisibleError::NotDivisibleError(std::string msg, Poly remainder)
    : std::runtime_error(std::move(msg)), remainder_(std::make_shared<Poly>(std::move(remainder))) {}

NotDivisibleError::~NotDivisibleError() = default;

Poly Poly::constant(const Rational& c, std::size_t nvars) {
    Poly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars), c);
    return p;
}

Poly Poly::variable(std::size_t var, std::size_t nvars) {
    Poly p(nvars);
    p.terms_.emplace(Monomial::unit(nvars, var), Rational(1));
    return p;
}

Poly Poly::from_terms(std::size_t nvars, const std::vector<std::pair<Monomial, Rational>>& terms) {
    Poly p(nvars);
    for (const auto& [m, c] : terms) {
        if (m.nvars() != nvars) throw std::invalid_argument("Poly::from_terms: monomial arity mismatch");
        auto it = p.terms_.find(m);
        if (it == p.terms_.end()) {
            if (c != 0) p.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) p.terms_.erase(it);
        }
    }
    return p;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(*this, o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_ring(*this, o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(*this, o);
    Poly r(nvars_);
    if (terms_.empty() || o.terms_.empty()) return r;

    // Accumulate unordered, then rebuild the canonical map once.
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() + o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            auto [it, fresh] = acc.try_emplace(ma * mb);
            if (fresh)
                it->second = ca * cb;
            else
                it->second += ca * cb;
        }
    }
    while (!acc.empty()) {
        auto node = acc.extract(acc.begin());
        if (node.mapped() != 0) r.terms_.emplace(std::move(node.key()), std::move(node.mapped()));
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    Poly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("Poly::evaluate: point dimension mismatch");
    // Powers computed incrementally per variable.
    std::vector<std::vector<Rational>> pows(nvars_, std::vector<Rational>{Rational(1)});
    auto power = [&](std::size_t v, int e) -> const Rational& {
        auto& tab = pows[v];
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * point[v]);
        return tab[e];
    };
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < nvars_; ++v) {
            int e = m.exponent(v);
            if (e != 0) t *= power(v, e);
        }
        sum += t;
    }
    return sum;
}

Poly pow(const Poly& p, unsigned e) {
    Poly result = Poly::constant(Rational(1), p.nvars());
    Poly base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

Poly derivative(const Poly& p, std::size_t var) {
    if (var >= p.nvars()) throw std::out_of_range("derivative: variable index out of range");
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<std::size_t>(var)] = e - 1;
        terms.emplace_back(Monomial(std::move(exps)), c * e);
    }
    return Poly::from_terms(p.nvars(), terms);
}

PolyDivision divide(const Poly& p, const Poly& d) {
    require_same_ring(p, d);
    if (d.is_zero()) throw DivisionByZeroPolyError();

    const auto& lt_it = *d.terms_.rbegin();
    const Monomial& lt_mono = lt_it.first;
    const Rational& lt_coeff = lt_it.second;

    Poly quotient(p.nvars());
    Poly remainder(p.nvars());
    Poly::TermMap work = p.terms_;

    while (!work.empty()) {
        auto lead = std::prev(work.end());
        if (lt_mono.divides(lead->first)) {
            Monomial qm = lt_mono.quotient_of(lead->first);
            Rational qc = lead->second / lt_coeff;
            quotient.terms_.emplace(qm, qc);
            // work -= (qc * qm) * d; the leading term cancels exactly.
            for (const auto& [dm, dc] : d.terms_) {
                Monomial m = qm * dm;
                Rational delta = qc * dc;
                auto it = work.find(m);
                if (it == work.end()) {
                    work.emplace(std::move(m), -delta);
                } else {
                    it->second -= delta;
                    if (it->second == 0) work.erase(it);
                }
            }
        } else {
            remainder.terms_.emplace(lead->first, lead->second);
            work.erase(lead);
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

std::optional<Poly> try_exact_divide(const Poly& p, const Poly& d) {
    PolyDivision div = divide(p, d);
    if (!div.remainder.is_zero()) return std::nullopt;
    return std::move(div.quotient);
}

Poly exact_divide(const Poly& p, const Poly& d) {
    PolyDivision div = divide(p, d);
    if (!div.remainder.is_zero())
        throw NotDivisibleError("exact_divide: nonzero remainder", std::move(div.remainder));
    return std::move(div.quotient);
}

Poly substitute(const Poly& p, const std::map<std::size_t, Poly>& assignments) {
    for (const auto& [var, value] : assignments) {
        if (var >= p.nvars()) throw std::out_of_range("substitute: unknown variable index");
        if (value.nvars() != p.nvars())
            throw std::invalid_argument("substitute: assignment lives in a different ring");
    }
    if (assignments.empty()) return p;

    // Power tables for the substituted values, grown on demand.
    std::map<std::size_t, std::vector<Poly>> pows;
    auto power = [&](std::size_t var, int e) -> const Poly& {
        auto& tab = pows.try_emplace(var, std::vector<Poly>{Poly::constant(Rational(1), p.nvars())})
                        .first->second;
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * assignments.at(var));
        return tab[static_cast<std::size_t>(e)];
    };

    Poly result(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> kept = m.exponents();
        Poly factor = Poly::constant(c, p.nvars());
        for (const auto& [var, value] : assignments) {
            int e = kept[var];
            if (e == 0) continue;
            kept[var] = 0;
            factor *= power(var, e);
        }
        result += factor * Poly::from_terms(p.nvars(), {{Monomial(std::move(kept)), Rational(1)}});
    }
    return result;
}

Poly elementary_symmetric(unsigned k, std::span<const Poly> args, std::size_t nvars) {
    for (const Poly& a : args)
        if (a.nvars() != nvars)
            throw std::invalid_argument("elementary_symmetric: argument ring mismatch");
    if (k > args.size()) return Poly(nvars);
    // e[j] after processing i args = sigma_j of those args.
    std::vector<Poly> e;
    e.reserve(k + 1);
    e.push_back(Poly::constant(Rational(1), nvars));
    for (unsigned j = 1; j <= k; ++j) e.push_back(Poly(nvars));
    for (const Poly& a : args) {
        for (unsigned j = k; j >= 1; --j) {
            e[j] += e[j - 1] * a;
        }
    }
    return e[k];
}

}  // namespace shicone
