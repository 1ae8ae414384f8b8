#pragma once

// Monomial in a fixed number of variables: an exponent vector with the
// total degree cached. Ordered by total degree, ties broken
// lexicographically on the exponent vector (a strict total order
// compatible with multiplication).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace shicone {

class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}

    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)), degree_(0) {
        for (int e : exps_) {
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
            degree_ += e;
        }
    }

    static Monomial unit(std::size_t nvars, std::size_t var, int exp = 1) {
        if (var >= nvars) throw std::out_of_range("Monomial::unit: variable index out of range");
        Monomial m(nvars);
        m.exps_[var] = exp;
        m.degree_ = exp;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    int exponent(std::size_t var) const { return exps_.at(var); }
    int total_degree() const { return degree_; }
    const std::vector<int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
        r.degree_ += o.degree_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (degree_ > o.degree_) return false;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // Quotient monomial; caller guarantees divides(o) fails nowhere.
    Monomial quotient_of(const Monomial& numerator) const {
        Monomial r(numerator);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] -= exps_[i];
            if (r.exps_[i] < 0) throw std::invalid_argument("Monomial: quotient is not a monomial");
        }
        r.degree_ -= degree_;
        return r;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<int> exps_;
    int degree_;
};

// Degree-lexicographic strict order.
struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a.exponents() < b.exponents();
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int e : m.exponents()) {
            h ^= static_cast<std::uint64_t>(e);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace shicone
