#pragma once

#include <map>
#include <optional>
#include <string>

#include "core/monomial.hpp"
#include "core/rational.hpp"

namespace jps {

// Sparse multivariate polynomial in x1..x4 over exact rationals. Zero
// coefficients are never stored; all arithmetic is exact.
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c) {
        Poly p;
        if (c != 0) p.t_[Mono::one()] = c;
        return p;
    }
    static Poly variable(int i) { return monomial(Mono::var(i), Rat(1)); }
    static Poly monomial(const Mono& m, const Rat& c) {
        Poly p;
        if (c != 0) p.t_[m] = c;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Mono, Rat>& terms() const { return t_; }
    Rat coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rat(0) : it->second;
    }

    bool operator==(const Poly&) const = default;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Rat& c) const;
    Poly pow(int n) const; // n >= 0

    // Formal partial derivative with respect to x_i, i in 1..4.
    Poly derivative(int i) const;

    // Total degree in the standard grading (all weights 1); nullopt for 0.
    std::optional<int> total_degree() const;

    std::string str() const;

    void add_term(const Mono& m, const Rat& c); // accumulate, drop zeros

private:
    std::map<Mono, Rat> t_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

struct GradingInfo {
    bool homogeneous = true;
    std::optional<long> degree;       // unset for the zero polynomial
    std::map<long, Poly> components;  // degree -> homogeneous part
};

// Weight-degree decomposition of F; components sum to F.
GradingInfo grading(const Poly& f, const WeightVector& w);

// Degree of a weight-homogeneous polynomial; throws for inhomogeneous input,
// nullopt for zero.
std::optional<long> homogeneous_degree(const Poly& f, const WeightVector& w);

} // namespace jps
