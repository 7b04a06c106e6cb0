#pragma once

#include "core/bases.hpp"
#include "core/chains.hpp"

namespace jps {

// Skew-symmetric k-derivation of A, components indexed by the strictly
// increasing k-tuples of {1..4} in lexicographic order.
struct MultiDeriv {
    int k = 0;
    std::vector<Poly> c; // size C(4,k)

    MultiDeriv() : c(1) {}
    MultiDeriv(int degree, std::vector<Poly> comps);

    static MultiDeriv zero(int k);
    static MultiDeriv from_poly(Poly f); // k = 0
    static MultiDeriv vector_field(const Vec4& v);

    bool is_zero() const;
    bool operator==(const MultiDeriv&) const = default;

    MultiDeriv operator+(const MultiDeriv& o) const;
    MultiDeriv operator-(const MultiDeriv& o) const;
    MultiDeriv times(const Poly& f) const;

    const Poly& comp(const std::vector<int>& tuple) const {
        return c[multideriv_tuple_index(k, tuple)];
    }
};

// Q(f1, ..., fk) = sum_I Q^I det(d f_a / d x_{I_b}); throws on arity mismatch.
Poly eval_multideriv(const MultiDeriv& q, const std::vector<Poly>& args);

// Poisson coboundary, degree k -> k+1; k = 4 raises degree overflow.
// Convention: delta^0(F) = {F, .} (the Hamiltonian derivation of F), i.e.
// delta^0(F)(G) = -{G, F}; the sign is fixed so that delta o delta = 0.
MultiDeriv coboundary(const PoissonStructure& s, const MultiDeriv& q);

// shuffle-sum isomorphism X^k -> Omega^{4-k} and its inverse
ChainElement star(const MultiDeriv& q);
MultiDeriv star_inv(const ChainElement& c);

// Lie derivative [V, Q] of a multiderivation along a vector field (k = 1).
MultiDeriv lie_derivative(const MultiDeriv& v, const MultiDeriv& q);

// the Poisson bivector pi with components {x_a, x_b}
MultiDeriv poisson_bivector(const PoissonStructure& s);

struct ModularCheck {
    MultiDeriv d2_of_pi;
    bool unimodular = false;
};

// D_2(pi) = star_inv(d(star(pi))); the structure is unimodular iff it vanishes.
ModularCheck modular_check(const PoissonStructure& s);
ModularCheck modular_check(const MultiDeriv& pi);

} // namespace jps
