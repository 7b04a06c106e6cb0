#pragma once

#include <vector>

#include "core/poisson.hpp"

namespace jps {

// K"ahler k-form stored through the fixed identifications
//   Omega^0 ~ A, Omega^1 ~ A^4, Omega^2 ~ A^6, Omega^3 ~ A^4, Omega^4 ~ A.
// Basis orders:
//   Omega^1: dx1, dx2, dx3, dx4
//   Omega^2: dx1^dx4, dx1^dx2, dx3^dx2, dx3^dx4, dx3^dx1, dx2^dx4
//   Omega^3: dx2^dx3^dx4, dx3^dx1^dx4, dx1^dx2^dx4, dx2^dx1^dx3
//   Omega^4: dx1^dx2^dx3^dx4
struct ChainElement {
    int k = 0;
    std::vector<Poly> c; // size 1,4,6,4,1 for k = 0..4

    ChainElement() : c(1) {}
    ChainElement(int degree, std::vector<Poly> comps);

    static int arity(int k);
    static ChainElement zero(int k);
    static ChainElement from_poly(int k, Poly p); // k = 0 or 4
    static ChainElement from_vec4(int k, const Vec4& v); // k = 1 or 3
    static ChainElement from_vec2form(const Vec6& v);

    Poly as_poly() const;
    Vec4 as_vec4() const;
    Vec6 as_vec6() const;

    bool is_zero() const;
    bool operator==(const ChainElement&) const = default;

    ChainElement operator+(const ChainElement& o) const;
    ChainElement operator-(const ChainElement& o) const;
    ChainElement scaled(const Rat& r) const;
    ChainElement times(const Poly& f) const; // module action, componentwise
};

// de Rham differential; k = 4 raises a degree-overflow error.
ChainElement derham_d(const ChainElement& c);

// Poisson boundary in compact vector form, degree k -> k-1; k = 0 raises a
// degree-underflow error. The Jacobian 2-vector is scaled by lambda once,
// inside the structure.
ChainElement poisson_boundary(const PoissonStructure& s, const ChainElement& c);

// Koszul multiplication by dP, degree k -> k+1; k = 4 raises degree overflow.
ChainElement koszul_wedge(const Poly& p, const ChainElement& c);

// top form dx1^dx2^dx3^dx4
ChainElement delta_form();
// w1 x1 dx2^dx3^dx4 + w2 x2 dx3^dx1^dx4 + w3 x3 dx1^dx2^dx4 + w4 x4 dx2^dx1^dx3,
// i.e. the 3-form with payload equal to the Euler field
ChainElement rho_form(const WeightVector& w);

} // namespace jps
