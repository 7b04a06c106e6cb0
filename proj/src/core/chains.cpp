#include "core/chains.hpp"

namespace jps {

int ChainElement::arity(int k) {
    switch (k) {
    case 0: return 1;
    case 1: return 4;
    case 2: return 6;
    case 3: return 4;
    case 4: return 1;
    default: throw invalid_arg("form degree out of 0..4");
    }
}

ChainElement::ChainElement(int degree, std::vector<Poly> comps) : k(degree), c(std::move(comps)) {
    if (static_cast<int>(c.size()) != arity(k))
        throw invalid_arg("payload arity does not match form degree");
}

ChainElement ChainElement::zero(int k) {
    return ChainElement(k, std::vector<Poly>(static_cast<std::size_t>(arity(k))));
}

ChainElement ChainElement::from_poly(int k, Poly p) {
    if (k != 0 && k != 4) throw invalid_arg("scalar payload requires k = 0 or 4");
    return ChainElement(k, {std::move(p)});
}

ChainElement ChainElement::from_vec4(int k, const Vec4& v) {
    if (k != 1 && k != 3) throw invalid_arg("Vec4 payload requires k = 1 or 3");
    return ChainElement(k, {v[0], v[1], v[2], v[3]});
}

ChainElement ChainElement::from_vec2form(const Vec6& v) {
    return ChainElement(2, {v[0], v[1], v[2], v[3], v[4], v[5]});
}

Poly ChainElement::as_poly() const {
    if (c.size() != 1) throw invalid_arg("not a scalar chain");
    return c[0];
}

Vec4 ChainElement::as_vec4() const {
    if (c.size() != 4) throw invalid_arg("not a Vec4 chain");
    return Vec4{c[0], c[1], c[2], c[3]};
}

Vec6 ChainElement::as_vec6() const {
    if (c.size() != 6) throw invalid_arg("not a Vec6 chain");
    return Vec6{c[0], c[1], c[2], c[3], c[4], c[5]};
}

bool ChainElement::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

ChainElement ChainElement::operator+(const ChainElement& o) const {
    if (k != o.k) throw invalid_arg("degree mismatch in chain sum");
    ChainElement r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

ChainElement ChainElement::operator-(const ChainElement& o) const {
    if (k != o.k) throw invalid_arg("degree mismatch in chain difference");
    ChainElement r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

ChainElement ChainElement::scaled(const Rat& r) const {
    ChainElement out = *this;
    for (auto& p : out.c) p = p.scaled(r);
    return out;
}

ChainElement ChainElement::times(const Poly& f) const {
    ChainElement out = *this;
    for (auto& p : out.c) p = f * p;
    return out;
}

ChainElement derham_d(const ChainElement& ch) {
    switch (ch.k) {
    case 0: return ChainElement::from_vec4(1, grad(ch.as_poly()));
    case 1: return ChainElement::from_vec2form(curl(ch.as_vec4()));
    case 2: return ChainElement::from_vec4(3, barcurl(ch.as_vec6()));
    case 3: return ChainElement::from_poly(4, divergence(ch.as_vec4()));
    default: throw invalid_arg("degree overflow: d of a top form");
    }
}

ChainElement poisson_boundary(const PoissonStructure& s, const ChainElement& ch) {
    const Vec6& w2 = s.scaled_jacobian2();
    const Vec6& fw2 = s.f_scaled_jacobian2();
    switch (ch.k) {
    case 1: {
        Vec4 h = ch.as_vec4();
        return ChainElement::from_poly(0, dot(curl(h), fw2));
    }
    case 2: {
        Vec6 g = ch.as_vec6();
        Vec4 a = barcross(barcurl(g), fw2);
        Vec4 b = grad(dot(g, fw2));
        Vec4 zero{};
        return ChainElement::from_vec4(1, zero - a - b);
    }
    case 3: {
        Vec4 k = ch.as_vec4();
        Vec6 first = divergence(k) * w2;
        Vec6 second = curl(barcross(k, fw2));
        return ChainElement::from_vec2form(first + second);
    }
    case 4: {
        Vec4 zero{};
        return ChainElement::from_vec4(3, zero - barcross(grad(ch.as_poly()), w2));
    }
    default: throw invalid_arg("degree underflow: boundary of a 0-form");
    }
}

ChainElement koszul_wedge(const Poly& p, const ChainElement& ch) {
    Vec4 gp = grad(p);
    switch (ch.k) {
    case 0: return ChainElement::from_vec4(1, ch.as_poly() * gp);
    case 1: return ChainElement::from_vec2form(cross(ch.as_vec4(), gp));
    case 2: return ChainElement::from_vec4(3, barcross(gp, ch.as_vec6()));
    case 3: return ChainElement::from_poly(4, dot(ch.as_vec4(), gp));
    default: throw invalid_arg("degree overflow: wedge with a top form");
    }
}

ChainElement delta_form() {
    return ChainElement::from_poly(4, Poly::constant(Rat(1)));
}

ChainElement rho_form(const WeightVector& w) {
    return ChainElement::from_vec4(3, euler_field(w));
}

} // namespace jps
