#include "core/veccalc.hpp"

namespace jps {

Vec4 vec4_zero() { return Vec4{}; }
Vec6 vec6_zero() { return Vec6{}; }

bool is_zero(const Vec4& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

bool is_zero(const Vec6& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

Vec4 operator+(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec4 operator-(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec6 operator+(const Vec6& a, const Vec6& b) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec6 operator-(const Vec6& a, const Vec6& b) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec4 operator*(const Poly& f, const Vec4& v) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = f * v[i];
    return r;
}

Vec6 operator*(const Poly& f, const Vec6& v) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = f * v[i];
    return r;
}

Vec4 scaled(const Vec4& v, const Rat& c) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = v[i].scaled(c);
    return r;
}

Vec6 scaled(const Vec6& v, const Rat& c) {
    Vec6 r;
    for (int i = 0; i < 6; ++i) r[i] = v[i].scaled(c);
    return r;
}

Vec6 cross(const Vec4& x, const Vec4& y) {
    return Vec6{
        x[0] * y[3] - x[3] * y[0], // dx1^dx4
        x[0] * y[1] - x[1] * y[0], // dx1^dx2
        x[2] * y[1] - x[1] * y[2], // dx3^dx2
        x[2] * y[3] - x[3] * y[2], // dx3^dx4
        x[2] * y[0] - x[0] * y[2], // dx3^dx1
        x[1] * y[3] - x[3] * y[1], // dx2^dx4
    };
}

Vec4 barcross(const Vec4& x, const Vec6& y) {
    return Vec4{
        -(x[3] * y[2]) + x[1] * y[3] - x[2] * y[5],
        x[2] * y[0] - x[0] * y[3] + x[3] * y[4],
        -(x[1] * y[0]) + x[3] * y[1] + x[0] * y[5],
        -(x[2] * y[1]) + x[0] * y[2] - x[1] * y[4],
    };
}

Vec6 f_map(const Vec6& y) {
    return Vec6{-y[2], y[3], -y[0], y[1], y[5], y[4]};
}

Vec4 grad(const Poly& f) {
    return Vec4{f.derivative(1), f.derivative(2), f.derivative(3), f.derivative(4)};
}

Vec6 curl(const Vec4& y) {
    return Vec6{
        y[3].derivative(1) - y[0].derivative(4),
        y[1].derivative(1) - y[0].derivative(2),
        y[1].derivative(3) - y[2].derivative(2),
        y[3].derivative(3) - y[2].derivative(4),
        y[0].derivative(3) - y[2].derivative(1),
        y[3].derivative(2) - y[1].derivative(4),
    };
}

Vec4 barcurl(const Vec6& g) {
    return Vec4{
        -g[2].derivative(4) + g[3].derivative(2) - g[5].derivative(3),
        g[0].derivative(3) - g[3].derivative(1) + g[4].derivative(4),
        -g[0].derivative(2) + g[1].derivative(4) + g[5].derivative(1),
        -g[1].derivative(3) + g[2].derivative(1) - g[4].derivative(2),
    };
}

Poly divergence(const Vec4& k) {
    Poly r;
    for (int i = 0; i < 4; ++i) r += k[i].derivative(i + 1);
    return r;
}

Poly dot(const Vec4& x, const Vec4& y) {
    Poly r;
    for (int i = 0; i < 4; ++i) r += x[i] * y[i];
    return r;
}

Poly dot(const Vec6& x, const Vec6& y) {
    Poly r;
    for (int i = 0; i < 6; ++i) r += x[i] * y[i];
    return r;
}

Vec4 euler_field(const WeightVector& w) {
    Vec4 r;
    for (int i = 0; i < 4; ++i) r[i] = Poly::monomial(Mono::var(i + 1), Rat(w[i]));
    return r;
}

Vec4 unit4(int i) {
    if (i < 1 || i > 4) throw invalid_arg("unit vector index out of 1..4");
    Vec4 r;
    r[i - 1] = Poly::constant(Rat(1));
    return r;
}

} // namespace jps
