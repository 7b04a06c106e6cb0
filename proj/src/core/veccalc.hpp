#pragma once

#include <array>

#include "core/poly.hpp"

namespace jps {

// Vector calculus on A^4 and A^6, A = K[x1..x4]. A^4 carries 1- and 3-forms,
// A^6 carries 2-forms in the fixed basis order
//   dx1^dx4, dx1^dx2, dx3^dx2, dx3^dx4, dx3^dx1, dx2^dx4.
using Vec4 = std::array<Poly, 4>;
using Vec6 = std::array<Poly, 6>;

Vec4 vec4_zero();
Vec6 vec6_zero();
bool is_zero(const Vec4& v);
bool is_zero(const Vec6& v);

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec6 operator+(const Vec6& a, const Vec6& b);
Vec6 operator-(const Vec6& a, const Vec6& b);
Vec4 operator*(const Poly& f, const Vec4& v);
Vec6 operator*(const Poly& f, const Vec6& v);
Vec4 scaled(const Vec4& v, const Rat& c);
Vec6 scaled(const Vec6& v, const Rat& c);

// x ^ y as 2-form coefficients in the slot order above
Vec6 cross(const Vec4& x, const Vec4& y);

// x ^ y for a 1-form x and 2-form y, landing in 3-form coordinates
Vec4 barcross(const Vec4& x, const Vec6& y);

// slot involution: (y1..y6) -> (-y3, y4, -y1, y2, y6, y5)
Vec6 f_map(const Vec6& y);

Vec4 grad(const Poly& f);
Vec6 curl(const Vec4& y);
Vec4 barcurl(const Vec6& g);
Poly divergence(const Vec4& k);

Poly dot(const Vec4& x, const Vec4& y);
Poly dot(const Vec6& x, const Vec6& y);

// Euler vector field (w1*x1, ..., w4*x4)
Vec4 euler_field(const WeightVector& w);

Vec4 unit4(int i); // i in 1..4

} // namespace jps
