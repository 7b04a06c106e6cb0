#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "core/weights.hpp"

namespace jps {

// Monomial in x1..x4, stored as the exponent tuple.
struct Mono {
    std::array<int, 4> e{0, 0, 0, 0};

    Mono() = default;
    explicit Mono(std::array<int, 4> exps) : e(exps) {}

    static Mono one() { return Mono{}; }
    static Mono var(int i, int power = 1) { // i in 1..4
        if (i < 1 || i > 4) throw invalid_arg("variable index out of 1..4");
        Mono m;
        m.e[static_cast<std::size_t>(i - 1)] = power;
        return m;
    }

    int total_degree() const { return e[0] + e[1] + e[2] + e[3]; }
    long degree(const WeightVector& w) const {
        long d = 0;
        for (int i = 0; i < 4; ++i) d += static_cast<long>(e[static_cast<std::size_t>(i)]) * w[i];
        return d;
    }

    Mono operator*(const Mono& o) const {
        Mono r;
        for (int i = 0; i < 4; ++i)
            r.e[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)] + o.e[static_cast<std::size_t>(i)];
        return r;
    }

    // Lexicographic on exponent tuples with x1 > x2 > x3 > x4; combined with
    // per-degree slicing this yields the graded-lex total order used for all
    // basis enumerations.
    friend auto operator<=>(const Mono&, const Mono&) = default;

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            if (!s.empty()) s += '*';
            s += 'x';
            s += static_cast<char>('1' + i);
            if (p != 1) s += '^' + std::to_string(p);
        }
        return s.empty() ? "1" : s;
    }
};

// All monomials of weighted degree exactly d, in descending lex order
// (x1^.. first); deterministic across runs.
std::vector<Mono> monomial_basis(long d, const WeightVector& w);

// dim of the degree-d slice of K[x1..x4]; 0 for d < 0.
long dim_poly_slice(long d, const WeightVector& w);

} // namespace jps
