#pragma once

#include <cstdint>

#include "core/poly.hpp"

namespace jps {

// Deterministic splitmix64 stream; used for the randomized property checks so
// that a given seed reproduces the exact same inputs on every platform.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline Rat random_rat(Rng& rng, long max_abs = 6, long max_den = 3) {
    long num = rng.range(-max_abs, max_abs);
    long den = rng.range(1, max_den);
    return rat(num, den);
}

inline Mono random_mono(Rng& rng, int max_total_degree) {
    Mono m;
    int budget = static_cast<int>(rng.range(0, max_total_degree));
    for (int j = 0; j < budget; ++j) m.e[rng.below(4)] += 1;
    return m;
}

inline Poly random_poly(Rng& rng, int max_degree = 3, int max_terms = 5) {
    Poly p;
    long n = rng.range(0, max_terms);
    for (long i = 0; i < n; ++i) p.add_term(random_mono(rng, max_degree), random_rat(rng));
    return p;
}

// nonzero homogeneous polynomial of the given weighted degree
inline Poly random_homogeneous(Rng& rng, long degree, const WeightVector& w, int max_terms = 4) {
    auto basis = monomial_basis(degree, w);
    Poly p;
    if (basis.empty()) return p;
    long n = rng.range(1, max_terms);
    for (long i = 0; i < n; ++i) {
        Rat c = random_rat(rng);
        if (c == 0) c = Rat(1);
        p.add_term(basis[rng.below(basis.size())], c);
    }
    if (p.is_zero()) p.add_term(basis[0], Rat(1));
    return p;
}

} // namespace jps
