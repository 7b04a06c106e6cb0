#pragma once

#include <array>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace jps {

// Weight vector for the grading of K[x1..x4]: positive integer weights with
// gcd 1. |w| denotes the sum of the weights.
struct WeightVector {
    std::array<int, 4> w{1, 1, 1, 1};

    WeightVector() = default;

    explicit WeightVector(std::array<int, 4> weights) : w(weights) {
        int g = 0;
        for (int wi : w) {
            if (wi <= 0) throw unsupported("weights must be positive integers");
            g = std::gcd(g, wi);
        }
        if (g != 1) throw unsupported("weights must have gcd 1");
    }

    int operator[](int i) const { return w[static_cast<std::size_t>(i)]; } // 0-based
    long total() const { return w[0] + w[1] + w[2] + w[3]; }

    bool operator==(const WeightVector&) const = default;

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) {
            if (i) s += ',';
            s += std::to_string(w[static_cast<std::size_t>(i)]);
        }
        return s;
    }
};

} // namespace jps
