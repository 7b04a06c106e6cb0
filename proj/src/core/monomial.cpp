#include "core/monomial.hpp"

#include <algorithm>

namespace jps {

std::vector<Mono> monomial_basis(long d, const WeightVector& w) {
    if (d < 0) return {};
    std::vector<Mono> out;
    // e1 descending, then e2, e3; e4 is forced by the degree.
    for (long e1 = d / w[0]; e1 >= 0; --e1) {
        long r1 = d - e1 * w[0];
        for (long e2 = r1 / w[1]; e2 >= 0; --e2) {
            long r2 = r1 - e2 * w[1];
            for (long e3 = r2 / w[2]; e3 >= 0; --e3) {
                long r3 = r2 - e3 * w[2];
                if (r3 % w[3] != 0) continue;
                out.push_back(Mono{{static_cast<int>(e1), static_cast<int>(e2),
                                    static_cast<int>(e3), static_cast<int>(r3 / w[3])}});
            }
        }
    }
    return out;
}

long dim_poly_slice(long d, const WeightVector& w) {
    if (d < 0) return 0;
    long count = 0;
    for (long e1 = d / w[0]; e1 >= 0; --e1) {
        long r1 = d - e1 * w[0];
        for (long e2 = r1 / w[1]; e2 >= 0; --e2) {
            long r2 = r1 - e2 * w[1];
            for (long e3 = r2 / w[2]; e3 >= 0; --e3) {
                if ((r2 - e3 * w[2]) % w[3] == 0) ++count;
            }
        }
    }
    return count;
}

} // namespace jps
