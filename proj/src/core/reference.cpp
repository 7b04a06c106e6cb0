#include "core/reference.hpp"

#include <algorithm>
#include <map>

#include "core/bases.hpp"

namespace jps {

namespace {

Poly det_recursive(const std::vector<std::vector<Poly>>& m, std::vector<std::size_t> cols,
                   std::size_t row) {
    if (cols.empty()) return Poly::constant(Rat(1));
    Poly r;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t b = 0; b < cols.size(); ++b)
            if (b != j) rest.push_back(cols[b]);
        Poly term = m[row][cols[j]] * det_recursive(m, rest, row + 1);
        if (j % 2 == 0) r += term;
        else r -= term;
    }
    return r;
}

// k-form accumulator on sorted index tuples
struct GenericForm {
    int k;
    std::map<std::vector<int>, Poly> coeff;

    explicit GenericForm(int degree) : k(degree) {}

    void add(std::vector<int> idx, const Poly& p) {
        if (p.is_zero()) return;
        int sign = sequence_sign(idx);
        if (sign == 0) return;
        std::sort(idx.begin(), idx.end());
        auto& slot = coeff[idx];
        slot += (sign > 0) ? p : -p;
        if (slot.is_zero()) coeff.erase(idx);
    }

    ChainElement to_chain() const {
        const auto& slots = chain_slots(k);
        std::vector<Poly> payload(slots.size());
        for (const auto& [idx, p] : coeff) {
            std::size_t s = chain_slot_of_sorted(k, idx);
            payload[s] = (slots[s].sign > 0) ? p : -p;
        }
        return ChainElement(k, std::move(payload));
    }
};

} // namespace

Poly bracket_via_determinant(const PoissonStructure& s, const Poly& f, const Poly& g) {
    std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4));
    for (int j = 1; j <= 4; ++j) {
        m[0][static_cast<std::size_t>(j - 1)] = f.derivative(j);
        m[1][static_cast<std::size_t>(j - 1)] = g.derivative(j);
        m[2][static_cast<std::size_t>(j - 1)] = s.p1().derivative(j);
        m[3][static_cast<std::size_t>(j - 1)] = s.p2().derivative(j);
    }
    return det_recursive(m, {0, 1, 2, 3}, 0).scaled(s.lambda());
}

ChainElement poisson_boundary_reference(const PoissonStructure& s, const ChainElement& ch) {
    if (ch.k == 0) throw invalid_arg("degree underflow: boundary of a 0-form");
    const auto& slots = chain_slots(ch.k);
    GenericForm out(ch.k - 1);
    for (std::size_t slot = 0; slot < slots.size(); ++slot) {
        const Poly& f0 = ch.c[slot];
        if (f0.is_zero()) continue;
        const std::vector<int>& idx = slots[slot].printed; // F_i = x_{idx[i-1]}
        std::size_t k = idx.size();
        for (std::size_t i = 0; i < k; ++i) {
            Poly br = s.bracket(f0, Poly::variable(idx[i]));
            std::vector<int> rest;
            for (std::size_t a = 0; a < k; ++a)
                if (a != i) rest.push_back(idx[a]);
            out.add(rest, (i % 2 == 0) ? br : -br); // (-1)^{i+2}
        }
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i + 1; j < k; ++j) {
                Poly br = s.bracket(Poly::variable(idx[i]), Poly::variable(idx[j]));
                std::vector<int> rest;
                for (std::size_t a = 0; a < k; ++a)
                    if (a != i && a != j) rest.push_back(idx[a]);
                int sign = ((i + j) % 2 == 0) ? 1 : -1; // (-1)^{(i+1)+(j+1)}
                for (int v = 1; v <= 4; ++v) {
                    Poly d = br.derivative(v);
                    if (d.is_zero()) continue;
                    std::vector<int> full;
                    full.push_back(v);
                    full.insert(full.end(), rest.begin(), rest.end());
                    Poly coeff = f0 * d;
                    out.add(full, (sign > 0) ? coeff : -coeff);
                }
            }
        }
    }
    return out.to_chain();
}

} // namespace jps
