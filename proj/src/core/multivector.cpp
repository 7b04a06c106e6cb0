#include "core/multivector.hpp"

namespace jps {

namespace {

// determinant of a small polynomial matrix by cofactor expansion
Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(Rat(1));
    if (n == 1) return m[0][0];
    Poly r;
    std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t a = 1; a < n; ++a) {
            std::size_t col = 0;
            for (std::size_t b = 0; b < n; ++b) {
                if (b == j) continue;
                minor[a - 1][col++] = m[a][b];
            }
        }
        Poly term = m[0][j] * poly_det(minor);
        if (j % 2 == 0) r += term;
        else r -= term;
    }
    return r;
}

Poly apply_field(const MultiDeriv& v, const Poly& f) {
    Poly r;
    for (int a = 0; a < 4; ++a) r += v.c[static_cast<std::size_t>(a)] * f.derivative(a + 1);
    return r;
}

} // namespace

MultiDeriv::MultiDeriv(int degree, std::vector<Poly> comps) : k(degree), c(std::move(comps)) {
    if (c.size() != multideriv_tuples(k).size())
        throw invalid_arg("component count does not match multiderivation degree");
}

MultiDeriv MultiDeriv::zero(int k) {
    return MultiDeriv(k, std::vector<Poly>(multideriv_tuples(k).size()));
}

MultiDeriv MultiDeriv::from_poly(Poly f) { return MultiDeriv(0, {std::move(f)}); }

MultiDeriv MultiDeriv::vector_field(const Vec4& v) {
    return MultiDeriv(1, {v[0], v[1], v[2], v[3]});
}

bool MultiDeriv::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

MultiDeriv MultiDeriv::operator+(const MultiDeriv& o) const {
    if (k != o.k) throw invalid_arg("degree mismatch in multiderivation sum");
    MultiDeriv r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

MultiDeriv MultiDeriv::operator-(const MultiDeriv& o) const {
    if (k != o.k) throw invalid_arg("degree mismatch in multiderivation difference");
    MultiDeriv r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

MultiDeriv MultiDeriv::times(const Poly& f) const {
    MultiDeriv r = *this;
    for (auto& p : r.c) p = f * p;
    return r;
}

Poly eval_multideriv(const MultiDeriv& q, const std::vector<Poly>& args) {
    if (static_cast<int>(args.size()) != q.k)
        throw invalid_arg("argument count does not match multiderivation degree");
    if (q.k == 0) return q.c[0];
    const auto& tuples = multideriv_tuples(q.k);
    std::size_t n = args.size();
    Poly r;
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        if (q.c[t].is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m[a][b] = args[a].derivative(tuples[t][b]);
        r += q.c[t] * poly_det(m);
    }
    return r;
}

MultiDeriv coboundary(const PoissonStructure& s, const MultiDeriv& q) {
    if (q.k >= 4) throw invalid_arg("degree overflow: coboundary of a 4-derivation");
    int k = q.k;
    const auto& out_tuples = multideriv_tuples(k + 1);
    std::vector<Poly> comps;
    comps.reserve(out_tuples.size());
    for (const auto& J : out_tuples) {
        Poly acc;
        // sum_i (-1)^{i+1} {x_{J_i}, Q(rest)}
        for (std::size_t i = 0; i < J.size(); ++i) {
            std::vector<int> rest;
            for (std::size_t a = 0; a < J.size(); ++a)
                if (a != i) rest.push_back(J[a]);
            const Poly& qv = q.c[multideriv_tuple_index(k, rest)];
            Poly term = s.bracket(Poly::variable(J[i]), qv);
            if (i % 2 == 0) acc -= term; // (-1)^{i+1}
            else acc += term;
        }
        // sum_{i<j} (-1)^{i+j+1} Q({x_{J_i}, x_{J_j}}, rest)
        if (k >= 1) {
            for (std::size_t i = 0; i < J.size(); ++i) {
                for (std::size_t j = i + 1; j < J.size(); ++j) {
                    std::vector<Poly> args;
                    args.push_back(s.bracket(Poly::variable(J[i]), Poly::variable(J[j])));
                    for (std::size_t a = 0; a < J.size(); ++a)
                        if (a != i && a != j) args.push_back(Poly::variable(J[a]));
                    Poly term = eval_multideriv(q, args);
                    if ((i + j) % 2 == 0) acc -= term; // (-1)^{i+j+1}
                    else acc += term;
                }
            }
        }
        comps.push_back(acc);
    }
    return MultiDeriv(k + 1, std::move(comps));
}

ChainElement star(const MultiDeriv& q) {
    int k = q.k;
    int kk = 4 - k;
    const auto& tuples = multideriv_tuples(k);
    const auto& slots = chain_slots(kk);
    std::vector<Poly> payload(slots.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        std::vector<int> comp = complement_tuple(tuples[t]);
        std::vector<int> seq = tuples[t];
        seq.insert(seq.end(), comp.begin(), comp.end());
        int eps = sequence_sign(seq);
        std::size_t slot = chain_slot_of_sorted(kk, comp);
        // payload_slot = slot sign * sorted coefficient
        Rat c = Rat(eps * slots[slot].sign);
        payload[slot] += q.c[t].scaled(c);
    }
    return ChainElement(kk, std::move(payload));
}

MultiDeriv star_inv(const ChainElement& ch) {
    int kk = ch.k;
    int k = 4 - kk;
    const auto& slots = chain_slots(kk);
    const auto& tuples = multideriv_tuples(k);
    std::vector<Poly> comps(tuples.size());
    for (std::size_t slot = 0; slot < slots.size(); ++slot) {
        std::vector<int> comp = complement_tuple(slots[slot].sorted);
        std::vector<int> seq = comp;
        seq.insert(seq.end(), slots[slot].sorted.begin(), slots[slot].sorted.end());
        int eps = sequence_sign(seq);
        std::size_t t = multideriv_tuple_index(k, comp);
        comps[t] += ch.c[slot].scaled(Rat(eps * slots[slot].sign));
    }
    return MultiDeriv(k, std::move(comps));
}

MultiDeriv lie_derivative(const MultiDeriv& v, const MultiDeriv& q) {
    if (v.k != 1) throw invalid_arg("Lie derivative requires a vector field");
    const auto& tuples = multideriv_tuples(q.k);
    std::vector<Poly> comps(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        Poly acc = apply_field(v, q.c[t]);
        for (std::size_t b = 0; b < tuples[t].size(); ++b) {
            std::vector<Poly> args;
            for (std::size_t a = 0; a < tuples[t].size(); ++a) {
                if (a == b) args.push_back(v.c[static_cast<std::size_t>(tuples[t][a] - 1)]);
                else args.push_back(Poly::variable(tuples[t][a]));
            }
            acc -= eval_multideriv(q, args);
        }
        comps[t] = acc;
    }
    return MultiDeriv(q.k, std::move(comps));
}

MultiDeriv poisson_bivector(const PoissonStructure& s) {
    const Vec6& table = s.bracket_table();
    // slots: {x1,x4},{x1,x2},{x3,x2},{x3,x4},{x3,x1},{x2,x4}
    std::vector<Poly> comps(6);
    comps[multideriv_tuple_index(2, {1, 2})] = table[1];
    comps[multideriv_tuple_index(2, {1, 3})] = -table[4];
    comps[multideriv_tuple_index(2, {1, 4})] = table[0];
    comps[multideriv_tuple_index(2, {2, 3})] = -table[2];
    comps[multideriv_tuple_index(2, {2, 4})] = table[5];
    comps[multideriv_tuple_index(2, {3, 4})] = table[3];
    return MultiDeriv(2, std::move(comps));
}

ModularCheck modular_check(const MultiDeriv& pi) {
    ModularCheck out;
    out.d2_of_pi = star_inv(derham_d(star(pi)));
    out.unimodular = out.d2_of_pi.is_zero();
    return out;
}

ModularCheck modular_check(const PoissonStructure& s) {
    return modular_check(poisson_bivector(s));
}

} // namespace jps
