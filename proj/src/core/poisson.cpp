#include "core/poisson.hpp"

namespace jps {

namespace {

Poly half_square(int i) {
    return Poly::monomial(Mono::var(i, 2), rat(1, 2));
}

Poly product(int i, int j) {
    return Poly::monomial(Mono::var(i) * Mono::var(j), Rat(1));
}

} // namespace

PoissonStructure::PoissonStructure(Poly p1, Poly p2, Rat lambda, WeightVector w,
                                   PresetKind kind, std::optional<SklyaninParams> params)
    : p1_(std::move(p1)), p2_(std::move(p2)), lambda_(std::move(lambda)), w_(w), kind_(kind),
      params_(std::move(params)) {
    if (lambda_ == 0) throw unsupported("lambda must be nonzero");
    if (p1_.is_zero() || p2_.is_zero()) throw unsupported("Casimir polynomials must be nonzero");
    auto d1 = homogeneous_degree(p1_, w_);
    auto d2 = homogeneous_degree(p2_, w_);
    if (!d1 || !d2) throw unsupported("Casimir polynomials must be weight homogeneous");
    deg_p1_ = *d1;
    deg_p2_ = *d2;
    grad_p1_ = grad(p1_);
    grad_p2_ = grad(p2_);
    jac2_ = cross(grad_p1_, grad_p2_);
    w2_ = scaled(jac2_, lambda_);
    fw2_ = f_map(w2_);
    for (int i = 0; i < 6; ++i) table_[i] = fw2_[i]; // {x_a,x_b} = lambda f(cross)_slot(a,b)
    validate();
}

void PoissonStructure::validate() const {
    Poly x[5];
    for (int i = 1; i <= 4; ++i) x[i] = Poly::variable(i);
    for (int a = 1; a <= 4; ++a) {
        if (!bracket(p1_, x[a]).is_zero() || !bracket(p2_, x[a]).is_zero())
            throw internal("Casimir property failed on coordinates");
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 4; ++c)
                if (!jacobiator(x[a], x[b], x[c]).is_zero())
                    throw internal("Jacobi identity failed on coordinate triple");
    }
}

PoissonStructure PoissonStructure::custom(Poly p1, Poly p2, Rat lambda, WeightVector w) {
    return PoissonStructure(std::move(p1), std::move(p2), std::move(lambda), w,
                            PresetKind::custom, std::nullopt);
}

PoissonStructure PoissonStructure::sklyanin_k(const Rat& k) {
    Poly q1 = half_square(1) + half_square(3) + product(2, 4).scaled(k);
    Poly q2 = half_square(2) + half_square(4) + product(1, 3).scaled(k);
    SklyaninParams p;
    p.variant = PresetKind::sklyanin_k;
    p.k = k;
    return PoissonStructure(std::move(q1), std::move(q2), Rat(-1), WeightVector{},
                            PresetKind::sklyanin_k, p);
}

PoissonStructure PoissonStructure::sklyanin_j(const Rat& j1, const Rat& j2, const Rat& j3) {
    const Rat js[3] = {j1, j2, j3};
    for (int i = 0; i < 3; ++i) {
        for (long bad : {-1L, 0L, 1L})
            if (js[i] == bad)
                throw unsupported("genericity violation: J" + std::to_string(i + 1) + " = " +
                                  std::to_string(bad) + " is forbidden");
        for (int j = i + 1; j < 3; ++j)
            if (js[i] == js[j])
                throw unsupported("genericity violation: J" + std::to_string(i + 1) + " = J" +
                                  std::to_string(j + 1) + " is forbidden");
    }
    Poly q1 = half_square(1) + half_square(2) + half_square(3);
    Poly q2 = half_square(4) + half_square(1).scaled(j1) + half_square(2).scaled(j2) +
              half_square(3).scaled(j3);
    SklyaninParams p;
    p.variant = PresetKind::sklyanin_j;
    p.j1 = j1;
    p.j2 = j2;
    p.j3 = j3;
    return PoissonStructure(q1 + q2, q2, Rat(1), WeightVector{}, PresetKind::sklyanin_j, p);
}

Poly PoissonStructure::bracket(const Poly& f, const Poly& g) const {
    return dot(cross(grad(f), grad(g)), fw2_);
}

Poly PoissonStructure::jacobiator(const Poly& f, const Poly& g, const Poly& h) const {
    return bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
}

bool PoissonStructure::is_casimir(const Poly& c) const {
    for (int j = 1; j <= 4; ++j)
        if (!bracket(c, Poly::variable(j)).is_zero()) return false;
    return true;
}

std::string PoissonStructure::describe() const {
    switch (kind_) {
    case PresetKind::sklyanin_k:
        return "sklyanin-k(k=" + rat_str(params_->k) + ")";
    case PresetKind::sklyanin_j:
        return "sklyanin-J(J=" + rat_str(params_->j1) + "," + rat_str(params_->j2) + "," +
               rat_str(params_->j3) + ")";
    case PresetKind::custom:
        break;
    }
    return "custom(P1=" + p1_.str() + "; P2=" + p2_.str() + "; lambda=" + rat_str(lambda_) +
           "; weights=" + w_.str() + ")";
}

} // namespace jps
