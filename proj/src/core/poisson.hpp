#pragma once

#include <optional>
#include <string>

#include "core/veccalc.hpp"

namespace jps {

enum class PresetKind { custom, sklyanin_k, sklyanin_j };

struct SklyaninParams {
    PresetKind variant = PresetKind::custom;
    Rat k;          // k-form
    Rat j1, j2, j3; // J-form
};

// Jacobian Poisson structure on K[x1..x4]: {f,g} = lambda * det(grad f,
// grad g, grad P1, grad P2). P1 and P2 are weight-homogeneous Casimirs;
// construction validates homogeneity, lambda != 0, the Jacobi identity on
// all coordinate triples and the Casimir property.
class PoissonStructure {
public:
    static PoissonStructure custom(Poly p1, Poly p2, Rat lambda, WeightVector w);

    // q1 = 1/2(x1^2+x3^2) + k*x2*x4, q2 = 1/2(x2^2+x4^2) + k*x1*x3, with
    // lambda = -1 so that the coordinate brackets come out as
    // {x_i, x_{i+1}} = k^2 x_i x_{i+1} - x_{i+2} x_{i+3} and
    // {x_i, x_{i+2}} = k (x_{i+3}^2 - x_{i+1}^2), indices mod 4.
    static PoissonStructure sklyanin_k(const Rat& k);

    // P1 = Q1 + Q2, P2 = Q2 with Q1 = 1/2(x1^2+x2^2+x3^2) and
    // Q2 = 1/2(x4^2 + J1 x1^2 + J2 x2^2 + J3 x3^2), lambda = 1.
    // Requires the J_i pairwise distinct and none of them in {-1, 0, 1}.
    static PoissonStructure sklyanin_j(const Rat& j1, const Rat& j2, const Rat& j3);

    const Poly& p1() const { return p1_; }
    const Poly& p2() const { return p2_; }
    const Rat& lambda() const { return lambda_; }
    const WeightVector& weights() const { return w_; }
    PresetKind kind() const { return kind_; }
    const std::optional<SklyaninParams>& params() const { return params_; }

    long p1_degree() const { return deg_p1_; }
    long p2_degree() const { return deg_p2_; }
    // weight degree shift of every boundary/coboundary arrow
    long bracket_shift() const { return deg_p1_ + deg_p2_ - w_.total(); }

    const Vec4& grad_p1() const { return grad_p1_; }
    const Vec4& grad_p2() const { return grad_p2_; }
    // cross(grad P1, grad P2), unscaled
    const Vec6& jacobian2() const { return jac2_; }
    // lambda * cross(grad P1, grad P2): the 2-vector every boundary map uses
    const Vec6& scaled_jacobian2() const { return w2_; }
    const Vec6& f_scaled_jacobian2() const { return fw2_; }

    // {f, g}
    Poly bracket(const Poly& f, const Poly& g) const;

    // the six coordinate brackets in Vec6 slot order:
    // ({x1,x4},{x1,x2},{x3,x2},{x3,x4},{x3,x1},{x2,x4})
    const Vec6& bracket_table() const { return table_; }

    // {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
    Poly jacobiator(const Poly& f, const Poly& g, const Poly& h) const;

    // true iff {c, x_j} = 0 for j = 1..4
    bool is_casimir(const Poly& c) const;

    std::string describe() const;

private:
    PoissonStructure(Poly p1, Poly p2, Rat lambda, WeightVector w, PresetKind kind,
                     std::optional<SklyaninParams> params);
    void validate() const;

    Poly p1_, p2_;
    Rat lambda_;
    WeightVector w_;
    PresetKind kind_;
    std::optional<SklyaninParams> params_;
    long deg_p1_ = 0, deg_p2_ = 0;
    Vec4 grad_p1_, grad_p2_;
    Vec6 jac2_, w2_, fw2_;
    Vec6 table_;
};

} // namespace jps
