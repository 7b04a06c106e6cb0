#include "core/poly.hpp"

namespace jps {

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, q] : t_) r.t_.emplace(m, c * q);
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw invalid_arg("negative polynomial power");
    Poly r = Poly::constant(Rat(1));
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

Poly Poly::derivative(int i) const {
    if (i < 1 || i > 4) throw invalid_arg("derivative index out of 1..4");
    std::size_t v = static_cast<std::size_t>(i - 1);
    Poly r;
    for (const auto& [m, c] : t_) {
        if (m.e[v] == 0) continue;
        Mono d = m;
        d.e[v] -= 1;
        r.add_term(d, c * m.e[v]);
    }
    return r;
}

std::optional<int> Poly::total_degree() const {
    if (t_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
    return d;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    // Leading (largest) monomial first.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (s.empty()) {
            if (a < 0) {
                s += '-';
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool unit = (a == 1);
        bool is_const = (m == Mono::one());
        if (!unit || is_const) s += rat_str(a);
        if (!is_const) {
            if (!unit) s += '*';
            s += m.str();
        }
    }
    return s;
}

GradingInfo grading(const Poly& f, const WeightVector& w) {
    GradingInfo info;
    for (const auto& [m, c] : f.terms()) {
        long d = m.degree(w);
        info.components[d].add_term(m, c);
    }
    if (info.components.empty()) {
        info.homogeneous = true; // zero is homogeneous of undefined degree
        return info;
    }
    info.homogeneous = (info.components.size() == 1);
    if (info.homogeneous) info.degree = info.components.begin()->first;
    return info;
}

std::optional<long> homogeneous_degree(const Poly& f, const WeightVector& w) {
    GradingInfo g = grading(f, w);
    if (!g.homogeneous) throw invalid_arg("polynomial is not weight homogeneous");
    return g.degree;
}

} // namespace jps
