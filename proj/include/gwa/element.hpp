#pragma once

#include "gwa/presentation.hpp"

namespace gwa {

// Element of a degree-one GWA in normal form: a finite sum of components
// p_d(h) * v_d where v_d = x^d for d > 0, v_0 = 1, v_d = y^(-d) for d < 0.
class GwaElement {
public:
    GwaElement() = default;

    static GwaElement from_coeff(const LaurentPoly &p) { return component(0, p); }
    static GwaElement component(int degree, const LaurentPoly &p) {
        GwaElement e;
        if (!p.is_zero()) e.comp_[degree] = p;
        return e;
    }
    static GwaElement one() { return from_coeff(LaurentPoly(1)); }
    static GwaElement gen_h() { return from_coeff(LaurentPoly::monomial(1, 1)); }
    static GwaElement gen_x() { return component(1, LaurentPoly(1)); }
    static GwaElement gen_y() { return component(-1, LaurentPoly(1)); }

    bool is_zero() const { return comp_.empty(); }
    const std::map<int, LaurentPoly> &components() const { return comp_; }
    LaurentPoly coeff(int degree) const {
        auto it = comp_.find(degree);
        return it == comp_.end() ? LaurentPoly() : it->second;
    }
    std::vector<int> degree_support() const {
        std::vector<int> s;
        s.reserve(comp_.size());
        for (const auto &[d, p] : comp_) s.push_back(d);
        return s;
    }

    void add_component(int degree, const LaurentPoly &p) {
        auto it = comp_.find(degree);
        LaurentPoly s = (it == comp_.end() ? p : it->second + p);
        if (s.is_zero())
            comp_.erase(degree);
        else
            comp_[degree] = s;
    }

    friend GwaElement operator+(const GwaElement &a, const GwaElement &b) {
        GwaElement r = a;
        for (const auto &[d, p] : b.comp_) r.add_component(d, p);
        return r;
    }
    friend GwaElement operator-(const GwaElement &a, const GwaElement &b) {
        GwaElement r = a;
        for (const auto &[d, p] : b.comp_) r.add_component(d, -p);
        return r;
    }
    GwaElement operator-() const {
        GwaElement r;
        for (const auto &[d, p] : comp_) r.comp_[d] = -p;
        return r;
    }
    friend GwaElement operator*(const Rational &c, const GwaElement &e) {
        GwaElement r;
        if (c == 0) return r;
        for (const auto &[d, p] : e.comp_) r.comp_[d] = c * p;
        return r;
    }

    friend bool operator==(const GwaElement &a, const GwaElement &b) { return a.comp_ == b.comp_; }
    friend bool operator!=(const GwaElement &a, const GwaElement &b) { return !(a == b); }

    std::string str() const {
        if (comp_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = comp_.rbegin(); it != comp_.rend(); ++it) {
            const auto &[d, p] = *it;
            if (!first) os << " + ";
            os << "(" << p.str() << ")";
            if (d > 0) os << "*x" << (d > 1 ? "^" + std::to_string(d) : "");
            if (d < 0) os << "*y" << (d < -1 ? "^" + std::to_string(-d) : "");
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, LaurentPoly> comp_;
};

namespace detail {

// Product of single components (p v_m)(r v_n). The right coefficient
// commutes past v_m via sigma^m; mixed x/y powers collapse pairwise with
// x^m y^j = sigma^m(a) x^(m-1) y^(j-1) and y^i x^n = sigma^{-(i-1)}(a) y^(i-1) x^(n-1).
inline std::pair<int, LaurentPoly> mul_component(const GwaPresentation &A, const LaurentPoly &p,
                                                 int m, const LaurentPoly &r, int n) {
    LaurentPoly coef = p * sigma_power_apply(A, r, m);
    if (m > 0 && n < 0) {
        int steps = std::min(m, -n);
        for (int k = 0; k < steps; ++k) coef *= sigma_power_apply(A, A.a, m - k);
    } else if (m < 0 && n > 0) {
        int steps = std::min(-m, n);
        for (int k = 0; k < steps; ++k) coef *= sigma_power_apply(A, A.a, -(-m - 1 - k));
    }
    return {m + n, coef};
}

} // namespace detail

// Product in A, in normal form. Bilinear and graded.
inline GwaElement multiply(const GwaPresentation &A, const GwaElement &u, const GwaElement &v) {
    GwaElement r;
    for (const auto &[m, p] : u.components())
        for (const auto &[n, q] : v.components()) {
            auto [d, coef] = detail::mul_component(A, p, m, q, n);
            r.add_component(d, coef);
        }
    return r;
}

inline GwaElement power(const GwaPresentation &A, const GwaElement &u, unsigned e) {
    GwaElement acc = GwaElement::one();
    for (unsigned k = 0; k < e; ++k) acc = multiply(A, acc, u);
    return acc;
}

} // namespace gwa
