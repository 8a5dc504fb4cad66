#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "gwa/errors.hpp"
#include "gwa/rational.hpp"

namespace gwa {

// Univariate polynomial over Q in the variable h, sparse storage.
// No zero coefficients are ever stored; the zero polynomial has an
// empty map and the sentinel degree kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    /*implicit*/ Poly(const Rational &c) {
        if (c != 0) coef_[0] = c;
    }
    /*implicit*/ Poly(int c) : Poly(Rational(c)) {}

    static Poly monomial(const Rational &c, int deg) {
        if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
        Poly p;
        if (c != 0) p.coef_[deg] = c;
        return p;
    }
    static Poly variable() { return monomial(1, 1); }

    // Dense constructor, coefficients[i] is the coefficient of h^i.
    static Poly from_coeffs(const std::vector<Rational> &coefficients) {
        Poly p;
        for (std::size_t i = 0; i < coefficients.size(); ++i)
            if (coefficients[i] != 0) p.coef_[static_cast<int>(i)] = coefficients[i];
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return coef_.empty() ? kZeroDegree : coef_.rbegin()->first; }
    // Smallest exponent with nonzero coefficient (the valuation).
    int valuation() const {
        if (coef_.empty()) throw std::invalid_argument("Poly::valuation: zero polynomial");
        return coef_.begin()->first;
    }
    bool is_monomial() const { return coef_.size() == 1; }
    bool is_constant() const { return coef_.empty() || degree() == 0; }

    Rational coeff(int deg) const {
        auto it = coef_.find(deg);
        return it == coef_.end() ? Rational(0) : it->second;
    }
    Rational leading_coeff() const { return coef_.empty() ? Rational(0) : coef_.rbegin()->second; }

    const std::map<int, Rational> &terms() const { return coef_; }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(coef_.size());
        for (const auto &[d, c] : coef_) s.push_back(d);
        return s;
    }

    void set_coeff(int deg, const Rational &c) {
        if (deg < 0) throw std::invalid_argument("Poly::set_coeff: negative degree");
        if (c == 0)
            coef_.erase(deg);
        else
            coef_[deg] = c;
    }

    friend Poly operator+(const Poly &a, const Poly &b) {
        Poly r = a;
        for (const auto &[d, c] : b.coef_) r.set_coeff(d, r.coeff(d) + c);
        return r;
    }
    friend Poly operator-(const Poly &a, const Poly &b) {
        Poly r = a;
        for (const auto &[d, c] : b.coef_) r.set_coeff(d, r.coeff(d) - c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto &[d, c] : coef_) r.coef_[d] = -c;
        return r;
    }
    friend Poly operator*(const Poly &a, const Poly &b) {
        Poly r;
        for (const auto &[da, ca] : a.coef_)
            for (const auto &[db, cb] : b.coef_) r.set_coeff(da + db, r.coeff(da + db) + ca * cb);
        return r;
    }
    friend Poly operator*(const Rational &c, const Poly &p) {
        Poly r;
        if (c == 0) return r;
        for (const auto &[d, pc] : p.coef_) r.coef_[d] = c * pc;
        return r;
    }
    Poly &operator+=(const Poly &b) { return *this = *this + b; }
    Poly &operator-=(const Poly &b) { return *this = *this - b; }
    Poly &operator*=(const Poly &b) { return *this = *this * b; }

    friend bool operator==(const Poly &a, const Poly &b) { return a.coef_ == b.coef_; }
    friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

    Rational eval(const Rational &v) const {
        // Horner over the sparse terms, highest degree first.
        Rational acc(0);
        int last = 0;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            if (first) {
                acc = it->second;
                first = false;
            } else {
                acc = acc * rat_pow(v, last - it->first) + it->second;
            }
            last = it->first;
        }
        return first ? Rational(0) : acc * rat_pow(v, last);
    }

    Poly derivative() const {
        Poly r;
        for (const auto &[d, c] : coef_)
            if (d > 0) r.coef_[d - 1] = Rational(d) * c;
        return r;
    }

    // p(other(h)): polynomial composition.
    Poly compose(const Poly &other) const {
        Poly acc;
        int last = 0;
        bool first = true;
        Poly pw;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            if (first) {
                acc = Poly(it->second);
                first = false;
            } else {
                for (int k = 0; k < last - it->first; ++k) acc = acc * other;
                acc += Poly(it->second);
            }
            last = it->first;
        }
        if (first) return Poly();
        for (int k = 0; k < last; ++k) acc = acc * other;
        return acc;
    }

    std::string str() const {
        if (coef_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
            const auto &[d, c] = *it;
            if (!first) os << (c > 0 ? " + " : " - ");
            Rational ac = (!first && c < 0) ? Rational(-c) : c;
            if (first && c < 0 && d > 0 && ac == -1) {
                os << "-";
            } else if (d == 0 || ac != 1) {
                os << ac.get_str();
                if (d > 0) os << "*";
            }
            if (d == 1)
                os << "h";
            else if (d > 1)
                os << "h^" << d;
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Rational> coef_;
};

// p(alpha*h + beta), degree preserved since alpha != 0.
inline Poly compose_affine(const Poly &p, const Rational &alpha, const Rational &beta) {
    if (alpha == 0) throw std::invalid_argument("compose_affine: alpha must be nonzero");
    if (beta == 0) {
        // Pure scaling: coefficient-wise multiply by alpha^d.
        Poly r;
        for (const auto &[d, c] : p.terms()) r.set_coeff(d, c * rat_pow(alpha, d));
        return r;
    }
    Poly lin = Poly::monomial(alpha, 1) + Poly(beta);
    return p.compose(lin);
}

// Shift h -> h + c killing the subleading coefficient; returns (c, p(h+c)).
inline std::pair<Rational, Poly> depress(const Poly &p) {
    int n = p.degree();
    if (n < 1) throw std::invalid_argument("depress: polynomial must be non-constant");
    Rational c = -p.coeff(n - 1) / (Rational(n) * p.leading_coeff());
    return {c, compose_affine(p, 1, c)};
}

// Euclidean division: p = q*d + r with deg(r) < deg(d).
inline std::pair<Poly, Poly> poly_divmod(const Poly &p, const Poly &d) {
    if (d.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
    Poly q, r = p;
    int dd = d.degree();
    Rational lc = d.leading_coeff();
    while (!r.is_zero() && r.degree() >= dd) {
        Rational f = r.leading_coeff() / lc;
        int sh = r.degree() - dd;
        Poly t = Poly::monomial(f, sh);
        q += t;
        r -= t * d;
    }
    return {q, r};
}

// Exact quotient p/d, or nullopt when d does not divide p.
inline std::optional<Poly> poly_exact_div(const Poly &p, const Poly &d) {
    auto [q, r] = poly_divmod(p, d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

// Monic gcd via the Euclidean algorithm.
inline Poly poly_gcd(Poly p, Poly q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
    while (!q.is_zero()) {
        Poly r = poly_divmod(p, q).second;
        p = std::move(q);
        q = std::move(r);
    }
    return (Rational(1) / p.leading_coeff()) * p;
}

// Cauchy bound: every complex root of p lies in |z| <= 1 + max_i |a_i/a_n|.
inline Rational cauchy_root_bound(const Poly &p) {
    if (p.degree() < 1) throw std::invalid_argument("cauchy_root_bound: polynomial must be non-constant");
    Rational lc = p.leading_coeff();
    Rational mx(0);
    for (const auto &[d, c] : p.terms()) {
        if (d == p.degree()) continue;
        Rational v = abs(c / lc);
        if (v > mx) mx = v;
    }
    return Rational(1) + mx;
}

} // namespace gwa
