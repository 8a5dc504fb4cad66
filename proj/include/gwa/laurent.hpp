#pragma once

#include "gwa/poly.hpp"

namespace gwa {

// Laurent polynomial a(h) = h^valuation * unit(h) with unit(0) != 0.
// The representation is unique for nonzero values; zero is stored as
// (valuation 0, zero unit).
class LaurentPoly {
public:
    LaurentPoly() = default;
    /*implicit*/ LaurentPoly(const Poly &p) { assign(0, p); }
    /*implicit*/ LaurentPoly(const Rational &c) : LaurentPoly(Poly(c)) {}
    /*implicit*/ LaurentPoly(int c) : LaurentPoly(Poly(Rational(c))) {}
    LaurentPoly(int valuation, const Poly &unit) { assign(valuation, unit); }

    static LaurentPoly monomial(const Rational &c, int deg) {
        return LaurentPoly(deg, Poly(c));
    }

    bool is_zero() const { return unit_.is_zero(); }
    int valuation() const {
        if (is_zero()) throw std::invalid_argument("LaurentPoly::valuation: zero value");
        return val_;
    }
    // Largest exponent with nonzero coefficient.
    int top_degree() const { return valuation() + unit_.degree(); }
    const Poly &unit_part() const { return unit_; }
    bool is_monomial() const { return unit_.is_monomial(); }
    bool is_polynomial() const { return is_zero() || val_ >= 0; }

    Rational coeff(int deg) const {
        if (is_zero()) return Rational(0);
        return unit_.coeff(deg - val_);
    }

    std::vector<int> support() const {
        std::vector<int> s;
        if (is_zero()) return s;
        for (int d : unit_.support()) s.push_back(d + val_);
        return s;
    }

    // Conversion to Poly; requires valuation >= 0.
    Poly to_poly() const {
        if (is_zero()) return Poly();
        if (val_ < 0) throw std::invalid_argument("LaurentPoly::to_poly: negative valuation");
        Poly r;
        for (const auto &[d, c] : unit_.terms()) r.set_coeff(d + val_, c);
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int v = std::min(a.val_, b.val_);
        Poly s = shift_up(a.unit_, a.val_ - v) + shift_up(b.unit_, b.val_ - v);
        return LaurentPoly(v, s);
    }
    friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        r.unit_ = -r.unit_;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
        if (a.is_zero() || b.is_zero()) return LaurentPoly();
        return LaurentPoly(a.val_ + b.val_, a.unit_ * b.unit_);
    }
    friend LaurentPoly operator*(const Rational &c, const LaurentPoly &p) {
        if (c == 0) return LaurentPoly();
        LaurentPoly r = p;
        r.unit_ = c * r.unit_;
        return r;
    }
    LaurentPoly &operator+=(const LaurentPoly &b) { return *this = *this + b; }
    LaurentPoly &operator*=(const LaurentPoly &b) { return *this = *this * b; }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
        return a.unit_ == b.unit_ && (a.is_zero() || a.val_ == b.val_);
    }
    friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

    // a(c*h): coefficient of h^d picks up c^d.
    LaurentPoly scale_variable(const Rational &c) const {
        if (c == 0) throw std::invalid_argument("LaurentPoly::scale_variable: zero scale");
        if (is_zero()) return LaurentPoly();
        LaurentPoly r(val_, Poly());
        Poly u;
        for (const auto &[d, co] : unit_.terms()) u.set_coeff(d, co * rat_pow(c, d + val_));
        return LaurentPoly(val_, u);
    }

    // a(h^-1): exponents negate.
    LaurentPoly invert_variable() const {
        if (is_zero()) return LaurentPoly();
        LaurentPoly r;
        for (const auto &[d, c] : unit_.terms())
            r += LaurentPoly::monomial(c, -(d + val_));
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        if (val_ >= 0) return to_poly().str();
        std::ostringstream os;
        bool first = true;
        const auto &t = unit_.terms();
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            int d = it->first + val_;
            Rational c = it->second;
            if (!first) {
                os << (c > 0 ? " + " : " - ");
                if (c < 0) c = -c;
            }
            if (d == 0 || c != 1 || (first && c < 0)) {
                os << c.get_str();
                if (d != 0) os << "*";
            }
            if (d != 0) os << "h^" << d;
            first = false;
        }
        return os.str();
    }

private:
    static Poly shift_up(const Poly &p, int k) {
        Poly r;
        for (const auto &[d, c] : p.terms()) r.set_coeff(d + k, c);
        return r;
    }

    void assign(int valuation, const Poly &unit) {
        if (unit.is_zero()) {
            val_ = 0;
            unit_ = Poly();
            return;
        }
        int v = unit.valuation();
        val_ = valuation + v;
        Poly u;
        for (const auto &[d, c] : unit.terms()) u.set_coeff(d - v, c);
        unit_ = u;
    }

    int val_ = 0;
    Poly unit_;
};

} // namespace gwa
