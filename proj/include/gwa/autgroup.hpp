#pragma once

#include <numeric>

#include "gwa/presentation.hpp"

namespace gwa {

enum class AutStructure { ZmodPTimesKstar, KstarTimesKstar };

// Shape of Aut A_q(a): (Z/pZ) x k* with p the gcd of support gaps of a
// (non-monomial case), or k* x k* (monomial case).
struct AutDescriptor {
    bool monomial = false;
    unsigned p = 1;  // torsion order, non-monomial case
    int i0 = 0;      // valuation of a; equals deg(a) in the monomial case
    AutStructure structure = AutStructure::ZmodPTimesKstar;
};

inline AutDescriptor aut_descriptor(const Poly &a) {
    if (a.degree() < 1) throw unsupported_error("aut_descriptor: a must be non-constant");
    AutDescriptor d;
    d.i0 = a.valuation();
    if (a.is_monomial()) {
        d.monomial = true;
        d.structure = AutStructure::KstarTimesKstar;
        return d;
    }
    unsigned g = 0;
    for (int i : a.support()) g = std::gcd(g, static_cast<unsigned>(i - d.i0));
    d.p = g;
    d.structure = AutStructure::ZmodPTimesKstar;
    return d;
}

// Single monomial c * zeta^e in the p-th cyclotomic ring, zeta a primitive
// p-th root of unity. Every relation check in the automorphism verification
// compares single products coefficient-wise, so sums of mixed powers never
// arise; addition of distinct exponents is a structural error.
struct CycloScalar {
    unsigned p = 1;
    Rational coeff = 0;
    unsigned zeta_exp = 0; // mod p, always 0 when coeff == 0

    static CycloScalar make(unsigned p, const Rational &c, long e) {
        if (p == 0) throw std::invalid_argument("CycloScalar: modulus must be positive");
        if (c == 0) return {p, 0, 0};
        long r = e % static_cast<long>(p);
        if (r < 0) r += p;
        return {p, c, static_cast<unsigned>(r)};
    }
    static CycloScalar rational(unsigned p, const Rational &c) { return make(p, c, 0); }

    bool is_zero() const { return coeff == 0; }

    friend CycloScalar operator*(const CycloScalar &a, const CycloScalar &b) {
        check_moduli(a, b);
        return make(a.p, a.coeff * b.coeff, static_cast<long>(a.zeta_exp) + b.zeta_exp);
    }
    friend CycloScalar operator+(const CycloScalar &a, const CycloScalar &b) {
        check_moduli(a, b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.zeta_exp != b.zeta_exp)
            throw std::domain_error("CycloScalar: addition of distinct zeta exponents");
        return make(a.p, a.coeff + b.coeff, a.zeta_exp);
    }
    CycloScalar inverse() const {
        if (is_zero()) throw std::invalid_argument("CycloScalar: zero has no inverse");
        return make(p, Rational(1) / coeff, -static_cast<long>(zeta_exp));
    }
    CycloScalar pow(long e) const {
        if (is_zero()) {
            if (e <= 0) throw std::invalid_argument("CycloScalar: zero to non-positive power");
            return *this;
        }
        return make(p, rat_pow(coeff, e), static_cast<long>(zeta_exp) * e);
    }
    friend bool operator==(const CycloScalar &a, const CycloScalar &b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.p == b.p && a.coeff == b.coeff && a.zeta_exp == b.zeta_exp;
    }
    friend bool operator!=(const CycloScalar &a, const CycloScalar &b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s = coeff.get_str();
        if (zeta_exp != 0) {
            s += "*zeta";
            if (zeta_exp > 1) s += "^" + std::to_string(zeta_exp);
            s += "[p=" + std::to_string(p) + "]";
        }
        return s;
    }

private:
    static void check_moduli(const CycloScalar &a, const CycloScalar &b) {
        if (a.p != b.p) throw std::domain_error("CycloScalar: mixed cyclotomic moduli");
    }
};

// x -> x_scale * x, h -> h_scale * h, y -> y_scale * y.
struct ScalarAutomorphism {
    unsigned p = 1;
    CycloScalar x_scale, h_scale, y_scale;
};

// Non-monomial case: x -> alpha x, h -> zeta^e h, y -> zeta^(e*i0) alpha^-1 y.
inline ScalarAutomorphism make_automorphism(const AutDescriptor &d, const Rational &alpha, long e) {
    if (d.monomial)
        throw std::invalid_argument("make_automorphism: use the gamma overload for monomial a");
    if (alpha == 0) throw std::invalid_argument("make_automorphism: alpha must be nonzero");
    if (e < 0 || e >= static_cast<long>(d.p))
        throw std::invalid_argument("make_automorphism: zeta exponent out of range [0, p)");
    ScalarAutomorphism s;
    s.p = d.p;
    s.x_scale = CycloScalar::rational(d.p, alpha);
    s.h_scale = CycloScalar::make(d.p, 1, e);
    s.y_scale = CycloScalar::make(d.p, Rational(1) / alpha, e * d.i0);
    return s;
}

// Monomial case (a = c*h^n): x -> alpha x, h -> gamma h, y -> gamma^n alpha^-1 y,
// with gamma an arbitrary nonzero rational.
inline ScalarAutomorphism make_automorphism(const AutDescriptor &d, const Rational &alpha,
                                            const Rational &gamma) {
    if (!d.monomial)
        throw std::invalid_argument("make_automorphism: rational gamma requires monomial a");
    if (alpha == 0 || gamma == 0)
        throw std::invalid_argument("make_automorphism: scalars must be nonzero");
    ScalarAutomorphism s;
    s.p = 1;
    s.x_scale = CycloScalar::rational(1, alpha);
    s.h_scale = CycloScalar::rational(1, gamma);
    s.y_scale = CycloScalar::rational(1, rat_pow(gamma, d.i0) / alpha);
    return s;
}

struct AutVerification {
    bool ok = false;
    std::string reason;
};

// Check the defining relations under the scalar map. The x/y-h relations
// hold for any nonzero scalars; the content is y_scale * x_scale == h_scale^i
// for every i in the support of a (the coefficient-wise form of
// a(h_scale * h) = y_scale * x_scale * a(h)).
inline AutVerification verify_automorphism(const ScalarAutomorphism &s, const GwaPresentation &A) {
    if (A.base != BaseRing::PolyRing || !A.q_nonroot_of_unity())
        throw unsupported_error("verify_automorphism: requires quantum presentation over k[h], q not 1 or -1");
    try {
        if (s.x_scale.is_zero() || s.h_scale.is_zero() || s.y_scale.is_zero())
            return {false, "zero generator scalar"};
        if (s.x_scale.p != s.p || s.h_scale.p != s.p || s.y_scale.p != s.p)
            return {false, "inconsistent cyclotomic moduli"};
        CycloScalar yx = s.y_scale * s.x_scale;
        for (int i : A.a.support()) {
            if (yx != s.h_scale.pow(i))
                return {false, "relation yx = a(h) fails at support exponent " + std::to_string(i)};
        }
        return {true, ""};
    } catch (const std::domain_error &ex) {
        return {false, std::string("structural error: ") + ex.what()};
    }
}

inline ScalarAutomorphism compose(const ScalarAutomorphism &a, const ScalarAutomorphism &b) {
    if (a.p != b.p) throw std::domain_error("compose: mixed cyclotomic moduli");
    return {a.p, a.x_scale * b.x_scale, a.h_scale * b.h_scale, a.y_scale * b.y_scale};
}

inline ScalarAutomorphism inverse(const ScalarAutomorphism &a) {
    return {a.p, a.x_scale.inverse(), a.h_scale.inverse(), a.y_scale.inverse()};
}

inline ScalarAutomorphism identity_automorphism(unsigned p) {
    CycloScalar one = CycloScalar::rational(p, 1);
    return {p, one, one, one};
}

} // namespace gwa
