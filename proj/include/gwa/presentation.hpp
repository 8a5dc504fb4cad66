#pragma once

#include "gwa/errors.hpp"
#include "gwa/laurent.hpp"

namespace gwa {

enum class BaseRing { PolyRing, LaurentRing };

// Degree-one GWA presentation: base ring k[h] or k[h,h^-1], automorphism
// sigma(h) = q*h - h0, and nonzero defining element a with yx = a.
struct GwaPresentation {
    BaseRing base = BaseRing::PolyRing;
    Rational q = 1;
    Rational h0 = 0;
    LaurentPoly a;

    GwaPresentation() = default;
    GwaPresentation(BaseRing base_, Rational q_, Rational h0_, LaurentPoly a_)
        : base(base_), q(std::move(q_)), h0(std::move(h0_)), a(std::move(a_)) {
        if (q == 0) throw std::invalid_argument("GwaPresentation: q must be nonzero");
        if (a.is_zero()) throw std::invalid_argument("GwaPresentation: a must be nonzero");
        if (base == BaseRing::LaurentRing && h0 != 0)
            throw std::invalid_argument("GwaPresentation: Laurent base requires h0 = 0");
        if (base == BaseRing::PolyRing && !a.is_polynomial())
            throw std::invalid_argument("GwaPresentation: polynomial base requires a in k[h]");
    }

    static GwaPresentation quantum(const Rational &q, const Poly &a) {
        return GwaPresentation(BaseRing::PolyRing, q, 0, LaurentPoly(a));
    }
    static GwaPresentation classical(const Rational &h0, const Poly &a) {
        return GwaPresentation(BaseRing::PolyRing, 1, h0, LaurentPoly(a));
    }
    static GwaPresentation laurent(const Rational &q, const LaurentPoly &a) {
        return GwaPresentation(BaseRing::LaurentRing, q, 0, a);
    }

    bool is_quantum() const { return q != 1; }
    // q of infinite multiplicative order; over Q this is exactly q not in {1,-1}.
    bool q_nonroot_of_unity() const { return q != 1 && q != -1; }

    Poly a_poly() const { return a.to_poly(); }
};

// sigma^n(h) = q^n h - h0 * (q^(n-1) + ... + 1); valid for negative n too.
inline std::pair<Rational, Rational> sigma_power_of_h(const GwaPresentation &A, long n) {
    Rational qn = rat_pow(A.q, n);
    Rational shift;
    if (A.q == 1)
        shift = Rational(n) * A.h0;
    else
        shift = A.h0 * (qn - 1) / (A.q - 1);
    return {qn, -shift};
}

// sigma^n applied to a polynomial coefficient.
inline Poly sigma_power_apply(const GwaPresentation &A, const Poly &p, long n) {
    if (n == 0 || p.is_constant()) return p;
    auto [alpha, beta] = sigma_power_of_h(A, n);
    return compose_affine(p, alpha, beta);
}

inline LaurentPoly sigma_power_apply(const GwaPresentation &A, const LaurentPoly &p, long n) {
    if (n == 0 || p.is_zero()) return p;
    if (p.is_polynomial()) return LaurentPoly(sigma_power_apply(A, p.to_poly(), n));
    if (A.h0 != 0)
        throw std::invalid_argument("sigma_power_apply: negative powers of h need h0 = 0");
    // sigma(h^k) = q^k h^k.
    LaurentPoly r = p.scale_variable(rat_pow(A.q, n));
    return r;
}

} // namespace gwa
