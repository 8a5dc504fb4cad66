#pragma once

#include "gwa/canonical.hpp"
#include "gwa/iso.hpp"

namespace gwa {

// Quantum Smith algebra R(f): generators x, y, h with xh = sigma(h)x,
// hy = y sigma(h), xy - yx = f(h), where sigma = sigma_q and f(0) = 0.
// The canonical representative a satisfies a(qh) - a(h) = f(h) and a(0) = 0;
// the Casimir is Omega = yx - a(h).
struct SmithPresentation {
    Rational q;
    Poly f;
    Poly a;
};

// The unique a with a(0) = 0 and a(qh) - a(h) = f(h): a_i = f_i / (q^i - 1).
inline Poly solve_a_from_f(const Poly &f, const Rational &q) {
    if (q == 0 || q == 1 || q == -1)
        throw unsupported_error("solve_a_from_f: q must not be 0, 1 or -1");
    if (f.coeff(0) != 0) throw std::invalid_argument("solve_a_from_f: f(0) = 0 required");
    Poly a;
    for (const auto &[i, c] : f.terms()) a.set_coeff(i, c / (rat_pow(q, i) - 1));
    return a;
}

inline SmithPresentation make_smith(const Rational &q, const Poly &f) {
    return {q, f, solve_a_from_f(f, q)};
}

// f recovered from a representative: a(qh) - a(h).
inline Poly smith_f_from_a(const Poly &a, const Rational &q) {
    return compose_affine(a, q, 0) - a;
}

struct SmithIsoWitness {
    ScalarDescriptor rho, beta;
    Rational alpha = 0; // additive constant; zero for zero-constant representatives
};

// Decide R(f1) iso R(f2): exists alpha, beta, rho with a1(h) = rho*a2(beta*h) + alpha.
// Representatives have zero constant term, so alpha is forced to zero and the
// multiplicative criterion of the quantum GWA decider applies directly.
inline std::optional<SmithIsoWitness> smith_iso(const SmithPresentation &s1,
                                                const SmithPresentation &s2,
                                                FieldMode mode = FieldMode::OverClosure) {
    if (s1.q != s2.q) throw std::invalid_argument("smith_iso: presentations must share q");
    if (s1.a.degree() < 1 || s2.a.degree() < 1)
        throw unsupported_error("smith_iso: defining polynomials must be non-constant");
    auto w = iso_quantum(s2.a, s1.a, mode);
    if (!w) return std::nullopt;
    if (const auto *qw = std::get_if<QuantumScaleWitness>(&*w))
        return SmithIsoWitness{qw->rho, qw->alpha, 0};
    // Monomial pair of equal degree: a1 = (c1/c2) * a2(h).
    Rational rho = s1.a.leading_coeff() / s2.a.leading_coeff();
    return SmithIsoWitness{ScalarDescriptor::exact(rho), ScalarDescriptor::exact(1), 0};
}

// --------------------------------------------------------------------------
// Witten deformations M(eps) and Le Bruyn conformal algebras.

struct WittenParams {
    Rational eps1, eps2, eps3, eps4, eps5, eps6, eps7;
};

struct SmithReduction {
    SmithPresentation smith;
    Poly raw_a;        // the defining polynomial before the canonicalizing shift
    Poly canonical_a;  // the reference form the reduction is checked against
    SmithIsoWitness canonical_witness;
};

namespace detail {

inline SmithIsoWitness check_canonical(const SmithPresentation &s, const Poly &canonical_a) {
    SmithPresentation ref{s.q, smith_f_from_a(canonical_a, s.q), canonical_a};
    auto w = smith_iso(s, ref);
    if (!w) throw std::logic_error("Smith reduction: canonical-form check failed");
    return *w;
}

} // namespace detail

inline SmithReduction witten_to_smith(const WittenParams &w) {
    if (w.eps1 != w.eps3) throw std::invalid_argument("witten_to_smith: eps1 = eps3 violated");
    if (w.eps1 == 0 || w.eps1 == 1 || w.eps1 == -1)
        throw std::invalid_argument("witten_to_smith: eps1 not in {0, 1, -1} violated");
    if (w.eps2 != w.eps4) throw std::invalid_argument("witten_to_smith: eps2 = eps4 violated");
    if (w.eps5 != 1) throw std::invalid_argument("witten_to_smith: eps5 = 1 violated");
    Rational d = w.eps1 * w.eps1 - 1;
    if (w.eps7 != 2 * w.eps6 * w.eps1 * w.eps2 / d)
        throw std::invalid_argument("witten_to_smith: eps7 = 2*eps6*eps1*eps2/(eps1^2-1) violated");
    if (w.eps6 == 0)
        throw std::invalid_argument("witten_to_smith: eps6 must be nonzero for the quadratic form");
    SmithReduction r;
    // A class representative in the original variable (defined up to the
    // central element, so only its class matters).
    r.raw_a = Poly::from_coeffs({0, -w.eps6 * w.eps2 * w.eps2 / (w.eps1 * d), w.eps6 / d});
    // Translate z = t + delta to the fixed point of sigma(z) = eps1*z + eps2,
    // where sigma becomes sigma_q with q = eps1. The commutator relation
    // xy - yx = -(eps6 z^2 + eps7 z) then reads, modulo the central constant,
    // f(t) = -eps6 t^2 + (2 eps6 eps2 / (eps1^2-1)) t.
    Poly f = Poly::from_coeffs({0, 2 * w.eps6 * w.eps2 / d, -w.eps6});
    r.smith = make_smith(w.eps1, f);
    r.canonical_a = Poly::from_coeffs({0, -w.eps2 * w.eps2 / w.eps1, 1});
    r.canonical_witness = detail::check_canonical(r.smith, r.canonical_a);
    return r;
}

struct LeBruynResult {
    bool degenerate = false; // beta = 0: f vanishes, no Smith datum
    std::optional<SmithReduction> reduction;
};

inline LeBruynResult lebruyn_to_smith(const Rational &alpha, const Rational &beta) {
    if (alpha == 0 || alpha == 1 || alpha == -1)
        throw unsupported_error("lebruyn_to_smith: alpha must not be 0, 1 or -1");
    if (beta == 0) return {true, std::nullopt};
    Rational d = alpha * alpha - 1;
    SmithReduction r;
    r.raw_a = Poly::from_coeffs({0, beta / (alpha * (1 - alpha * alpha)), beta / d});
    // Same translation as in the Witten case, with sigma(z) = alpha*z + 1 and
    // commutator -(beta z^2 + z): f(t) = -beta t^2 + ((2 beta + 1 - alpha)/(alpha-1)) t.
    Poly f = Poly::from_coeffs({0, (2 * beta + 1 - alpha) / (alpha - 1), -beta});
    r.smith = make_smith(alpha, f);
    // For 2 beta + 1 = alpha the linear term cancels and the class is the
    // monomial one; otherwise any nonzero linear term gives the same class.
    r.canonical_a = r.smith.a.is_monomial() ? Poly::from_coeffs({0, 0, 1})
                                            : Poly::from_coeffs({0, -Rational(1) / alpha, 1});
    r.canonical_witness = detail::check_canonical(r.smith, r.canonical_a);
    return {false, r};
}

} // namespace gwa
