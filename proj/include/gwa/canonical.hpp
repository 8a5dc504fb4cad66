#pragma once

#include "gwa/poly.hpp"

namespace gwa {

// The three alternatives for sigma(h) = q*h - h0 over k[h]:
// commutative (q,h0) = (1,0); classical q = 1, h0 != 0, sigma_cl(h') = h' - 1;
// quantum q != 1, sigma_q(h') = q*h'.
enum class CanonicalVariant { Commutative, Classical, Quantum };

struct CanonicalClass {
    CanonicalVariant variant = CanonicalVariant::Commutative;
    Rational q = 1;
    Poly a_canonical;
    // Change of variable: old h = scale * h' + shift.
    Rational scale = 1, shift = 0;
};

inline CanonicalClass canonicalize(const Rational &q, const Rational &h0, const Poly &a) {
    if (q == 0) throw std::invalid_argument("canonicalize: q must be nonzero (sigma not an automorphism)");
    if (a.is_zero()) throw std::invalid_argument("canonicalize: a must be nonzero");
    CanonicalClass c;
    c.q = q;
    if (q == 1 && h0 == 0) {
        c.variant = CanonicalVariant::Commutative;
        c.a_canonical = a;
        return c;
    }
    if (q == 1) {
        // h = h0 * h', so a'(h') = a(h0 h').
        c.variant = CanonicalVariant::Classical;
        c.scale = h0;
        c.shift = 0;
        c.a_canonical = compose_affine(a, h0, 0);
        return c;
    }
    // h = h' - h0/(1-q), so a'(h') = a(h' - h0/(1-q)).
    c.variant = CanonicalVariant::Quantum;
    c.scale = 1;
    c.shift = -h0 / (Rational(1) - q);
    c.a_canonical = compose_affine(a, 1, c.shift);
    return c;
}

// Fraction-field classes with their E/G invariants, read off from the
// classification rather than computed from raw elements.
enum class FractionFieldVariant { CommutativeRational, Weyl1, QuantumSkew };
enum class EValue { ZeroOnly, AllOfK, NotApplicable };
enum class GDescription { Trivial, CyclicGeneratedByQ, NotApplicable };

struct FractionFieldClass {
    FractionFieldVariant variant;
    EValue e_value;
    GDescription g_description;
    Rational q = 1; // meaningful for QuantumSkew
};

inline FractionFieldClass fraction_field_class(const CanonicalClass &c) {
    switch (c.variant) {
        case CanonicalVariant::Commutative:
            return {FractionFieldVariant::CommutativeRational, EValue::NotApplicable,
                    GDescription::NotApplicable, 1};
        case CanonicalVariant::Classical:
            return {FractionFieldVariant::Weyl1, EValue::AllOfK, GDescription::Trivial, 1};
        default:
            return {FractionFieldVariant::QuantumSkew, EValue::ZeroOnly,
                    GDescription::CyclicGeneratedByQ, c.q};
    }
}

// Is target in the cyclic group <q>? Exact scan; the height of q^m grows
// strictly since |q| != 1, so the scan terminates on its own. The cap only
// guards against bugs and cannot fire for reduced rationals.
inline std::optional<long> cyclic_group_exponent(const Rational &target, const Rational &q) {
    if (q == 0 || target == 0) throw std::invalid_argument("cyclic_group_exponent: zero argument");
    if (target == 1) return 0;
    if (q == 1) return std::nullopt;
    if (q == -1) return target == -1 ? std::optional<long>(1) : std::nullopt;
    Integer th = rat_height(target);
    Rational up = q, down = Rational(1) / q;
    for (long m = 1; m <= 64; ++m) {
        if (up == target) return m;
        if (down == target) return -m;
        if (rat_height(up) > th && rat_height(down) > th) return std::nullopt;
        up *= q;
        down /= q;
    }
    throw std::logic_error("cyclic_group_exponent: iteration cap exceeded");
}

// <q1> = <q2> for infinite-order rationals iff q2 in {q1, 1/q1}.
inline bool q_groups_equal(const Rational &q1, const Rational &q2) {
    auto m = cyclic_group_exponent(q2, q1);
    auto n = cyclic_group_exponent(q1, q2);
    return m.has_value() && n.has_value();
}

struct RationalEquivalence {
    bool compatible = false; // necessary condition only, never sufficiency
    std::string reason;      // set when incompatible
};

inline RationalEquivalence rational_equivalence_check(const FractionFieldClass &c1,
                                                      const FractionFieldClass &c2) {
    if (c1.variant != c2.variant)
        return {false, "fraction-field classes differ"};
    if (c1.variant == FractionFieldVariant::QuantumSkew && !q_groups_equal(c1.q, c2.q))
        return {false, "multiplicative groups <q1> and <q2> differ"};
    return {true, ""};
}

} // namespace gwa
