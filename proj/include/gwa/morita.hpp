#pragma once

#include <algorithm>
#include <numeric>

#include "gwa/canonical.hpp"
#include "gwa/presentation.hpp"

namespace gwa {

struct SimplicityCertificate {
    bool simple = false;
    std::string reason;             // set when not simple
    std::optional<long> witness_m;  // shift/power exponent violating the criterion
};

// Classical simplicity: a has simple roots and no two distinct roots differ
// by an integer. gcd-based, no root isolation: any integer difference m
// satisfies |m| <= 2 * CauchyBound(a).
inline SimplicityCertificate is_simple_classical(const Poly &a) {
    if (a.degree() < 1) throw unsupported_error("is_simple_classical: a must be non-constant");
    if (poly_gcd(a, a.derivative()).degree() > 0)
        return {false, "repeated root: gcd(a, a') is non-constant", std::nullopt};
    Rational bound = 2 * cauchy_root_bound(a);
    long mmax = static_cast<long>(mpz_class(bound.get_num() / bound.get_den()).get_si());
    for (long m = 1; m <= mmax; ++m) {
        if (poly_gcd(a, compose_affine(a, 1, m)).degree() > 0)
            return {false, "roots differ by the integer " + std::to_string(m), m};
    }
    return {true, "", std::nullopt};
}

namespace detail {

// Reciprocal polynomial h^deg * p(1/h); p(0) != 0 keeps the degree.
inline Poly reciprocal(const Poly &p) {
    Poly r;
    int n = p.degree();
    for (const auto &[d, c] : p.terms()) r.set_coeff(n - d, c);
    return r;
}

// Smallest M with |Q|^M > ratio, Q chosen so |Q| > 1. Exact powering.
inline long quantum_scan_bound(const Rational &q, const Rational &ratio) {
    Rational absq = abs(q);
    Rational Q = absq > 1 ? absq : Rational(1) / absq;
    Rational pw(1);
    long m = 0;
    while (pw <= ratio) {
        pw *= Q;
        ++m;
        if (m > 4096) throw std::logic_error("quantum_scan_bound: runaway scan");
    }
    return m;
}

} // namespace detail

// Quantum simplicity of A'_q(a) = k[h^-1,h](sigma_q, a): q of infinite order,
// the unit part has simple roots, and no two distinct roots have ratio q^m.
inline SimplicityCertificate is_simple_quantum(const LaurentPoly &a, const Rational &q) {
    if (a.is_zero()) throw std::invalid_argument("is_simple_quantum: a must be nonzero");
    if (q == 0) throw std::invalid_argument("is_simple_quantum: q must be nonzero");
    if (q == 1 || q == -1) return {false, "q is a root of unity", std::nullopt};
    Poly u = a.unit_part();
    if (u.degree() == 0) return {true, "", std::nullopt};
    if (poly_gcd(u, u.derivative()).degree() > 0)
        return {false, "repeated root: gcd(a~, a~') is non-constant", std::nullopt};
    // Root magnitudes lie in [1/CauchyBound(rev), CauchyBound], so the power
    // scan is finite.
    Rational rmax = cauchy_root_bound(u);
    Rational rmin = Rational(1) / cauchy_root_bound(detail::reciprocal(u));
    long bound = detail::quantum_scan_bound(q, rmax / rmin);
    for (long m = 1; m <= bound; ++m) {
        if (poly_gcd(u, compose_affine(u, rat_pow(q, m), 0)).degree() > 0)
            return {false, "roots with ratio q^" + std::to_string(m), m};
    }
    return {true, "", std::nullopt};
}

// --------------------------------------------------------------------------
// Morita necessary conditions.

enum class MoritaVerdict { NotEquivalent, NecessaryConditionsPass, SufficientConditionMet };

struct MoritaCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct MoritaSufficientWitness {
    std::vector<std::size_t> tau; // roots1[i] matches roots2[tau[i]]
    std::vector<long> shifts;     // m_i
};

struct MoritaReport {
    MoritaVerdict verdict = MoritaVerdict::NotEquivalent;
    std::vector<MoritaCheck> checks;
    std::string reason;
    std::optional<MoritaSufficientWitness> witness;
};

inline MoritaReport morita_necessary(const GwaPresentation &p1, const GwaPresentation &p2) {
    auto span = [](const LaurentPoly &a) {
        auto s = a.support();
        return s.back() - s.front();
    };
    if (span(p1.a) < 1 || span(p2.a) < 1)
        throw unsupported_error("morita_necessary: defining polynomials must be non-constant");
    MoritaReport rep;
    auto fail = [&rep](const std::string &why) {
        rep.verdict = MoritaVerdict::NotEquivalent;
        rep.reason = why;
        return rep;
    };

    auto classify = [](const GwaPresentation &p) {
        if (p.base == BaseRing::LaurentRing)
            return FractionFieldClass{FractionFieldVariant::QuantumSkew, EValue::ZeroOnly,
                                      GDescription::CyclicGeneratedByQ, p.q};
        return fraction_field_class(canonicalize(p.q, p.h0, p.a_poly()));
    };
    FractionFieldClass c1 = classify(p1), c2 = classify(p2);
    auto eq = rational_equivalence_check(c1, c2);
    rep.checks.push_back({"fraction-field class", eq.compatible, eq.reason});
    if (!eq.compatible) return fail(eq.reason);

    if (c1.variant == FractionFieldVariant::QuantumSkew) {
        bool qok = q_groups_equal(c1.q, c2.q);
        rep.checks.push_back({"q-group equality", qok, qok ? "" : "<q1> != <q2>"});
        if (!qok) return fail("multiplicative groups of q differ");
    }

    if (p1.base == BaseRing::PolyRing && p2.base == BaseRing::PolyRing) {
        Poly a1 = p1.a_poly(), a2 = p2.a_poly();
        bool dok = a1.degree() == a2.degree();
        rep.checks.push_back({"deg(a)", dok,
                              std::to_string(a1.degree()) + " vs " + std::to_string(a2.degree())});
        if (!dok) return fail("degrees of defining polynomials differ");
        int g1 = poly_gcd(a1, a1.derivative()).degree();
        int g2 = poly_gcd(a2, a2.derivative()).degree();
        bool gok = g1 == g2;
        rep.checks.push_back({"deg(gcd(a, a'))", gok, std::to_string(g1) + " vs " + std::to_string(g2)});
        if (!gok) return fail("multiplicity structure of defining polynomials differs");
    } else if (p1.base == BaseRing::LaurentRing && p2.base == BaseRing::LaurentRing) {
        // Sharper condition in the simple Laurent case: q2 = q1 or 1/q1.
        if (is_simple_quantum(p1.a, p1.q).simple && is_simple_quantum(p2.a, p2.q).simple) {
            bool qpm = p2.q == p1.q || p2.q == Rational(1) / p1.q;
            rep.checks.push_back({"q2 = q1^\xc2\xb1\x31 (simple case)", qpm, ""});
            if (!qpm) return fail("simple Laurent pair with q2 not in {q1, 1/q1}");
        }
    }

    rep.verdict = MoritaVerdict::NecessaryConditionsPass;
    return rep;
}

// --------------------------------------------------------------------------
// Hodges criterion in degree 2.

// Exact root difference of a quadratic: either rational, or a pure radical
// c * sqrt(d) with d a square-free integer (negative for complex pairs).
struct QuadraticRootGap {
    bool is_rational;
    Rational rational_gap;  // |gap|, rational case
    Rational radical_coeff; // |c|, radical case
    Integer radicand;       // square-free d, radical case
};

namespace detail {

// n = t^2 * d with d square-free; returns (t, d). Trial division.
inline std::pair<Integer, Integer> squarefree_decompose(Integer n) {
    Integer t = 1, d = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) t *= p;
        if (e % 2) d *= p;
    }
    d *= n;
    return {t, d};
}

inline QuadraticRootGap quadratic_root_gap(const Poly &p) {
    if (p.degree() != 2) throw std::invalid_argument("quadratic_root_gap: degree 2 required");
    Rational A = p.coeff(2), B = p.coeff(1), C = p.coeff(0);
    Rational disc = B * B - 4 * A * C;
    if (disc == 0)
        throw unsupported_error("hodges_morita_deg2: repeated roots, theorem hypothesis violated");
    if (disc > 0) {
        if (auto r = rational_nth_root(disc, 2))
            return {true, abs(*r / A), 0, 0};
    }
    // gap = sqrt(N/M)/A = sqrt(N*M)/(M*A); decompose |N*M| square-free.
    Integer nm = abs(disc.get_num() * disc.get_den());
    auto [t, d] = squarefree_decompose(nm);
    if (disc < 0) d = -d;
    Rational coeff = abs(make_rational(t, disc.get_den()) / A);
    return {false, 0, coeff, d};
}

} // namespace detail

// Morita equivalence of classical degree-2 GWA: the root gaps satisfy
// gap1 = eps * gap2 + m for some sign eps and integer m.
inline bool hodges_morita_deg2(const Poly &a1, const Poly &a2) {
    QuadraticRootGap g1 = detail::quadratic_root_gap(a1);
    QuadraticRootGap g2 = detail::quadratic_root_gap(a2);
    if (g1.is_rational != g2.is_rational) return false;
    if (g1.is_rational) {
        for (int eps : {1, -1}) {
            Rational diff = g1.rational_gap - Rational(eps) * g2.rational_gap;
            if (diff.get_den() == 1) return true;
        }
        return false;
    }
    // Pure radicals: the radical parts must cancel exactly; the remainder is 0.
    return g1.radicand == g2.radicand && g1.radical_coeff == g2.radical_coeff;
}

// --------------------------------------------------------------------------
// Degree-n sufficient condition (and its quantum analogue).

struct MoritaMode {
    bool quantum = false;
    Rational q = 1;
    static MoritaMode classical() { return {false, 1}; }
    static MoritaMode quantum_case(const Rational &q) { return {true, q}; }
};

namespace detail {

inline void require_simple_roots(const std::vector<Rational> &roots, const MoritaMode &mode);

} // namespace detail

inline std::optional<MoritaSufficientWitness> morita_sufficient(std::vector<Rational> roots1,
                                                                std::vector<Rational> roots2,
                                                                const MoritaMode &mode) {
    std::size_t n = roots1.size();
    if (n != roots2.size() || n < 3 || n > 8)
        throw unsupported_error("morita_sufficient: root count must match and lie in [3, 8]");
    detail::require_simple_roots(roots1, mode);
    detail::require_simple_roots(roots2, mode);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    do {
        MoritaSufficientWitness w;
        w.tau = idx;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!mode.quantum) {
                Rational diff = roots1[i] - roots2[idx[i]];
                if (diff.get_den() != 1) {
                    ok = false;
                    break;
                }
                w.shifts.push_back(static_cast<long>(diff.get_num().get_si()));
            } else {
                auto e = cyclic_group_exponent(roots1[i] / roots2[idx[i]], mode.q);
                if (!e) {
                    ok = false;
                    break;
                }
                w.shifts.push_back(*e);
            }
        }
        if (ok) return w;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return std::nullopt;
}

namespace detail {

inline void require_simple_roots(const std::vector<Rational> &roots, const MoritaMode &mode) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (roots[i] == roots[j])
                throw std::invalid_argument("morita_sufficient: repeated root, simplicity fails");
            if (!mode.quantum) {
                if (Rational(roots[i] - roots[j]).get_den() == 1)
                    throw std::invalid_argument(
                        "morita_sufficient: roots differ by an integer, simplicity fails");
            } else {
                if (roots[i] == 0 || roots[j] == 0)
                    throw std::invalid_argument("morita_sufficient: zero root in the quantum case");
                if (cyclic_group_exponent(roots[i] / roots[j], mode.q))
                    throw std::invalid_argument(
                        "morita_sufficient: root ratio is a power of q, simplicity fails");
            }
        }
}

} // namespace detail

} // namespace gwa
