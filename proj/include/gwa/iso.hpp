#pragma once

#include <algorithm>
#include <numeric>
#include <variant>

#include "gwa/canonical.hpp"
#include "gwa/element.hpp"

namespace gwa {

enum class FieldMode { OverRationals, OverClosure };

// A scalar that is either an exact rational or "any g-th root of beta".
struct ScalarDescriptor {
    bool rational = true;
    Rational value = 1;   // when rational
    unsigned g = 1;       // when algebraic: scalar^g = beta
    Rational beta = 1;

    static ScalarDescriptor exact(const Rational &v) { return {true, v, 1, v}; }
    static ScalarDescriptor root(unsigned g, const Rational &beta) { return {false, 0, g, beta}; }

    std::string str() const {
        if (rational) return value.get_str();
        return "any root of X^" + std::to_string(g) + " = " + beta.get_str();
    }
};

// Witness data for the isomorphism deciders.
struct ClassicalShiftWitness {
    Rational rho;
    int epsilon; // +1 or -1
    Rational alpha;
};
struct QuantumScaleWitness {
    ScalarDescriptor rho, alpha;
};
struct LaurentScaleWitness {
    ScalarDescriptor rho, alpha;
    long m;
    int epsilon;
};
struct MonomialDegreeWitness {
    int n;
};

using IsoWitness =
    std::variant<ClassicalShiftWitness, QuantumScaleWitness, LaurentScaleWitness, MonomialDegreeWitness>;

// --------------------------------------------------------------------------
// Classical decider: a2(h) = rho * a1(eps*h + alpha)?

inline std::optional<IsoWitness> iso_classical(const Poly &a1, const Poly &a2) {
    if (a1.degree() < 1 || a2.degree() < 1)
        throw unsupported_error("iso_classical: defining polynomials must be non-constant");
    int n = a1.degree();
    if (a2.degree() != n) return std::nullopt;
    for (int eps : {1, -1}) {
        Poly b = compose_affine(a1, eps, 0);
        Rational rho = a2.leading_coeff() / b.leading_coeff();
        // The shift is forced by the subleading coefficient.
        Rational alpha =
            (a2.coeff(n - 1) / rho - b.coeff(n - 1)) / (Rational(n) * b.leading_coeff());
        // b(h + alpha) = a1(eps*h + eps*alpha); store the shift seen by a1.
        if (a2 == rho * compose_affine(b, 1, alpha))
            return IsoWitness(ClassicalShiftWitness{rho, eps, Rational(eps) * alpha});
    }
    return std::nullopt;
}

// Root-level oracle for the classical decider: given the root multisets,
// decide whether some permutation and sign align all root differences.
// Evaluates both equivalent formulations and cross-checks them.
inline bool root_condition_oracle(std::vector<Rational> roots1, std::vector<Rational> roots2) {
    if (roots1.size() != roots2.size()) return false;
    std::size_t n = roots1.size();
    if (n > 8) throw unsupported_error("root_condition_oracle: multiset size exceeds enumeration cap 8");
    if (n == 0) return true;
    std::sort(roots2.begin(), roots2.end());
    bool cond2 = false, cond3 = false;
    std::vector<Rational> beta = roots2;
    do {
        bool pair_sq = true;
        for (std::size_t i = 0; i < n && pair_sq; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational da = roots1[i] - roots1[j], db = beta[i] - beta[j];
                if (da * da != db * db) {
                    pair_sq = false;
                    break;
                }
            }
        cond2 = cond2 || pair_sq;
        for (int eps : {1, -1}) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i)
                if (roots1[i] - roots1[0] != Rational(eps) * (beta[i] - beta[0])) {
                    ok = false;
                    break;
                }
            cond3 = cond3 || ok;
        }
    } while (std::next_permutation(beta.begin(), beta.end()));
    if (cond2 != cond3)
        throw std::logic_error("root_condition_oracle: pairwise-square and anchored conditions disagree");
    return cond3;
}

// --------------------------------------------------------------------------
// Quantum decider: a2(h) = rho * a1(alpha*h)?

namespace detail {

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g >= 0.
inline std::tuple<long, long, long> ext_gcd(long a, long b) {
    if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
    auto [g, s, t] = ext_gcd(b, a % b);
    return {g, t, s - (a / b) * t};
}

struct ScaleSolution {
    unsigned g;    // alpha^g = beta, g = gcd of support gaps
    Rational beta;
    std::optional<Rational> alpha_rational;
};

// Solve r_i = rho * alpha^i over the index set of `ratios` (at least two
// entries). Returns the consistency data, or nullopt when no alpha exists
// even over the algebraic closure.
inline std::optional<ScaleSolution> solve_power_consistency(const std::map<int, Rational> &ratios) {
    auto it = ratios.begin();
    int i0 = it->first;
    Rational r0 = it->second;
    std::map<long, Rational> c; // gap d -> c_d = alpha^d
    for (++it; it != ratios.end(); ++it) c[it->first - i0] = it->second / r0;
    long g = 0;
    for (const auto &[d, cd] : c) g = std::gcd(g, d);
    // Bezout fold: beta = prod c_d^{u_d} with sum u_d * d = g.
    Rational beta(1);
    long acc = 0;
    for (const auto &[d, cd] : c) {
        if (acc == 0) {
            acc = d;
            beta = cd;
            continue;
        }
        auto [g2, s, t] = ext_gcd(acc, d);
        beta = rat_pow(beta, s) * rat_pow(cd, t);
        acc = g2;
    }
    for (const auto &[d, cd] : c)
        if (rat_pow(beta, d / g) != cd) return std::nullopt;
    ScaleSolution sol{static_cast<unsigned>(g), beta, std::nullopt};
    sol.alpha_rational = rational_nth_root(beta, sol.g);
    return sol;
}

inline std::optional<IsoWitness> scale_solution_to_witness(const ScaleSolution &sol, int i0,
                                                           const Rational &r0, FieldMode mode) {
    if (sol.alpha_rational) {
        Rational alpha = *sol.alpha_rational;
        Rational rho = r0 / rat_pow(alpha, i0);
        return IsoWitness(
            QuantumScaleWitness{ScalarDescriptor::exact(rho), ScalarDescriptor::exact(alpha)});
    }
    if (mode == FieldMode::OverRationals) return std::nullopt;
    // rho = r0 / alpha^i0 is correlated with the chosen root of beta;
    // rho^g = r0^g / beta^i0 pins it up to the same choice.
    Rational rho_g = rat_pow(r0, static_cast<long>(sol.g)) * rat_pow(sol.beta, -static_cast<long>(i0));
    return IsoWitness(QuantumScaleWitness{ScalarDescriptor::root(sol.g, rho_g),
                                          ScalarDescriptor::root(sol.g, sol.beta)});
}

} // namespace detail

inline std::optional<IsoWitness> iso_quantum(const Poly &a1, const Poly &a2,
                                             FieldMode mode = FieldMode::OverClosure) {
    if (a1.degree() < 1 || a2.degree() < 1)
        throw unsupported_error("iso_quantum: defining polynomials must be non-constant");
    // Monomial dichotomy: two monomials are isomorphic exactly in equal
    // degree; a monomial and a non-monomial never are.
    if (a1.is_monomial() || a2.is_monomial()) {
        if (a1.is_monomial() && a2.is_monomial() && a1.degree() == a2.degree())
            return IsoWitness(MonomialDegreeWitness{a1.degree()});
        return std::nullopt;
    }
    if (a1.support() != a2.support()) return std::nullopt;
    std::map<int, Rational> ratios;
    for (int i : a1.support()) ratios[i] = a2.coeff(i) / a1.coeff(i);
    auto sol = detail::solve_power_consistency(ratios);
    if (!sol) return std::nullopt;
    return detail::scale_solution_to_witness(*sol, ratios.begin()->first, ratios.begin()->second,
                                             mode);
}

// --------------------------------------------------------------------------
// Laurent decider: a2(h) = rho * h^m * a1(alpha * h^eps)?

inline std::optional<IsoWitness> iso_laurent(const LaurentPoly &a1, const LaurentPoly &a2,
                                             const Rational &q,
                                             FieldMode mode = FieldMode::OverClosure) {
    if (q == 1 || q == -1 || q == 0)
        throw unsupported_error("iso_laurent: q must not be 0, 1 or -1");
    if (a1.is_zero() || a2.is_zero())
        throw std::invalid_argument("iso_laurent: defining elements must be nonzero");
    std::vector<int> s1 = a1.support(), s2 = a2.support();
    if (s1.size() != s2.size()) return std::nullopt;
    if (s1.size() == 1) {
        long m = s2.front() - s1.front();
        Rational rho = a2.coeff(s2.front()) / a1.coeff(s1.front());
        return IsoWitness(LaurentScaleWitness{ScalarDescriptor::exact(rho),
                                              ScalarDescriptor::exact(1), m, 1});
    }
    for (int eps : {1, -1}) {
        // Transformed support of a1(alpha*h^eps) before the h^m shift.
        std::vector<int> t;
        for (int i : s1) t.push_back(eps * i);
        std::sort(t.begin(), t.end());
        long m = s2.front() - t.front();
        bool aligned = true;
        for (std::size_t k = 0; k < t.size(); ++k)
            if (t[k] + m != s2[k]) {
                aligned = false;
                break;
            }
        if (!aligned) continue;
        // r_i = a2_{m + eps*i} / a1_i must equal rho * alpha^i.
        std::map<int, Rational> ratios;
        for (int i : s1) ratios[i] = a2.coeff(static_cast<int>(m) + eps * i) / a1.coeff(i);
        auto sol = detail::solve_power_consistency(ratios);
        if (!sol) continue;
        int i0 = ratios.begin()->first;
        Rational r0 = ratios.begin()->second;
        if (sol->alpha_rational) {
            Rational alpha = *sol->alpha_rational;
            Rational rho = r0 / rat_pow(alpha, i0);
            return IsoWitness(LaurentScaleWitness{ScalarDescriptor::exact(rho),
                                                  ScalarDescriptor::exact(alpha), m, eps});
        }
        if (mode == FieldMode::OverRationals) continue;
        Rational rho_g =
            rat_pow(r0, static_cast<long>(sol->g)) * rat_pow(sol->beta, -static_cast<long>(i0));
        return IsoWitness(LaurentScaleWitness{ScalarDescriptor::root(sol->g, rho_g),
                                              ScalarDescriptor::root(sol->g, sol->beta), m, eps});
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Explicit generator maps and their verification.

struct GeneratorMap {
    GwaElement image_of_h, image_of_x, image_of_y;
};

namespace detail {

// Evaluate a coefficient-ring element at a degree-0 image of h.
inline GwaElement eval_at(const GwaPresentation &target, const LaurentPoly &p, const GwaElement &H) {
    GwaElement acc;
    if (p.is_zero()) return acc;
    std::optional<GwaElement> Hinv;
    if (p.valuation() < 0) {
        // Need an invertible image: a degree-0 monomial coefficient.
        LaurentPoly c = H.coeff(0);
        if (H.components().size() != 1 || c.is_zero() || !c.is_monomial())
            throw unsupported_error("eval_at: negative powers require a monomial image of h");
        Rational lead = c.coeff(c.valuation());
        Hinv = GwaElement::from_coeff(LaurentPoly::monomial(Rational(1) / lead, -c.valuation()));
    }
    for (int i : p.support()) {
        GwaElement pw = i >= 0 ? power(target, H, static_cast<unsigned>(i))
                               : power(target, *Hinv, static_cast<unsigned>(-i));
        acc = acc + p.coeff(i) * pw;
    }
    return acc;
}

} // namespace detail

// Check that the images satisfy all four defining relations of A1 inside A2.
inline bool verify_morphism(const GeneratorMap &phi, const GwaPresentation &A1,
                            const GwaPresentation &A2) {
    const GwaElement &H = phi.image_of_h, &X = phi.image_of_x, &Y = phi.image_of_y;
    GwaElement sigma_h = A1.q * H - GwaElement::from_coeff(LaurentPoly(A1.h0));
    GwaElement sigma_inv_h =
        (Rational(1) / A1.q) * H + GwaElement::from_coeff(LaurentPoly(A1.h0 / A1.q));
    if (multiply(A2, X, H) != multiply(A2, sigma_h, X)) return false;
    if (multiply(A2, Y, H) != multiply(A2, sigma_inv_h, Y)) return false;
    if (multiply(A2, Y, X) != detail::eval_at(A2, A1.a, H)) return false;
    if (multiply(A2, X, Y) != detail::eval_at(A2, sigma_power_apply(A1, A1.a, 1), H)) return false;
    return true;
}

// The transform A = k[h](sigma, a) -> A' = k[h](sigma^-1, a(sigma(h))),
// witnessed by swapping x and y.
inline std::pair<GwaPresentation, GeneratorMap> invert_sigma_transform(const GwaPresentation &A) {
    GwaPresentation Ap(A.base, Rational(1) / A.q, -A.h0 / A.q, sigma_power_apply(A, A.a, 1));
    GeneratorMap phi{GwaElement::gen_h(), GwaElement::gen_y(), GwaElement::gen_x()};
    return {Ap, phi};
}

struct MorphismResult {
    GeneratorMap map;
    bool ok = false;
};

inline Rational a_lead(const GwaPresentation &A) {
    auto s = A.a.support();
    return A.a.coeff(s.back());
}

// Materialize the generator map a witness prescribes and verify it.
// Witness scalars must be rational.
inline MorphismResult build_and_verify_morphism(const IsoWitness &w, const GwaPresentation &A1,
                                                const GwaPresentation &A2) {
    GeneratorMap phi;
    if (const auto *cw = std::get_if<ClassicalShiftWitness>(&w)) {
        if (cw->epsilon == 1) {
            phi.image_of_h = GwaElement::gen_h() + GwaElement::from_coeff(LaurentPoly(cw->alpha));
            phi.image_of_x = GwaElement::gen_x();
            phi.image_of_y = (Rational(1) / cw->rho) * GwaElement::gen_y();
        } else {
            phi.image_of_h =
                -GwaElement::gen_h() + GwaElement::from_coeff(LaurentPoly(cw->alpha + A1.h0));
            phi.image_of_x = GwaElement::gen_y();
            phi.image_of_y = (Rational(1) / cw->rho) * GwaElement::gen_x();
        }
    } else if (const auto *qw = std::get_if<QuantumScaleWitness>(&w)) {
        if (!qw->rho.rational || !qw->alpha.rational)
            throw unsupported_error("build_and_verify_morphism: witness scalars are algebraic over Q");
        phi.image_of_h = GwaElement::from_coeff(LaurentPoly::monomial(qw->alpha.value, 1));
        phi.image_of_x = (Rational(1) / qw->rho.value) * GwaElement::gen_x();
        phi.image_of_y = GwaElement::gen_y();
    } else if (const auto *mw = std::get_if<MonomialDegreeWitness>(&w)) {
        (void)mw;
        Rational rho = a_lead(A2) / a_lead(A1);
        phi.image_of_h = GwaElement::gen_h();
        phi.image_of_x = (Rational(1) / rho) * GwaElement::gen_x();
        phi.image_of_y = GwaElement::gen_y();
    } else {
        const auto &lw = std::get<LaurentScaleWitness>(w);
        if (!lw.rho.rational || !lw.alpha.rational)
            throw unsupported_error("build_and_verify_morphism: witness scalars are algebraic over Q");
        Rational rho = lw.rho.value, alpha = lw.alpha.value;
        if (lw.epsilon == 1) {
            phi.image_of_h = GwaElement::from_coeff(LaurentPoly::monomial(alpha, 1));
            phi.image_of_x = (Rational(1) / rho) * GwaElement::gen_x();
            phi.image_of_y = multiply(
                A2, GwaElement::from_coeff(LaurentPoly::monomial(1, static_cast<int>(-lw.m))),
                GwaElement::gen_y());
        } else {
            phi.image_of_h = GwaElement::from_coeff(LaurentPoly::monomial(alpha / A2.q, -1));
            phi.image_of_x = multiply(
                A2, GwaElement::from_coeff(LaurentPoly::monomial(Rational(1) / rho,
                                                                 static_cast<int>(-lw.m))),
                GwaElement::gen_y());
            phi.image_of_y = GwaElement::gen_x();
        }
    }
    return {phi, verify_morphism(phi, A1, A2)};
}

} // namespace gwa
