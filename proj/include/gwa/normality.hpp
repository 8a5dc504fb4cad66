#pragma once

#include <optional>

#include "gwa/element.hpp"

namespace gwa {

struct NormalityVerdict {
    bool normal = false;
    // Conjugators w_g with u*g = w_g*u for g in {h, x, y}, present iff normal.
    std::optional<GwaElement> w_h, w_x, w_y;
    std::string refutation;
};

namespace detail {

// Solve w * u = rhs for a single-component w, or report failure.
// u and rhs are single-component elements over a polynomial base.
inline std::optional<GwaElement> solve_conjugator(const GwaPresentation &A, const GwaElement &u,
                                                  const GwaElement &rhs) {
    if (rhs.is_zero()) return GwaElement();
    if (rhs.components().size() != 1 || u.components().size() != 1) return std::nullopt;
    int du = u.components().begin()->first;
    int dr = rhs.components().begin()->first;
    int dw = dr - du;
    // w = c(h) v_dw; w*u is linear in c, with kernel K = (1*v_dw) * u.
    GwaElement probe = multiply(A, GwaElement::component(dw, LaurentPoly(1)), u);
    LaurentPoly kernel = probe.coeff(dr);
    if (kernel.is_zero()) return std::nullopt;
    auto c = poly_exact_div(rhs.coeff(dr).to_poly(), kernel.to_poly());
    if (!c) return std::nullopt;
    GwaElement w = GwaElement::component(dw, LaurentPoly(*c));
    if (multiply(A, w, u) != rhs) return std::nullopt;
    return w;
}

} // namespace detail

// Classify u as normalizing or not, in a quantum GWA over k[h].
// Normalizing elements are exactly the monomials alpha*h^n (a non-monomial)
// or additionally alpha*h^n*x^p, alpha*h^n*y^p (a monomial).
inline NormalityVerdict normality_witness(const GwaPresentation &A, const GwaElement &u) {
    if (A.base != BaseRing::PolyRing || !A.q_nonroot_of_unity())
        throw unsupported_error("normality_witness: requires quantum presentation over k[h], q not 1 or -1");
    if (u.is_zero()) throw std::invalid_argument("normality_witness: u must be nonzero");

    NormalityVerdict v;
    if (u.components().size() > 1) {
        // u*h = w*u would force w = q^(-i) h per component, with distinct i.
        v.refutation = "mixed degree support: conjugation by h demands a different scalar per component";
        return v;
    }
    for (const auto &[name, g] :
         {std::pair{"h", GwaElement::gen_h()}, std::pair{"x", GwaElement::gen_x()},
          std::pair{"y", GwaElement::gen_y()}}) {
        auto w = detail::solve_conjugator(A, u, multiply(A, u, g));
        if (!w) {
            v.refutation = std::string("u*") + name + " is not a left multiple of u";
            return v;
        }
        if (name[0] == 'h')
            v.w_h = *w;
        else if (name[0] == 'x')
            v.w_x = *w;
        else
            v.w_y = *w;
    }
    v.normal = true;
    return v;
}

} // namespace gwa
