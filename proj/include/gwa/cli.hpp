#pragma once

#include <iostream>

#include <json.hpp>

#include "gwa/autgroup.hpp"
#include "gwa/morita.hpp"
#include "gwa/normality.hpp"
#include "gwa/parse.hpp"
#include "gwa/smith.hpp"

namespace gwa::cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 question decided, 2 usage error, 3 input outside the
// supported fragment, 4 malformed input.
enum ExitCode { kOk = 0, kUsage = 2, kUnsupported = 3, kParse = 4 };

namespace detail {

struct Request {
    std::string command;
    std::vector<std::string> positional;
    bool json_output = false;
    FieldMode mode = FieldMode::OverClosure;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Request parse_request(const std::vector<std::string> &args) {
    Request req;
    for (const auto &arg : args) {
        if (arg == "--json") {
            req.json_output = true;
        } else if (arg == "--mode=rationals") {
            req.mode = FieldMode::OverRationals;
        } else if (arg == "--mode=closure") {
            req.mode = FieldMode::OverClosure;
        } else if (arg.rfind("--", 0) == 0) {
            throw usage_error("unknown option: " + arg);
        } else if (req.command.empty()) {
            req.command = arg;
        } else {
            req.positional.push_back(arg);
        }
    }
    if (req.command.empty()) throw usage_error("no command given");
    return req;
}

inline std::string variant_name(CanonicalVariant v) {
    switch (v) {
        case CanonicalVariant::Commutative: return "commutative";
        case CanonicalVariant::Classical: return "classical";
        default: return "quantum";
    }
}

inline std::string fraction_field_name(const FractionFieldClass &c) {
    switch (c.variant) {
        case FractionFieldVariant::CommutativeRational: return "k(h)[x]";
        case FractionFieldVariant::Weyl1: return "Frac(Weyl algebra A_1)";
        default: return "Frac(quantum skew ring, q=" + c.q.get_str() + ")";
    }
}

inline json witness_json(const IsoWitness &w) {
    json j;
    if (const auto *cw = std::get_if<ClassicalShiftWitness>(&w)) {
        j["rho"] = cw->rho.get_str();
        j["epsilon"] = cw->epsilon;
        j["alpha"] = cw->alpha.get_str();
    } else if (const auto *qw = std::get_if<QuantumScaleWitness>(&w)) {
        j["rho"] = qw->rho.str();
        j["alpha"] = qw->alpha.str();
    } else if (const auto *lw = std::get_if<LaurentScaleWitness>(&w)) {
        j["rho"] = lw->rho.str();
        j["alpha"] = lw->alpha.str();
        j["m"] = lw->m;
        j["epsilon"] = lw->epsilon;
    } else {
        j["degree"] = std::get<MonomialDegreeWitness>(w).n;
    }
    return j;
}

inline std::string witness_text(const IsoWitness &w) {
    if (const auto *cw = std::get_if<ClassicalShiftWitness>(&w))
        return "rho=" + cw->rho.get_str() + " epsilon=" + std::to_string(cw->epsilon) +
               " alpha=" + cw->alpha.get_str();
    if (const auto *qw = std::get_if<QuantumScaleWitness>(&w))
        return "rho=" + qw->rho.str() + " alpha=" + qw->alpha.str();
    if (const auto *lw = std::get_if<LaurentScaleWitness>(&w))
        return "rho=" + lw->rho.str() + " alpha=" + lw->alpha.str() +
               " m=" + std::to_string(lw->m) + " epsilon=" + std::to_string(lw->epsilon);
    return "equal-degree monomials, degree " + std::to_string(std::get<MonomialDegreeWitness>(w).n);
}

// Decide iso for a pair of gwa/lgwa specifications (same base ring kind).
inline std::optional<IsoWitness> decide_iso(const AlgebraSpec &s1, const AlgebraSpec &s2,
                                            FieldMode mode, std::string &reason) {
    if (s1.kind != s2.kind)
        throw unsupported_error("iso: base rings differ (gwa vs lgwa)");
    if (s1.kind == AlgebraKind::Lgwa) {
        if (s1.q == s2.q) return iso_laurent(s1.a, s2.a, s1.q, mode);
        if (s1.q * s2.q == 1) {
            // Flip the second algebra with (x,y) -> (y,x), q -> 1/q.
            LaurentPoly a2p = s2.a.scale_variable(s2.q);
            return iso_laurent(s1.a, a2p, s1.q, mode);
        }
        reason = "the groups <q1> and <q2> differ";
        return std::nullopt;
    }
    CanonicalClass c1 = canonicalize(s1.q, s1.h0, s1.a.to_poly());
    CanonicalClass c2 = canonicalize(s2.q, s2.h0, s2.a.to_poly());
    if (c1.variant != c2.variant) {
        reason = "different canonical classes: " + variant_name(c1.variant) + " vs " +
                 variant_name(c2.variant);
        return std::nullopt;
    }
    switch (c1.variant) {
        case CanonicalVariant::Commutative:
            throw unsupported_error("iso: commutative pairs are not decided");
        case CanonicalVariant::Classical: {
            auto w = iso_classical(c1.a_canonical, c2.a_canonical);
            if (!w) reason = "no affine change of variable matches the defining polynomials";
            return w;
        }
        default: {
            std::optional<IsoWitness> w;
            if (c1.q == c2.q) {
                w = iso_quantum(c1.a_canonical, c2.a_canonical, mode);
            } else if (c1.q * c2.q == 1) {
                Poly a2p = compose_affine(c2.a_canonical, c2.q, 0);
                w = iso_quantum(c1.a_canonical, a2p, mode);
            } else {
                reason = "the groups <q1> and <q2> differ";
                return std::nullopt;
            }
            if (!w) reason = "no scaling of h matches the defining polynomials";
            return w;
        }
    }
}

struct Emitter {
    const Request &req;
    std::ostream &out;
    json j;

    explicit Emitter(const Request &r, std::ostream &o) : req(r), out(o) {
        j["command"] = r.command;
        j["inputs"] = r.positional;
    }
    void line(const std::string &s) {
        if (!req.json_output) out << s << '\n';
    }
    void finish() {
        if (req.json_output) out << j.dump(2) << '\n';
    }
};

inline std::vector<Rational> parse_root_list(const std::string &text) {
    std::vector<Rational> roots;
    std::string joined;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) joined += c;
    std::size_t p = 0;
    while (p <= joined.size()) {
        std::size_t comma = joined.find(',', p);
        std::string part = joined.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        roots.push_back(gwa::detail::parse_rational_literal(part, p));
        if (comma == std::string::npos) break;
        p = comma + 1;
    }
    return roots;
}

inline SmithPresentation spec_to_smith(const AlgebraSpec &s) {
    switch (s.kind) {
        case AlgebraKind::Smith:
            return make_smith(s.q, s.f);
        case AlgebraKind::Witten: {
            WittenParams w{s.eps[0], s.eps[1], s.eps[2], s.eps[3], s.eps[4], s.eps[5], s.eps[6]};
            return witten_to_smith(w).smith;
        }
        case AlgebraKind::Lebruyn: {
            LeBruynResult r = lebruyn_to_smith(s.alpha, s.beta);
            if (r.degenerate)
                throw unsupported_error("lebruyn: beta=0 is degenerate and defines no Smith algebra");
            return r.reduction->smith;
        }
        default:
            throw usage_error("smith-iso expects smith, witten or lebruyn specifications");
    }
}

inline void expect_args(const Request &req, std::size_t n, const char *shape) {
    if (req.positional.size() != n)
        throw usage_error(std::string("usage: gwa ") + req.command + " " + shape);
}

// ---- subcommand bodies ----------------------------------------------------

inline void cmd_canon(const Request &req, Emitter &em) {
    expect_args(req, 1, "SPEC");
    AlgebraSpec s = parse_algebra_spec(req.positional[0]);
    GwaPresentation A = spec_to_presentation(s);
    if (A.base == BaseRing::LaurentRing)
        throw unsupported_error("canon: only polynomial-base specifications are classified");
    CanonicalClass c = canonicalize(s.q, s.h0, s.a.to_poly());
    FractionFieldClass ff = fraction_field_class(c);
    em.j["verdict"] = variant_name(c.variant);
    json w;
    w["q"] = c.q.get_str();
    w["a_canonical"] = c.a_canonical.str();
    w["h_substitution"] = c.scale.get_str() + "*h' + " + c.shift.get_str();
    w["fraction_field"] = fraction_field_name(ff);
    em.j["witness"] = w;
    em.line("class: " + variant_name(c.variant));
    em.line("canonical a: " + c.a_canonical.str());
    em.line("substitution: h = " + c.scale.get_str() + "*h' + " + c.shift.get_str());
    em.line("fraction field: " + fraction_field_name(ff));
}

inline void cmd_iso(const Request &req, Emitter &em) {
    expect_args(req, 2, "SPEC1 SPEC2 [--mode=rationals|closure]");
    AlgebraSpec s1 = parse_algebra_spec(req.positional[0]);
    AlgebraSpec s2 = parse_algebra_spec(req.positional[1]);
    std::string reason;
    auto w = decide_iso(s1, s2, req.mode, reason);
    if (w) {
        em.j["verdict"] = "isomorphic";
        em.j["witness"] = witness_json(*w);
        em.line("isomorphic: " + witness_text(*w));
    } else {
        em.j["verdict"] = "not isomorphic";
        em.j["reason"] = reason;
        em.line("not isomorphic: " + reason);
    }
}

inline void cmd_aut(const Request &req, Emitter &em) {
    expect_args(req, 1, "SPEC");
    AlgebraSpec s = parse_algebra_spec(req.positional[0]);
    if (s.kind != AlgebraKind::Gwa) throw usage_error("aut expects a gwa specification");
    CanonicalClass c = canonicalize(s.q, s.h0, s.a.to_poly());
    if (c.variant != CanonicalVariant::Quantum)
        throw unsupported_error("aut: only quantum presentations over k[h] are supported");
    AutDescriptor d = aut_descriptor(c.a_canonical);
    std::string structure =
        d.monomial ? "k* x k*" : "Z/" + std::to_string(d.p) + " x k*";
    em.j["verdict"] = structure;
    json w;
    w["p"] = d.monomial ? json(nullptr) : json(d.p);
    w["i0"] = d.i0;
    w["structure"] = structure;
    em.j["witness"] = w;
    em.line("Aut = " + structure);
    em.line("i0 = " + std::to_string(d.i0) +
            (d.monomial ? " (monomial)" : ", torsion order p = " + std::to_string(d.p)));
}

inline void cmd_mul(const Request &req, Emitter &em) {
    expect_args(req, 3, "SPEC EXPR1 EXPR2");
    AlgebraSpec s = parse_algebra_spec(req.positional[0]);
    GwaPresentation A = spec_to_presentation(s);
    GwaElement u = parse_element_expr(req.positional[1], A);
    GwaElement v = parse_element_expr(req.positional[2], A);
    GwaElement p = multiply(A, u, v);
    em.j["verdict"] = p.str();
    em.line(p.str());
}

inline void cmd_normal(const Request &req, Emitter &em) {
    expect_args(req, 2, "SPEC EXPR");
    AlgebraSpec s = parse_algebra_spec(req.positional[0]);
    GwaPresentation A = spec_to_presentation(s);
    GwaElement u = parse_element_expr(req.positional[1], A);
    NormalityVerdict v = normality_witness(A, u);
    if (v.normal) {
        em.j["verdict"] = "normal";
        json w;
        w["w_h"] = v.w_h->str();
        w["w_x"] = v.w_x->str();
        w["w_y"] = v.w_y->str();
        em.j["witness"] = w;
        em.line("normal");
        em.line("u*h = (" + v.w_h->str() + ")*u");
        em.line("u*x = (" + v.w_x->str() + ")*u");
        em.line("u*y = (" + v.w_y->str() + ")*u");
    } else {
        em.j["verdict"] = "not normal";
        em.j["reason"] = v.refutation;
        em.line("not normal: " + v.refutation);
    }
}

inline void cmd_simple(const Request &req, Emitter &em) {
    expect_args(req, 1, "SPEC");
    AlgebraSpec s = parse_algebra_spec(req.positional[0]);
    SimplicityCertificate cert;
    if (s.kind == AlgebraKind::Lgwa) {
        cert = is_simple_quantum(s.a, s.q);
    } else {
        CanonicalClass c = canonicalize(s.q, s.h0, s.a.to_poly());
        switch (c.variant) {
            case CanonicalVariant::Commutative:
                cert = {false, "commutative ring with nontrivial ideals", std::nullopt};
                break;
            case CanonicalVariant::Classical:
                cert = is_simple_classical(c.a_canonical);
                break;
            default:
                cert = {false, "h generates a proper two-sided ideal (h is normal)", std::nullopt};
                break;
        }
    }
    em.j["verdict"] = cert.simple ? "simple" : "not simple";
    em.j["reason"] = cert.reason;
    if (cert.witness_m) em.j["witness"] = json{{"m", *cert.witness_m}};
    std::string line = cert.simple ? "simple" : "not simple";
    if (!cert.reason.empty()) line += ": " + cert.reason;
    if (cert.witness_m) line += " (m = " + std::to_string(*cert.witness_m) + ")";
    em.line(line);
}

inline void cmd_morita(const Request &req, Emitter &em) {
    expect_args(req, 2, "SPEC1 SPEC2");
    AlgebraSpec s1 = parse_algebra_spec(req.positional[0]);
    AlgebraSpec s2 = parse_algebra_spec(req.positional[1]);
    MoritaReport rep = morita_necessary(spec_to_presentation(s1), spec_to_presentation(s2));
    std::string verdict = rep.verdict == MoritaVerdict::NotEquivalent
                              ? "not Morita equivalent"
                              : "necessary conditions pass";
    em.j["verdict"] = verdict;
    json checks = json::array();
    for (const auto &c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    em.j["checks"] = checks;
    if (!rep.reason.empty()) em.j["reason"] = rep.reason;
    em.line(verdict + (rep.reason.empty() ? "" : ": " + rep.reason));
    for (const auto &c : rep.checks)
        em.line(std::string("  [") + (c.pass ? "pass" : "fail") + "] " + c.name +
                (c.detail.empty() ? "" : ": " + c.detail));
}

inline void cmd_smith_iso(const Request &req, Emitter &em) {
    expect_args(req, 2, "SPEC1 SPEC2");
    AlgebraSpec s1 = parse_algebra_spec(req.positional[0]);
    AlgebraSpec s2 = parse_algebra_spec(req.positional[1]);
    SmithPresentation p1 = detail::spec_to_smith(s1);
    SmithPresentation p2 = detail::spec_to_smith(s2);
    if (p1.q != p2.q) {
        if (p1.q * p2.q == 1)
            throw unsupported_error("smith-iso: the pair q, 1/q is not decided");
        em.j["verdict"] = "not isomorphic";
        em.j["reason"] = "the groups <q1> and <q2> differ";
        em.line("not isomorphic: the groups <q1> and <q2> differ");
        return;
    }
    auto w = smith_iso(p1, p2, req.mode);
    if (w) {
        em.j["verdict"] = "isomorphic";
        json jw;
        jw["rho"] = w->rho.str();
        jw["beta"] = w->beta.str();
        jw["alpha"] = w->alpha.get_str();
        em.j["witness"] = jw;
        em.line("isomorphic: rho=" + w->rho.str() + " beta=" + w->beta.str() +
                " alpha=" + w->alpha.get_str());
    } else {
        em.j["verdict"] = "not isomorphic";
        em.j["reason"] = "no scaling of h matches the defining polynomials";
        em.line("not isomorphic");
    }
}

inline void cmd_oracle(const Request &req, Emitter &em) {
    expect_args(req, 2, "ROOTS1 ROOTS2");
    auto r1 = parse_root_list(req.positional[0]);
    auto r2 = parse_root_list(req.positional[1]);
    bool iso = root_condition_oracle(r1, r2);
    em.j["verdict"] = iso ? "isomorphic" : "not isomorphic";
    em.line(iso ? "isomorphic" : "not isomorphic");
}

} // namespace detail

inline int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    detail::Request req;
    try {
        req = detail::parse_request(args);
        detail::Emitter em(req, out);
        if (req.command == "canon") detail::cmd_canon(req, em);
        else if (req.command == "iso") detail::cmd_iso(req, em);
        else if (req.command == "aut") detail::cmd_aut(req, em);
        else if (req.command == "mul") detail::cmd_mul(req, em);
        else if (req.command == "normal") detail::cmd_normal(req, em);
        else if (req.command == "simple") detail::cmd_simple(req, em);
        else if (req.command == "morita") detail::cmd_morita(req, em);
        else if (req.command == "smith-iso") detail::cmd_smith_iso(req, em);
        else if (req.command == "oracle") detail::cmd_oracle(req, em);
        else throw detail::usage_error("unknown command: " + req.command);
        em.finish();
        return kOk;
    } catch (const detail::usage_error &e) {
        err << "usage error: " << e.what() << '\n';
        err << "commands: canon iso aut mul normal simple morita smith-iso oracle"
            << " (global flags: --json, --mode=rationals|closure)\n";
        return kUsage;
    } catch (const parse_error &e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const std::invalid_argument &e) {
        err << "invalid input: " << e.what() << '\n';
        return kParse;
    } catch (const unsupported_error &e) {
        err << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    }
}

} // namespace gwa::cli
