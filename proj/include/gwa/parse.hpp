#pragma once

#include <array>
#include <cctype>

#include "gwa/element.hpp"

namespace gwa {

// --------------------------------------------------------------------------
// Expression grammar over {h, x, y, rational literals, +, -, *, ^, ( )}.
// Precedence: ^ > * > unary- > binary +/-. There is no division operator;
// rational literals are written n/d.

namespace detail {

struct Token {
    enum Kind { Num, Gen, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    Rational num;
    char gen = 0;
    std::size_t pos = 0;
};

class ExprLexer {
public:
    explicit ExprLexer(std::string_view text) : text_(text) { advance(); }
    const Token &peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = text_[i_];
        switch (c) {
            case '+': tok_.kind = Token::Plus; ++i_; return;
            case '-': tok_.kind = Token::Minus; ++i_; return;
            case '*': tok_.kind = Token::Star; ++i_; return;
            case '^': tok_.kind = Token::Caret; ++i_; return;
            case '(': tok_.kind = Token::LParen; ++i_; return;
            case ')': tok_.kind = Token::RParen; ++i_; return;
        }
        if (c == 'h' || c == 'x' || c == 'y') {
            tok_.kind = Token::Gen;
            tok_.gen = c;
            ++i_;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Num;
            tok_.num = lex_rational();
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", i_);
    }

    Rational lex_rational() {
        Integer num = lex_integer();
        if (i_ < text_.size() && text_[i_] == '/') {
            std::size_t slash = i_;
            ++i_;
            if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
                throw parse_error("expected denominator digits after '/'", slash + 1);
            Integer den = lex_integer();
            if (den == 0) throw parse_error("zero denominator", slash + 1);
            return make_rational(num, den);
        }
        return Rational(num);
    }

    Integer lex_integer() {
        std::size_t start = i_;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
        return Integer(std::string(text_.substr(start, i_ - start)));
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token tok_;
};

struct ExprOptions {
    bool allow_xy = true;
    bool allow_negative_h_exponent = false;
};

// Precedence-climbing evaluator straight to a normal-form element.
class ExprParser {
public:
    ExprParser(std::string_view text, const GwaPresentation &A, ExprOptions opt)
        : lex_(text), A_(A), opt_(opt) {}

    GwaElement parse() {
        GwaElement e = expr(0);
        if (lex_.peek().kind != Token::End)
            throw parse_error("unexpected trailing input", lex_.peek().pos);
        return e;
    }

private:
    static constexpr int kPrecAdd = 10, kPrecUnary = 15, kPrecMul = 20;

    GwaElement expr(int min_prec) {
        GwaElement lhs = unary();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if ((k == Token::Plus || k == Token::Minus) && kPrecAdd >= min_prec) {
                lex_.take();
                GwaElement rhs = expr(kPrecAdd + 1);
                lhs = (k == Token::Plus) ? lhs + rhs : lhs - rhs;
            } else if (k == Token::Star && kPrecMul >= min_prec) {
                lex_.take();
                GwaElement rhs = expr(kPrecMul + 1);
                lhs = multiply(A_, lhs, rhs);
            } else {
                return lhs;
            }
        }
    }

    GwaElement unary() {
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            return -expr(kPrecUnary + 1);
        }
        return primary();
    }

    GwaElement primary() {
        Token t = lex_.take();
        GwaElement base;
        bool base_is_h = false;
        switch (t.kind) {
            case Token::Num:
                base = GwaElement::from_coeff(LaurentPoly(t.num));
                break;
            case Token::Gen:
                if (t.gen == 'h') {
                    base = GwaElement::gen_h();
                    base_is_h = true;
                } else {
                    if (!opt_.allow_xy)
                        throw parse_error("generator not allowed in a polynomial value", t.pos);
                    base = t.gen == 'x' ? GwaElement::gen_x() : GwaElement::gen_y();
                }
                break;
            case Token::LParen: {
                base = expr(0);
                Token close = lex_.take();
                if (close.kind != Token::RParen) throw parse_error("expected ')'", close.pos);
                break;
            }
            default:
                throw parse_error("expected a term", t.pos);
        }
        if (lex_.peek().kind == Token::Caret) {
            std::size_t cpos = lex_.take().pos;
            bool neg = false;
            if (lex_.peek().kind == Token::Minus) {
                neg = true;
                lex_.take();
            }
            Token e = lex_.take();
            if (e.kind != Token::Num || e.num.get_den() != 1)
                throw parse_error("exponent must be an integer literal", e.pos);
            if (e.num.get_num() > 1024) throw parse_error("exponent exceeds the limit 1024", e.pos);
            long exp = static_cast<long>(e.num.get_num().get_si());
            if (neg) {
                if (!opt_.allow_negative_h_exponent || !base_is_h)
                    throw parse_error("negative exponent only allowed on h over a Laurent base", cpos);
                return GwaElement::from_coeff(LaurentPoly::monomial(1, static_cast<int>(-exp)));
            }
            return power(A_, base, static_cast<unsigned>(exp));
        }
        return base;
    }

    ExprLexer lex_;
    const GwaPresentation &A_;
    ExprOptions opt_;
};

inline const GwaPresentation &scratch_presentation() {
    static const GwaPresentation A(BaseRing::LaurentRing, 1, 0, LaurentPoly(1));
    return A;
}

} // namespace detail

// Evaluate an element expression in the presentation A.
inline GwaElement parse_element_expr(std::string_view text, const GwaPresentation &A) {
    detail::ExprOptions opt;
    opt.allow_xy = true;
    opt.allow_negative_h_exponent = A.base == BaseRing::LaurentRing;
    return detail::ExprParser(text, A, opt).parse();
}

// Parse a polynomial in h (allow_laurent permits h^-negative exponents).
inline LaurentPoly parse_poly_value(std::string_view text, bool allow_laurent) {
    detail::ExprOptions opt;
    opt.allow_xy = false;
    opt.allow_negative_h_exponent = allow_laurent;
    GwaElement e = detail::ExprParser(text, detail::scratch_presentation(), opt).parse();
    return e.coeff(0);
}

// --------------------------------------------------------------------------
// Algebra specification grammar:
//   gwa q=Q [h0=H] a="POLY"
//   lgwa q=Q a="LAURENT_POLY"
//   smith q=Q f="POLY"
//   witten e1,e2,e3,e4,e5,e6,e7
//   lebruyn alpha=A beta=B

enum class AlgebraKind { Gwa, Lgwa, Smith, Witten, Lebruyn };

struct AlgebraSpec {
    AlgebraKind kind = AlgebraKind::Gwa;
    Rational q = 1, h0 = 0;
    LaurentPoly a;                  // gwa / lgwa
    Poly f;                         // smith
    std::array<Rational, 7> eps{};  // witten
    Rational alpha = 0, beta = 0;   // lebruyn

    friend bool operator==(const AlgebraSpec &l, const AlgebraSpec &r) {
        return l.kind == r.kind && l.q == r.q && l.h0 == r.h0 && l.a == r.a && l.f == r.f &&
               l.eps == r.eps && l.alpha == r.alpha && l.beta == r.beta;
    }
};

namespace detail {

inline Rational parse_rational_literal(std::string_view s, std::size_t base_pos) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw parse_error("expected a rational literal", base_pos);
    Integer num(std::string(s.substr(start, i - start)));
    Integer den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t dstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == dstart) throw parse_error("expected denominator digits", base_pos + dstart);
        den = Integer(std::string(s.substr(dstart, i - dstart)));
        if (den == 0) throw parse_error("zero denominator", base_pos + dstart);
    }
    if (i != s.size()) throw parse_error("trailing characters in rational literal", base_pos + i);
    Rational r = make_rational(num, den);
    return neg ? Rational(-r) : r;
}

struct SpecField {
    std::string key, value;
    std::size_t pos;
};

// key=value items; values may be double-quoted.
inline std::vector<SpecField> split_spec_fields(std::string_view text, std::size_t offset) {
    std::vector<SpecField> fields;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && text[i] != '=' && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size() || text[i] != '=')
            throw parse_error("expected key=value", offset + start);
        std::string key(text.substr(start, i - start));
        ++i;
        std::string value;
        if (i < text.size() && text[i] == '"') {
            std::size_t open = i++;
            std::size_t close = text.find('"', i);
            if (close == std::string_view::npos)
                throw parse_error("unterminated quoted value", offset + open);
            value = std::string(text.substr(i, close - i));
            i = close + 1;
        } else {
            std::size_t vstart = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            value = std::string(text.substr(vstart, i - vstart));
        }
        fields.push_back({key, value, offset + start});
    }
    return fields;
}

} // namespace detail

inline AlgebraSpec parse_algebra_spec(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t kstart = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string kind(text.substr(kstart, i - kstart));
    AlgebraSpec spec;
    std::string_view rest = text.substr(i);

    if (kind == "witten") {
        spec.kind = AlgebraKind::Witten;
        std::string joined;
        for (char c : rest)
            if (!std::isspace(static_cast<unsigned char>(c))) joined += c;
        std::vector<std::string> parts;
        std::size_t p = 0;
        while (p <= joined.size()) {
            std::size_t comma = joined.find(',', p);
            if (comma == std::string::npos) {
                parts.push_back(joined.substr(p));
                break;
            }
            parts.push_back(joined.substr(p, comma - p));
            p = comma + 1;
        }
        if (parts.size() != 7)
            throw parse_error("witten requires exactly 7 comma-separated parameters", i);
        for (std::size_t k = 0; k < 7; ++k)
            spec.eps[k] = detail::parse_rational_literal(parts[k], i);
        return spec;
    }

    auto fields = detail::split_spec_fields(rest, i);
    auto find = [&](const std::string &key) -> const detail::SpecField * {
        for (const auto &f : fields)
            if (f.key == key) return &f;
        return nullptr;
    };
    auto require = [&](const std::string &key) -> const detail::SpecField & {
        const auto *f = find(key);
        if (!f) throw parse_error("missing required parameter '" + key + "'", kstart);
        return *f;
    };
    auto check_keys = [&](std::initializer_list<std::string_view> allowed) {
        for (const auto &f : fields) {
            bool ok = false;
            for (auto k : allowed)
                if (f.key == k) ok = true;
            if (!ok) throw parse_error("unknown parameter '" + f.key + "'", f.pos);
        }
    };

    if (kind == "gwa" || kind == "lgwa") {
        bool laurent = kind == "lgwa";
        spec.kind = laurent ? AlgebraKind::Lgwa : AlgebraKind::Gwa;
        check_keys(laurent ? std::initializer_list<std::string_view>{"q", "a"}
                           : std::initializer_list<std::string_view>{"q", "h0", "a"});
        const auto &fq = require("q");
        spec.q = detail::parse_rational_literal(fq.value, fq.pos);
        if (spec.q == 0) throw parse_error("q must be nonzero", fq.pos);
        if (const auto *fh = find("h0")) spec.h0 = detail::parse_rational_literal(fh->value, fh->pos);
        const auto &fa = require("a");
        spec.a = parse_poly_value(fa.value, laurent);
        if (spec.a.is_zero()) throw parse_error("a must be nonzero", fa.pos);
        return spec;
    }
    if (kind == "smith") {
        spec.kind = AlgebraKind::Smith;
        check_keys({"q", "f"});
        const auto &fq = require("q");
        spec.q = detail::parse_rational_literal(fq.value, fq.pos);
        if (spec.q == 0) throw parse_error("q must be nonzero", fq.pos);
        const auto &ff = require("f");
        LaurentPoly f = parse_poly_value(ff.value, false);
        spec.f = f.is_zero() ? Poly() : f.to_poly();
        if (spec.f.coeff(0) != 0) throw parse_error("f(0)=0 required", ff.pos);
        return spec;
    }
    if (kind == "lebruyn") {
        spec.kind = AlgebraKind::Lebruyn;
        check_keys({"alpha", "beta"});
        const auto &fa = require("alpha");
        spec.alpha = detail::parse_rational_literal(fa.value, fa.pos);
        const auto &fb = require("beta");
        spec.beta = detail::parse_rational_literal(fb.value, fb.pos);
        return spec;
    }
    throw parse_error("unknown algebra kind '" + kind + "'", kstart);
}

inline std::string print_algebra_spec(const AlgebraSpec &spec) {
    switch (spec.kind) {
        case AlgebraKind::Gwa: {
            std::string s = "gwa q=" + spec.q.get_str();
            if (spec.h0 != 0) s += " h0=" + spec.h0.get_str();
            return s + " a=\"" + spec.a.str() + "\"";
        }
        case AlgebraKind::Lgwa:
            return "lgwa q=" + spec.q.get_str() + " a=\"" + spec.a.str() + "\"";
        case AlgebraKind::Smith:
            return "smith q=" + spec.q.get_str() + " f=\"" + spec.f.str() + "\"";
        case AlgebraKind::Witten: {
            std::string s = "witten ";
            for (std::size_t k = 0; k < 7; ++k) {
                if (k) s += ",";
                s += spec.eps[k].get_str();
            }
            return s;
        }
        default:
            return "lebruyn alpha=" + spec.alpha.get_str() + " beta=" + spec.beta.get_str();
    }
}

// Presentation for the kinds that directly define a GWA.
inline GwaPresentation spec_to_presentation(const AlgebraSpec &spec) {
    if (spec.kind == AlgebraKind::Gwa)
        return GwaPresentation(BaseRing::PolyRing, spec.q, spec.h0, spec.a);
    if (spec.kind == AlgebraKind::Lgwa)
        return GwaPresentation(BaseRing::LaurentRing, spec.q, 0, spec.a);
    throw std::invalid_argument("spec_to_presentation: not a gwa/lgwa specification");
}

} // namespace gwa
