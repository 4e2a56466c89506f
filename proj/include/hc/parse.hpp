#ifndef HC_PARSE_HPP
#define HC_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "hc/bipoly.hpp"
#include "hc/field.hpp"

namespace hc {

namespace detail {

// Recursive-descent parser for the polynomial grammar
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := '(' expr ')' | 'T' | 'Y' | 'u' | int ( '/' int )? | '[' int (',' int)* ']'
// Division is only allowed by constants. 'u' and brackets are only valid over Fq(u).
template <class E>
class PolyParser {
  public:
    PolyParser(std::string src, std::shared_ptr<const FqCtx> ctx)
        : s_(std::move(src)), ctx_(std::move(ctx)) {}

    BiPoly<E> parse() {
        BiPoly<E> v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& why) {
        throw ValidationError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                              why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int integer() {
        skip();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    BiPoly<E> expr() {
        bool neg = eat('-');
        BiPoly<E> v = term();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    BiPoly<E> term() {
        BiPoly<E> v = factor();
        for (;;) {
            if (eat('*'))
                v *= factor();
            else if (eat('/')) {
                BiPoly<E> d = factor();
                if (d.deg_t() != 0 || d.deg_y() != 0) fail("division by a non-constant");
                v = v * field_inv(d.coeff(0, 0));
            } else
                return v;
        }
    }

    BiPoly<E> factor() {
        BiPoly<E> v = atom();
        if (eat('^')) {
            Int e = integer();
            if (sgn(e) < 0 || e > 64) fail("exponent out of range");
            v = v.pow(static_cast<unsigned>(e.get_ui()));
        }
        return v;
    }

    BiPoly<E> atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            BiPoly<E> v = expr();
            if (!eat(')')) fail("expected )");
            return v;
        }
        if (c == 'T') {
            ++pos_;
            return BiPoly<E>::var_t() * unit();
        }
        if (c == 'Y') {
            ++pos_;
            return BiPoly<E>::var_y() * unit();
        }
        if (c == 'u') {
            ++pos_;
            return var_u();
        }
        if (c == '[') {
            eat('[');
            std::vector<Int> digits;
            digits.push_back(integer());
            while (eat(',')) digits.push_back(integer());
            if (!eat(']')) fail("expected ]");
            return bracket(digits);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = integer();
            if (peek() == '/') {
                // fraction literal: lookahead for an integer denominator
                size_t save = pos_;
                ++pos_;
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    Int d = integer();
                    return from_fraction(n, d);
                }
                pos_ = save;
            }
            return from_int(n);
        }
        fail("unexpected character");
    }

    // Field unit with an attached context over Fq(u): keeps every parsed
    // coefficient context-aware, which characteristic-p algorithms rely on.
    E unit() {
        if constexpr (std::is_same_v<E, FqRat>) {
            if (!ctx_) fail("no finite field context");
            return FqRat(FqUPoly(std::vector<FqElem>{FqElem(1).attach(ctx_)}));
        } else {
            return E(1);
        }
    }

    BiPoly<E> var_u() {
        if constexpr (std::is_same_v<E, FqRat>) {
            if (!ctx_) fail("no finite field context");
            return BiPoly<E>(FqRat(FqUPoly::variable() * FqElem(1).attach(ctx_)));
        } else {
            fail("variable u is only valid over Fq(u)");
        }
    }

    BiPoly<E> bracket(const std::vector<Int>& digits) {
        if constexpr (std::is_same_v<E, FqRat>) {
            if (!ctx_) fail("no finite field context");
            if (digits.size() > ctx_->k()) fail("too many extension coordinates");
            FqCtx::Rep rep(ctx_->k(), 0);
            for (size_t i = 0; i < digits.size(); ++i)
                rep[i] = static_cast<uint32_t>(mpz_fdiv_ui(digits[i].get_mpz_t(), ctx_->p()));
            return BiPoly<E>(FqRat(FqUPoly(std::vector<FqElem>{FqElem(ctx_, rep)})));
        } else {
            fail("bracket coefficients are only valid over Fq(u)");
        }
    }

    BiPoly<E> from_int(const Int& n) {
        if constexpr (std::is_same_v<E, FqRat>) {
            if (!ctx_) fail("no finite field context");
            return BiPoly<E>(FqRat(FqUPoly(std::vector<FqElem>{FqElem::from_int(ctx_, n)})));
        } else {
            return BiPoly<E>(E(Rat(n)));
        }
    }

    BiPoly<E> from_fraction(const Int& n, const Int& d) {
        if constexpr (std::is_same_v<E, FqRat>) {
            fail("fraction literals are only valid over Q");
        } else {
            if (is_zero(d)) fail("zero denominator");
            Rat r(n, d);
            r.canonicalize();
            return BiPoly<E>(r);
        }
    }

    std::string s_;
    size_t pos_ = 0;
    std::shared_ptr<const FqCtx> ctx_;
};

}  // namespace detail

inline BiPolyQ parse_bipoly_q(const std::string& s) {
    return detail::PolyParser<Rat>(s, nullptr).parse();
}

inline BiPolyF parse_bipoly_fqu(const std::string& s, std::shared_ptr<const FqCtx> ctx) {
    return detail::PolyParser<FqRat>(s, std::move(ctx)).parse();
}

inline Rat parse_elem_q(const std::string& s) {
    BiPolyQ p = parse_bipoly_q(s);
    if (p.deg_t() != 0 || p.deg_y() != 0) throw ValidationError("expected a constant: " + s);
    return p.coeff(0, 0);
}

inline FqRat parse_elem_fqu(const std::string& s, std::shared_ptr<const FqCtx> ctx) {
    BiPolyF p = parse_bipoly_fqu(s, std::move(ctx));
    if (p.deg_t() != 0 || p.deg_y() != 0) throw ValidationError("expected a constant: " + s);
    return p.coeff(0, 0);
}

}  // namespace hc

#endif
