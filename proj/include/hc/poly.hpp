#ifndef HC_POLY_HPP
#define HC_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hc/error.hpp"
#include "hc/fq.hpp"
#include "hc/ints.hpp"

namespace hc {

// Dense univariate polynomial over a coefficient type C. C must be
// constructible from long, support ring operators, and provide is_zero /
// field_inv (for field coefficients) as free functions.
template <class C>
class Poly {
  public:
    Poly() = default;
    Poly(long v) { set({C(v)}); }  // NOLINT
    explicit Poly(const C& c) { set({c}); }
    explicit Poly(std::vector<C> coeffs) { set(std::move(coeffs)); }

    static Poly variable() { return Poly(std::vector<C>{C(0), C(1)}); }
    static Poly monomial(const C& c, int e) {
        std::vector<C> v(e + 1, C(0));
        v[e] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : C(0);
    }
    const C& lc() const {
        if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool is_zero(const Poly& p) { return p.c_.empty(); }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) - b.coeff(int(i));
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<C> r(c_.size(), C(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const C& s) {
        std::vector<C> r(a.c_.size(), C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    // x^k * this
    Poly shifted(int k) const {
        if (zero()) return Poly();
        std::vector<C> r(c_.size() + k, C(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return Poly(std::move(r));
    }

    C operator()(const C& x) const {
        C acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Evaluation into another coefficient domain via an embedding functor.
    template <class D, class Map>
    D eval_mapped(const D& x, Map&& embed) const {
        D acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
        return acc;
    }

  private:
    void set(std::vector<C> v) {
        while (!v.empty() && is_zero(v.back())) v.pop_back();
        c_ = std::move(v);
    }
    std::vector<C> c_;
};

template <class C>
Poly<C> derivative(const Poly<C>& f) {
    if (f.degree() < 1) return Poly<C>();
    std::vector<C> r(f.degree(), C(0));
    for (int i = 1; i <= f.degree(); ++i) r[i - 1] = f.coeff(i) * C(i);
    return Poly<C>(std::move(r));
}

// Division with remainder; C must be a field.
template <class C>
std::pair<Poly<C>, Poly<C>> divrem(const Poly<C>& a, const Poly<C>& b) {
    if (b.zero()) throw InternalError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<C>(), a};
    C inv_lc = field_inv(b.lc());
    std::vector<C> rem(a.coeffs());
    std::vector<C> quo(a.degree() - b.degree() + 1, C(0));
    for (int i = a.degree(); i >= b.degree(); --i) {
        C c = rem[i] * inv_lc;
        if (!is_zero(c)) {
            quo[i - b.degree()] = c;
            for (int j = 0; j <= b.degree(); ++j)
                rem[i - b.degree() + j] = rem[i - b.degree() + j] - c * b.coeff(j);
        }
        rem.pop_back();
    }
    return {Poly<C>(std::move(quo)), Poly<C>(std::move(rem))};
}

template <class C>
Poly<C> operator/(const Poly<C>& a, const Poly<C>& b) {
    auto [q, r] = divrem(a, b);
    if (!is_zero(r)) throw InternalError("inexact polynomial division");
    return q;
}

template <class C>
bool divides(const Poly<C>& b, const Poly<C>& a) {
    if (b.zero()) return a.zero();
    return is_zero(divrem(a, b).second);
}

template <class C>
Poly<C> make_monic(const Poly<C>& f) {
    if (f.zero()) return f;
    return f * field_inv(f.lc());
}

// Monic gcd over a field; gcd(0,0) = 0.
template <class C>
Poly<C> gcd_monic(Poly<C> a, Poly<C> b) {
    while (!b.zero()) {
        auto r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class C>
std::tuple<Poly<C>, Poly<C>, Poly<C>> ext_gcd(Poly<C> a, Poly<C> b) {
    Poly<C> s0(1), s1, t0, t1(1);
    while (!b.zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<C> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        t0 = std::move(t1);
        s1 = std::move(s2);
        t1 = std::move(t2);
    }
    if (a.zero()) return {a, s0, t0};
    C inv = field_inv(a.lc());
    return {a * inv, s0 * inv, t0 * inv};
}

// Inverse of a modulo f (f irreducible or at least coprime to a).
template <class C>
Poly<C> inv_mod(const Poly<C>& a, const Poly<C>& f) {
    auto [g, s, t] = ext_gcd(divrem(a, f).second, f);
    if (g.degree() != 0) throw InternalError("inverse modulo a non-coprime polynomial");
    return divrem(s * field_inv(g.coeff(0)), f).second;
}

template <class C>
Poly<C> powmod(Poly<C> base, Int e, const Poly<C>& mod) {
    Poly<C> r(1);
    base = divrem(base, mod).second;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = divrem(r * base, mod).second;
        base = divrem(base * base, mod).second;
        e >>= 1;
    }
    return r;
}

// f(x + a)
template <class C>
Poly<C> taylor_shift(const Poly<C>& f, const C& a) {
    Poly<C> xpa = Poly<C>::variable() + Poly<C>(a);
    return f.eval_mapped(xpa, [](const C& c) { return Poly<C>(c); });
}

// Resultant of two polynomials over a field via the Euclidean recurrence.
template <class C>
C resultant(Poly<C> f, Poly<C> g) {
    if (f.zero() || g.zero()) return C(0);
    C acc(1);
    bool flip = false;
    while (g.degree() > 0) {
        Poly<C> r = divrem(f, g).second;
        int dr = r.zero() ? 0 : r.degree();
        if (r.zero() && f.degree() > 0) return C(0);
        if ((f.degree() % 2) && (g.degree() % 2)) flip = !flip;
        C l = g.lc();
        C p(1);
        for (int i = 0; i < f.degree() - dr; ++i) p = p * l;
        acc = acc * p;
        f = std::move(g);
        g = std::move(r);
    }
    // g now constant
    C gv = g.coeff(0);
    C p(1);
    for (int i = 0; i < f.degree(); ++i) p = p * gv;
    acc = acc * p;
    if (flip) acc = -acc;
    return acc;
}

inline std::optional<Rat> try_pth_root(const Rat&) { return std::nullopt; }
inline std::optional<FqElem> try_pth_root(const FqElem& x) { return pth_root(x); }

// f(Y) -> g with g(Y^p) = f, taking p-th roots of coefficients.
template <class C>
std::optional<Poly<C>> try_deflate_pth(const Poly<C>& f, int p) {
    std::vector<C> g(f.degree() / p + 1, C(0));
    for (int i = 0; i <= f.degree(); ++i) {
        if (is_zero(f.coeff(i))) continue;
        if (i % p != 0) return std::nullopt;
        auto root = try_pth_root(f.coeff(i));
        if (!root) return std::nullopt;
        g[i / p] = *root;
    }
    return Poly<C>(std::move(g));
}

// Squarefree decomposition over a field of characteristic `p` (0 allowed).
// Returns monic pairwise-coprime squarefree parts with multiplicities; the
// product of part^mult equals the input up to a unit. In characteristic p an
// inseparable part whose coefficients lack p-th roots (possible over the
// imperfect field Fq(u)) is returned as-is with its multiplicity.
template <class C>
std::vector<std::pair<Poly<C>, int>> squarefree_decomposition(const Poly<C>& f0, int p) {
    if (f0.zero()) throw ValidationError("squarefree decomposition of zero");
    std::vector<std::pair<Poly<C>, int>> out;
    Poly<C> f = make_monic(f0);
    if (f.degree() < 1) return out;
    Poly<C> d = derivative(f);
    if (p > 0 && d.zero()) {
        auto g = try_deflate_pth(f, p);
        if (!g) {
            out.emplace_back(f, 1);
            return out;
        }
        for (auto& [part, m] : squarefree_decomposition(*g, p)) out.emplace_back(part, m * p);
        return out;
    }
    if (p == 0 && d.zero()) throw InternalError("zero derivative in characteristic 0");
    Poly<C> c = gcd_monic(f, d);
    Poly<C> w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly<C> y = gcd_monic(w, c);
        Poly<C> z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        c = c / y;
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) {
        // remaining factors have multiplicity divisible by p
        for (auto& [part, m] : squarefree_decomposition(c, p)) out.emplace_back(part, m * p);
    }
    return out;
}

template <class C>
Poly<C> squarefree_part(const Poly<C>& f, int p) {
    Poly<C> r(1);
    for (auto& [part, m] : squarefree_decomposition(f, p)) r *= part;
    return r;
}

// First characteristic reachable from a nonzero coefficient; 0 if none attached.
template <class C>
int characteristic0(const Poly<C>& f) {
    for (const auto& c : f.coeffs()) {
        int p = characteristic0(c);
        if (p != 0) return p;
    }
    return 0;
}

// A coefficient string needs parentheses when it has structure outside any
// [..] extension-field element literal.
inline bool text_is_composite(const std::string& cs) {
    int depth = 0;
    for (char ch : cs) {
        if (ch == '[')
            ++depth;
        else if (ch == ']')
            --depth;
        else if (depth == 0 && (ch == '+' || ch == '-' || ch == '/' || ch == ' '))
            return true;
    }
    return false;
}

template <class C>
std::string to_text(const Poly<C>& f, const std::string& var) {
    if (f.zero()) return "0";
    std::string s;
    for (int i = f.degree(); i >= 0; --i) {
        const C c = f.coeff(i);
        if (is_zero(c)) continue;
        std::string cs = to_text(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            if (neg) {
                s += "-";
                cs = cs.substr(1);
            }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool needs_coeff = (i == 0) || !(cs == "1");
        if (needs_coeff) {
            bool composite = text_is_composite(cs);
            if (composite && i > 0)
                s += "(" + cs + ")";
            else
                s += cs;
            if (i > 0) s += "*";
        }
        if (i > 0) {
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

using FqUPoly = Poly<FqElem>;

// --- ring-of-integers helpers (O_K = Z or Fq[u]) ---

inline Int ring_gcd(const Int& a, const Int& b) { return int_gcd(a, b); }
inline FqUPoly ring_gcd(const FqUPoly& a, const FqUPoly& b) { return gcd_monic(a, b); }

inline bool ring_is_unit(const Int& a) { return a == 1 || a == -1; }
inline bool ring_is_unit(const FqUPoly& a) { return a.degree() == 0; }

inline bool ring_divides(const Int& a, const Int& b) {
    if (is_zero(a)) return is_zero(b);
    return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
}
inline bool ring_divides(const FqUPoly& a, const FqUPoly& b) { return divides(a, b); }

// Content of a coefficient list over O_K, normalized positive / monic.
template <class R>
R ring_content(const std::vector<R>& cs) {
    R g{};
    for (const auto& c : cs)
        if (!is_zero(c)) g = ring_gcd(g, c);
    return g;
}

}  // namespace hc

#endif
