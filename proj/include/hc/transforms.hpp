#ifndef HC_TRANSFORMS_HPP
#define HC_TRANSFORMS_HPP

#include <cmath>
#include <map>
#include <vector>

#include "hc/bifactor.hpp"
#include "hc/height.hpp"

namespace hc {

namespace detail {

inline bool elem_integral(const Rat& c) { return c.get_den() == 1; }
inline bool elem_integral(const FqRat& c) { return c.integral(); }

inline Rat elem_from_int(const Rat&, const Int& c) { return Rat(c); }
inline FqRat elem_from_int(const FqRat& one, const Int& c) {
    auto ctx = one.num().lc().ctx();
    return FqRat(FqUPoly(std::vector<FqElem>{FqElem::from_int(ctx, c)}));
}

template <class E>
bool bipoly_integral(const BiPoly<E>& f) {
    for (auto& [key, c] : f.terms())
        if (!elem_integral(c)) return false;
    return true;
}

// Multiplicative identity matching F's coefficient field (context-attached
// over Fq(u) so characteristic-p arithmetic stays context-aware).
template <class E>
E unit_like(const BiPoly<E>& f) {
    if constexpr (std::is_same_v<E, Rat>) {
        return Rat(1);
    } else {
        auto ctx = ctx_of_bi(f);
        return FqRat(FqUPoly(std::vector<FqElem>{FqElem(1).attach(ctx)}));
    }
}

}  // namespace detail

// --- discriminant ---

template <class E>
struct Discriminant {
    Poly<E> delta;  // polynomial in T over K
    bool inseparable = false;
};

// (-1)^{d(d-1)/2} Res_Y(F, dF/dY), divided by the leading coefficient a_0 when
// a_0 is constant; the vanishing locus is what downstream logic consumes.
template <class E>
Discriminant<E> discriminant_Y(const BiPoly<E>& F) {
    if (F.deg_y() < 1) throw ValidationError("discriminant needs positive Y-degree");
    auto f = F.as_poly_over_kt();
    auto fy = derivative(f);
    if (is_zero(fy)) return {Poly<E>(), true};
    RFrac<E> R = resultant(f, fy);
    int d = F.deg_y();
    if ((d * (d - 1) / 2) % 2 != 0) R = -R;
    RFrac<E> lc = f.lc();
    if (lc.integral() && lc.num().degree() == 0) R = R / lc;
    if (!R.integral()) throw InternalError("non-polynomial discriminant");
    return {R.num() * field_inv(R.den().coeff(0)), false};
}

// --- monicization ---

// G = Y^d + a_1 Y^{d-1} + a_0 a_2 Y^{d-2} + ... + a_0^{d-1} a_d where
// F = a_0 Y^d + ... + a_d; roots correspond via y <-> a_0(t) y.
template <class E>
BiPoly<E> monicize(const BiPoly<E>& F) {
    int d = F.deg_y();
    if (d < 1) throw ValidationError("monicize needs positive Y-degree");
    if (!detail::bipoly_integral(F)) throw ValidationError("monicize needs O_K[T,Y] input");
    auto rows = F.y_coeffs();  // rows[j] multiplies Y^j; a_i = rows[d-i]
    Poly<E> a0 = rows[d];
    std::vector<Poly<E>> grows(d + 1);
    grows[d] = Poly<E>(detail::unit_like(F));
    Poly<E> pw(detail::unit_like(F));  // a_0^{i-1}
    for (int i = 1; i <= d; ++i) {
        grows[d - i] = pw * rows[d - i];
        pw = pw * a0;
    }
    return BiPoly<E>::from_y_coeffs(grows);
}

// --- additive shift Y -> T^E + Y ---

// E = floor(d_K^2 d_T d_Y L1/L2) + 1 with H = max{e^e, H_aff}, L1 = log H,
// L2 = log log H >= 1.
template <class Dom, class E = typename Dom::Elem>
long shift_exponent(const Dom& dom, const BiPoly<E>& P) {
    if (P.deg_t() < 1 || P.deg_y() < 1)
        throw ValidationError("shift exponent needs positive degrees in T and Y");
    double e1 = std::exp(1.0);
    double l1 = std::max(e1, height_affine(dom, P).log_e);
    double l2 = std::max(1.0, std::log(l1));
    double v = static_cast<double>(P.deg_t()) * P.deg_y() * l1 / l2;  // d_K = 1
    return static_cast<long>(std::floor(v)) + 1;
}

template <class E>
BiPoly<E> shift_transform(const BiPoly<E>& P, long exp_e) {
    if (exp_e < 1) throw ValidationError("shift exponent must be >= 1");
    E one = detail::unit_like(P);
    BiPoly<E> sub = BiPoly<E>::var_t().pow(static_cast<unsigned>(exp_e)) * one +
                    BiPoly<E>::var_y() * one;
    auto rows = P.y_coeffs();
    BiPoly<E> g;
    for (int j = P.deg_y(); j >= 0; --j) {
        g = g * sub;
        BiPoly<E> row;
        for (int i = 0; i <= rows[j].degree(); ++i)
            row += BiPoly<E>::var_t().pow(static_cast<unsigned>(i)) * rows[j].coeff(i);
        g += row;
    }
    return g;
}

// --- symmetric function machinery ---

// Multivariate polynomial over Z; exponent vectors are trailing-zero trimmed,
// so arity is contextual. std::map's lexicographic vector order doubles as the
// monomial order for Gauss's descent.
class MultiPoly {
  public:
    using Key = std::vector<int>;

    MultiPoly() = default;
    MultiPoly(long v) {  // NOLINT
        if (v != 0) m_[{}] = v;
    }
    explicit MultiPoly(const Int& v) {
        if (!is_zero(v)) m_[{}] = v;
    }

    static MultiPoly variable(int i) {
        MultiPoly p;
        Key k(i + 1, 0);
        k[i] = 1;
        p.m_[std::move(k)] = 1;
        return p;
    }
    static MultiPoly monomial(Key k, Int c) {
        MultiPoly p;
        trim(k);
        if (!is_zero(c)) p.m_[std::move(k)] = std::move(c);
        return p;
    }

    const std::map<Key, Int>& terms() const { return m_; }
    bool zero() const { return m_.empty(); }
    friend bool is_zero(const MultiPoly& p) { return p.m_.empty(); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.m_ == b.m_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (auto& [k, c] : b.m_) {
            auto it = r.m_.find(k);
            if (it == r.m_.end()) {
                r.m_[k] = c;
            } else {
                it->second += c;
                if (is_zero(it->second)) r.m_.erase(it);
            }
        }
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    MultiPoly operator-() const {
        MultiPoly r;
        for (auto& [k, c] : m_) r.m_[k] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (auto& [ka, ca] : a.m_)
            for (auto& [kb, cb] : b.m_) {
                Key k(std::max(ka.size(), kb.size()), 0);
                for (size_t i = 0; i < k.size(); ++i)
                    k[i] = (i < ka.size() ? ka[i] : 0) + (i < kb.size() ? kb[i] : 0);
                trim(k);
                Int prod = ca * cb;
                auto it = r.m_.find(k);
                if (it == r.m_.end())
                    r.m_[std::move(k)] = std::move(prod);
                else {
                    it->second += prod;
                    if (is_zero(it->second)) r.m_.erase(it);
                }
            }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
    MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
    MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

    // relabel variables by a permutation of 0..n-1
    MultiPoly permuted(const std::vector<int>& perm) const {
        MultiPoly r;
        for (auto& [k, c] : m_) {
            Key nk(perm.size(), 0);
            for (size_t i = 0; i < k.size(); ++i) nk[perm[i]] = k[i];
            trim(nk);
            r.m_[std::move(nk)] = c;
        }
        return r;
    }

  private:
    static void trim(Key& k) {
        while (!k.empty() && k.back() == 0) k.pop_back();
    }
    std::map<Key, Int> m_;
};

// e_i(y_1..y_n)
inline MultiPoly elementary_symmetric(int n, int i) {
    if (i == 0) return MultiPoly(1);
    if (i > n) return MultiPoly();
    // dynamic programming over prefixes
    std::vector<MultiPoly> e(i + 1);
    e[0] = MultiPoly(1);
    for (int v = 0; v < n; ++v) {
        MultiPoly yv = MultiPoly::variable(v);
        for (int t = std::min(i, v + 1); t >= 1; --t) e[t] += e[t - 1] * yv;
    }
    return e[i];
}

inline bool is_symmetric(const MultiPoly& s, int n) {
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = v;
        std::swap(perm[i], perm[i + 1]);
        if (s.permuted(perm) != s) return false;
    }
    return true;
}

// A polynomial in root variables y_1..y_n asserted symmetric under S_n.
struct SymPoly {
    MultiPoly value;
    int arity;
};

// Express a symmetric polynomial in the elementary symmetric polynomials
// (Gauss's lexicographic descent). Keys of the result are exponent vectors in
// e_1..e_n.
inline MultiPoly symmetric_reduce(const SymPoly& s) {
    int n = s.arity;
    if (!is_symmetric(s.value, n)) throw ValidationError("polynomial is not symmetric");
    MultiPoly rest = s.value;
    MultiPoly out;
    std::map<int, MultiPoly> e_cache;
    auto e_of = [&](int i) -> const MultiPoly& {
        auto it = e_cache.find(i);
        if (it == e_cache.end()) it = e_cache.emplace(i, elementary_symmetric(n, i)).first;
        return it->second;
    };
    while (!rest.zero()) {
        std::vector<int> alpha = rest.terms().rbegin()->first;  // lex-greatest
        Int c = rest.terms().rbegin()->second;
        alpha.resize(n, 0);
        for (int i = 0; i + 1 < n; ++i)
            if (alpha[i] < alpha[i + 1]) throw InternalError("descent hit a non-dominant monomial");
        std::vector<int> lam(n, 0);
        for (int i = 0; i < n; ++i) lam[i] = alpha[i] - (i + 1 < n ? alpha[i + 1] : 0);
        MultiPoly expanded(1);
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < lam[i]; ++t) expanded *= e_of(i + 1);
        rest -= expanded * MultiPoly(c);
        out += MultiPoly::monomial(lam, c);
    }
    return out;
}

// --- subset resolvents ---

// R_{m,j}(T,Y) = prod over m-subsets S of the roots of (Y - e_j(S)), for a
// monic F in Y over O_K[T]. Computed symbolically: the Y-coefficients are
// symmetric in the roots, reduced to elementary symmetric polynomials, and
// e_i is substituted by (-1)^i a_i(T).
template <class E>
BiPoly<E> subset_resolvent(const BiPoly<E>& F, int m, int j) {
    int d = F.deg_y();
    if (d < 1 || d > 6) throw ValidationError("subset resolvent needs 1 <= deg_Y <= 6");
    if (m < 1 || m > d / 2 || j < 1 || j > m)
        throw ValidationError("subset resolvent needs 1 <= j <= m <= deg_Y/2");
    if (!detail::bipoly_integral(F)) throw ValidationError("resolvent input must be in O_K[T,Y]");
    auto rows = F.y_coeffs();
    E one = detail::unit_like(F);
    if (!(rows[d] == Poly<E>(one))) throw ValidationError("resolvent input must be monic in Y");

    // symbolic product over subsets
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    Poly<MultiPoly> R(1);
    Poly<MultiPoly> yvar = Poly<MultiPoly>::variable();
    for (;;) {
        // tau = e_j of the picked roots
        MultiPoly tau;
        std::vector<int> sub(j);
        for (int i = 0; i < j; ++i) sub[i] = i;
        for (;;) {
            MultiPoly mono(1);
            for (int i : sub) mono *= MultiPoly::variable(pick[i]);
            tau += mono;
            int i = j - 1;
            while (i >= 0 && sub[i] == m - j + i) --i;
            if (i < 0) break;
            ++sub[i];
            for (int t = i + 1; t < j; ++t) sub[t] = sub[t - 1] + 1;
        }
        R *= yvar - Poly<MultiPoly>(tau);
        int i = m - 1;
        while (i >= 0 && pick[i] == d - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int t = i + 1; t < m; ++t) pick[t] = pick[t - 1] + 1;
    }

    // substitute e_i := (-1)^i a_i(T), a_i = rows[d-i]
    std::vector<Poly<E>> subst(d + 1);
    subst[0] = Poly<E>(one);
    for (int i = 1; i <= d; ++i) {
        subst[i] = rows[d - i];
        if (i % 2 != 0) subst[i] = -subst[i];
    }
    std::vector<Poly<E>> out_rows(R.degree() + 1);
    for (int yd = 0; yd <= R.degree(); ++yd) {
        MultiPoly reduced = symmetric_reduce(SymPoly{R.coeff(yd), d});
        Poly<E> acc;
        for (auto& [lam, c] : reduced.terms()) {
            Poly<E> t2(one);
            for (size_t i = 0; i < lam.size(); ++i)
                for (int rep = 0; rep < lam[i]; ++rep) t2 = t2 * subst[i + 1];
            acc += t2 * detail::elem_from_int(one, c);
        }
        out_rows[yd] = acc;
    }
    return BiPoly<E>::from_y_coeffs(out_rows);
}

}  // namespace hc

#endif
