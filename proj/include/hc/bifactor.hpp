#ifndef HC_BIFACTOR_HPP
#define HC_BIFACTOR_HPP

#include <optional>
#include <vector>

#include "hc/bipoly.hpp"
#include "hc/factor_fq.hpp"
#include "hc/factor_q.hpp"

namespace hc {

// Univariate factorization over the three rational function fields, realized
// below through bivariate factorization over the underlying field.
Factorization<FqRat> factor_univariate(const Poly<FqRat>& f);
Factorization<QT> factor_univariate(const Poly<QT>& f);
Factorization<FqUT> factor_univariate(const Poly<FqUT>& f);

// Factorization in k[x][Y] for a field k: F = unit * prod(content_i^{m_i}) *
// prod(part_j^{m_j}) with content_i monic irreducible in k[x] and part_j of
// positive Y-degree, primitive in k[x], with monic leading Y-coefficient.
template <class k>
struct BiFactorization {
    k unit{1};
    std::vector<std::pair<Poly<k>, int>> content;
    std::vector<std::pair<BiPoly<k>, int>> parts;

    BiPoly<k> reassemble() const {
        BiPoly<k> r(unit);
        for (auto& [f, m] : content)
            for (int i = 0; i < m; ++i) {
                BiPoly<k> b;
                for (int j = 0; j <= f.degree(); ++j) b += BiPoly<k>::var_t().pow(j) * f.coeff(j);
                r *= b;
            }
        for (auto& [f, m] : parts)
            for (int i = 0; i < m; ++i) r *= f;
        return r;
    }
};

template <class k>
BiFactorization<k> bifactor(const BiPoly<k>& F);

namespace detail {

inline std::shared_ptr<const FqCtx> ctx_of_bi(const BiPoly<FqElem>& f) {
    for (auto& [key, c] : f.terms())
        if (c.attached()) return c.ctx();
    throw InternalError("bivariate polynomial has no attached Fq context");
}
inline std::shared_ptr<const FqCtx> ctx_of_bi(const BiPoly<FqRat>& f) {
    for (auto& [key, c] : f.terms())
        if (!is_zero(c)) return ctx_of(c);
    throw InternalError("bivariate polynomial has no attached Fq context");
}

template <class k>
int field_char(const BiPoly<k>& F) {
    if constexpr (std::is_same_v<k, Rat>)
        return 0;
    else
        return static_cast<int>(ctx_of_bi(F)->p());
}

template <class k>
Poly<k> poly_lcm(const Poly<k>& a, const Poly<k>& b) {
    if (a.zero() || b.zero()) return Poly<k>();
    Poly<k> g = gcd_monic(a, b);
    return make_monic((a * b) / g);
}

// Clear denominators of a Y-polynomial over k(x) into k[x][Y].
template <class k>
BiPoly<k> bipoly_from_kt(const Poly<RFrac<k>>& f) {
    Poly<k> den(1);
    for (auto& c : f.coeffs())
        if (!is_zero(c)) den = poly_lcm(den, c.den());
    std::vector<Poly<k>> rows;
    for (int j = 0; j <= f.degree(); ++j) {
        RFrac<k> s = f.coeff(j) * RFrac<k>(den);
        if (!s.integral()) throw InternalError("denominator clearing failed");
        rows.push_back(s.num() * field_inv(s.den().coeff(0)));
    }
    return BiPoly<k>::from_y_coeffs(rows);
}

// Canonical form of a bivariate factor: primitive in k[x] with monic leading
// Y-coefficient. The discarded scalar is folded into the global unit later.
template <class k>
BiPoly<k> bi_normalize(const BiPoly<k>& f) {
    auto rows = f.y_coeffs();
    Poly<k> cont;
    for (auto& r : rows) cont = gcd_monic(cont, r);
    if (cont.degree() > 0)
        for (auto& r : rows)
            if (!r.zero()) r = r / cont;
    k s = field_inv(rows.back().lc());
    for (auto& r : rows) r = r * s;
    return BiPoly<k>::from_y_coeffs(rows);
}

template <class k>
BiPoly<k> x_shift(const BiPoly<k>& f, const k& a) {
    auto rows = f.y_coeffs();
    for (auto& r : rows) r = taylor_shift(r, a);
    return BiPoly<k>::from_y_coeffs(rows);
}

// Exact division in k[x][Y]; nullopt when b does not divide a.
template <class k>
std::optional<BiPoly<k>> bi_exact_div(const BiPoly<k>& a, const BiPoly<k>& b) {
    auto [q, r] = divrem(a.as_poly_over_kt(), b.as_poly_over_kt());
    if (!is_zero(r)) return std::nullopt;
    for (int j = 0; j <= q.degree(); ++j)
        if (!q.coeff(j).integral()) return std::nullopt;
    return BiPoly<k>::from_poly_over_kt(q);
}

template <class k>
Poly<k> x_truncate(const Poly<k>& f, int sigma) {
    std::vector<k> cs;
    for (int i = 0; i < sigma && i <= f.degree(); ++i) cs.push_back(f.coeff(i));
    return Poly<k>(std::move(cs));
}

template <class k>
Poly<Poly<k>> series_truncate(const Poly<Poly<k>>& f, int sigma) {
    std::vector<Poly<k>> cs;
    for (int j = 0; j <= f.degree(); ++j) cs.push_back(x_truncate(f.coeff(j), sigma));
    return Poly<Poly<k>>(std::move(cs));
}

// 1/l mod x^sigma; requires l(0) != 0.
template <class k>
Poly<k> series_inverse(const Poly<k>& l, int sigma) {
    k c0 = l.coeff(0);
    if (is_zero(c0)) throw InternalError("series inverse at a zero constant term");
    k c0inv = field_inv(c0);
    std::vector<k> inv(sigma, k(0));
    inv[0] = c0inv;
    for (int m = 1; m < sigma; ++m) {
        k acc(0);
        for (int i = 1; i <= std::min(m, l.degree()); ++i) acc = acc + l.coeff(i) * inv[m - i];
        inv[m] = -acc * c0inv;
    }
    return Poly<k>(std::move(inv));
}

// Deterministic specialization points a in k: integers for Q, polynomials in u
// by degree-lex index for Fq(u), field elements by index for Fq.
template <class k>
k point_at(const BiPoly<k>& G, uint64_t i) {
    if constexpr (std::is_same_v<k, Rat>) {
        uint64_t m = (i + 1) / 2;
        Int v(static_cast<unsigned long>(m));
        return Rat(i % 2 == 0 ? -v : v);
    } else if constexpr (std::is_same_v<k, FqRat>) {
        auto ctx = ctx_of_bi(G);
        unsigned long q = ctx->q().fits_ulong_p() ? ctx->q().get_ui() : 0;
        std::vector<FqElem> cs;
        if (q == 0) {
            cs.push_back(FqElem::from_index(ctx, i));
        } else {
            do {
                cs.push_back(FqElem::from_index(ctx, i % q));
                i /= q;
            } while (i > 0);
        }
        return FqRat(FqUPoly(std::move(cs)));
    } else {
        return FqElem::from_index(ctx_of_bi(G), i);
    }
}

template <class k>
std::optional<k> find_good_point(const BiPoly<k>& G, const Poly<k>& l) {
    int n = G.deg_y();
    uint64_t limit = ~uint64_t(0);
    if constexpr (std::is_same_v<k, FqElem>) {
        auto ctx = ctx_of_bi(G);
        limit = ctx->q().fits_ulong_p() ? ctx->q().get_ui() : (uint64_t(1) << 20);
    }
    for (uint64_t i = 0; i < limit; ++i) {
        k a = point_at(G, i);
        if (is_zero(l(a))) continue;
        Poly<k> spec = G.specialize(a);
        if (spec.degree() != n) continue;
        if (gcd_monic(spec, derivative(spec)).degree() == 0) return a;
    }
    return std::nullopt;
}

template <class k>
std::vector<BiPoly<k>> bifactor_squarefree(const BiPoly<k>& G);

// No squarefree specialization point exists in Fq: factor over an extension
// F_{q^m} and merge Frobenius orbits of the factors back down to Fq.
inline std::vector<BiPoly<FqElem>> extension_descend(const BiPoly<FqElem>& G, const Poly<FqElem>& l) {
    auto small = ctx_of_bi(G);
    const Int& q = small->q();
    uint64_t needed = static_cast<uint64_t>(G.deg_t()) * (2 * G.deg_y()) +
                      static_cast<uint64_t>(std::max(0, l.degree())) + 2;
    unsigned m = 2;
    while (true) {
        double bits = m * log2_of(q);
        if (bits > 62 || int_pow(q, m).get_ui() > needed) break;
        ++m;
    }
    if (small->k() * m > FqCtx::kMaxExtensionDegree)
        throw ValidationError("finite field extension degree cap exceeded during factorization");
    auto big = FqCtx::make(small->p(), small->k() * m);

    // embedding via a root of the small field's modulus in the big field
    FqElem beta;
    if (small->k() > 1) {
        std::vector<FqElem> mc;
        for (auto c : small->modulus()) mc.push_back(FqElem::from_int(big, Int(c)));
        auto roots = fq_roots(Poly<FqElem>(std::move(mc)));
        if (roots.empty()) throw InternalError("no embedding root found");
        beta = roots.front();
    }
    auto embed = [&](const FqElem& c) -> FqElem {
        if (!c.attached()) return FqElem::from_int(big, Int(c.lift()));
        if (small->k() == 1) return FqElem::from_int(big, Int(c.rep()[0]));
        FqElem acc = FqElem::from_int(big, Int(0));
        for (unsigned i = small->k(); i-- > 0;)
            acc = acc * beta + FqElem::from_int(big, Int(c.rep()[i]));
        return acc;
    };
    std::map<uint64_t, FqElem> down_table;
    for (uint64_t i = 0; i < small->q().get_ui(); ++i) {
        FqElem e = FqElem::from_index(small, i);
        down_table[embed(e).index()] = e;
    }

    BiPoly<FqElem> G_big;
    for (auto& [key, c] : G.terms()) G_big.set(key.first, key.second, embed(c));

    auto facs = bifactor_squarefree(G_big);
    auto frob = [&](const BiPoly<FqElem>& f) {
        BiPoly<FqElem> r;
        for (auto& [key, c] : f.terms()) r.set(key.first, key.second, c.pow(q));
        return r;
    };
    auto down = [&](const BiPoly<FqElem>& f) {
        BiPoly<FqElem> r;
        for (auto& [key, c] : f.terms()) {
            auto it = down_table.find(c.index());
            if (it == down_table.end()) throw InternalError("orbit product not in base field");
            r.set(key.first, key.second, it->second);
        }
        return r;
    };

    std::vector<BiPoly<FqElem>> out;
    std::vector<bool> used(facs.size(), false);
    for (size_t i = 0; i < facs.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        BiPoly<FqElem> prod = facs[i];
        BiPoly<FqElem> g = frob(facs[i]);
        while (!(g == facs[i])) {
            size_t j = 0;
            for (; j < facs.size(); ++j)
                if (!used[j] && facs[j] == g) break;
            if (j == facs.size()) throw InternalError("Frobenius orbit not closed");
            used[j] = true;
            prod *= facs[j];
            g = frob(g);
        }
        out.push_back(bi_normalize(down(prod)));
    }
    return out;
}

// Factor a primitive, Y-squarefree, Y-separable polynomial with deg_Y >= 1
// into irreducibles via specialization, series Hensel lifting to x^sigma, and
// subset recombination.
template <class k>
std::vector<BiPoly<k>> bifactor_squarefree(const BiPoly<k>& G0) {
    BiPoly<k> G = bi_normalize(G0);
    int n = G.deg_y();
    if (n == 1) return {G};
    auto rows = G.y_coeffs();
    Poly<k> l = rows[n];

    auto a_opt = find_good_point(G, l);
    if (!a_opt) {
        if constexpr (std::is_same_v<k, FqElem>)
            return extension_descend(G, l);
        else
            throw InternalError("no specialization point over an infinite field");
    }
    k a = *a_opt;

    BiPoly<k> Gs = x_shift(G, a);
    auto rows0 = Gs.y_coeffs();
    Poly<k> l0 = rows0[n];
    int sigma = G.deg_t() + std::max(0, l.degree()) + 1;
    Poly<k> l0inv = series_inverse(l0, sigma);

    // W = Gs / lc, monic in Y over k[x]/(x^sigma)
    std::vector<Poly<k>> wrows;
    for (auto& r : rows0) wrows.push_back(x_truncate(r * l0inv, sigma));
    Poly<Poly<k>> W(wrows);

    std::vector<k> u0c;
    for (auto& r : wrows) u0c.push_back(r.coeff(0));
    Poly<k> u0(std::move(u0c));

    auto base = factor_univariate(u0);
    if (base.parts.size() == 1) return {G};
    std::vector<Poly<k>> fbar;
    for (auto& [f, mlt] : base.parts) fbar.push_back(f);
    int r = static_cast<int>(fbar.size());

    std::vector<Poly<k>> S;
    for (int i = 0; i < r; ++i) {
        Poly<k> prod(1);
        for (int j = 0; j < r; ++j)
            if (j != i) prod = divrem(prod * fbar[j], fbar[i]).second;
        S.push_back(inv_mod(prod, fbar[i]));
    }

    // linear lift: maintain prod(L) == W mod x^{m+1}
    std::vector<Poly<Poly<k>>> L;
    for (auto& f : fbar) {
        std::vector<Poly<k>> cs;
        for (int j = 0; j <= f.degree(); ++j) cs.push_back(Poly<k>(f.coeff(j)));
        L.emplace_back(std::move(cs));
    }
    for (int m = 1; m < sigma; ++m) {
        Poly<Poly<k>> P(1);
        for (auto& f : L) P = series_truncate(P * f, m + 1);
        Poly<Poly<k>> E = series_truncate(W, m + 1) - P;
        std::vector<k> ec;
        bool any = false;
        for (int j = 0; j < n; ++j) {
            k c = E.coeff(j).coeff(m);
            any = any || !is_zero(c);
            ec.push_back(c);
        }
        if (!any) continue;
        Poly<k> em(std::move(ec));
        for (int i = 0; i < r; ++i) {
            Poly<k> delta = divrem(em * S[i], fbar[i]).second;
            if (delta.zero()) continue;
            std::vector<Poly<k>> add(delta.degree() + 1);
            for (int j = 0; j <= delta.degree(); ++j)
                add[j] = Poly<k>::monomial(delta.coeff(j), m);
            L[i] += Poly<Poly<k>>(std::move(add));
        }
    }

    // recombination against the remaining cofactor
    std::vector<BiPoly<k>> out;
    std::vector<int> live(r);
    for (int i = 0; i < r; ++i) live[i] = i;
    BiPoly<k> Grem = G;
    for (int s = 1; 2 * s <= static_cast<int>(live.size());) {
        bool found = false;
        Poly<k> lrem = Grem.y_coeffs()[Grem.deg_y()];
        Poly<k> lrem_s = x_truncate(taylor_shift(lrem, a), sigma);
        Combinations comb(static_cast<int>(live.size()), s);
        while (comb.next()) {
            Poly<Poly<k>> cs{lrem_s};
            for (int t : comb.picks()) cs = series_truncate(cs * L[live[t]], sigma);
            std::vector<Poly<k>> crows;
            for (int j = 0; j <= cs.degree(); ++j) crows.push_back(cs.coeff(j));
            BiPoly<k> cand = bi_normalize(BiPoly<k>::from_y_coeffs(crows));
            k minus_a = k(0) - a;  // avoid expression-template deduction on -a
            cand = x_shift(cand, minus_a);
            auto quo = bi_exact_div(Grem, cand);
            if (!quo) continue;
            out.push_back(cand);
            std::vector<int> rest;
            for (size_t t = 0; t < live.size(); ++t)
                if (std::find(comb.picks().begin(), comb.picks().end(), static_cast<int>(t)) ==
                    comb.picks().end())
                    rest.push_back(live[t]);
            live = std::move(rest);
            Grem = bi_normalize(*quo);
            found = true;
            break;
        }
        if (!found) ++s;
    }
    if (Grem.deg_y() >= 1) out.push_back(Grem);
    return out;
}

// G with zero Y-derivative in characteristic p: G = H(x, Y^p). Factor H; each
// irreducible h either stays irreducible as h(x, Y^p) or is a p-th power
// h(x, Y^p) = H2^p, detected by x-exponents divisible by p together with
// coefficient p-th roots.
template <class k>
void inseparable_factor(const BiPoly<k>& G, int p, int mult,
                        std::vector<std::pair<BiPoly<k>, int>>& sink) {
    BiPoly<k> H;
    for (auto& [key, c] : G.terms()) {
        if (key.second % p != 0) throw InternalError("Y-exponent not divisible by p");
        H.set(key.first, key.second / p, c);
    }
    auto hf = bifactor(H);
    if (!hf.content.empty()) throw InternalError("unexpected content in inseparable split");
    for (auto& [h, m] : hf.parts) {
        BiPoly<k> inflated;
        for (auto& [key, c] : h.terms()) inflated.set(key.first, key.second * p, c);
        bool root_ok = true;
        BiPoly<k> H2;
        for (auto& [key, c] : inflated.terms()) {
            auto rc = try_pth_root(c);
            if (key.first % p != 0 || !rc) {
                root_ok = false;
                break;
            }
            H2.set(key.first / p, key.second / p, *rc);
        }
        if (root_ok) {
            auto inner = bifactor(H2);
            if (!inner.content.empty()) throw InternalError("unexpected content in p-th root split");
            for (auto& [g, mg] : inner.parts) sink.emplace_back(g, mg * p * m * mult);
        } else {
            sink.emplace_back(bi_normalize(inflated), m * mult);
        }
    }
}

}  // namespace detail

template <class k>
BiFactorization<k> bifactor(const BiPoly<k>& F) {
    if (is_zero(F)) throw ValidationError("factorization of zero");
    BiFactorization<k> out;
    int p = detail::field_char(F);

    // x-content
    auto rows = F.y_coeffs();
    Poly<k> cont;
    for (auto& r : rows) cont = gcd_monic(cont, r);
    if (cont.degree() > 0) {
        auto cf = factor_univariate(cont);
        out.content = cf.parts;
        for (auto& r : rows)
            if (!r.zero()) r = r / cont;
    }
    BiPoly<k> Fp = BiPoly<k>::from_y_coeffs(rows);

    if (Fp.deg_y() >= 1) {
        auto f_kt = Fp.as_poly_over_kt();
        for (auto& [part_kt, mult] : squarefree_decomposition(f_kt, p)) {
            BiPoly<k> part = detail::bi_normalize(detail::bipoly_from_kt(part_kt));
            if (p > 0 && is_zero(derivative(part_kt))) {
                detail::inseparable_factor(part, p, mult, out.parts);
            } else {
                for (auto& irrp : detail::bifactor_squarefree(part)) out.parts.emplace_back(irrp, mult);
            }
        }
    }

    std::sort(out.parts.begin(), out.parts.end(), [](const auto& x, const auto& y) {
        auto dx = std::make_pair(x.first.deg_y(), x.first.deg_t());
        auto dy = std::make_pair(y.first.deg_y(), y.first.deg_t());
        if (dx != dy) return dx < dy;
        std::string sx = to_text(x.first), sy = to_text(y.first);
        if (sx != sy) return sx < sy;
        return x.second < y.second;
    });
    sort_parts(out.content);

    // unit: leading-coefficient ratio of F against the assembled product,
    // verified by full reassembly.
    BiPoly<k> prod(1);
    for (auto& [f, m] : out.content) {
        BiPoly<k> b = BiPoly<k>::from_y_coeffs({f});
        for (int i = 0; i < m; ++i) prod *= b;
    }
    for (auto& [f, m] : out.parts)
        for (int i = 0; i < m; ++i) prod *= f;
    auto fl = F.as_poly_over_kt().lc();
    auto pl = prod.as_poly_over_kt().lc();
    RFrac<k> ratio = fl / pl;
    if (!ratio.integral() || ratio.num().degree() > 0)
        throw InternalError("non-constant unit in bivariate factorization");
    out.unit = ratio.num().coeff(0) * field_inv(ratio.den().coeff(0));
    if (!(prod * out.unit == F)) throw InternalError("bivariate factorization self-check failed");
    return out;
}

namespace detail {

// Univariate factorization over K(x) realized by clearing denominators and
// factoring in k[x][Y]; polynomials in x alone are units of K(x) and fold
// into the unit.
template <class k>
Factorization<RFrac<k>> factor_over_kt(const Poly<RFrac<k>>& f) {
    if (f.zero()) throw ValidationError("factorization of zero");
    Factorization<RFrac<k>> out;
    out.unit = f.lc();
    if (f.degree() < 1) return out;
    auto bf = bifactor(bipoly_from_kt(f));
    for (auto& [part, m] : bf.parts)
        out.parts.emplace_back(make_monic(part.as_poly_over_kt()), m);
    sort_parts(out.parts);
    return out;
}

}  // namespace detail

inline Factorization<FqRat> factor_univariate(const Poly<FqRat>& f) {
    return detail::factor_over_kt<FqElem>(f);
}
inline Factorization<QT> factor_univariate(const Poly<QT>& f) {
    return detail::factor_over_kt<Rat>(f);
}
inline Factorization<FqUT> factor_univariate(const Poly<FqUT>& f) {
    return detail::factor_over_kt<FqRat>(f);
}

}  // namespace hc

#endif
