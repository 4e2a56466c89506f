#ifndef HC_FACTOR_FQ_HPP
#define HC_FACTOR_FQ_HPP

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hc/frac.hpp"
#include "hc/poly.hpp"

namespace hc {

// Factorization over a field: unit * prod(part^mult) with monic parts sorted
// by (degree, text) for reproducible output.
template <class E>
struct Factorization {
    E unit{1};
    std::vector<std::pair<Poly<E>, int>> parts;

    Poly<E> reassemble() const {
        Poly<E> r(unit);
        for (auto& [f, m] : parts)
            for (int i = 0; i < m; ++i) r *= f;
        return r;
    }
};

template <class E>
void sort_parts(std::vector<std::pair<Poly<E>, int>>& parts) {
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        std::string sa = to_text(a.first, "x"), sb = to_text(b.first, "x");
        if (sa != sb) return sa < sb;
        return a.second < b.second;
    });
}

inline std::shared_ptr<const FqCtx> ctx_of(const FqElem& c) {
    if (!c.attached()) throw InternalError("element has no Fq context");
    return c.ctx();
}
inline std::shared_ptr<const FqCtx> ctx_of(const Poly<FqElem>& f) {
    for (auto& c : f.coeffs())
        if (c.attached()) return c.ctx();
    throw InternalError("polynomial has no attached Fq context");
}
inline std::shared_ptr<const FqCtx> ctx_of(const FqRat& x) {
    for (auto& c : x.num().coeffs())
        if (c.attached()) return c.ctx();
    for (auto& c : x.den().coeffs())
        if (c.attached()) return c.ctx();
    throw InternalError("rational function has no attached Fq context");
}
inline std::shared_ptr<const FqCtx> ctx_of(const Poly<FqRat>& f) {
    for (auto& c : f.coeffs())
        if (!is_zero(c)) return ctx_of(c);
    throw InternalError("polynomial has no attached Fq context");
}

namespace detail {

inline Poly<FqElem> random_poly_below(const std::shared_ptr<const FqCtx>& ctx, int deg_bound,
                                      std::mt19937_64& rng) {
    std::vector<FqElem> cs;
    for (int i = 0; i < deg_bound; ++i) {
        FqCtx::Rep rep(ctx->k(), 0);
        for (auto& d : rep) d = static_cast<uint32_t>(rng() % ctx->p());
        cs.emplace_back(ctx, std::move(rep));
    }
    return Poly<FqElem>(std::move(cs));
}

// Split a monic squarefree product of degree-d irreducibles (Cantor-Zassenhaus;
// trace map in characteristic 2). Deterministic: the generator is seeded from
// the polynomial's shape only.
inline void equal_degree_split(const Poly<FqElem>& f, int d,
                               const std::shared_ptr<const FqCtx>& ctx,
                               std::vector<Poly<FqElem>>& out, std::mt19937_64& rng) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    Int qd = int_pow(ctx->q(), static_cast<unsigned long>(d));
    for (;;) {
        Poly<FqElem> r = random_poly_below(ctx, f.degree(), rng);
        if (r.degree() < 1) continue;
        Poly<FqElem> g;
        if (ctx->p() == 2) {
            // trace map sum_{i<d*k} r^{2^i}
            Poly<FqElem> t, acc = divrem(r, f).second;
            unsigned bits = static_cast<unsigned>(d) * ctx->k();
            for (unsigned i = 0; i < bits; ++i) {
                t += acc;
                acc = divrem(acc * acc, f).second;
            }
            g = gcd_monic(t, f);
        } else {
            Poly<FqElem> b = powmod(r, (qd - 1) / 2, f);
            g = gcd_monic(b - Poly<FqElem>(1), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, ctx, out, rng);
            equal_degree_split(f / g, d, ctx, out, rng);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
inline std::vector<Poly<FqElem>> factor_squarefree_fq(Poly<FqElem> f,
                                                      const std::shared_ptr<const FqCtx>& ctx) {
    std::vector<Poly<FqElem>> out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<uint64_t>(f.degree()) << 32) ^
                        ctx->q().get_ui());
    Poly<FqElem> x = Poly<FqElem>::variable() * FqElem(1).attach(ctx);
    Poly<FqElem> h = x;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = powmod(h, ctx->q(), f);
        Poly<FqElem> g = gcd_monic(h - x, f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, ctx, out, rng);
            f = f / g;
            h = divrem(h, f).second;
        }
    }
    if (f.degree() > 0) out.push_back(f);
    return out;
}

}  // namespace detail

inline Factorization<FqElem> factor_univariate(const Poly<FqElem>& f0) {
    if (f0.zero()) throw ValidationError("factorization of zero");
    auto ctx = f0.degree() < 1 ? nullptr : ctx_of(f0);
    Factorization<FqElem> out;
    out.unit = f0.zero() ? FqElem(0) : f0.lc();
    if (f0.degree() < 1) return out;
    for (auto& [part, mult] : squarefree_decomposition(f0, static_cast<int>(ctx->p())))
        for (auto& irr : detail::factor_squarefree_fq(part, ctx)) out.parts.emplace_back(irr, mult);
    sort_parts(out.parts);
    return out;
}

// Roots of f in Fq, sorted by enumeration index.
inline std::vector<FqElem> fq_roots(const Poly<FqElem>& f) {
    std::vector<FqElem> roots;
    for (auto& [part, mult] : factor_univariate(f).parts)
        if (part.degree() == 1) roots.push_back(-part.coeff(0));
    std::sort(roots.begin(), roots.end(),
              [](const FqElem& a, const FqElem& b) { return a.index() < b.index(); });
    return roots;
}

}  // namespace hc

#endif
