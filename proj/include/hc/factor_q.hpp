#ifndef HC_FACTOR_Q_HPP
#define HC_FACTOR_Q_HPP

#include <vector>

#include "hc/factor_fq.hpp"
#include "hc/poly.hpp"

namespace hc {

namespace detail {

// Iterate over all size-s subsets of idx; returns false when exhausted.
class Combinations {
  public:
    Combinations(int n, int s) : n_(n), pick_(s) {
        for (int i = 0; i < s; ++i) pick_[i] = i;
        fresh_ = true;
    }
    bool next() {
        if (fresh_) {
            fresh_ = false;
            return static_cast<int>(pick_.size()) <= n_;
        }
        int s = static_cast<int>(pick_.size());
        int i = s - 1;
        while (i >= 0 && pick_[i] == n_ - s + i) --i;
        if (i < 0) return false;
        ++pick_[i];
        for (int j = i + 1; j < s; ++j) pick_[j] = pick_[j - 1] + 1;
        return true;
    }
    const std::vector<int>& picks() const { return pick_; }

  private:
    int n_;
    std::vector<int> pick_;
    bool fresh_;
};

inline std::vector<Int> zp_mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    while (!r.empty() && is_zero(r.back())) r.pop_back();
    return r;
}

inline Int fq_lift(const FqElem& c) {
    // zero entries may be unattached literals
    return c.attached() ? Int(c.rep()[0]) : Int(c.lift());
}

inline Int sym_rep(Int c, const Int& m) {
    mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (2 * c >= m) c -= m;
    return c;
}

// Zassenhaus on a monic squarefree polynomial over Q of degree >= 1.
inline std::vector<Poly<Rat>> factor_squarefree_q(const Poly<Rat>& gq) {
    int n = gq.degree();
    if (n == 1) return {gq};

    // primitive integer model with positive leading coefficient
    Int den(1);
    for (auto& c : gq.coeffs()) den = int_lcm(den, c.get_den());
    std::vector<Int> G(n + 1);
    Int content(0);
    for (int i = 0; i <= n; ++i) {
        G[i] = Rat(gq.coeff(i) * Rat(den)).get_num();
        content = int_gcd(content, G[i]);
    }
    for (auto& c : G) c /= content;
    Int lc = G[n];  // > 0 since gq is monic

    // good prime: p odd, p does not divide lc, reduction squarefree
    Int p(2);
    std::shared_ptr<const FqCtx> ctx;
    Poly<FqElem> fbar;
    for (;;) {
        p = next_prime(p);
        if (mpz_divisible_p(lc.get_mpz_t(), p.get_mpz_t())) continue;
        ctx = FqCtx::make(static_cast<uint32_t>(p.get_ui()), 1);
        std::vector<FqElem> cs;
        for (auto& c : G) cs.push_back(FqElem::from_int(ctx, c));
        fbar = make_monic(Poly<FqElem>(std::move(cs)));
        if (gcd_monic(fbar, derivative(fbar)).degree() == 0) break;
    }

    auto irr = factor_squarefree_fq(fbar, ctx);
    if (irr.size() == 1) return {gq};
    std::sort(irr.begin(), irr.end(), [](const Poly<FqElem>& a, const Poly<FqElem>& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return to_text(a, "x") < to_text(b, "x");
    });
    int r = static_cast<int>(irr.size());

    // Landau-Mignotte style bound: factors of G scaled by lc stay below
    // 2^n * ||G||_2 * |lc|; p^a must exceed twice that for symmetric reps.
    Int norm_sq(0);
    for (auto& c : G) norm_sq += c * c;
    Int bound = 2 * int_pow(Int(2), static_cast<unsigned long>(n)) * (*exact_sqrt(norm_sq) + 1) *
                abs(lc);
    Int M(p);
    while (M <= bound) M *= p;

    // W = G / lc (mod M), monic
    Int lcinv;
    if (!mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t()))
        throw InternalError("leading coefficient not invertible mod p^a");
    std::vector<Int> W(n + 1);
    for (int i = 0; i <= n; ++i) {
        W[i] = G[i] * lcinv;
        mpz_mod(W[i].get_mpz_t(), W[i].get_mpz_t(), M.get_mpz_t());
    }

    // lifted factors as integer vectors, and Bezout inverses mod p
    std::vector<std::vector<Int>> F;
    for (auto& f : irr) {
        std::vector<Int> v;
        for (auto& c : f.coeffs()) v.emplace_back(fq_lift(c));
        F.push_back(std::move(v));
    }
    std::vector<Poly<FqElem>> S;
    for (int i = 0; i < r; ++i) {
        Poly<FqElem> prod(FqElem(1).attach(ctx));
        for (int j = 0; j < r; ++j)
            if (j != i) prod = divrem(prod * irr[j], irr[i]).second;
        S.push_back(inv_mod(prod, irr[i]));
    }

    // linear Hensel: after each step prod(F) == W mod p^{j+1}
    for (Int pj = p; pj < M; pj *= p) {
        Int mod_next = pj * p;
        std::vector<Int> P{Int(1)};
        for (auto& f : F) P = zp_mul(P, f, mod_next);
        P.resize(n + 1, Int(0));
        bool clean = true;
        std::vector<FqElem> e(n + 1, FqElem(0));
        for (int i = 0; i <= n; ++i) {
            Int d = W[i] - P[i];
            mpz_mod(d.get_mpz_t(), d.get_mpz_t(), mod_next.get_mpz_t());
            if (!mpz_divisible_p(d.get_mpz_t(), pj.get_mpz_t()))
                throw InternalError("Hensel error term not divisible");
            d /= pj;
            if (!is_zero(d)) clean = false;
            e[i] = FqElem::from_int(ctx, d);
        }
        if (clean) continue;
        Poly<FqElem> ep(std::move(e));
        for (int i = 0; i < r; ++i) {
            Poly<FqElem> delta = divrem(ep * S[i], irr[i]).second;
            for (int j = 0; j <= delta.degree(); ++j)
                F[i][j] = (F[i][j] + pj * fq_lift(delta.coeff(j))) % mod_next;
        }
    }

    // recombination
    std::vector<Poly<Rat>> out;
    std::vector<int> live(r);
    for (int i = 0; i < r; ++i) live[i] = i;
    Poly<Rat> Gcur(std::vector<Rat>(G.begin(), G.end()));
    Int lc_cur = lc;
    for (int s = 1; 2 * s <= static_cast<int>(live.size());) {
        bool found = false;
        Combinations comb(static_cast<int>(live.size()), s);
        while (comb.next()) {
            std::vector<Int> cand{lc_cur};
            for (int t : comb.picks()) cand = zp_mul(cand, F[live[t]], M);
            std::vector<Rat> cc;
            Int ccontent(0);
            for (auto& c : cand) ccontent = int_gcd(ccontent, sym_rep(c, M));
            if (is_zero(ccontent)) continue;
            for (auto& c : cand) cc.emplace_back(sym_rep(c, M) / ccontent);
            Poly<Rat> cp(std::move(cc));
            if (sgn(cp.lc()) < 0) cp = -cp;
            auto [quo, rem] = divrem(Gcur, cp);
            if (!rem.zero()) continue;
            // Gauss: exact quotient of primitive integer polynomials is integral
            out.push_back(make_monic(cp));
            std::vector<int> rest;
            for (size_t t = 0; t < live.size(); ++t)
                if (std::find(comb.picks().begin(), comb.picks().end(), static_cast<int>(t)) ==
                    comb.picks().end())
                    rest.push_back(live[t]);
            live = std::move(rest);
            Gcur = quo;
            lc_cur = Rat(Gcur.lc()).get_num();
            found = true;
            break;
        }
        if (!found) ++s;
    }
    if (Gcur.degree() >= 1) out.push_back(make_monic(Gcur));
    return out;
}

}  // namespace detail

inline Factorization<Rat> factor_univariate(const Poly<Rat>& f0) {
    if (f0.zero()) throw ValidationError("factorization of zero");
    Factorization<Rat> out;
    out.unit = f0.lc();
    if (f0.degree() < 1) return out;
    for (auto& [part, mult] : squarefree_decomposition(f0, 0))
        for (auto& irrf : detail::factor_squarefree_q(part)) out.parts.emplace_back(irrf, mult);
    sort_parts(out.parts);
    return out;
}

// Roots of f in Q, sorted increasing.
inline std::vector<Rat> q_roots(const Poly<Rat>& f) {
    std::vector<Rat> roots;
    for (auto& [part, mult] : factor_univariate(f).parts)
        if (part.degree() == 1) roots.push_back(-part.coeff(0));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hc

#endif
