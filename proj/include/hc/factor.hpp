#ifndef HC_FACTOR_HPP
#define HC_FACTOR_HPP

#include <optional>
#include <vector>

#include "hc/bifactor.hpp"
#include "hc/field.hpp"
#include "hc/height.hpp"

namespace hc {

// Named entry points per base field; thin veneers over the overload set.
inline Factorization<Rat> factor_univariate_Q(const Poly<Rat>& f) { return factor_univariate(f); }
inline Factorization<FqElem> factor_univariate_Fq(const Poly<FqElem>& f) {
    return factor_univariate(f);
}

struct FqUFactorization {
    Factorization<FqRat> fac;
    bool inseparable = false;  // some irreducible factor has zero derivative
};

inline FqUFactorization factor_univariate_FqU(const Poly<FqRat>& f) {
    FqUFactorization out{factor_univariate(f), false};
    for (auto& [part, m] : out.fac.parts)
        if (part.degree() >= 1 && is_zero(derivative(part))) out.inseparable = true;
    return out;
}

// Irreducibility in K[T,Y] over the field K (Q or Fq(u)); total degree cap 8.
template <class E>
bool is_irreducible_bipoly(const BiPoly<E>& F) {
    if (is_zero(F)) throw ValidationError("irreducibility of zero");
    if (F.total_degree() > 8)
        throw ValidationError("total degree above the bivariate irreducibility cap (8)");
    if (F.total_degree() == 0) return false;
    auto bf = bifactor(F);
    int pieces = 0, mults = 0;
    for (auto& [f, m] : bf.content) {
        ++pieces;
        mults = std::max(mults, m);
    }
    for (auto& [f, m] : bf.parts) {
        ++pieces;
        mults = std::max(mults, m);
    }
    return pieces == 1 && mults == 1;
}

// Roots of f lying in O_K, via linear factors; each is cross-checked against
// the Liouville bound at the infinite place.
inline std::vector<Int> integral_roots(const QDom& dom, const Poly<Rat>& f) {
    if (f.zero()) throw ValidationError("roots of zero");
    std::vector<Int> out;
    if (f.degree() < 1) return out;
    double bound = liouville_root_bound(dom, f) + 1e-9;
    for (auto& [part, m] : factor_univariate(f).parts) {
        if (part.degree() != 1) continue;
        Rat r = -part.coeff(0);
        if (r.get_den() != 1) continue;
        if (std::fabs(r.get_d()) > bound) throw InternalError("root outside Liouville bound");
        out.push_back(r.get_num());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<FqUPoly> integral_roots(const FqUDom& dom, const Poly<FqRat>& f) {
    if (f.zero()) throw ValidationError("roots of zero");
    std::vector<FqUPoly> out;
    if (f.degree() < 1) return out;
    double bound = liouville_root_bound(dom, f) * (1.0 + 1e-9);
    double qd = dom.ctx->q().get_d();
    for (auto& [part, m] : factor_univariate(f).parts) {
        if (part.degree() != 1) continue;
        FqRat r = -part.coeff(0);
        if (!r.integral()) continue;
        FqUPoly rp = FqUDom::to_ring(r);
        if (!rp.zero() && std::pow(qd, rp.degree()) > bound)
            throw InternalError("root outside Liouville bound");
        out.push_back(std::move(rp));
    }
    std::sort(out.begin(), out.end(), [](const FqUPoly& a, const FqUPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            uint64_t x = a.coeff(i).attached() ? a.coeff(i).index() : 0;
            uint64_t y = b.coeff(i).attached() ? b.coeff(i).index() : 0;
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

struct AbsoluteIrreducibility {
    bool absolutely_irreducible = false;
    bool degenerate_reduction = false;  // p divides content or total degree dropped
};

// Is F mod p irreducible over the algebraic closure of Fp? An absolute factor
// of an Fp-irreducible polynomial of total degree d is defined over an
// extension of degree <= d, so checking F_{p^k} for all k <= d suffices.
inline AbsoluteIrreducibility is_absolutely_irreducible_mod_p(const BiPolyQ& F, const Int& p) {
    if (is_zero(F)) throw ValidationError("absolute irreducibility of zero");
    int d = F.total_degree();
    if (d < 1) return {false, false};
    if (d > static_cast<int>(FqCtx::kMaxExtensionDegree))
        throw ValidationError("total degree above the extension cap for absolute irreducibility");
    if (!p.fits_uint_p()) throw ValidationError("prime too large");
    for (auto& [key, c] : F.terms())
        if (c.get_den() != 1) throw ValidationError("polynomial must have integer coefficients");

    auto p1 = FqCtx::make(static_cast<uint32_t>(p.get_ui()), 1);
    BiPoly<FqElem> F1;
    for (auto& [key, c] : F.terms()) F1.set(key.first, key.second, FqElem::from_int(p1, c.get_num()));
    if (is_zero(F1) || F1.total_degree() < d) return {false, true};

    for (int k = 1; k <= d; ++k) {
        auto ctx = FqCtx::make(static_cast<uint32_t>(p.get_ui()), static_cast<unsigned>(k));
        BiPoly<FqElem> Fk;
        for (auto& [key, c] : F1.terms())
            Fk.set(key.first, key.second, FqElem::from_int(ctx, Int(c.rep()[0])));
        auto bf = bifactor(Fk);
        int pieces = static_cast<int>(bf.content.size() + bf.parts.size());
        int mults = 0;
        for (auto& [f, m] : bf.content) mults = std::max(mults, m);
        for (auto& [f, m] : bf.parts) mults = std::max(mults, m);
        if (pieces != 1 || mults != 1) return {false, false};
    }
    return {true, false};
}

}  // namespace hc

#endif
