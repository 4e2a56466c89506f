#ifndef HC_BOUNDS_HPP
#define HC_BOUNDS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "hc/galois.hpp"
#include "hc/height.hpp"

namespace hc {

// [a1, a2] := a1 in characteristic 0, a2 in characteristic p.
struct CharBracket {
    double char0 = 0.0;
    double charp = 0.0;
};

inline double bracket_select(const CharBracket& b, bool is_char0) {
    return is_char0 ? b.char0 : b.charp;
}
inline double bracket_select(const CharBracket& b, const BaseField& field) {
    return bracket_select(b, field.characteristic() == 0);
}

// beta(d): 27d^4 in char 0; d^{14/3} for small positive characteristic;
// 1 once the characteristic exceeds max{27d^4, c1}.
inline double beta(int d, int characteristic, double c1 = 1.0) {
    if (d < 1) throw ValidationError("beta needs d >= 1");
    double d4 = 27.0 * std::pow(static_cast<double>(d), 4.0);
    if (characteristic == 0) return d4;
    if (static_cast<double>(characteristic) <= std::max(d4, c1))
        return std::pow(static_cast<double>(d), 14.0 / 3.0);
    return 1.0;
}

// --- theorem bound kernels (implicit constant fixed to 1, log2 space) ---

struct BoundFactor {
    std::string name;
    double log2 = 0.0;
};

struct BoundKernel {
    std::string theorem;
    double log2 = 0.0;
    std::vector<BoundFactor> breakdown;
};

struct KernelParams {
    bool char0 = true;
    int d_y = 0;
    int d_t = 0;
    int d = 0;           // total degree (bp only)
    double log_h = 0.0;  // natural log of the relevant height
    double B = 1.0;
    long order_G = 0;    // group data (hilbert35 / hilbert7)
    long order_H = 0;
    std::string group_label;  // catalog label (hit3)
    bool use_gamma = false;   // hit3: reducibility count (gamma) vs group count (delta)
};

// delta_G / gamma_G: maximal inverse index of a proper (resp. intransitive)
// subgroup, straight from the hardcoded lattice.
inline std::pair<Rat, Rat> delta_gamma(const GroupId& g) {
    if (!g.transitive) throw ValidationError("delta/gamma need a transitive catalog group");
    Rat delta(0), gamma(0);
    for (auto& s : subgroup_lattice(g.label).subgroups) {
        Rat inv(1, s.index);
        if (s.proper && inv > delta) delta = inv;
        if (!s.transitive && inv > gamma) gamma = inv;
    }
    if (is_zero(delta)) throw ValidationError("group has no proper subgroup");
    if (is_zero(gamma)) throw ValidationError("group has no intransitive subgroup");
    return {delta, gamma};
}

inline BoundKernel kernel(const std::string& theorem, const KernelParams& p) {
    auto br = [&](double a1, double a2) { return bracket_select({a1, a2}, p.char0); };
    BoundKernel out;
    out.theorem = theorem;
    auto push = [&](const std::string& name, double l2) {
        out.breakdown.push_back({name, l2});
        out.log2 += l2;
    };
    double log2_logh1 = std::log2(p.log_h + 1.0);
    double log2_B = std::log2(p.B);

    if (theorem == "hit01") {
        if (p.d_y < 1 || p.d_t < 1) throw ValidationError("hit01 needs d_Y, d_T >= 1");
        push("2^[25dY,36dY]", br(25, 36) * p.d_y);
        push("dY^[26,35]", br(26, 35) * std::log2(p.d_y));
        push("dT^[21,26]", br(21, 26) * std::log2(p.d_t));
        push("(log H+1)^[6,10]", br(6, 10) * log2_logh1);
        push("B^(1/2)", log2_B / 2.0);
    } else if (theorem == "hilbert1") {
        if (p.d_y < 1 || p.d_t < 1) throw ValidationError("hilbert1 needs d_Y, d_T >= 1");
        push("dY^[12,16]", br(12, 16) * std::log2(p.d_y));
        push("dT^[5,9]", br(5, 9) * std::log2(p.d_t));
        push("(log H+1)^[6,10]", br(6, 10) * log2_logh1);
        push("B^(1/dY)", log2_B / p.d_y);
    } else if (theorem == "hilbert35") {
        if (p.order_G < 1 || p.order_H < 1 || p.order_G % p.order_H != 0)
            throw ValidationError("hilbert35 needs subgroup orders with |H| dividing |G|");
        if (p.d_y < 1 || p.d_t < 1) throw ValidationError("hilbert35 needs d_Y, d_T >= 1");
        double m = static_cast<double>(p.order_G) / p.order_H;
        push("2^[25|G/H|,36|G/H|]", br(25, 36) * m);
        push("|G/H|^[26,35]", br(26, 35) * std::log2(m));
        push("dT^[28,37]", br(28, 37) * std::log2(p.d_t));
        push("dY^[7,11]", br(7, 11) * std::log2(p.d_y));
        push("|H|^[27,36]", br(27, 36) * std::log2(static_cast<double>(p.order_H)));
        push("|G|^[28,37]", br(28, 37) * std::log2(static_cast<double>(p.order_G)));
        push("(log H+1)^[6,10]", br(6, 10) * log2_logh1);
        push("B^(1/2)", log2_B / 2.0);
    } else if (theorem == "hilbert7") {
        if (p.order_G < 1 || p.order_H < 1 || p.order_G % p.order_H != 0)
            throw ValidationError("hilbert7 needs subgroup orders with |H| dividing |G|");
        double m = static_cast<double>(p.order_G) / p.order_H;
        push("(log H+1)^[6,10]", br(6, 10) * log2_logh1);
        push("B^(1/|G/H|)", log2_B / m);
    } else if (theorem == "hit3") {
        if (p.group_label.empty()) throw ValidationError("hit3 needs a group label");
        GroupId g{p.group_label, 0, catalog_order(p.group_label), true};
        auto [delta, gamma] = delta_gamma(g);
        Rat e = p.use_gamma ? gamma : delta;
        push("(log H+1)^[6,10]", br(6, 10) * log2_logh1);
        push(p.use_gamma ? "B^gamma" : "B^delta", log2_B * e.get_d());
    } else if (theorem == "bp") {
        if (p.d < 1) throw ValidationError("bp needs total degree d >= 1");
        push("d^[4,8]", br(4, 8) * std::log2(p.d));
        push("(log Haff+1)", log2_logh1);
        push("B^(1/d)", log2_B / p.d);
    } else {
        throw ValidationError("unknown theorem tag: " + theorem);
    }
    return out;
}

// Both arguments of the min in the first display of the curve-point bound
// (natural scale), for reporting when height/b(P) data is available.
inline std::pair<double, double> bp_min_arguments(bool char0, int d, double log_hd, double b_value,
                                                  double B) {
    auto br = [&](double a1, double a2) { return bracket_select({a1, a2}, char0); };
    double first = std::pow(d, br(2, 6)) * log_hd + std::pow(d, br(3, 7)) * std::log(B) +
                   std::pow(d, br(4, 8));
    double second = std::pow(d, br(4, 14.0 / 3.0)) * b_value;
    return {first, second};
}

// --- truncated b(P) ---

struct BOfP {
    double value = 1.0;      // 0 when P is not absolutely irreducible
    double log_value = 0.0;  // natural log (value > 0 case)
    bool complete = false;   // truncation flag: finiteness of P_P is not certified
    bool absolutely_irreducible = true;
    std::vector<std::string> bad_places;
};

// Heuristic absolute-irreducibility decision over Qbar: irreducible over Q
// and absolutely irreducible mod the 3 smallest good primes.
inline bool absolutely_irreducible_q(const BiPolyQ& P) {
    if (!is_irreducible_bipoly(P)) return false;
    int good = 0;
    Int p(2);
    while (good < 3) {
        p = next_prime(p);
        auto r = is_absolutely_irreducible_mod_p(P, p);
        if (r.degenerate_reduction) continue;
        if (!r.absolutely_irreducible) return false;
        ++good;
    }
    return true;
}

// Product over primes p in (max{beta, c1}, cutoff] with P mod p not
// absolutely irreducible; a certified lower bound of b(P).
inline BOfP b_of_P(const BiPolyQ& P, long cutoff, bool cutoff_certified = false) {
    for (auto& [key, c] : P.terms())
        if (c.get_den() != 1) throw ValidationError("b(P) needs integer coefficients");
    int d = P.total_degree();
    if (d < 1 || d > 8) throw ValidationError("b(P) needs total degree 1..8");
    BOfP out;
    out.complete = cutoff_certified;
    if (!absolutely_irreducible_q(P)) {
        out.absolutely_irreducible = false;
        out.value = 0.0;
        out.log_value = -std::numeric_limits<double>::infinity();
        return out;
    }
    double lo = std::max(beta(d, 0), 1.0);
    Int p(1);
    for (;;) {
        p = next_prime(p);
        double pd = p.get_d();
        if (pd > static_cast<double>(cutoff)) break;
        if (pd <= lo) continue;
        auto r = is_absolutely_irreducible_mod_p(P, p);
        if (!r.absolutely_irreducible) {
            out.bad_places.push_back(p.get_str());
            out.log_value += std::log(pd) / pd;
        }
    }
    out.value = std::exp(out.log_value);
    return out;
}

namespace detail {

// Reduction of P at the place (pp) of Fq[u]: evaluate coefficients at a root
// of pp in F_{q^{e*k}}; absolute irreducibility checked over all k <= d.
inline AbsoluteIrreducibility absolutely_irreducible_mod_place(const BiPoly<FqRat>& P,
                                                               const Poly<FqElem>& pp) {
    int d = P.total_degree();
    int e = pp.degree();
    auto base = ctx_of(pp.lc());
    if (base->q() != base->p()) throw ValidationError("b(P) over Fq(u) needs prime q");
    if (e * d > static_cast<int>(FqCtx::kMaxExtensionDegree))
        throw ValidationError("place degree above the extension cap");
    uint32_t p = base->p();
    bool degenerate = false;
    for (int k = 1; k <= d; ++k) {
        auto big = FqCtx::make(p, static_cast<unsigned>(e * k));
        // root of pp in the big field
        std::vector<FqElem> cs;
        for (auto& c : pp.coeffs()) cs.push_back(FqElem::from_int(big, fq_lift(c)));
        auto roots = fq_roots(Poly<FqElem>(std::move(cs)));
        if (roots.empty()) throw InternalError("irreducible place has no root in its degree field");
        FqElem r = roots.front();
        BiPoly<FqElem> Fk;
        for (auto& [key, c] : P.terms()) {
            FqElem v(0);
            const Poly<FqElem>& num = c.num();  // integral coefficients required
            for (int i = num.degree(); i >= 0; --i)
                v = v * r + FqElem::from_int(big, fq_lift(num.coeff(i)));
            if (!is_zero(v)) Fk.set(key.first, key.second, v);
        }
        if (k == 1 && (is_zero(Fk) || Fk.total_degree() < d)) return {false, true};
        auto bf = bifactor(Fk);
        int pieces = static_cast<int>(bf.content.size() + bf.parts.size());
        int mults = 0;
        for (auto& [f, m] : bf.content) mults = std::max(mults, m);
        for (auto& [f, m] : bf.parts) mults = std::max(mults, m);
        if (pieces != 1 || mults != 1) return {false, degenerate};
    }
    return {true, degenerate};
}

}  // namespace detail

// b(P) over Fq(u), q prime: places are monic irreducibles of Fq[u] with norm
// q^{deg}; scanned up to the given place degree.
inline BOfP b_of_P_fqu(const BiPoly<FqRat>& P, int max_place_degree,
                       bool cutoff_certified = false) {
    for (auto& [key, c] : P.terms())
        if (!c.integral()) throw ValidationError("b(P) needs O_K coefficients");
    int d = P.total_degree();
    if (d < 1 || d > 8) throw ValidationError("b(P) needs total degree 1..8");
    auto ctx = detail::ctx_of_bi(P);
    if (ctx->q() != ctx->p()) throw ValidationError("b(P) over Fq(u) needs prime q");
    long q = ctx->q().get_ui();
    BOfP out;
    out.complete = cutoff_certified;
    if (!is_irreducible_bipoly(P)) {
        out.absolutely_irreducible = false;
        out.value = 0.0;
        out.log_value = -std::numeric_limits<double>::infinity();
        return out;
    }
    double lo = std::max(beta(d, static_cast<int>(ctx->p())), 1.0);
    int checked = 0;
    for (int e = 1; e <= max_place_degree; ++e) {
        double norm = std::pow(static_cast<double>(q), e);
        // monic polynomials of degree e in lexicographic coefficient order
        uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= static_cast<uint64_t>(q);
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FqElem> cs;
            uint64_t v = idx;
            for (int i = 0; i < e; ++i) {
                cs.push_back(FqElem::from_index(ctx, v % q));
                v /= q;
            }
            cs.push_back(FqElem(1).attach(ctx));
            Poly<FqElem> pp(std::move(cs));
            auto fac = factor_univariate(pp);
            if (fac.parts.size() != 1 || fac.parts[0].second != 1 ||
                fac.parts[0].first.degree() != e)
                continue;  // not irreducible
            // absolute-irreducibility heuristic needs 3 good small places too
            bool in_range = norm > lo;
            if (!in_range && checked >= 3) continue;
            auto r = detail::absolutely_irreducible_mod_place(P, pp);
            if (!in_range) {
                if (r.degenerate_reduction) continue;
                if (!r.absolutely_irreducible) {
                    out.absolutely_irreducible = false;
                    out.value = 0.0;
                    out.log_value = -std::numeric_limits<double>::infinity();
                    return out;
                }
                ++checked;
                continue;
            }
            if (!r.absolutely_irreducible) {
                out.bad_places.push_back(to_text(pp, "u"));
                out.log_value += std::log(norm) / norm;
            }
        }
    }
    out.value = std::exp(out.log_value);
    return out;
}

}  // namespace hc

#endif
