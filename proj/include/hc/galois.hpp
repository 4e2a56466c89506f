#ifndef HC_GALOIS_HPP
#define HC_GALOIS_HPP

#include <set>
#include <string>
#include <vector>

#include "hc/factor.hpp"

namespace hc {

// Permutation-conjugacy class of a Galois group acting on the roots.
// Transitive labels come from the fixed degree <= 4 catalog; reducible inputs
// get splitting-pattern labels like "1+3:S3".
struct GroupId {
    std::string label;
    int degree = 0;
    long order = 0;
    bool transitive = false;

    friend bool operator==(const GroupId& a, const GroupId& b) {
        return a.label == b.label && a.degree == b.degree && a.order == b.order;
    }
    friend bool operator!=(const GroupId& a, const GroupId& b) { return !(a == b); }
};

namespace detail {

inline GroupId make_group(std::string label, int degree, long order, bool transitive) {
    return GroupId{std::move(label), degree, order, transitive};
}

// discriminant of a monic polynomial
template <class E>
E poly_disc(const Poly<E>& f) {
    E r = resultant(f, derivative(f));
    int n = f.degree();
    if ((n * (n - 1) / 2) % 2 != 0) r = -r;
    return r;
}

template <class E>
GroupId classify_squarefree(Poly<E> f0) {
    if (characteristic0(f0) == 2)
        throw ValidationError("unsupported characteristic for resolvent method");
    int n = f0.degree();
    if (n < 1 || n > 4) throw ValidationError("Galois classification needs degree 1..4");
    Poly<E> f = make_monic(f0);
    auto fp = derivative(f);
    if (is_zero(fp) || gcd_monic(f, fp).degree() != 0)
        throw ValidationError("inseparable specialization");

    auto fac = factor_univariate(f);
    std::vector<Poly<E>> parts;
    for (auto& [g, m] : fac.parts) parts.push_back(g);
    std::sort(parts.begin(), parts.end(),
              [](const Poly<E>& a, const Poly<E>& b) { return a.degree() < b.degree(); });

    auto cubic_group = [&](const Poly<E>& c) {
        return is_square(poly_disc(c)) ? make_group("C3", 3, 3, true)
                                       : make_group("S3", 3, 6, true);
    };

    if (parts.size() == 1) {
        switch (n) {
            case 1:
                return make_group("C1", 1, 1, true);
            case 2:
                return make_group("C2", 2, 2, true);
            case 3:
                return cubic_group(f);
            default: {
                E a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
                Poly<E> r(std::vector<E>{E(0) - (a * a * d - b * d * E(4) + c * c),
                                         a * c - d * E(4), E(0) - b, E(1)});
                auto rfac = factor_univariate(r);
                int roots = 0;
                E beta = E(0);
                for (auto& [g, m] : rfac.parts)
                    if (g.degree() == 1) {
                        ++roots;
                        beta = E(0) - g.coeff(0);
                    }
                E D = poly_disc(f);
                if (roots == 0)
                    return is_square(D) ? make_group("A4", 4, 12, true)
                                        : make_group("S4", 4, 24, true);
                if (roots == 3) return make_group("V4", 4, 4, true);
                // one rational resolvent root: C4 iff both completion quadratics
                // split over k(sqrt D)
                auto splits = [&](const E& d2) {
                    return is_zero(d2) || is_square(d2) || is_square(d2 * D);
                };
                E t1 = beta * beta - d * E(4);
                E t2 = a * a - (b - beta) * E(4);
                return (splits(t1) && splits(t2)) ? make_group("C4", 4, 4, true)
                                                  : make_group("D4", 4, 8, true);
            }
        }
    }

    // reducible: splitting pattern + composite of the factor groups
    std::string pat;
    for (auto& g : parts) pat += (pat.empty() ? "" : "+") + std::to_string(g.degree());
    std::vector<int> degs;
    for (auto& g : parts) degs.push_back(g.degree());
    auto quad_disc = [](const Poly<E>& q) -> E {
        return q.coeff(1) * q.coeff(1) - q.coeff(0) * E(4);
    };

    if (degs.back() == 1) return make_group(pat + ":C1", n, 1, false);
    if (degs.back() == 2) {
        if (degs.size() >= 2 && degs[degs.size() - 2] == 2) {
            // two quadratic fields; equal iff the product of discriminants is a square
            const Poly<E>& q1 = parts[parts.size() - 2];
            const Poly<E>& q2 = parts[parts.size() - 1];
            if (is_square(quad_disc(q1) * quad_disc(q2))) return make_group(pat + ":C2", n, 2, false);
            return make_group(pat + ":C2xC2", n, 4, false);
        }
        return make_group(pat + ":C2", n, 2, false);
    }
    // degs.back() == 3: linear + cubic
    GroupId g3 = cubic_group(parts.back());
    return make_group(pat + ":" + g3.label, n, g3.order, false);
}

}  // namespace detail

// Exact Galois group of the splitting field of a squarefree f of degree <= 4
// over K (= Q or Fq(u), q odd), via discriminant and resolvent-cubic tests.
template <class E>
GroupId galois_group_specialized(const Poly<E>& f) {
    return detail::classify_squarefree(f);
}

// Generic group of F over K(T): the same resolvent machinery run over K(T),
// where "square in K(T)" reduces to even squarefree multiplicities plus a
// constant square in K.
template <class E>
GroupId galois_group_generic(const BiPoly<E>& F) {
    if (F.deg_y() < 1 || F.deg_y() > 4)
        throw ValidationError("generic Galois group needs 1 <= deg_Y <= 4");
    if (characteristic0(F) == 2)
        throw ValidationError("unsupported characteristic for resolvent method");
    auto f = F.as_poly_over_kt();
    if (is_zero(derivative(f))) throw ValidationError("inseparable over K(T)");
    if (!is_irreducible_bipoly(F))
        throw ValidationError("generic Galois group needs an irreducible polynomial");
    return detail::classify_squarefree(f);
}

// Whether the specialization with splitting polynomial f falls outside the
// generic group: inseparable or degenerate specializations count, otherwise
// the group orders are compared (the specialized group embeds into the
// generic one away from the discriminant locus, so a mismatch is an order
// mismatch).
template <class E>
bool is_exceptional(const GroupId& generic, const Poly<E>& f) {
    if (f.zero() || f.degree() < 1) return true;
    auto fac = factor_univariate(f);
    Poly<E> rad;
    for (auto& [part, mult] : fac.parts) {
        if (is_zero(derivative(part))) return true;  // inseparable factor
        rad = rad.zero() ? part : rad * part;
    }
    GroupId gt = detail::classify_squarefree(rad);
    return gt.order != generic.order;
}

// Degree patterns of f mod p for good primes (p not dividing the
// discriminant); each pattern is a cycle type realized in the Galois group.
inline std::vector<std::vector<int>> dedekind_sample(const Poly<Rat>& f,
                                                     const std::vector<long>& primes) {
    if (f.degree() < 1) throw ValidationError("Dedekind sampling needs positive degree");
    if (!(f.lc() == Rat(1))) throw ValidationError("Dedekind sampling needs a monic polynomial");
    for (auto& c : f.coeffs())
        if (c.get_den() != 1) throw ValidationError("Dedekind sampling needs integer coefficients");
    Rat D = detail::poly_disc(f);
    if (is_zero(D)) throw ValidationError("Dedekind sampling needs squarefree input");
    Int dn = D.get_num();
    std::vector<std::vector<int>> out;
    for (long p : primes) {
        if (p < 2 || mpz_probab_prime_p(Int(p).get_mpz_t(), 30) == 0) continue;
        if (mpz_divisible_ui_p(dn.get_mpz_t(), static_cast<unsigned long>(p))) continue;  // bad
        auto ctx = FqCtx::make(static_cast<uint32_t>(p), 1);
        std::vector<FqElem> cs;
        for (auto& c : f.coeffs()) cs.push_back(FqElem::from_int(ctx, c.get_num()));
        auto fac = factor_univariate(Poly<FqElem>(std::move(cs)));
        std::vector<int> type;
        for (auto& [part, mult] : fac.parts)
            for (int i = 0; i < mult; ++i) type.push_back(part.degree());
        std::sort(type.begin(), type.end());
        out.push_back(std::move(type));
    }
    return out;
}

// Cycle types (as sorted degree patterns) occurring in each catalog group.
inline const std::set<std::vector<int>>& group_cycle_types(const std::string& label) {
    static const std::map<std::string, std::set<std::vector<int>>> table = {
        {"C1", {{1}}},
        {"C2", {{1, 1}, {2}}},
        {"C3", {{1, 1, 1}, {3}}},
        {"S3", {{1, 1, 1}, {1, 2}, {3}}},
        {"C4", {{1, 1, 1, 1}, {2, 2}, {4}}},
        {"V4", {{1, 1, 1, 1}, {2, 2}}},
        {"D4", {{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {4}}},
        {"A4", {{1, 1, 1, 1}, {2, 2}, {1, 3}}},
        {"S4", {{1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 3}, {4}}},
    };
    auto it = table.find(label);
    if (it == table.end()) throw ValidationError("unknown group label: " + label);
    return it->second;
}

// --- subgroup lattice (hardcoded for the catalog, one entry per subgroup) ---

struct SubgroupRef {
    std::string label;
    long index = 0;
    bool transitive = false;  // as a permutation group on the parent's points
    bool proper = true;
};

struct SubgroupLatticeEntry {
    std::string label;
    std::vector<SubgroupRef> subgroups;
};

inline const SubgroupLatticeEntry& subgroup_lattice(const std::string& label) {
    static const std::map<std::string, SubgroupLatticeEntry> table = [] {
        std::map<std::string, SubgroupLatticeEntry> t;
        auto add = [&](const std::string& g, std::vector<SubgroupRef> subs) {
            t[g] = SubgroupLatticeEntry{g, std::move(subs)};
        };
        add("C1", {{"C1", 1, true, false}});
        add("C2", {{"C1", 2, false, true}, {"C2", 1, true, false}});
        add("C3", {{"C1", 3, false, true}, {"C3", 1, true, false}});
        add("S3", {{"C1", 6, false, true},
                   {"C2", 3, false, true},
                   {"C2", 3, false, true},
                   {"C2", 3, false, true},
                   {"C3", 2, true, true},
                   {"S3", 1, true, false}});
        add("C4", {{"C1", 4, false, true}, {"C2", 2, false, true}, {"C4", 1, true, false}});
        add("V4", {{"C1", 4, false, true},
                   {"C2", 2, false, true},
                   {"C2", 2, false, true},
                   {"C2", 2, false, true},
                   {"V4", 1, true, false}});
        add("D4", {{"C1", 8, false, true},
                   {"C2", 4, false, true},  // center
                   {"C2", 4, false, true},
                   {"C2", 4, false, true},  // reflections
                   {"C2", 4, false, true},
                   {"C2", 4, false, true},  // double transpositions
                   {"C4", 2, true, true},
                   {"V4", 2, true, true},
                   {"V4", 2, false, true},
                   {"D4", 1, true, false}});
        add("A4", {{"C1", 12, false, true},
                   {"C2", 6, false, true},
                   {"C2", 6, false, true},
                   {"C2", 6, false, true},
                   {"C3", 4, false, true},
                   {"C3", 4, false, true},
                   {"C3", 4, false, true},
                   {"C3", 4, false, true},
                   {"V4", 3, true, true},
                   {"A4", 1, true, false}});
        std::vector<SubgroupRef> s4{{"C1", 24, false, true}};
        for (int i = 0; i < 6; ++i) s4.push_back({"C2", 12, false, true});  // transpositions
        for (int i = 0; i < 3; ++i) s4.push_back({"C2", 12, false, true});  // double transp.
        for (int i = 0; i < 4; ++i) s4.push_back({"C3", 8, false, true});
        for (int i = 0; i < 3; ++i) s4.push_back({"C4", 6, true, true});
        s4.push_back({"V4", 6, true, true});  // the normal one
        for (int i = 0; i < 3; ++i) s4.push_back({"V4", 6, false, true});
        for (int i = 0; i < 4; ++i) s4.push_back({"S3", 4, false, true});
        for (int i = 0; i < 3; ++i) s4.push_back({"D4", 3, true, true});
        s4.push_back({"A4", 2, true, true});
        s4.push_back({"S4", 1, true, false});
        add("S4", std::move(s4));
        return t;
    }();
    auto it = table.find(label);
    if (it == table.end()) throw ValidationError("unknown group label: " + label);
    return it->second;
}

inline long catalog_order(const std::string& label) {
    static const std::map<std::string, long> orders = {{"C1", 1}, {"C2", 2},  {"C3", 3},
                                                       {"S3", 6}, {"C4", 4},  {"V4", 4},
                                                       {"D4", 8}, {"A4", 12}, {"S4", 24}};
    auto it = orders.find(label);
    if (it == orders.end()) throw ValidationError("unknown group label: " + label);
    return it->second;
}

}  // namespace hc

#endif
