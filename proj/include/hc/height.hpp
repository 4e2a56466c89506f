#ifndef HC_HEIGHT_HPP
#define HC_HEIGHT_HPP

#include <cmath>
#include <vector>

#include "hc/bipoly.hpp"
#include "hc/field.hpp"

namespace hc {

// Exact height value with a cached natural logarithm. Bound kernels consume
// only the log so huge exact values never overflow downstream arithmetic.
struct Height {
    Rat value;
    double log_e;

    static Height of(Rat v) {
        if (sgn(v) <= 0) throw InternalError("height must be positive");
        v.canonicalize();
        return Height{v, log2_of(v) * std::log(2.0)};
    }
};

namespace detail {

inline Int lcm_of(const Int& a, const Int& b) { return int_lcm(a, b); }
inline FqUPoly lcm_of(const FqUPoly& a, const FqUPoly& b) {
    if (a.zero() || b.zero()) return FqUPoly();
    return make_monic((a * b) / gcd_monic(a, b));
}

inline Rat ring_size(const QDom&, const Int& r) { return Rat(abs(r)); }
inline Rat ring_size(const FqUDom& dom, const FqUPoly& r) {
    if (r.zero()) throw InternalError("size of zero");
    return Rat(int_pow(dom.ctx->q(), r.degree()));
}

}  // namespace detail

// Shared normalization data for a nonzero coefficient list over K:
// lambda in K^x with lambda*F primitive over O_K, plus both heights.
template <class Dom>
struct NormData {
    typename Dom::Elem lambda;
    std::vector<typename Dom::Ring> primitive;  // coefficients of lambda*F
    Height h_k;
    Height h_aff;
};

template <class Dom>
NormData<Dom> normalize_coeffs(const Dom& dom, const std::vector<typename Dom::Elem>& cs) {
    using Ring = typename Dom::Ring;
    bool any = false;
    for (auto& c : cs) any = any || !is_zero(c);
    if (!any) throw ValidationError("zero polynomial has no height");

    if constexpr (std::is_same_v<Dom, QDom>) {
        Int den(1);
        for (auto& c : cs)
            if (!is_zero(c)) den = detail::lcm_of(den, c.get_den());
        std::vector<Int> nums;
        Int content(0), maxabs(0);
        for (auto& c : cs) {
            Rat scaled = c * Rat(den);
            Int n = scaled.get_num();
            nums.push_back(n);
            content = int_gcd(content, n);
            Int a = abs(n);
            if (a > maxabs) maxabs = a;
        }
        for (auto& n : nums) n /= content;
        NormData<Dom> out;
        out.lambda = Rat(den, content);
        out.lambda.canonicalize();
        out.primitive = std::move(nums);
        out.h_k = Height::of(Rat(maxabs, content));
        Int haff = den > maxabs ? den : maxabs;
        out.h_aff = Height::of(Rat(haff));
        return out;
    } else {
        FqUPoly den(1);
        for (auto& c : cs)
            if (!is_zero(c)) den = detail::lcm_of(den, c.den());
        std::vector<Ring> nums;
        FqUPoly content;
        int maxdeg = 0;
        for (auto& c : cs) {
            FqRat scaled = c * FqRat(den);
            if (!scaled.integral()) throw InternalError("denominator clearing failed");
            FqUPoly n = scaled.num() * field_inv(scaled.den().coeff(0));
            if (!n.zero()) {
                content = ring_gcd(content, n);
                maxdeg = std::max(maxdeg, n.degree());
            }
            nums.push_back(std::move(n));
        }
        for (auto& n : nums)
            if (!n.zero()) n = n / content;
        const Int& q = dom.ctx->q();
        NormData<Dom> out;
        out.lambda = FqRat(den, content);
        out.primitive = std::move(nums);
        out.h_k = Height::of(Rat(int_pow(q, maxdeg - content.degree())));
        out.h_aff = Height::of(Rat(int_pow(q, std::max(den.degree(), maxdeg))));
        return out;
    }
}

template <class Dom, class E = typename Dom::Elem>
NormData<Dom> normalize_bipoly(const Dom& dom, const BiPoly<E>& f) {
    return normalize_coeffs(dom, f.coefficients());
}

template <class Dom, class E = typename Dom::Elem>
Height height_projective(const Dom& dom, const BiPoly<E>& f) {
    return normalize_bipoly(dom, f).h_k;
}

template <class Dom, class E = typename Dom::Elem>
Height height_affine(const Dom& dom, const BiPoly<E>& f) {
    return normalize_bipoly(dom, f).h_aff;
}

template <class Dom, class E = typename Dom::Elem>
Height height_projective(const Dom& dom, const Poly<E>& f) {
    return normalize_coeffs(dom, f.coeffs()).h_k;
}

template <class Dom, class E = typename Dom::Elem>
Height height_affine(const Dom& dom, const Poly<E>& f) {
    return normalize_coeffs(dom, f.coeffs()).h_aff;
}

// Primitivization: lambda in K^x with lambda*F in O_K[T,Y],
// content 1, and H_aff(lambda*F) = max(1, H_K(F)).
template <class Dom, class E = typename Dom::Elem>
std::pair<E, BiPoly<E>> normalize_primitive(const Dom& dom, const BiPoly<E>& f) {
    auto nd = normalize_bipoly(dom, f);
    return {nd.lambda, f * nd.lambda};
}

// Upper bound on |y| for any root y of f in the completion at the infinite
// place: 1 + max|a_i|/|a_d| (archimedean) or max|a_i|/|a_d| (ultrametric).
template <class Dom, class E = typename Dom::Elem>
double liouville_root_bound(const Dom& dom, const Poly<E>& f) {
    if (f.degree() < 1) throw ValidationError("Liouville bound needs degree >= 1");
    auto size = [&](const E& c) -> double {
        if constexpr (std::is_same_v<Dom, QDom>) {
            return std::fabs(c.get_d());
        } else {
            if (is_zero(c)) return 0.0;
            double qd = dom.ctx->q().get_d();
            return std::pow(qd, c.num().degree() - c.den().degree());
        }
    };
    double lead = size(f.lc());
    double m = 0.0;
    for (int i = 0; i < f.degree(); ++i) m = std::max(m, size(f.coeff(i)));
    double ratio = m / lead;
    return Dom::is_function_field ? ratio : 1.0 + ratio;
}

}  // namespace hc

#endif
