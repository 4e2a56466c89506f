#ifndef HC_CENSUS_HPP
#define HC_CENSUS_HPP

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <string>
#include <vector>

#include "hc/bounds.hpp"
#include "hc/parse.hpp"
#include "hc/transforms.hpp"

namespace hc {

struct CensusOptions {
    uint64_t witness_cap = 10000;
    bool parallel = true;      // serial path is the reference implementation
    uint64_t shard_count = 1;  // contiguous index-range sharding
    uint64_t shard_index = 0;
};

struct Witness {
    std::string t;
    std::string info;
};

struct CensusReport {
    std::string schema = "census-v1";
    std::string kind;   // reducible | introots | galois
    std::string field;  // field descriptor text
    std::string poly;   // canonical polynomial text
    std::string box;    // box descriptor text
    std::string order_version = "order-v1";
    std::string config;  // canonical run configuration, embedded for reproducibility
    uint64_t shard_count = 1;
    uint64_t shard_index = 0;
    uint64_t range_lo = 0;  // index range covered by this report
    uint64_t range_hi = 0;
    uint64_t box_count = 0;
    uint64_t count = 0;
    uint64_t degenerate = 0;   // degree-drop specializations seen
    uint64_t inseparable = 0;  // galois censuses only
    uint64_t witness_cap = 10000;
    bool truncated = false;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, uint64_t>> histogram;  // galois: label -> #t
    std::string generic_group;                                // galois
    long generic_order = 0;
    std::string delta, gamma;
    std::string kernel_theorem;
    double kernel_log2 = 0.0;
    double ratio_log2 = 0.0;  // log2(count) - kernel_log2; -inf when count = 0
    double elapsed_seconds = 0.0;  // informational only, never serialized
};

namespace detail {

struct PerT {
    bool hit = false;
    bool degenerate = false;
    bool inseparable = false;
    std::string info;
    std::string hist;
};

inline int census_threads() {
    if (const char* env = std::getenv("HC_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

// Deterministic map over a contiguous index range: results are stored by
// index, so the parallel kernel and the serial reference produce identical
// output.
template <class Fn>
std::vector<PerT> run_range(uint64_t lo, uint64_t hi, bool parallel, Fn&& fn) {
    std::vector<PerT> out(hi - lo);
    if (parallel) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16) num_threads(census_threads())
        for (long long i = static_cast<long long>(lo); i < static_cast<long long>(hi); ++i) {
            try {
                out[i - lo] = fn(static_cast<uint64_t>(i));
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (uint64_t i = lo; i < hi; ++i) out[i - lo] = fn(i);
    }
    return out;
}

inline void shard_range(uint64_t n, uint64_t shards, uint64_t idx, uint64_t& lo, uint64_t& hi) {
    if (shards < 1 || idx >= shards) throw ValidationError("bad shard indices");
    lo = n * idx / shards;
    hi = n * (idx + 1) / shards;
}

// Reducibility certificate: text of a proper factor, or empty when F is
// irreducible as a bivariate polynomial over K.
template <class E>
std::string reducibility_certificate(const BiPoly<E>& F) {
    if (F.total_degree() < 1) return "constant polynomial";
    auto bf = bifactor(F);
    int mults = 0;
    for (auto& [f, m] : bf.content) mults = std::max(mults, m);
    for (auto& [f, m] : bf.parts) mults = std::max(mults, m);
    if (bf.content.size() + bf.parts.size() == 1 && mults == 1) return "";
    if (!bf.content.empty()) return to_text(bf.content[0].first, "T");
    return to_text(bf.parts[0].first);
}

template <class Dom, class E>
std::string kt_poly_text(const Dom&, const BiPoly<E>& F) {
    return to_text(F);
}

inline std::string join_factors(const std::vector<std::string>& parts) {
    std::string s;
    for (auto& p : parts) s += "(" + p + ")";
    return s;
}

// assemble counts/witnesses out of the per-index results
inline void reduce_into(CensusReport& rep, const std::vector<PerT>& per,
                        const std::vector<std::string>& tlabels) {
    std::map<std::string, uint64_t> hist;
    for (size_t i = 0; i < per.size(); ++i) {
        const PerT& r = per[i];
        if (r.degenerate) ++rep.degenerate;
        if (r.inseparable) ++rep.inseparable;
        if (!r.hist.empty()) ++hist[r.hist];
        if (r.hit) {
            ++rep.count;
            if (rep.witnesses.size() < rep.witness_cap)
                rep.witnesses.push_back({tlabels[i], r.info});
            else
                rep.truncated = true;
        }
    }
    rep.histogram.assign(hist.begin(), hist.end());
}

inline void attach_kernel(CensusReport& rep, const std::string& theorem, const KernelParams& p) {
    auto k = kernel(theorem, p);
    rep.kernel_theorem = theorem;
    rep.kernel_log2 = k.log2;
    rep.ratio_log2 = rep.count == 0 ? -std::numeric_limits<double>::infinity()
                                    : std::log2(static_cast<double>(rep.count)) - k.log2;
}

template <class Dom>
double box_magnitude(const Dom& dom, const BoxSpec& box) {
    if constexpr (Dom::is_function_field)
        return std::pow(dom.ctx->q().get_d(), static_cast<double>(box.exponent));
    else
        return box.bound.get_d();
}

template <class Dom, class E, class ClassifyFn>
CensusReport census_core(const std::string& kind, const Dom& dom, const BiPoly<E>& F,
                         const BoxSpec& box, const CensusOptions& opt, ClassifyFn&& classify) {
    auto start = std::chrono::steady_clock::now();
    CensusReport rep;
    rep.kind = kind;
    rep.field = dom.text();
    rep.poly = to_text(F);
    rep.box = Dom::is_function_field ? "q^" + std::to_string(box.exponent)
                                     : to_text(box.bound);
    rep.witness_cap = opt.witness_cap;
    rep.shard_count = opt.shard_count;
    rep.shard_index = opt.shard_index;
    rep.box_count = dom.box_size(box);
    shard_range(rep.box_count, opt.shard_count, opt.shard_index, rep.range_lo, rep.range_hi);
    rep.config = "kind=" + rep.kind + ";field=" + rep.field + ";poly=" + rep.poly +
                 ";box=" + rep.box + ";cap=" + std::to_string(opt.witness_cap) +
                 ";shard=" + std::to_string(opt.shard_index) + "/" +
                 std::to_string(opt.shard_count);

    std::vector<std::string> tlabels(rep.range_hi - rep.range_lo);
    for (uint64_t i = rep.range_lo; i < rep.range_hi; ++i)
        tlabels[i - rep.range_lo] = Dom::ring_text(dom.box_at(box, i));
    auto per = run_range(rep.range_lo, rep.range_hi, opt.parallel, [&](uint64_t i) {
        return classify(dom.box_at(box, i));
    });
    reduce_into(rep, per, tlabels);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

template <class Dom, class E>
CensusReport census_reducible_impl(const Dom& dom, const BiPoly<E>& F, const BoxSpec& box,
                                   const CensusOptions& opt) {
    std::string cert = reducibility_certificate(F);
    if (!cert.empty())
        throw ValidationError("census requires an irreducible polynomial; factor: " + cert);
    int dy = F.deg_y();
    auto rep = census_core("reducible", dom, F, box, opt, [&](const typename Dom::Ring& t) {
        PerT r;
        auto f = F.specialize(Dom::elem_of(t));
        if (f.degree() < dy) r.degenerate = true;
        if (f.degree() < 1) {
            r.hit = true;  // constants are not irreducible
            r.info = "constant";
            return r;
        }
        auto fac = factor_univariate(f);
        int mults = 0;
        for (auto& [g, m] : fac.parts) mults = std::max(mults, m);
        if (fac.parts.size() == 1 && mults == 1) return r;
        r.hit = true;
        std::vector<std::string> parts;
        for (auto& [g, m] : fac.parts)
            for (int i = 0; i < m; ++i) parts.push_back(to_text(g, "Y"));
        r.info = join_factors(parts);
        return r;
    });
    KernelParams p;
    p.char0 = dom.characteristic() == 0;
    p.d_y = std::max(1, F.deg_y());
    p.d_t = std::max(1, F.deg_t());
    p.log_h = height_projective(dom, F).log_e;
    p.B = box_magnitude(dom, box);
    detail::attach_kernel(rep, "hit01", p);
    return rep;
}

template <class Dom, class E>
CensusReport census_integral_roots_impl(const Dom& dom, const BiPoly<E>& F, const BoxSpec& box,
                                        const CensusOptions& opt) {
    for (auto& [key, c] : F.terms())
        if (!Dom::is_integral(c)) throw ValidationError("census needs O_K[T,Y] coefficients");
    std::string cert = reducibility_certificate(F);
    if (!cert.empty())
        throw ValidationError("census requires an irreducible polynomial; factor: " + cert);
    auto rep = census_core("introots", dom, F, box, opt, [&](const typename Dom::Ring& t) {
        PerT r;
        auto f = F.specialize(Dom::elem_of(t));
        if (f.zero()) {  // every y solves; cannot occur for irreducible F of positive Y-degree
            r.hit = true;
            r.degenerate = true;
            r.info = "identically zero";
            return r;
        }
        if (f.degree() < F.deg_y()) r.degenerate = true;
        if (f.degree() < 1) return r;  // nonzero constant: no roots
        auto roots = integral_roots(dom, f);
        if (roots.empty()) return r;
        r.hit = true;
        std::string s;
        for (auto& y : roots) s += (s.empty() ? "" : ", ") + Dom::ring_text(y);
        r.info = s;
        return r;
    });
    KernelParams p;
    p.char0 = dom.characteristic() == 0;
    p.d_y = std::max(1, F.deg_y());
    p.d_t = std::max(1, F.deg_t());
    p.log_h = height_projective(dom, F).log_e;
    p.B = box_magnitude(dom, box);
    detail::attach_kernel(rep, "hilbert1", p);
    return rep;
}

// abstract group part of a splitting-pattern label ("1+3:S3" -> "S3")
inline std::string abstract_label(const std::string& label) {
    auto colon = label.find(':');
    return colon == std::string::npos ? label : label.substr(colon + 1);
}

template <class Dom, class E>
CensusReport census_galois_impl(const Dom& dom, const BiPoly<E>& F, const BoxSpec& box,
                                const CensusOptions& opt) {
    GroupId G = galois_group_generic(F);  // validates degree, char, irreducibility
    if (F.y_coeffs()[F.deg_y()].degree() != 0)
        throw ValidationError("galois census requires a constant leading Y-coefficient");
    auto disc = discriminant_Y(F);
    auto rep = census_core("galois", dom, F, box, opt, [&](const typename Dom::Ring& t) {
        PerT r;
        typename Dom::Elem tv = Dom::elem_of(t);
        auto f = F.specialize(tv);
        if (f.degree() < F.deg_y()) r.degenerate = true;
        if (f.degree() < 1) {
            r.hit = true;
            r.hist = "degenerate";
            return r;
        }
        auto fac = factor_univariate(f);
        Poly<E> rad;
        for (auto& [part, mult] : fac.parts) {
            if (is_zero(derivative(part))) {
                r.hit = true;
                r.inseparable = true;
                r.hist = "inseparable";
                return r;
            }
            rad = rad.zero() ? part : rad * part;
        }
        GroupId gt = detail::classify_squarefree(rad);
        r.hist = abstract_label(gt.label);
        r.hit = gt.order != G.order;
        // specialization embedding: away from the discriminant locus the
        // specialized group order must divide |G|
        E dv = disc.delta.eval_mapped(tv, [](const E& c) { return c; });
        if (!is_zero(dv) && !r.degenerate && G.order % gt.order != 0)
            throw InternalError("specialized group does not embed into the generic group");
        return r;
    });
    rep.generic_group = G.label;
    rep.generic_order = G.order;
    auto [dG, gG] = delta_gamma(G);
    rep.delta = to_text(dG);
    rep.gamma = to_text(gG);
    KernelParams p;
    p.char0 = dom.characteristic() == 0;
    p.log_h = height_projective(dom, F).log_e;
    p.B = box_magnitude(dom, box);
    p.group_label = G.label;
    detail::attach_kernel(rep, "hit3", p);
    return rep;
}

}  // namespace detail

inline CensusReport census_reducible(const BaseField& field, const std::string& poly_text,
                                     const BoxSpec& box, const CensusOptions& opt = {}) {
    if (field.is_q())
        return detail::census_reducible_impl(field.q_dom(), parse_bipoly_q(poly_text), box, opt);
    return detail::census_reducible_impl(field.fqu_dom(),
                                         parse_bipoly_fqu(poly_text, field.fqu_dom().ctx), box,
                                         opt);
}

inline CensusReport census_integral_roots(const BaseField& field, const std::string& poly_text,
                                          const BoxSpec& box, const CensusOptions& opt = {}) {
    if (field.is_q())
        return detail::census_integral_roots_impl(field.q_dom(), parse_bipoly_q(poly_text), box,
                                                  opt);
    return detail::census_integral_roots_impl(
        field.fqu_dom(), parse_bipoly_fqu(poly_text, field.fqu_dom().ctx), box, opt);
}

inline CensusReport census_galois(const BaseField& field, const std::string& poly_text,
                                  const BoxSpec& box, const CensusOptions& opt = {}) {
    if (field.is_q())
        return detail::census_galois_impl(field.q_dom(), parse_bipoly_q(poly_text), box, opt);
    return detail::census_galois_impl(field.fqu_dom(),
                                      parse_bipoly_fqu(poly_text, field.fqu_dom().ctx), box, opt);
}

// Deterministic merge of shard reports covering the whole index range.
inline CensusReport merge_reports(std::vector<CensusReport> shards) {
    if (shards.empty()) throw ValidationError("nothing to merge");
    std::sort(shards.begin(), shards.end(),
              [](const CensusReport& a, const CensusReport& b) { return a.range_lo < b.range_lo; });
    CensusReport out = shards[0];
    auto strip_shard = [](std::string cfg) {
        auto pos = cfg.find(";shard=");
        return pos == std::string::npos ? cfg : cfg.substr(0, pos);
    };
    out.count = 0;
    out.degenerate = 0;
    out.inseparable = 0;
    out.witnesses.clear();
    out.truncated = false;
    std::map<std::string, uint64_t> hist;
    uint64_t expect = 0;
    for (auto& s : shards) {
        if (s.schema != out.schema || s.kind != out.kind || s.field != out.field ||
            s.poly != out.poly || s.box != out.box || s.order_version != out.order_version ||
            s.witness_cap != out.witness_cap ||
            strip_shard(s.config) != strip_shard(out.config))
            throw ValidationError("shard reports disagree on configuration");
        if (s.range_lo != expect) throw ValidationError("shard ranges do not tile the box");
        expect = s.range_hi;
        out.count += s.count;
        out.degenerate += s.degenerate;
        out.inseparable += s.inseparable;
        for (auto& [k, v] : s.histogram) hist[k] += v;
        for (auto& w : s.witnesses) {
            if (out.witnesses.size() < out.witness_cap)
                out.witnesses.push_back(w);
            else
                out.truncated = true;
        }
        if (s.truncated) out.truncated = true;
    }
    if (expect != out.box_count) throw ValidationError("shard ranges do not cover the box");
    out.histogram.assign(hist.begin(), hist.end());
    out.shard_count = 1;
    out.shard_index = 0;
    out.range_lo = 0;
    out.range_hi = out.box_count;
    out.config = strip_shard(shards[0].config) + ";shard=0/1";
    out.ratio_log2 = out.count == 0 ? -std::numeric_limits<double>::infinity()
                                    : std::log2(static_cast<double>(out.count)) - out.kernel_log2;
    return out;
}

}  // namespace hc

#endif
