#ifndef HC_FQ_HPP
#define HC_FQ_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hc/error.hpp"
#include "hc/ints.hpp"

namespace hc {

// Finite field F_{p^k}. For k > 1 elements are residues modulo a fixed monic
// irreducible of degree k over F_p, chosen as the least one when polynomials
// are ordered by their base-p value sum c_i p^i. This makes serialized
// elements reproducible across runs.
class FqCtx {
  public:
    static constexpr unsigned kMaxExtensionDegree = 12;

    static std::shared_ptr<const FqCtx> make(uint32_t p, unsigned k);
    static std::shared_ptr<const FqCtx> make_with_modulus(uint32_t p, std::vector<uint32_t> modulus);

    uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    const Int& q() const { return q_; }
    // Monic modulus c_0..c_k with c_k = 1; size k+1. For k = 1 this is {0, 1} (the variable itself).
    const std::vector<uint32_t>& modulus() const { return mod_; }

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t sub(uint32_t a, uint32_t b) const { return (a + p_ - b % p_) % p_; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((uint64_t)a * b % p_);
    }
    uint32_t inv_mod_p(uint32_t a) const;

    // Arithmetic on residue vectors of length k (coefficients c_0..c_{k-1} over F_p).
    using Rep = std::vector<uint32_t>;
    Rep rep_add(const Rep& a, const Rep& b) const;
    Rep rep_sub(const Rep& a, const Rep& b) const;
    Rep rep_mul(const Rep& a, const Rep& b) const;
    Rep rep_pow(Rep a, Int e) const;
    Rep rep_inv(const Rep& a) const;
    bool rep_is_zero(const Rep& a) const;

    FqCtx(uint32_t p, unsigned k, std::vector<uint32_t> modulus);

  private:
    uint32_t p_;
    unsigned k_;
    std::vector<uint32_t> mod_;
    Int q_;
};

namespace detail {

// Plain F_p[x] arithmetic on coefficient vectors, used for modulus search and
// for reduction inside FqCtx.
inline void fp_trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<uint32_t> fp_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                    uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + (uint64_t)a[i] * b[j]) % p;
    std::vector<uint32_t> r(acc.begin(), acc.end());
    fp_trim(r);
    return r;
}

inline void fp_rem_inplace(std::vector<uint32_t>& a, const std::vector<uint32_t>& m, uint32_t p) {
    // m monic
    while (a.size() >= m.size() && !a.empty()) {
        uint32_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t i = 0; i < m.size(); ++i)
                a[shift + i] = (a[shift + i] + (uint64_t)(p - 1) * c % p * m[i]) % p;
        a.pop_back();
        fp_trim(a);
    }
}

inline std::vector<uint32_t> fp_powmod(std::vector<uint32_t> base, Int e,
                                       const std::vector<uint32_t>& m, uint32_t p) {
    std::vector<uint32_t> r{1};
    fp_rem_inplace(base, m, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            r = fp_mul(r, base, p);
            fp_rem_inplace(r, m, p);
        }
        base = fp_mul(base, base, p);
        fp_rem_inplace(base, m, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<uint32_t> fp_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p);

inline uint32_t fp_inv_scalar(uint32_t a, uint32_t p) {
    // Fermat
    uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

inline std::vector<uint32_t> fp_gcd(std::vector<uint32_t> a, std::vector<uint32_t> b, uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        uint32_t lead_inv = fp_inv_scalar(b.back(), p);
        std::vector<uint32_t> bm = b;
        for (auto& c : bm) c = static_cast<uint32_t>((uint64_t)c * lead_inv % p);
        fp_rem_inplace(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

inline bool fp_is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    // f monic of degree k >= 1; Rabin test.
    unsigned k = static_cast<unsigned>(f.size() - 1);
    std::vector<uint32_t> x{0, 1};
    Int pk = int_pow(Int(p), k);
    auto xpk = fp_powmod(x, pk, f, p);
    fp_trim(xpk);
    std::vector<uint32_t> xv = x;
    if (k == 1) return true;
    if (!(xpk == std::vector<uint32_t>{0, 1})) return false;
    for (unsigned t = 2; t <= k; ++t) {
        if (k % t != 0) continue;
        bool prime = true;
        for (unsigned d = 2; d * d <= t; ++d)
            if (t % d == 0) prime = false;
        if (!prime) continue;
        Int e = int_pow(Int(p), k / t);
        auto xe = fp_powmod(x, e, f, p);
        // gcd(x^{p^{k/t}} - x, f) must be 1
        std::vector<uint32_t> diff = xe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        fp_trim(diff);
        auto g = fp_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

inline FqCtx::FqCtx(uint32_t p, unsigned k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), mod_(std::move(modulus)), q_(int_pow(Int(p), k)) {}

inline uint32_t FqCtx::inv_mod_p(uint32_t a) const {
    if (a % p_ == 0) throw InternalError("inverse of zero mod p");
    return detail::fp_inv_scalar(a % p_, p_);
}

inline std::shared_ptr<const FqCtx> FqCtx::make(uint32_t p, unsigned k) {
    if (k < 1 || k > kMaxExtensionDegree) throw ValidationError("extension degree out of range");
    static std::mutex mu;
    static std::map<std::pair<uint32_t, unsigned>, std::shared_ptr<const FqCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    std::vector<uint32_t> mod(k + 1, 0);
    mod[k] = 1;
    if (k > 1) {
        // least irreducible by base-p value of (c_0,...,c_{k-1})
        Int limit = int_pow(Int(p), k);
        bool found = false;
        for (Int v = 0; v < limit; ++v) {
            Int t = v;
            for (unsigned i = 0; i < k; ++i) {
                mod[i] = static_cast<uint32_t>(mpz_fdiv_ui(t.get_mpz_t(), p));
                t /= p;
            }
            if (detail::fp_is_irreducible(mod, p)) {
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("no irreducible modulus found");
    }
    auto ctx = std::make_shared<const FqCtx>(p, k, mod);
    cache[{p, k}] = ctx;
    return ctx;
}

inline std::shared_ptr<const FqCtx> FqCtx::make_with_modulus(uint32_t p,
                                                             std::vector<uint32_t> modulus) {
    detail::fp_trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1)
        throw ValidationError("modulus must be monic of degree >= 1");
    if (!detail::fp_is_irreducible(modulus, p)) throw ValidationError("modulus not irreducible");
    unsigned k = static_cast<unsigned>(modulus.size() - 1);
    return std::make_shared<const FqCtx>(p, k, std::move(modulus));
}

inline FqCtx::Rep FqCtx::rep_add(const Rep& a, const Rep& b) const {
    Rep r(k_, 0);
    for (unsigned i = 0; i < k_; ++i) r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return r;
}

inline FqCtx::Rep FqCtx::rep_sub(const Rep& a, const Rep& b) const {
    Rep r(k_, 0);
    for (unsigned i = 0; i < k_; ++i) r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return r;
}

inline FqCtx::Rep FqCtx::rep_mul(const Rep& a, const Rep& b) const {
    auto prod = detail::fp_mul(a, b, p_);
    if (k_ > 1) detail::fp_rem_inplace(prod, mod_, p_);
    prod.resize(k_, 0);
    return prod;
}

inline FqCtx::Rep FqCtx::rep_pow(Rep a, Int e) const {
    Rep r(k_, 0);
    r[0] = 1;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rep_mul(r, a);
        a = rep_mul(a, a);
        e >>= 1;
    }
    return r;
}

inline bool FqCtx::rep_is_zero(const Rep& a) const {
    for (auto c : a)
        if (c % p_ != 0) return false;
    return true;
}

inline FqCtx::Rep FqCtx::rep_inv(const Rep& a) const {
    if (rep_is_zero(a)) throw InternalError("inverse of zero in Fq");
    return rep_pow(a, q_ - 2);
}

// An element of F_{p^k}. A context-free element (ctx == nullptr) stands for a
// small integer literal and is coerced when combined with an attached element;
// this lets generic polynomial code build constants as FqElem(0), FqElem(1).
class FqElem {
  public:
    FqElem() : lift_(0) {}
    FqElem(long v) : lift_(v) {}  // NOLINT: implicit by design
    FqElem(std::shared_ptr<const FqCtx> ctx, FqCtx::Rep rep) : ctx_(std::move(ctx)) {
        rep.resize(ctx_->k(), 0);
        for (auto& c : rep) c %= ctx_->p();
        rep_ = std::move(rep);
    }

    static FqElem from_int(const std::shared_ptr<const FqCtx>& ctx, const Int& v) {
        uint32_t r = static_cast<uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), ctx->p()));
        FqCtx::Rep rep(ctx->k(), 0);
        rep[0] = r;
        return FqElem(ctx, std::move(rep));
    }

    // Enumeration order: index digits in base p are the coefficients a_0, a_1, ...
    static FqElem from_index(const std::shared_ptr<const FqCtx>& ctx, uint64_t idx) {
        FqCtx::Rep rep(ctx->k(), 0);
        for (unsigned i = 0; i < ctx->k(); ++i) {
            rep[i] = static_cast<uint32_t>(idx % ctx->p());
            idx /= ctx->p();
        }
        return FqElem(ctx, std::move(rep));
    }

    uint64_t index() const {
        if (!ctx_) throw InternalError("index of unattached element");
        uint64_t idx = 0;
        for (unsigned i = ctx_->k(); i-- > 0;) idx = idx * ctx_->p() + rep_[i];
        return idx;
    }

    const std::shared_ptr<const FqCtx>& ctx() const { return ctx_; }
    const FqCtx::Rep& rep() const {
        if (!ctx_) throw InternalError("rep of unattached element");
        return rep_;
    }

    bool attached() const { return ctx_ != nullptr; }
    long lift() const { return lift_; }

    FqElem attach(const std::shared_ptr<const FqCtx>& ctx) const {
        if (ctx_) return *this;
        return from_int(ctx, Int(lift_));
    }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        auto [x, y, ctx] = align(a, b);
        if (!ctx) return FqElem(x.lift_ + y.lift_);
        return FqElem(ctx, ctx->rep_add(x.rep_, y.rep_));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        auto [x, y, ctx] = align(a, b);
        if (!ctx) return FqElem(x.lift_ - y.lift_);
        return FqElem(ctx, ctx->rep_sub(x.rep_, y.rep_));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        auto [x, y, ctx] = align(a, b);
        if (!ctx) return FqElem(x.lift_ * y.lift_);
        return FqElem(ctx, ctx->rep_mul(x.rep_, y.rep_));
    }
    friend FqElem operator/(const FqElem& a, const FqElem& b) { return a * field_inv(b); }
    FqElem operator-() const {
        if (!ctx_) return FqElem(-lift_);
        return FqElem(ctx_, ctx_->rep_sub(FqCtx::Rep(ctx_->k(), 0), rep_));
    }
    FqElem& operator+=(const FqElem& b) { return *this = *this + b; }
    FqElem& operator-=(const FqElem& b) { return *this = *this - b; }
    FqElem& operator*=(const FqElem& b) { return *this = *this * b; }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        auto [x, y, ctx] = align(a, b);
        if (!ctx) return x.lift_ == y.lift_;
        return ctx->rep_sub(x.rep_, y.rep_) == FqCtx::Rep(ctx->k(), 0);
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    friend bool is_zero(const FqElem& x) {
        if (!x.ctx_) return x.lift_ == 0;
        return x.ctx_->rep_is_zero(x.rep_);
    }
    friend bool is_one(const FqElem& x) { return x == FqElem(1); }

    friend int characteristic0(const FqElem& x) {
        return x.ctx_ ? static_cast<int>(x.ctx_->p()) : 0;
    }

    friend FqElem field_inv(const FqElem& x) {
        if (!x.ctx_) {
            if (x.lift_ == 1 || x.lift_ == -1) return x;
            throw InternalError("inverse of unattached Fq literal");
        }
        return FqElem(x.ctx_, x.ctx_->rep_inv(x.rep_));
    }

    FqElem pow(const Int& e) const {
        if (!ctx_) throw InternalError("pow of unattached element");
        if (sgn(e) < 0) return field_inv(*this).pow(-e);
        return FqElem(ctx_, ctx_->rep_pow(rep_, e));
    }

    friend bool is_square(const FqElem& x) {
        if (is_zero(x)) return true;
        if (!x.ctx_) {
            if (x.lift_ == 1) return true;
            throw InternalError("squareness of unattached Fq literal");
        }
        if (x.ctx_->p() == 2) return true;  // Frobenius is onto
        return is_one(x.pow((x.ctx_->q() - 1) / 2));
    }

    // Inverse of Frobenius: x -> x^{q/p}.
    friend FqElem pth_root(const FqElem& x) {
        if (!x.ctx_) return x;  // 0 / +-1 literals are their own p-th roots
        return x.pow(x.ctx_->q() / x.ctx_->p());
    }

    friend std::string to_text(const FqElem& x) {
        if (!x.ctx_) return std::to_string(x.lift_);
        if (x.ctx_->k() == 1) return std::to_string(x.rep_[0]);
        std::string s = "[";
        for (unsigned i = 0; i < x.ctx_->k(); ++i) {
            if (i) s += ",";
            s += std::to_string(x.rep_[i]);
        }
        return s + "]";
    }

  private:
    static std::tuple<FqElem, FqElem, std::shared_ptr<const FqCtx>> align(const FqElem& a,
                                                                          const FqElem& b) {
        if (a.ctx_ && b.ctx_) {
            if (a.ctx_.get() != b.ctx_.get() && a.ctx_->modulus() != b.ctx_->modulus())
                throw InternalError("mixed Fq contexts");
            return {a, b, a.ctx_};
        }
        if (a.ctx_) return {a, b.attach(a.ctx_), a.ctx_};
        if (b.ctx_) return {a.attach(b.ctx_), b, b.ctx_};
        return {a, b, nullptr};
    }

    std::shared_ptr<const FqCtx> ctx_;
    FqCtx::Rep rep_;
    long lift_ = 0;
};

}  // namespace hc

#endif
