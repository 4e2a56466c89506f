#ifndef HC_FIELD_HPP
#define HC_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "hc/frac.hpp"
#include "hc/poly.hpp"

namespace hc {

// Box [B]_{O_K}. For K = Q the bound is a rational B >= 1 and the box is
// {x in Z : |x| <= floor(B)}. For K = Fq(u) the bound is B = q^n and the box
// is {f in Fq[u] : deg f <= n} (including 0).
struct BoxSpec {
    Rat bound = 0;      // Q bound
    long exponent = -1;  // FqU exponent n; -1 when unset

    static BoxSpec q_bound(const Rat& b) {
        BoxSpec s;
        s.bound = b;
        return s;
    }
    static BoxSpec fq_exponent(long n) {
        BoxSpec s;
        s.exponent = n;
        return s;
    }
};

// Domain bundle for K = Q: O_K = Z, elements are rationals.
struct QDom {
    using Ring = Int;
    using Elem = Rat;
    using KT = QT;  // rational function field K(T)

    static constexpr bool is_function_field = false;

    int characteristic() const { return 0; }
    std::string text() const { return "Q"; }

    static Elem elem_of(const Ring& r) { return Rat(r); }
    static bool is_integral(const Elem& e) { return e.get_den() == 1; }
    static Ring to_ring(const Elem& e) {
        if (!is_integral(e)) throw InternalError("element not integral");
        return e.get_num();
    }
    static std::string ring_text(const Ring& r) { return to_text(r); }
    static std::string elem_text(const Elem& e) { return to_text(e); }

    uint64_t box_size(const BoxSpec& b) const {
        if (b.exponent >= 0) throw ValidationError("FqU-style box bound for field Q");
        if (b.bound < 1) throw ValidationError("empty box: bound below 1");
        Int fl = b.bound.get_num() / b.bound.get_den();
        Int card = 2 * fl + 1;
        if (!card.fits_ulong_p() || card.get_ui() > (1ull << 62))
            throw ValidationError("box too large");
        return card.get_ui();
    }

    // Order: 0, 1, -1, 2, -2, ...
    Ring box_at(const BoxSpec&, uint64_t i) const {
        uint64_t k = (i + 1) / 2;
        Int v(static_cast<unsigned long>(k));
        return (i % 2 == 0) ? -v : v;
    }
};

// Domain bundle for K = Fq(u): O_K = Fq[u].
struct FqUDom {
    using Ring = FqUPoly;
    using Elem = FqRat;
    using KT = FqUT;

    static constexpr bool is_function_field = true;

    std::shared_ptr<const FqCtx> ctx;

    explicit FqUDom(std::shared_ptr<const FqCtx> c) : ctx(std::move(c)) {}

    int characteristic() const { return static_cast<int>(ctx->p()); }
    std::string text() const { return "FqU:q=" + ctx->q().get_str(); }

    static Elem elem_of(const Ring& r) { return FqRat(r); }
    static bool is_integral(const Elem& e) { return e.integral(); }
    static Ring to_ring(const Elem& e) {
        if (!e.integral()) throw InternalError("element not integral");
        return e.num() * field_inv(e.den().coeff(0));
    }
    static std::string ring_text(const Ring& r) { return to_text(r, "u"); }
    static std::string elem_text(const Elem& e) { return to_text(e, "u"); }

    uint64_t box_size(const BoxSpec& b) const {
        if (b.exponent < 0) throw ValidationError("FqU box bound must be given as q^n");
        double bits = static_cast<double>(b.exponent + 1) * log2_of(ctx->q());
        if (bits > 62) throw ValidationError("box too large");
        Int card = int_pow(ctx->q(), static_cast<unsigned long>(b.exponent + 1));
        return card.get_ui();
    }

    // Order: by degree, then lexicographic in the coefficients a_0, a_1, ...
    // realized by base-q digits of the index (a_i = digit i).
    Ring box_at(const BoxSpec& b, uint64_t i) const {
        unsigned long q = ctx->q().get_ui();
        std::vector<FqElem> cs;
        long n = b.exponent < 0 ? 0 : b.exponent;
        for (long d = 0; d <= n; ++d) {
            cs.push_back(FqElem::from_index(ctx, i % q));
            i /= q;
        }
        return FqUPoly(std::move(cs));
    }
};

// Runtime-selected base field K.
class BaseField {
  public:
    static BaseField rationals() { return BaseField(QDom{}); }
    static BaseField fqu(std::shared_ptr<const FqCtx> ctx) { return BaseField(FqUDom{std::move(ctx)}); }

    // "Q" or "FqU:q=<prime power>"
    static BaseField parse(const std::string& spec);

    bool is_q() const { return std::holds_alternative<QDom>(v_); }
    const QDom& q_dom() const { return std::get<QDom>(v_); }
    const FqUDom& fqu_dom() const { return std::get<FqUDom>(v_); }

    int characteristic() const {
        return std::visit([](const auto& d) { return d.characteristic(); }, v_);
    }
    std::string text() const {
        return std::visit([](const auto& d) { return d.text(); }, v_);
    }

    template <class F>
    auto visit(F&& f) const {
        return std::visit(std::forward<F>(f), v_);
    }

  private:
    template <class D>
    explicit BaseField(D d) : v_(std::move(d)) {}
    std::variant<QDom, FqUDom> v_;
};

inline BaseField BaseField::parse(const std::string& spec) {
    if (spec == "Q") return rationals();
    const std::string prefix = "FqU:q=";
    if (spec.rfind(prefix, 0) == 0) {
        std::string qs = spec.substr(prefix.size());
        Int q;
        if (qs.empty() || mpz_set_str(q.get_mpz_t(), qs.c_str(), 10) != 0 || q < 2)
            throw ValidationError("bad field spec: " + spec);
        // factor q = p^k
        Int p(q);
        for (Int d = 2; d * d <= q; d = next_prime(d)) {
            if (mpz_divisible_p(q.get_mpz_t(), d.get_mpz_t())) {
                p = d;
                break;
            }
        }
        Int t = q;
        unsigned k = 0;
        while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
            t /= p;
            ++k;
        }
        if (t != 1) throw ValidationError("field size is not a prime power: " + qs);
        if (!p.fits_uint_p()) throw ValidationError("characteristic too large: " + qs);
        return fqu(FqCtx::make(static_cast<uint32_t>(p.get_ui()), k));
    }
    throw ValidationError("unknown field spec: " + spec + " (expected Q or FqU:q=<prime power>)");
}

// Parse a box flag with respect to a field: decimal (possibly fractional) for
// Q, "q^n" or an exact power of q for FqU.
inline BoxSpec parse_box(const BaseField& field, const std::string& s) {
    if (!field.is_q()) {
        const Int& q = field.fqu_dom().ctx->q();
        auto caret = s.find('^');
        if (caret != std::string::npos) {
            std::string base = s.substr(0, caret), exp = s.substr(caret + 1);
            Int b;
            if (base == "q")
                b = q;
            else if (mpz_set_str(b.get_mpz_t(), base.c_str(), 10) != 0)
                throw ValidationError("bad box: " + s);
            if (b != q) throw ValidationError("box base must equal q");
            long n = std::stol(exp);
            if (n < 0) throw ValidationError("empty box: negative exponent");
            return BoxSpec::fq_exponent(n);
        }
        Int b;
        if (mpz_set_str(b.get_mpz_t(), s.c_str(), 10) != 0 || b < 1)
            throw ValidationError("empty box: bound below 1");
        long n = 0;
        Int t = b;
        while (t > 1) {
            if (!mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t()))
                throw ValidationError("FqU box bound must be a power of q");
            t /= q;
            ++n;
        }
        return BoxSpec::fq_exponent(n);
    }
    // decimal, optionally with a fractional part
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) return BoxSpec::q_bound(Rat(s));
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        Rat r(whole.empty() ? "0" : whole);
        if (!frac.empty()) {
            Rat f(frac);
            Rat scale(int_pow(Int(10), frac.size()));
            r += f / scale;
        }
        r.canonicalize();
        return BoxSpec::q_bound(r);
    } catch (const std::invalid_argument&) {
        throw ValidationError("bad box: " + s);
    }
}

}  // namespace hc

#endif
