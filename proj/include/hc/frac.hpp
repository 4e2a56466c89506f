#ifndef HC_FRAC_HPP
#define HC_FRAC_HPP

#include <optional>
#include <string>
#include <utility>

#include "hc/poly.hpp"

namespace hc {

// Rational function field k(x) over a coefficient field k: reduced fraction of
// polynomials with monic denominator (canonical form, so == is structural).
template <class C>
class RFrac {
  public:
    RFrac() : num_(), den_(1) {}
    RFrac(long v) : num_(v), den_(1) {}  // NOLINT
    explicit RFrac(const C& c) : num_(c), den_(1) {}
    explicit RFrac(Poly<C> n) : num_(std::move(n)), den_(1) {}
    RFrac(Poly<C> n, Poly<C> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RFrac variable() { return RFrac(Poly<C>::variable()); }

    const Poly<C>& num() const { return num_; }
    const Poly<C>& den() const { return den_; }
    bool integral() const { return den_.degree() == 0; }

    friend bool is_zero(const RFrac& x) { return x.num_.zero(); }
    friend bool is_one(const RFrac& x) { return x.den_.degree() == 0 && x.num_ == x.den_; }

    friend bool operator==(const RFrac& a, const RFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RFrac& a, const RFrac& b) { return !(a == b); }

    friend RFrac operator+(const RFrac& a, const RFrac& b) {
        return RFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RFrac operator-(const RFrac& a, const RFrac& b) {
        return RFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RFrac operator*(const RFrac& a, const RFrac& b) {
        return RFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RFrac operator/(const RFrac& a, const RFrac& b) { return a * field_inv(b); }
    RFrac operator-() const {
        RFrac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    RFrac& operator+=(const RFrac& b) { return *this = *this + b; }
    RFrac& operator-=(const RFrac& b) { return *this = *this - b; }
    RFrac& operator*=(const RFrac& b) { return *this = *this * b; }

    friend RFrac field_inv(const RFrac& x) {
        if (is_zero(x)) throw InternalError("division by zero rational function");
        return RFrac(x.den_, x.num_);
    }

    friend int characteristic0(const RFrac& x) {
        int p = characteristic0(x.num_);
        return p ? p : characteristic0(x.den_);
    }

    friend std::optional<RFrac> try_pth_root(const RFrac& x) {
        int p = characteristic0(x);
        if (p == 0) return std::nullopt;
        auto n = try_deflate_pth(x.num_, p);
        auto d = try_deflate_pth(x.den_, p);
        if (!n || !d) return std::nullopt;
        return RFrac(*n, *d);
    }

    // x is a square in k(x) iff num*den is a square in k[x]: even multiplicities
    // and a square leading unit.
    friend bool is_square(const RFrac& x) {
        if (is_zero(x)) return true;
        Poly<C> prod = x.num_ * x.den_;
        if (!is_square(prod.lc())) return false;
        int p = characteristic0(x);
        for (auto& [part, m] : squarefree_decomposition(prod, p))
            if (m % 2 != 0) return false;
        return true;
    }

    friend std::string to_text(const RFrac& x) { return to_text(x, "u"); }

    friend std::string to_text(const RFrac& x, const std::string& var) {
        if (x.integral()) return to_text(x.num_, var);
        std::string n = to_text(x.num_, var);
        std::string d = to_text(x.den_, var);
        auto wrap = [](const std::string& s) {
            return s.find_first_of("+-* ") != std::string::npos ? "(" + s + ")" : s;
        };
        return wrap(n) + "/" + wrap(d);
    }

  private:
    void reduce() {
        if (den_.zero()) throw InternalError("zero denominator");
        if (num_.zero()) {
            den_ = Poly<C>(1);
            return;
        }
        Poly<C> g = gcd_monic(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        C l = field_inv(den_.lc());
        num_ = num_ * l;
        den_ = den_ * l;
    }

    Poly<C> num_, den_;
};

using FqRat = RFrac<FqElem>;   // Fq(u)
using QT = RFrac<Rat>;         // Q(T)
using FqUT = RFrac<FqRat>;     // Fq(u)(T)

}  // namespace hc

#endif
