#ifndef HC_INTS_HPP
#define HC_INTS_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "hc/error.hpp"

namespace hc {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_one(const Int& x) { return x == 1; }
inline bool is_one(const Rat& x) { return x == 1; }

inline int characteristic0(const Int&) { return 0; }
inline int characteristic0(const Rat&) { return 0; }

// gcd normalized to be nonnegative; gcd(0,0) = 0.
inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Rat field_inv(const Rat& x) {
    if (is_zero(x)) throw InternalError("division by zero in Q");
    return Rat(1) / x;
}

inline bool is_square(const Int& x) {
    return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t());
}

inline bool is_square(const Rat& x) {
    return is_square(x.get_num()) && is_square(x.get_den());
}

inline std::optional<Int> exact_sqrt(const Int& x) {
    if (!is_square(x)) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline double log2_of(const Int& x) {
    if (sgn(x) == 0) throw InternalError("log2 of zero");
    signed long e;
    double d = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log2(std::fabs(d)) + static_cast<double>(e);
}

inline double log2_of(const Rat& x) { return log2_of(x.get_num()) - log2_of(x.get_den()); }

inline std::string to_text(const Int& x) { return x.get_str(); }

inline std::string to_text(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Smallest prime > x.
inline Int next_prime(const Int& x) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), x.get_mpz_t());
    return p;
}

}  // namespace hc

#endif
