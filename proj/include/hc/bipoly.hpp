#ifndef HC_BIPOLY_HPP
#define HC_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hc/field.hpp"
#include "hc/frac.hpp"
#include "hc/poly.hpp"

namespace hc {

// Sparse bivariate polynomial in (T, Y) over a field element type E
// (Rat for Q, FqRat for Fq(u)). Keys are (deg_T, deg_Y); no zero entries.
template <class E>
class BiPoly {
  public:
    using Key = std::pair<int, int>;

    BiPoly() = default;
    BiPoly(long v) { set(0, 0, E(v)); }  // NOLINT
    explicit BiPoly(const E& c) { set(0, 0, c); }

    static BiPoly var_t() {
        BiPoly p;
        p.set(1, 0, E(1));
        return p;
    }
    static BiPoly var_y() {
        BiPoly p;
        p.set(0, 1, E(1));
        return p;
    }

    void set(int i, int j, const E& c) {
        if (is_zero(c))
            m_.erase({i, j});
        else
            m_[{i, j}] = c;
        recompute();
    }

    E coeff(int i, int j) const {
        auto it = m_.find({i, j});
        return it == m_.end() ? E(0) : it->second;
    }

    const std::map<Key, E>& terms() const { return m_; }
    bool zero() const { return m_.empty(); }
    int deg_t() const { return dt_; }
    int deg_y() const { return dy_; }
    int total_degree() const { return dtot_; }

    friend bool is_zero(const BiPoly& p) { return p.m_.empty(); }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.m_ == b.m_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (auto& [k, c] : b.m_) {
            auto it = r.m_.find(k);
            if (it == r.m_.end())
                r.m_[k] = c;
            else {
                it->second = it->second + c;
                if (is_zero(it->second)) r.m_.erase(it);
            }
        }
        r.recompute();
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    BiPoly operator-() const {
        BiPoly r;
        for (auto& [k, c] : m_) r.m_[k] = -c;
        r.recompute();
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (auto& [ka, ca] : a.m_)
            for (auto& [kb, cb] : b.m_) {
                Key k{ka.first + kb.first, ka.second + kb.second};
                auto it = r.m_.find(k);
                if (it == r.m_.end())
                    r.m_[k] = ca * cb;
                else
                    it->second = it->second + ca * cb;
            }
        for (auto it = r.m_.begin(); it != r.m_.end();)
            it = is_zero(it->second) ? r.m_.erase(it) : std::next(it);
        r.recompute();
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const E& s) {
        BiPoly r;
        if (is_zero(s)) return r;
        for (auto& [k, c] : a.m_) r.m_[k] = c * s;
        r.recompute();
        return r;
    }
    BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
    BiPoly& operator-=(const BiPoly& b) { return *this = *this - b; }
    BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

    BiPoly pow(unsigned e) const {
        BiPoly r(1);
        BiPoly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Coefficients a_j(T) with F = sum_j a_j(T) Y^j; index = Y-degree.
    std::vector<Poly<E>> y_coeffs() const {
        std::vector<std::vector<E>> acc(dy_ + 1);
        for (auto& [k, c] : m_) {
            auto& row = acc[k.second];
            if (static_cast<int>(row.size()) <= k.first) row.resize(k.first + 1, E(0));
            row[k.first] = c;
        }
        std::vector<Poly<E>> out;
        out.reserve(acc.size());
        for (auto& row : acc) out.emplace_back(std::move(row));
        if (zero()) out.assign(1, Poly<E>());
        return out;
    }

    static BiPoly from_y_coeffs(const std::vector<Poly<E>>& rows) {
        BiPoly r;
        for (int j = 0; j < static_cast<int>(rows.size()); ++j)
            for (int i = 0; i <= rows[j].degree(); ++i)
                if (!is_zero(rows[j].coeff(i))) r.m_[{i, j}] = rows[j].coeff(i);
        r.recompute();
        return r;
    }

    // Univariate in Y over the rational function field K(T).
    Poly<RFrac<E>> as_poly_over_kt() const {
        std::vector<RFrac<E>> cs(dy_ + 1, RFrac<E>(0));
        for (auto& [j, row] : enumerate_rows()) cs[j] = RFrac<E>(row);
        return Poly<RFrac<E>>(std::move(cs));
    }

    static BiPoly from_poly_over_kt(const Poly<RFrac<E>>& f) {
        // denominators must be trivial
        std::vector<Poly<E>> rows;
        for (int j = 0; j <= f.degree(); ++j) {
            const RFrac<E>& c = f.coeff(j);
            if (!c.integral()) throw InternalError("non-polynomial coefficient in K(T) conversion");
            rows.push_back(c.num() * field_inv(c.den().coeff(0)));
        }
        return from_y_coeffs(rows);
    }

    // Exact substitution T := t.
    Poly<E> specialize(const E& t) const {
        std::vector<E> cs(dy_ + 1, E(0));
        for (auto& [k, c] : m_) {
            E tp(1);
            for (int i = 0; i < k.first; ++i) tp = tp * t;
            cs[k.second] = cs[k.second] + c * tp;
        }
        if (zero()) cs.clear();
        return Poly<E>(std::move(cs));
    }

    // Swap the roles of T and Y.
    BiPoly transposed() const {
        BiPoly r;
        for (auto& [k, c] : m_) r.m_[{k.second, k.first}] = c;
        r.recompute();
        return r;
    }

    std::vector<E> coefficients() const {
        std::vector<E> out;
        out.reserve(m_.size());
        for (auto& [k, c] : m_) out.push_back(c);
        return out;
    }

  private:
    std::vector<std::pair<int, Poly<E>>> enumerate_rows() const {
        std::vector<std::pair<int, Poly<E>>> out;
        auto rows = y_coeffs();
        for (int j = 0; j < static_cast<int>(rows.size()); ++j)
            if (!rows[j].zero()) out.emplace_back(j, rows[j]);
        return out;
    }

    void recompute() {
        dt_ = dy_ = dtot_ = 0;
        for (auto& [k, c] : m_) {
            dt_ = std::max(dt_, k.first);
            dy_ = std::max(dy_, k.second);
            dtot_ = std::max(dtot_, k.first + k.second);
        }
    }

    std::map<Key, E> m_;
    int dt_ = 0, dy_ = 0, dtot_ = 0;
};

template <class E>
int characteristic0(const BiPoly<E>& f) {
    for (auto& [k, c] : f.terms()) {
        int p = characteristic0(c);
        if (p) return p;
    }
    return 0;
}

// Canonical text: terms in decreasing Y-degree, then decreasing T-degree.
template <class E>
std::string to_text(const BiPoly<E>& f) {
    if (f.zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, E>> ts;  // (Y, T) keys
    for (auto& [k, c] : f.terms()) ts.push_back({{k.second, k.first}, c});
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string s;
    for (auto& [k, c] : ts) {
        auto [j, i] = k;
        std::string cs = to_text(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (s.empty()) {
            if (neg) {
                s += "-";
                cs = cs.substr(1);
            }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        bool has_var = (i > 0 || j > 0);
        bool needs_coeff = !has_var || cs != "1";
        if (needs_coeff) {
            bool composite = text_is_composite(cs);
            if (composite && has_var)
                s += "(" + cs + ")";
            else
                s += cs;
            if (has_var) s += "*";
        }
        if (j > 0) {
            s += "Y";
            if (j > 1) s += "^" + std::to_string(j);
            if (i > 0) s += "*";
        }
        if (i > 0) {
            s += "T";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

using BiPolyQ = BiPoly<Rat>;
using BiPolyF = BiPoly<FqRat>;

}  // namespace hc

#endif
