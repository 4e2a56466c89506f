#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "hc/factor.hpp"
#include "hc/parse.hpp"
#include "hc/transforms.hpp"

using namespace hc;

namespace {

// Durand-Kerner complex root approximation; test-only oracle.
std::vector<std::complex<double>> approx_roots(const Poly<Rat>& f) {
    int n = f.degree();
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f.coeff(i).get_d();
    for (int i = 0; i <= n; ++i) c[i] /= c[n];
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * z + c[i];
        return v;
    };
    std::vector<std::complex<double>> r(n);
    for (int i = 0; i < n; ++i) r[i] = std::pow(std::complex<double>(0.4, 0.9), i + 1);
    for (int it = 0; it < 500; ++it) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) d *= r[i] - r[j];
            std::complex<double> step = eval(r[i]) / d;
            r[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-13) break;
    }
    return r;
}

std::complex<double> eval_bipoly(const BiPolyQ& f, std::complex<double> t,
                                 std::complex<double> y) {
    std::complex<double> v = 0;
    for (auto& [k, c] : f.terms())
        v += c.get_d() * std::pow(t, k.first) * std::pow(y, k.second);
    return v;
}

BiPolyQ random_bipoly(std::mt19937_64& rng, int dt, int dy) {
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<Poly<Rat>> rows(dy + 1);
    for (int j = 0; j <= dy; ++j) {
        std::vector<Rat> cs(dt + 1);
        for (int i = 0; i <= dt; ++i) cs[i] = Rat(coef(rng));
        rows[j] = Poly<Rat>(std::move(cs));
    }
    if (rows[dy].zero()) rows[dy] = Poly<Rat>(Rat(1));
    return BiPolyQ::from_y_coeffs(rows);
}

}  // namespace

TEST_CASE("specialize: pinned examples and ring morphism") {
    auto F = parse_bipoly_q("Y^2 - T");
    CHECK(to_text(F.specialize(Rat(4)), "Y") == "Y^2 - 4");
    auto G = parse_bipoly_q("T*Y^2 + Y");
    CHECK(G.specialize(Rat(0)).degree() == 1);  // leading coefficient vanishes
    CHECK(to_text(G.specialize(Rat(0)), "Y") == "Y");

    auto field = BaseField::parse("FqU:q=3");
    auto ctx = field.fqu_dom().ctx;
    auto H = parse_bipoly_fqu("Y^2 - T", ctx);
    auto t = parse_elem_fqu("u^2", ctx);
    CHECK(to_text(H.specialize(t), "Y") == "Y^2 + 2*u^2");  // -u^2 = 2u^2 in F3

    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 50; ++rep) {
        auto A = random_bipoly(rng, 2, 2), B = random_bipoly(rng, 2, 2);
        Rat tv(static_cast<long>(rep % 7) - 3);
        CHECK((A * B).specialize(tv) == A.specialize(tv) * B.specialize(tv));
    }
}

TEST_CASE("discriminant in Y") {
    auto d1 = discriminant_Y(parse_bipoly_q("Y^2 - T"));
    CHECK(!d1.inseparable);
    CHECK(to_text(d1.delta, "T") == "4*T");

    auto d2 = discriminant_Y(parse_bipoly_q("Y^3 + T"));
    CHECK(!d2.inseparable);
    CHECK(to_text(d2.delta, "T") == "-27*T^2");

    auto field = BaseField::parse("FqU:q=2");
    auto d3 = discriminant_Y(parse_bipoly_fqu("Y^2 - T", field.fqu_dom().ctx));
    CHECK(d3.inseparable);
    CHECK(d3.delta.zero());

    CHECK_THROWS_AS(discriminant_Y(parse_bipoly_q("T^2 + 1")), ValidationError);
}

TEST_CASE("monicize: pinned examples") {
    CHECK(to_text(monicize(parse_bipoly_q("2*Y^2 + T*Y + 3"))) == "Y^2 + Y*T + 6");
    auto already = parse_bipoly_q("Y^2 + T*Y + 1");
    CHECK(monicize(already) == already);
    CHECK(to_text(monicize(parse_bipoly_q("T*Y^2 + Y + 1"))) == "Y^2 + Y + T");
    CHECK_THROWS_AS(monicize(parse_bipoly_q("(1/2)*Y + 1")), ValidationError);

    auto field = BaseField::parse("FqU:q=3");
    auto ctx = field.fqu_dom().ctx;
    CHECK(to_text(monicize(parse_bipoly_fqu("u*Y^2 + Y + 1", ctx))) == "Y^2 + Y + u");
}

TEST_CASE("monicize: degree bounds on 500 random polynomials") {
    QDom dom;
    std::mt19937_64 rng(401);
    std::uniform_int_distribution<int> dts(0, 3), dys(1, 4);
    for (int rep = 0; rep < 500; ++rep) {
        auto F = random_bipoly(rng, dts(rng), dys(rng));
        auto G = monicize(F);
        CHECK(G.deg_y() == F.deg_y());
        CHECK(G.deg_t() <= F.deg_t() * F.deg_y());
        CHECK(G.y_coeffs()[G.deg_y()] == Poly<Rat>(Rat(1)));
        (void)dom;
    }
}

TEST_CASE("monicize: root map y <-> a0(t)*y on split families") {
    // F = T*(Y - 1)*(Y - 2T): roots of G(t,.) must be {t*1, t*2t}, exactly.
    auto F = parse_bipoly_q("T*Y^2 - (T + 2*T^2)*Y + 2*T^2");
    auto G = monicize(F);
    for (long tl : {1L, 2L, 3L, 5L, -4L}) {
        Rat t(tl);
        auto gt = G.specialize(t);
        std::vector<Rat> rr{Rat(t), Rat(t * 2 * t)};
        for (const Rat& root : rr) {
            Rat v(0);
            for (int i = gt.degree(); i >= 0; --i) v = v * root + gt.coeff(i);
            CHECK(v == 0);
        }
    }
    // numerical cross-check on a non-split cubic at t = 1
    auto F2 = parse_bipoly_q("(T+1)*Y^3 + T*Y + 2");
    auto G2 = monicize(F2);
    auto fr = approx_roots(F2.specialize(Rat(1)));
    auto g1 = G2.specialize(Rat(1));
    for (auto y : fr) {
        std::complex<double> v = 0;
        for (int i = g1.degree(); i >= 0; --i) v = v * (2.0 * y) + g1.coeff(i).get_d();
        CHECK(std::abs(v) < 1e-6);
    }
}

TEST_CASE("shift exponent") {
    QDom dom;
    // d_T = d_Y = 2, H_aff = 3 < e^e: E = floor(4e) + 1 = 11
    CHECK(shift_exponent(dom, parse_bipoly_q("T^2*Y^2 + 3")) == 11);
    // d_T = d_Y = 1, tiny height: E = floor(e) + 1 = 3
    CHECK(shift_exponent(dom, parse_bipoly_q("Y - T")) == 3);
    // H_aff = 1619 ~ e^{e^2}: E = floor(e^2/2) + 1 = 4
    CHECK(shift_exponent(dom, parse_bipoly_q("Y - T + 1619")) == 4);
    CHECK_THROWS_AS(shift_exponent(dom, parse_bipoly_q("Y^2 + 1")), ValidationError);
}

TEST_CASE("shift transform") {
    auto P = parse_bipoly_q("Y^2 - T");
    CHECK(shift_transform(P, 2) == parse_bipoly_q("Y^2 + 2*T^2*Y + T^4 - T"));
    CHECK(shift_transform(parse_bipoly_q("Y"), 1) == parse_bipoly_q("T + Y"));
    CHECK_THROWS_AS(shift_transform(P, 0), ValidationError);

    // degree window and exact zero correspondence
    auto G = shift_transform(P, 2);
    CHECK(G.deg_t() + G.deg_y() >= 2 * 2);
    CHECK(G.deg_t() + G.deg_y() <= 2 * 2 + 1 + G.deg_y());
    auto roots = q_roots(G.specialize(Rat(4)));
    CHECK(roots == std::vector<Rat>{Rat(-18), Rat(-14)});  // {+-2 - 16}
    for (Rat y : roots) {
        auto pr = q_roots(P.specialize(Rat(4)));
        CHECK(std::find(pr.begin(), pr.end(), y + Rat(16)) != pr.end());
    }

    // char p: shift stays exact over F3(u)
    auto field = BaseField::parse("FqU:q=3");
    auto ctx = field.fqu_dom().ctx;
    auto Pf = parse_bipoly_fqu("Y^2 - T", ctx);
    auto Gf = shift_transform(Pf, 2);
    CHECK(Gf == parse_bipoly_fqu("Y^2 + 2*T^2*Y + T^4 - T", ctx));
}

TEST_CASE("symmetric reduction") {
    auto y = [](int i) { return MultiPoly::variable(i); };
    // y1^2 + y2^2 -> e1^2 - 2 e2
    auto r1 = symmetric_reduce({y(0) * y(0) + y(1) * y(1), 2});
    CHECK(r1 == MultiPoly::monomial({2}, Int(1)) + MultiPoly::monomial({0, 1}, Int(-2)));
    // y1y2 + y1y3 + y2y3 -> e2
    auto r2 = symmetric_reduce({y(0) * y(1) + y(0) * y(2) + y(1) * y(2), 3});
    CHECK(r2 == MultiPoly::monomial({0, 1}, Int(1)));
    // p3 -> e1^3 - 3 e1 e2 + 3 e3
    MultiPoly p3;
    for (int i = 0; i < 3; ++i) p3 += y(i) * y(i) * y(i);
    auto r3 = symmetric_reduce({p3, 3});
    CHECK(r3 == MultiPoly::monomial({3}, Int(1)) + MultiPoly::monomial({1, 1}, Int(-3)) +
                    MultiPoly::monomial({0, 0, 1}, Int(3)));

    CHECK_THROWS_AS(symmetric_reduce({y(0) * y(0) + y(1), 2}), ValidationError);

    // round trip: symmetrize a random polynomial, reduce, re-substitute
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly s;
        for (int t = 0; t < 3; ++t) {
            MultiPoly mono(coef(rng));
            for (int v = 0; v < 3; ++v)
                for (int e = std::uniform_int_distribution<int>(0, 2)(rng); e > 0; --e)
                    mono *= y(v);
            // symmetrize over S_3
            std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (auto& p : perms) s += mono.permuted(p);
        }
        auto red = symmetric_reduce({s, 3});
        MultiPoly back;
        for (auto& [lam, c] : red.terms()) {
            MultiPoly term(c);
            for (size_t i = 0; i < lam.size(); ++i)
                for (int e = 0; e < lam[i]; ++e) term *= elementary_symmetric(3, int(i) + 1);
            back += term;
        }
        CHECK(back == s);
    }
}

TEST_CASE("subset resolvent: quadratics give back F") {
    auto F = parse_bipoly_q("Y^2 + T*Y + T^3 + 1");
    CHECK(subset_resolvent(F, 1, 1) == F);
    // reducible specialization => integral root of the resolvent (R = F here)
    auto F2 = parse_bipoly_q("Y^2 - T");
    auto R = subset_resolvent(F2, 1, 1);
    auto roots = q_roots(R.specialize(Rat(9)));
    CHECK(std::find(roots.begin(), roots.end(), Rat(3)) != roots.end());

    auto field = BaseField::parse("FqU:q=3");
    auto ctx = field.fqu_dom().ctx;
    auto Ff = parse_bipoly_fqu("Y^2 + u*Y + u^2*T", ctx);
    CHECK(subset_resolvent(Ff, 1, 1) == Ff);
}

TEST_CASE("subset resolvent: quartic two-subset resolvents") {
    auto F = parse_bipoly_q("Y^4 + T*Y^2 + (T+1)*Y + 2");
    auto R = subset_resolvent(F, 2, 2);
    CHECK(R.deg_y() == 6);          // C(4,2)
    CHECK(R.deg_t() <= 1 * 6);      // d_T * C(d_Y, m)
    for (auto& [k, c] : R.terms()) CHECK(c.get_den() == 1);

    // numerical vanishing oracle at 5 values of t: R(t, y_i y_j) ~ 0
    for (long tl : {1L, 2L, 3L, -1L, -2L}) {
        auto rs = approx_roots(F.specialize(Rat(tl)));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                auto v = eval_bipoly(R, std::complex<double>(double(tl), 0.0), rs[i] * rs[j]);
                CHECK(std::abs(v) < 1e-6);
            }
    }

    // exact vanishing on a split family: roots of F(t,.) are {t, 2t, 3t, -t}
    auto Fs = parse_bipoly_q("(Y - T)*(Y - 2*T)*(Y - 3*T)*(Y + T)");
    auto Rs = subset_resolvent(Fs, 2, 2);
    Rat t(5);
    std::vector<Rat> yr{t, 2 * t, 3 * t, -t};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Rat z = yr[i] * yr[j];
            auto rt = Rs.specialize(t);
            Rat v(0);
            for (int d = rt.degree(); d >= 0; --d) v = v * z + rt.coeff(d);
            CHECK(v == 0);
        }
    // and R_{2,1} vanishes on pair sums
    auto Rs1 = subset_resolvent(Fs, 2, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Rat z = yr[i] + yr[j];
            auto rt = Rs1.specialize(t);
            Rat v(0);
            for (int d = rt.degree(); d >= 0; --d) v = v * z + rt.coeff(d);
            CHECK(v == 0);
        }
}

TEST_CASE("subset resolvent: exact vanishing over F3(u)") {
    auto field = BaseField::parse("FqU:q=3");
    auto ctx = field.fqu_dom().ctx;
    // roots of F(t,.) are {t, u*t, (u+1)*t, 2*t}
    auto Fs = parse_bipoly_fqu("(Y - T)*(Y - u*T)*(Y - (u+1)*T)*(Y - 2*T)", ctx);
    auto Rs = subset_resolvent(Fs, 2, 2);
    CHECK(Rs.deg_y() == 6);
    auto t = parse_elem_fqu("u", ctx);
    std::vector<FqRat> cs{parse_elem_fqu("1", ctx), parse_elem_fqu("u", ctx),
                          parse_elem_fqu("u+1", ctx), parse_elem_fqu("2", ctx)};
    auto rt = Rs.specialize(t);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            FqRat z = cs[i] * t * (cs[j] * t);
            FqRat v = parse_elem_fqu("0", ctx);
            for (int d = rt.degree(); d >= 0; --d) v = v * z + rt.coeff(d);
            CHECK(is_zero(v));
        }
}

TEST_CASE("subset resolvent: validation") {
    auto F = parse_bipoly_q("Y^4 + T*Y + 1");
    CHECK_THROWS_AS(subset_resolvent(F, 3, 1), ValidationError);   // m > d/2
    CHECK_THROWS_AS(subset_resolvent(F, 2, 3), ValidationError);   // j > m
    CHECK_THROWS_AS(subset_resolvent(parse_bipoly_q("2*Y^2 + T"), 1, 1),
                    ValidationError);  // not monic
    CHECK_THROWS_AS(subset_resolvent(parse_bipoly_q("Y^2 + (1/2)*T"), 1, 1),
                    ValidationError);  // not integral
}
