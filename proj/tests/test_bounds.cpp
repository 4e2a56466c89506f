#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hc/bounds.hpp"
#include "hc/parse.hpp"

using namespace hc;

namespace {

double breakdown_sum(const BoundKernel& k) {
    double s = 0;
    for (auto& f : k.breakdown) s += f.log2;
    return s;
}

}  // namespace

TEST_CASE("characteristic bracket") {
    auto q = BaseField::parse("Q");
    auto f3 = BaseField::parse("FqU:q=3");
    CHECK(bracket_select({25.0 * 2, 36.0 * 2}, q) == 50.0);
    CHECK(bracket_select({25.0 * 2, 36.0 * 2}, f3) == 72.0);
    CHECK(bracket_select({1.0, 0.0}, f3) == 0.0);
}

TEST_CASE("beta") {
    CHECK(beta(2, 0) == 432.0);
    CHECK(beta(2, 3) == doctest::Approx(25.398).epsilon(1e-3));
    CHECK(beta(1, 29) == 1.0);  // 29 > max{27, 1}
    CHECK_THROWS_AS(beta(0, 0), ValidationError);
}

TEST_CASE("kernel: pinned examples and breakdown sums") {
    KernelParams p;
    p.char0 = true;
    p.d_y = 2;
    p.d_t = 1;
    p.log_h = 0.0;  // H_K = 1
    p.B = 1e4;
    auto k1 = kernel("hit01", p);
    CHECK(k1.log2 == doctest::Approx(82.644).epsilon(1e-3));
    CHECK(breakdown_sum(k1) == doctest::Approx(k1.log2).epsilon(1e-12));

    auto k2 = kernel("hilbert1", p);
    CHECK(k2.log2 == doctest::Approx(12.0 + std::log2(1e4) / 2).epsilon(1e-9));

    KernelParams p3 = p;
    p3.group_label = "C2";
    auto kd = kernel("hit3", p3);
    p3.use_gamma = true;
    auto kg = kernel("hit3", p3);
    CHECK(kd.log2 == doctest::Approx(std::log2(1e4) / 2).epsilon(1e-9));
    CHECK(kg.log2 == kd.log2);  // delta = gamma = 1/2 for C2

    KernelParams p4 = p;
    p4.order_G = 6;
    p4.order_H = 3;
    for (std::string tag : {"hilbert35", "hilbert7"}) {
        auto k = kernel(tag, p4);
        CHECK(std::isfinite(k.log2));
        CHECK(breakdown_sum(k) == doctest::Approx(k.log2).epsilon(1e-12));
    }

    KernelParams pb = p;
    pb.d = 2;
    auto kb = kernel("bp", pb);
    CHECK(kb.log2 == doctest::Approx(4.0 + std::log2(1e4) / 2).epsilon(1e-9));

    CHECK_THROWS_AS(kernel("nope", p), ValidationError);
    CHECK_THROWS_AS(kernel("hilbert35", p), ValidationError);  // missing group data
    CHECK_THROWS_AS(kernel("hilbert7", p), ValidationError);
}

TEST_CASE("kernel: bracket monotonicity char 0 vs char p") {
    KernelParams p;
    p.d_y = 3;
    p.d_t = 2;
    p.log_h = 4.7;
    p.B = 2500;
    p.d = 4;
    p.order_G = 24;
    p.order_H = 4;
    p.group_label = "S3";
    for (std::string tag : {"hit01", "hilbert1", "hilbert35", "hilbert7", "hit3", "bp"}) {
        KernelParams c0 = p, cp = p;
        c0.char0 = true;
        cp.char0 = false;
        CHECK(kernel(tag, c0).log2 <= kernel(tag, cp).log2);
    }
}

TEST_CASE("delta/gamma exponent table") {
    auto dg = [](const std::string& label) {
        return delta_gamma(GroupId{label, 4, catalog_order(label), true});
    };
    CHECK(dg("C2") == std::make_pair(Rat(1, 2), Rat(1, 2)));
    CHECK(dg("C3") == std::make_pair(Rat(1, 3), Rat(1, 3)));
    CHECK(dg("S3") == std::make_pair(Rat(1, 2), Rat(1, 3)));
    CHECK(dg("C4") == std::make_pair(Rat(1, 2), Rat(1, 2)));
    CHECK(dg("V4") == std::make_pair(Rat(1, 2), Rat(1, 2)));
    CHECK(dg("D4") == std::make_pair(Rat(1, 2), Rat(1, 2)));
    CHECK(dg("A4") == std::make_pair(Rat(1, 3), Rat(1, 4)));
    CHECK(dg("S4") == std::make_pair(Rat(1, 2), Rat(1, 4)));
    CHECK_THROWS_AS(delta_gamma(GroupId{"1+1:C1", 2, 1, false}), ValidationError);
}

TEST_CASE("b(P) over Q") {
    // no bad primes up to 1000; finiteness never certified by default
    auto r1 = b_of_P(parse_bipoly_q("Y^2 - T"), 1000);
    CHECK(r1.absolutely_irreducible);
    CHECK(r1.value == 1.0);
    CHECK(r1.bad_places.empty());
    CHECK(!r1.complete);

    // Y^2 + T^2 = (Y - iT)(Y + iT): not absolutely irreducible
    auto r2 = b_of_P(parse_bipoly_q("Y^2 + T^2"), 1000);
    CHECK(!r2.absolutely_irreducible);
    CHECK(r2.value == 0.0);

    // mod 433 the polynomial degenerates to Y^2: one bad prime in (432, 1000]
    auto r3 = b_of_P(parse_bipoly_q("Y^2 - 433*T"), 1000);
    CHECK(r3.absolutely_irreducible);
    REQUIRE(r3.bad_places.size() == 1);
    CHECK(r3.bad_places[0] == "433");
    CHECK(r3.value == doctest::Approx(std::exp(std::log(433.0) / 433.0)).epsilon(1e-12));

    // truncation monotonicity
    auto r4 = b_of_P(parse_bipoly_q("Y^2 - 433*T"), 500);
    CHECK(r4.value <= r3.value);
    CHECK(b_of_P(parse_bipoly_q("Y^2 - T"), 100, true).complete);

    CHECK_THROWS_AS(b_of_P(parse_bipoly_q("(1/2)*Y^2 - T"), 100), ValidationError);
}

TEST_CASE("b(P) over Fq(u)") {
    auto ctx = BaseField::parse("FqU:q=5").fqu_dom().ctx;
    // beta = 2^{14/3} ~ 25.4: norms 5, 25 are below the range
    auto r1 = b_of_P_fqu(parse_bipoly_fqu("Y^2 - T", ctx), 2);
    CHECK(r1.absolutely_irreducible);
    CHECK(r1.value == 1.0);
    CHECK(r1.bad_places.empty());

    // degenerate reduction at the degree-3 place u^3 + u + 1 (norm 125)
    auto r2 = b_of_P_fqu(parse_bipoly_fqu("Y^2 - (u^3 + u + 1)*T", ctx), 3);
    CHECK(r2.absolutely_irreducible);
    REQUIRE(r2.bad_places.size() == 1);
    CHECK(r2.bad_places[0] == "u^3 + u + 1");
    CHECK(r2.value == doctest::Approx(std::exp(std::log(125.0) / 125.0)).epsilon(1e-12));

    // q must be prime
    auto ctx9 = BaseField::parse("FqU:q=9").fqu_dom().ctx;
    CHECK_THROWS_AS(b_of_P_fqu(parse_bipoly_fqu("Y^2 - T", ctx9), 1), ValidationError);
}

TEST_CASE("bp min arguments") {
    auto [a, b] = bp_min_arguments(true, 2, 0.0, 1.0, 1e4);
    CHECK(a == doctest::Approx(8 * std::log(1e4) + 16).epsilon(1e-9));
    CHECK(b == doctest::Approx(16.0).epsilon(1e-9));
}
