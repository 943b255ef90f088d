#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "hooklab/etamake.hpp"
#include "hooklab/partitions.hpp"

using namespace hooklab;
using testutil::series_of;

TEST_CASE("plain exponents satisfy the triangular relation") {
    const TruncSeries f = series_of("product((1-x^(3*k))^3/(1-x^k), k=1..20)", 20);
    const auto b = plain_euler_exponents(f, 20);
    const TruncSeries logf = series_log(f);
    for (int n = 1; n <= 20; ++n) {
        Rational sum(0);
        for (const auto& [k, e] : b)
            if (n % k == 0) sum += Rational(k) * e;
        CHECK(logf[n].constant_value() * Rational(n) + sum == Rational(0));
    }
    // b_m = 3*[3|m] - 1 for this product.
    for (int m = 1; m <= 20; ++m) {
        const Rational expect = m % 3 == 0 ? Rational(2) : Rational(-1);
        const auto it = b.find(m);
        CHECK((it == b.end() ? Rational(0) : it->second) == expect);
    }
}

TEST_CASE("eta exponents of defining products read off directly") {
    const TruncSeries f = series_of("product((1-x^(3*k))^3/(1-x^k), k=1..20)", 20);
    const std::map<int, Rational> expected{{1, Rational(-1)}, {3, Rational(3)}};
    CHECK(euler_exponents(f, 20) == expected);

    // 1/prod(1-x^k) is the single eta block with exponent -1.
    const TruncSeries g = series_of("product(1/(1-x^k), k=1..16)", 16);
    const std::map<int, Rational> inv{{1, Rational(-1)}};
    CHECK(euler_exponents(g, 16) == inv);
}

TEST_CASE("acceptance products") {
    const TruncSeries t1 =
        series_of("product((1-x^(4*k))*(1-x^k)^2/(1-x^(2*k))^3, k=1..20)", 20);
    const std::map<int, Rational> expect1{{1, Rational(2)}, {2, Rational(-3)}, {4, Rational(1)}};
    CHECK(euler_exponents(t1, 20) == expect1);

    // Weight -1 on hooks divisible by 3, else 1; its partition hookgen is the
    // quotient eta(12t)^3 eta(3t)^6 / (eta(6t)^9 eta(t)).
    WeightTable rho;
    for (int h = 1; h <= 17; ++h)
        rho.values.push_back(RatFun(Rational(h % 3 == 0 ? -1 : 1)));
    const TruncSeries f = partition_hookgen(rho, 17);
    const auto e = euler_exponents(f, 17);
    const std::map<int, Rational> expect2{
        {1, Rational(-1)}, {3, Rational(6)}, {6, Rational(-9)}, {12, Rational(3)}};
    CHECK(e == expect2);
    const EtaQuotient q = eta_from_exponents(e);
    CHECK(q.prefactor == Rational(1, 24));
    CHECK(render_eta(q) == "x^(1/24)*eta(12tau)^3*eta(3tau)^6/(eta(6tau)^9*eta(tau))");
    // The reconstruction reproduces the hookgen series.
    CHECK(euler_product(e, 17) == f);
}

TEST_CASE("rendering") {
    EtaQuotient q1;
    q1.exponents = {{1, Rational(-1)}, {3, Rational(6)}, {6, Rational(-9)}, {12, Rational(3)}};
    q1 = eta_from_exponents(q1.exponents);
    CHECK(render_eta(q1) == "x^(1/24)*eta(12tau)^3*eta(3tau)^6/(eta(6tau)^9*eta(tau))");

    const EtaQuotient q2 = eta_from_exponents({{1, Rational(1)}});
    CHECK(render_eta(q2) == "x^(-1/24)*eta(tau)");

    const EtaQuotient q3 = eta_from_exponents({});
    CHECK(render_eta(q3) == "1");

    const EtaQuotient q4 = eta_from_exponents({{2, Rational(3, 2)}});
    CHECK(!q4.integral());
    CHECK(render_eta(q4) == "x^(-1/8)*eta(2tau)^(3/2)");
}

TEST_CASE("round trip on random exponent maps") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> expo(-5, 5);
    std::uniform_int_distribution<int> modulus(1, 8);
    for (int round = 0; round < 12; ++round) {
        std::map<int, Rational> e;
        for (int tries = 0; tries < 4; ++tries) {
            const int k = modulus(rng);
            const int v = expo(rng);
            if (v != 0) e[k] = Rational(v);
        }
        const TruncSeries f = euler_product(e, 40);
        CHECK(euler_exponents(f, 40) == e);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(euler_exponents(series_of("1+z*x", 4, {"z"}), 4), DomainError);
    CHECK_THROWS_AS(euler_exponents(series_of("2+x", 4), 4), DomainError);
    CHECK_THROWS_AS(euler_exponents(series_of("1+x", 2), 4), DomainError);
    // Non-integer exponents are returned, flagged via integral().
    const TruncSeries f = series_pow(series_of("1-x", 12), RatFun(Rational(1, 2)));
    const auto e = euler_exponents(f, 12);
    CHECK(e.at(1) == Rational(1, 2));
    CHECK(!eta_from_exponents(e).integral());
}
