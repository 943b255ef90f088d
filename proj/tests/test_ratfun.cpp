#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "hooklab/ratfun.hpp"

using namespace hooklab;
using testutil::rf;

TEST_CASE("canonical form") {
    CHECK(rf("(z^2-1)/(z-1)") == rf("z+1"));
    CHECK(rf("(z+1)*(z-1)") == rf("z^2-1"));
    CHECK(rf("1/2+1/3") == rf("5/6"));
    CHECK(rf("(2*z+2)/2") == rf("z+1"));
    CHECK(rf("z/(-2)").str() == "-z/2");
    CHECK(rf("(z+3)/4").str() == "(z+3)/4");
    CHECK(rf("(z+8)/9").str() == "(z+8)/9");
    CHECK(rf("z/4").str() == "z/4");
    CHECK(rf("1/(3*z+9)").str() == "1/(3*z+9)");
}

TEST_CASE("normalization is idempotent") {
    for (const char* s : {"(z^2-1)/(z-1)", "(6*z+12)/(4*z+8)", "-z/(2*z+2)", "0", "5/6"}) {
        const RatFun f = rf(s);
        const RatFun again(f.num(), f.den());
        CHECK(f == again);
        CHECK(f.num() == again.num());
        CHECK(f.den() == again.den());
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(-3, 3);
    const RatFun z = RatFun::variable("z");
    auto random_rf = [&]() {
        const RatFun num = z.scaled_by(Rational(pick(rng))) + RatFun(Rational(pick(rng)));
        RatFun den;
        while (den.is_zero())
            den = z.scaled_by(Rational(pick(rng))) + RatFun(Rational(pick(rng)));
        return num / den;
    };
    for (int round = 0; round < 30; ++round) {
        const RatFun a = random_rf(), b = random_rf(), c = random_rf();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.reciprocal() == RatFun(1));
    }
}

TEST_CASE("substitution") {
    CHECK(rf("1-z/12").substituted({{"z", Rational(3)}}) == rf("3/4"));
    CHECK(rf("z").substituted({{"z", Rational(0)}}) == RatFun(0));
    CHECK(rf("(z+15)/16").substituted({{"z", Rational(1)}}) == RatFun(1));
    CHECK_THROWS_AS(rf("1/(z-3)").substituted({{"z", Rational(3)}}), PoleError);
    try {
        rf("1/(z-3)").substituted({{"z", Rational(3)}});
    } catch (const PoleError& e) {
        CHECK(e.parameter == "z");
    }
}

TEST_CASE("substitution is a homomorphism") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(-3, 3);
    const RatFun z = RatFun::variable("z");
    const std::map<std::string, Rational> at2{{"z", Rational(2)}};
    for (int round = 0; round < 20; ++round) {
        const RatFun a = z.scaled_by(Rational(pick(rng))) + RatFun(Rational(pick(rng)));
        const RatFun b = z * z + RatFun(Rational(pick(rng) == 0 ? 1 : pick(rng)));
        CHECK((a + b).substituted(at2) == a.substituted(at2) + b.substituted(at2));
        CHECK((a * b).substituted(at2) == a.substituted(at2) * b.substituted(at2));
        if (!b.substituted(at2).is_zero())
            CHECK((a / b).substituted(at2) == a.substituted(at2) / b.substituted(at2));
    }
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(rf("1") / RatFun(0), ArithmeticError);
    CHECK_THROWS_AS(RatFun(0).reciprocal(), ArithmeticError);
}

TEST_CASE("pow keeps canonical form") {
    const RatFun f = rf("(z+1)/(2*z+3)");
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(-2) == (f * f).reciprocal());
    CHECK(f.pow(0) == RatFun(1));
    CHECK(rf("(2*z)").pow(-1) == rf("1/(2*z)"));
}
