#include "doctest.h"

#include "helpers.hpp"
#include "hooklab/catalog.hpp"

using namespace hooklab;
using namespace hooklab::catalog;
using testutil::rf;

TEST_CASE("catalog inventory") {
    const auto& cat = builtin_catalog();
    CHECK(cat.size() == 44);
    int pa = 0, conjectures = 0;
    for (const auto& e : cat) {
        if (e.kind == StructureKind::Partition) ++pa;
        if (e.status == FormulaStatus::Conjecture) ++conjectures;
    }
    CHECK(pa >= 15);
    CHECK(conjectures == 1);
    CHECK(find_entry("THM_5_5") != nullptr);
    CHECK(find_entry("NOPE") == nullptr);
}

TEST_CASE("weight rules match the stated values") {
    const auto* t55 = find_entry("THM_5_5");
    REQUIRE(t55 != nullptr);
    Bindings b = t55->bindings_for(3);
    CHECK(t55->weight(3, b) == RatFun(Rational(-1)));
    CHECK(t55->weight(4, b) == RatFun(1));
    CHECK(t55->weight(9, b) == RatFun(Rational(-1)));

    const auto* t86 = find_entry("THM_8_6");
    REQUIRE(t86 != nullptr);
    Bindings b2 = t86->bindings_for(std::nullopt);
    CHECK(t86->weight(1, b2) == RatFun(1));
    CHECK(t86->weight(2, b2) == RatFun(1));
    CHECK(t86->weight(3, b2) == rf("5/3"));
    CHECK(t86->weight(5, b2) == rf("42/19"));
}

TEST_CASE("verify a fast entry and the trivial order") {
    const auto r = verify_entry(*find_entry("THM_6_3"), 12);
    CHECK(r.pass);
    CHECK(r.order == 12);

    // Order 0: both sides are the constant 1.
    for (const char* id : {"EQ_2_5", "THM_6_8", "THM_7_1", "THM_8_10"})
        CHECK(verify_entry(*find_entry(id), 0).order > 0);  // 0 means default
    // An explicit small order passes trivially.
    CHECK(verify_entry(*find_entry("THM_5_7"), 1).pass);
}

TEST_CASE("corrupted entry fails with the mismatch index") {
    FormulaEntry bad = *find_entry("THM_6_3");
    bad.weight = [](int h, const Bindings&) {
        if (h == 5) return RatFun(Rational(1, 81));  // wrong value at one hook length
        return RatFun(Rational(1)) / RatFun(Rational(h)) *
               RatFun(Rational(1)).scaled_by(Rational(2).pow(1 - h));
    };
    const auto r = verify_entry(bad, 10);
    CHECK(!r.pass);
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].mismatch_index == 5);
}

TEST_CASE("cross-entry consistency: THM_5_1 at beta=2 equals THM_5_9") {
    const auto* t51 = find_entry("THM_5_1");
    const auto* t59 = find_entry("THM_5_9");
    Bindings b{{"beta", RatFun(Rational(2))}};
    const auto rho = t51->weight_table(15, b);
    const auto rho9 = t59->weight_table(15, t59->bindings_for(std::nullopt));
    CHECK(rho == rho9);
    CHECK(t51->gf(15, b) == t59->gf(15, {}));
}

TEST_CASE("cross-entry consistency: THM_6_8 specializes to THM_6_5 and THM_6_6") {
    const auto* master = find_entry("THM_6_8");
    const int N = 12;

    Bindings at1{{"z", RatFun::variable("z")}, {"a", RatFun(Rational(1))}};
    const auto* t65 = find_entry("THM_6_5");
    CHECK(master->weight_table(N, at1) == t65->weight_table(N, t65->bindings_for(std::nullopt)));
    CHECK(master->gf(N, at1) == t65->gf(N, t65->bindings_for(std::nullopt)));

    Bindings at0{{"z", RatFun::variable("z")}, {"a", RatFun(Rational(0))}};
    const auto* t66 = find_entry("THM_6_6");
    CHECK(master->weight_table(N, at0) == t66->weight_table(N, t66->bindings_for(std::nullopt)));
    CHECK(master->gf(N, at0) == t66->gf(N, t66->bindings_for(std::nullopt)));
}

TEST_CASE("THM_6_13 coefficients match the closed count formula") {
    const auto* e = find_entry("THM_6_13");
    Bindings b = e->bindings_for(std::nullopt);
    const TruncSeries f = hookgen(e->kind, e->weight_table(10, b), 10);
    for (int n = 1; n <= 10; ++n) {
        RatFun expected;
        RatFun zp = RatFun::variable("z");
        for (int j = 1; 2 * j <= n + 1; ++j) {
            const Rational a = Rational(2).pow(n + 1 - 2 * j) * Rational::factorial(n - 1) /
                               (Rational::factorial(j) * Rational::factorial(j - 1) *
                                Rational::factorial(n + 1 - 2 * j));
            expected += zp.scaled_by(a);
            zp *= RatFun::variable("z");
        }
        CHECK(f[n] == expected);
    }
}

TEST_CASE("verify_all on a single id, parallel merge is deterministic") {
    const auto seq = verify_all(10, 1, "THM_7_4");
    REQUIRE(seq.reports.size() == 1);
    CHECK(seq.reports[0].pass);

    const auto par = verify_all(8, 4);
    const auto ser = verify_all(8, 1);
    REQUIRE(par.reports.size() == ser.reports.size());
    for (std::size_t i = 0; i < par.reports.size(); ++i) {
        CHECK(par.reports[i].id == ser.reports[i].id);
        CHECK(par.reports[i].pass == ser.reports[i].pass);
    }
    CHECK(par.ok());
}

TEST_CASE("catalog JSON lists every entry") {
    const std::string j = catalog_json();
    CHECK(j.find("\"THM_5_5\"") != std::string::npos);
    CHECK(j.find("\"CONJ_5_2\"") != std::string::npos);
    CHECK(j.find("\"conjecture\"") != std::string::npos);
    CHECK(j.find("\"gf\"") != std::string::npos);
}
