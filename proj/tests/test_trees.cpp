#include "doctest.h"

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "hooklab/trees.hpp"

using namespace hooklab;
using testutil::matches_prefix;
using testutil::rf;
using testutil::series_of;
using testutil::table_of;

namespace {

std::multiset<int> hook_set(const TreePtr& t) {
    const auto v = tree_hook_lengths(t);
    return std::multiset<int>(v.begin(), v.end());
}

std::vector<std::multiset<int>> hook_sets(StructureKind kind, int n) {
    std::vector<std::multiset<int>> out;
    for (const auto& t : enumerate_trees(kind, n)) out.push_back(hook_set(t));
    return out;
}

// Complete binary tree validity: every vertex has 0 or 2 children except at
// most one, which must be the last vertex in inorder and carry a left child.
bool valid_complete(const TreePtr& t) {
    std::vector<const TreeNode*> inorder;
    auto walk = [&](auto&& self, const TreePtr& node) -> void {
        if (!node) return;
        self(self, node->left);
        inorder.push_back(node.get());
        self(self, node->right);
    };
    walk(walk, t);
    int single_children = 0;
    for (const auto* node : inorder) {
        const bool l = node->left != nullptr, r = node->right != nullptr;
        if (l == r) continue;
        ++single_children;
        if (!l) return false;                       // the lone child sits on the left
        if (node != inorder.back()) return false;   // and only at the inorder end
    }
    return single_children <= 1;
}

} // namespace

TEST_CASE("enumeration counts") {
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n)
        CHECK(enumerate_trees(StructureKind::BinaryTree, n).size() ==
              static_cast<std::size_t>(catalan[n]));

    // Complete binary trees pair up: 1,1,1,1,2,2,5,5,14,14,42.
    for (int n = 0; n <= 10; ++n)
        CHECK(enumerate_trees(StructureKind::CompleteBinaryTree, n).size() ==
              static_cast<std::size_t>(catalan[n / 2]));

    const long fib[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int n = 0; n <= 10; ++n)
        CHECK(enumerate_trees(StructureKind::FibonacciTree, n).size() ==
              static_cast<std::size_t>(fib[n]));
}

TEST_CASE("hook multisets match the small cases") {
    // Binary trees with 3 vertices: four chains {1,2,3} and one cherry {1,1,3}.
    auto bt3 = hook_sets(StructureKind::BinaryTree, 3);
    CHECK(std::count(bt3.begin(), bt3.end(), std::multiset<int>{1, 2, 3}) == 4);
    CHECK(std::count(bt3.begin(), bt3.end(), std::multiset<int>{1, 1, 3}) == 1);

    // Complete binary trees with 7 vertices.
    auto cbt7 = hook_sets(StructureKind::CompleteBinaryTree, 7);
    CHECK(cbt7.size() == 5);
    CHECK(std::count(cbt7.begin(), cbt7.end(), std::multiset<int>{1, 1, 1, 1, 3, 5, 7}) == 4);
    CHECK(std::count(cbt7.begin(), cbt7.end(), std::multiset<int>{1, 1, 1, 1, 3, 3, 7}) == 1);

    // Complete binary trees with 6 vertices.
    auto cbt6 = hook_sets(StructureKind::CompleteBinaryTree, 6);
    CHECK(cbt6.size() == 5);
    CHECK(std::count(cbt6.begin(), cbt6.end(), std::multiset<int>{1, 1, 1, 3, 5, 6}) == 2);
    CHECK(std::count(cbt6.begin(), cbt6.end(), std::multiset<int>{1, 1, 1, 3, 4, 6}) == 1);
    CHECK(std::count(cbt6.begin(), cbt6.end(), std::multiset<int>{1, 1, 1, 2, 4, 6}) == 1);
    CHECK(std::count(cbt6.begin(), cbt6.end(), std::multiset<int>{1, 1, 1, 2, 3, 6}) == 1);

    // Fibonacci trees with 4 vertices.
    auto ft4 = hook_sets(StructureKind::FibonacciTree, 4);
    CHECK(ft4.size() == 5);
    CHECK(std::count(ft4.begin(), ft4.end(), std::multiset<int>{1, 2, 3, 4}) == 2);
    CHECK(std::count(ft4.begin(), ft4.end(), std::multiset<int>{1, 1, 2, 4}) == 2);
    CHECK(std::count(ft4.begin(), ft4.end(), std::multiset<int>{1, 1, 3, 4}) == 1);
}

TEST_CASE("complete binary trees satisfy the shape constraint") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& t : enumerate_trees(StructureKind::CompleteBinaryTree, n))
            CHECK(valid_complete(t));
    // The root hook length equals the vertex count.
    for (const auto& t : enumerate_trees(StructureKind::CompleteBinaryTree, 7))
        CHECK(tree_hook_lengths(t).back() == 7);
}

TEST_CASE("hookgen with weight 1 counts shapes") {
    WeightTable ones;
    for (int i = 0; i < 10; ++i) ones.values.push_back(RatFun(1));

    const TruncSeries bt = binary_hookgen(ones, 10);
    const TruncSeries cbt = complete_binary_hookgen(ones, 10);
    const TruncSeries ft = fibonacci_hookgen(ones, 10);
    for (int n = 0; n <= 10; ++n) {
        CHECK(bt[n] == RatFun(Rational(static_cast<long>(
                           enumerate_trees(StructureKind::BinaryTree, n).size()))));
        CHECK(cbt[n] == RatFun(Rational(static_cast<long>(
                            enumerate_trees(StructureKind::CompleteBinaryTree, n).size()))));
        CHECK(ft[n] == RatFun(Rational(static_cast<long>(
                           enumerate_trees(StructureKind::FibonacciTree, n).size()))));
    }
    // Against the closed forms.
    CHECK(cbt.truncated(7) == series_of("(1-sqrt(1-4*x^2))/(2*x^2)*(1+x)", 7));
    CHECK(ft.truncated(9) == series_of("1/(1-x-x^2)", 9));
}

TEST_CASE("hookexp known expansions") {
    CHECK(matches_prefix(binary_hookexp(series_of("1/(1-x)", 9), 9),
                         {"1", "1/2", "1/3", "1/4", "1/5", "1/6", "1/7", "1/8", "1/9"}));
    CHECK(matches_prefix(binary_hookexp(series_of("exp(x)", 9), 9),
                         {"1", "1/4", "1/12", "1/32", "1/80", "1/192", "1/448", "1/1024",
                          "1/2304"}));
    CHECK(matches_prefix(binary_hookexp(series_of("(1+x)/(1+x^3)", 12), 12),
                         {"1", "0", "-1", "1/2", "0", "-1/2", "1/3", "0", "-1/3", "1/4", "0",
                          "-1/4"}));
    CHECK(matches_prefix(complete_binary_hookexp(series_of("tan(x)+sec(x)", 9), 9),
                         {"1", "1/2", "1/3", "1/4", "1/5", "1/6", "1/7", "1/8", "1/9"}));
    CHECK(matches_prefix(complete_binary_hookexp(series_of("exp(x)", 9), 9),
                         {"1", "1/2", "1/6", "1/16", "1/40", "1/96", "1/224", "1/512",
                          "1/1152"}));
    CHECK(matches_prefix(complete_binary_hookexp(series_of("1/(1-x)", 14), 14),
                         {"1", "1", "1", "1/2", "1/2", "1/3", "1/3", "1/4", "1/4", "1/5",
                          "1/5", "1/6", "1/6", "1/7"}));
    CHECK(matches_prefix(fibonacci_hookexp(series_of("1/(1-x-x^2)", 9), 9),
                         {"1", "1", "1", "1", "1", "1", "1", "1", "1"}));
    CHECK(matches_prefix(fibonacci_hookexp(series_of("exp(x)", 9), 9),
                         {"1", "1/4", "1/9", "1/16", "1/25", "1/36", "1/49", "1/64", "1/81"}));
    CHECK(matches_prefix(fibonacci_hookexp(series_of("1/(1-x)", 9), 9),
                         {"1", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2"}));
}

TEST_CASE("hookgen with doubled weights") {
    const TruncSeries f =
        binary_hookgen(table_of({"1", "2", "2", "2", "2", "2", "2", "2"}), 8);
    const long expect[] = {1, 1, 4, 18, 88, 456, 2464, 13736, 78432};
    for (int n = 0; n <= 8; ++n) CHECK(f[n] == RatFun(Rational(expect[n])));
}

TEST_CASE("singular failures carry step and partial table") {
    try {
        complete_binary_hookexp(series_of("(1+x)/(1+x^4)", 4), 4);
        FAIL("expected ExpansionError");
    } catch (const ExpansionError& e) {
        CHECK(e.step == 4);
        CHECK(std::string(e.what()) == "Denominator is zero, no solution for n=4");
        CHECK(e.partial.size() == 3);
    }
    try {
        fibonacci_hookexp(series_of("(1+x)/(1+x^2)", 4), 4);
        FAIL("expected ExpansionError");
    } catch (const ExpansionError& e) {
        CHECK(e.step == 3);
        CHECK(std::string(e.what()) == "Denominator is zero, no solution for n=3");
    }
}

TEST_CASE("recurrence equals brute-force enumeration") {
    testutil::RandomRationals rand(5150);
    for (StructureKind kind : {StructureKind::BinaryTree, StructureKind::CompleteBinaryTree,
                               StructureKind::FibonacciTree}) {
        for (int round = 0; round < 10; ++round) {
            const WeightTable rho = rand.table(10);
            const TruncSeries f = hookgen(kind, rho, 10);
            for (int n = 0; n <= 10; ++n) {
                RatFun total;
                for (const auto& t : enumerate_trees(kind, n)) {
                    RatFun prod(1);
                    for (int h : tree_hook_lengths(t)) prod *= rho.rho(h);
                    total += prod;
                }
                CHECK(total == f[n]);
            }
        }
    }
}

TEST_CASE("round trips for all tree kinds") {
    testutil::RandomRationals rand(31337);
    for (StructureKind kind : {StructureKind::BinaryTree, StructureKind::CompleteBinaryTree,
                               StructureKind::FibonacciTree}) {
        int done = 0, attempts = 0;
        while (done < 30 && attempts < 300) {
            ++attempts;
            const WeightTable rho = rand.table(10);
            try {
                const WeightTable back = hookexp(kind, hookgen(kind, rho, 10), 10);
                if (!back.undetermined.empty()) continue;
                CHECK(back == rho);
                ++done;
            } catch (const ExpansionError&) {
                continue;
            }
        }
        CHECK(done == 30);
    }
}

TEST_CASE("complete binary expansion agrees with the direct recurrence solve") {
    for (const char* src : {"tan(x)+sec(x)", "exp(x)", "1/(1-x)", "(1+x)/(1+x^2)"}) {
        const TruncSeries f = series_of(src, 12);
        const WeightTable via_series = complete_binary_hookexp(f, 12);
        // Direct solve of rho(n) * sum_{k odd} f_k f_{n-1-k} = f_n.
        WeightTable direct;
        direct.values.push_back(f[1]);
        for (int n = 2; n <= 12; ++n) {
            RatFun denom;
            for (int k = 1; k <= n - 1; k += 2) denom += f[k] * f[n - 1 - k];
            direct.values.push_back(f[n] / denom);
        }
        CHECK(via_series == direct);
    }
}
