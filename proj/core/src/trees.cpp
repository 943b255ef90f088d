#include "hooklab/trees.hpp"

namespace hooklab {

int tree_size(const TreePtr& t) {
    if (!t) return 0;
    return 1 + tree_size(t->left) + tree_size(t->right);
}

namespace {

int hooks_rec(const TreePtr& t, std::vector<int>& out) {
    if (!t) return 0;
    const int size = 1 + hooks_rec(t->left, out) + hooks_rec(t->right, out);
    out.push_back(size);
    return size;
}

TreePtr node(TreePtr left, TreePtr right) {
    auto n = std::make_shared<TreeNode>();
    n->left = std::move(left);
    n->right = std::move(right);
    return n;
}

std::vector<TreePtr> enumerate_binary(int n) {
    if (n == 0) return {nullptr};
    std::vector<TreePtr> out;
    for (int k = 0; k <= n - 1; ++k)
        for (const auto& l : enumerate_binary(k))
            for (const auto& r : enumerate_binary(n - 1 - k))
                out.push_back(node(l, r));
    return out;
}

// A complete binary tree decomposes as root + odd-size proper left subtree +
// complete right subtree; when the right subtree is empty and the left is
// not, the root is the single-child exception (its child on the left).
std::vector<TreePtr> enumerate_complete(int n) {
    if (n == 0) return {nullptr};
    if (n == 1) return {node(nullptr, nullptr)};
    std::vector<TreePtr> out;
    for (int k = 1; k <= n - 1; k += 2)
        for (const auto& l : enumerate_complete(k))
            for (const auto& r : enumerate_complete(n - 1 - k))
                out.push_back(node(l, r));
    return out;
}

std::vector<TreePtr> enumerate_fibonacci(int n) {
    if (n == 0) return {nullptr};
    if (n == 1) return {node(nullptr, nullptr)};
    std::vector<TreePtr> out;
    const TreePtr leaf = node(nullptr, nullptr);
    for (const auto& l : enumerate_fibonacci(n - 2)) out.push_back(node(l, leaf));
    for (const auto& l : enumerate_fibonacci(n - 1)) out.push_back(node(l, nullptr));
    return out;
}

RatFun fresh_or_fail(const RatFun& numer, int step, const WeightTable& partial,
                     ParamContext& ctx, std::vector<int>& undetermined) {
    if (!numer.is_zero()) throw ExpansionError(step, partial);
    undetermined.push_back(step);
    return RatFun::variable(ctx.fresh("r" + std::to_string(step)));
}

void check_hookexp_input(const TruncSeries& f, int n) {
    if (n > f.order())
        throw DomainError("series order " + std::to_string(f.order()) +
                          " is smaller than the requested expansion length " + std::to_string(n));
    if (!f[0].is_one())
        throw DomainError("hook length expansion requires constant term 1");
}

ParamContext context_for(const TruncSeries& f) {
    ParamContext ctx;
    for (int k = 0; k <= f.order(); ++k) mark_used_parameters(ctx, f[k]);
    return ctx;
}

} // namespace

std::vector<int> tree_hook_lengths(const TreePtr& t) {
    std::vector<int> out;
    hooks_rec(t, out);
    return out;
}

std::vector<TreePtr> enumerate_trees(StructureKind kind, int n) {
    if (n < 0) throw DomainError("cannot enumerate trees on a negative vertex count");
    switch (kind) {
    case StructureKind::BinaryTree: return enumerate_binary(n);
    case StructureKind::CompleteBinaryTree: return enumerate_complete(n);
    case StructureKind::FibonacciTree: return enumerate_fibonacci(n);
    case StructureKind::Partition: break;
    }
    throw DomainError("enumerate_trees expects a tree structure");
}

TruncSeries binary_hookgen(const WeightTable& rho, int order) {
    if (rho.size() < order)
        throw DomainError("weight table has fewer than " + std::to_string(order) + " entries");
    TruncSeries f(order);
    f.at(0) = RatFun(1);
    for (int n = 1; n <= order; ++n) {
        RatFun sum;
        for (int k = 0; k <= n - 1; ++k) sum += f[k] * f[n - 1 - k];
        f.at(n) = rho.rho(n) * sum;
    }
    return f;
}

TruncSeries complete_binary_hookgen(const WeightTable& rho, int order) {
    if (rho.size() < order)
        throw DomainError("weight table has fewer than " + std::to_string(order) + " entries");
    TruncSeries f(order);
    f.at(0) = RatFun(1);
    if (order >= 1) f.at(1) = rho.rho(1);
    for (int n = 2; n <= order; ++n) {
        RatFun sum;
        for (int k = 1; k <= n - 1; k += 2) sum += f[k] * f[n - 1 - k];
        f.at(n) = rho.rho(n) * sum;
    }
    return f;
}

TruncSeries fibonacci_hookgen(const WeightTable& rho, int order) {
    if (rho.size() < order)
        throw DomainError("weight table has fewer than " + std::to_string(order) + " entries");
    TruncSeries f(order);
    f.at(0) = RatFun(1);
    if (order >= 1) f.at(1) = rho.rho(1);
    for (int n = 2; n <= order; ++n)
        f.at(n) = rho.rho(n) * (f[n - 1] + rho.rho(1) * f[n - 2]);
    return f;
}

WeightTable binary_hookexp(const TruncSeries& f, int n) {
    check_hookexp_input(f, n);
    ParamContext ctx = context_for(f);
    const TruncSeries fsq = f * f;  // rho(m) = [x^m] f / [x^{m-1}] f^2
    WeightTable rho;
    for (int m = 1; m <= n; ++m) {
        const RatFun& denom = fsq[m - 1];
        if (denom.is_zero())
            rho.values.push_back(fresh_or_fail(f[m], m, rho, ctx, rho.undetermined));
        else
            rho.values.push_back(f[m] / denom);
    }
    return rho;
}

WeightTable complete_binary_hookexp(const TruncSeries& f, int n) {
    check_hookexp_input(f, n);
    ParamContext ctx = context_for(f);
    // rho(m) = [x^m] f / [x^{m-1}] (f(x)-f(-x))f(x)/2 for m >= 2.
    const TruncSeries f_neg = series_compose(f, -TruncSeries::x(f.order()));
    const TruncSeries denom_series = ((f - f_neg) * f).scaled(RatFun(Rational(1, 2)));
    WeightTable rho;
    if (n >= 1) rho.values.push_back(f[1]);
    for (int m = 2; m <= n; ++m) {
        const RatFun& denom = denom_series[m - 1];
        if (denom.is_zero())
            rho.values.push_back(fresh_or_fail(f[m], m, rho, ctx, rho.undetermined));
        else
            rho.values.push_back(f[m] / denom);
    }
    return rho;
}

WeightTable fibonacci_hookexp(const TruncSeries& f, int n) {
    check_hookexp_input(f, n);
    ParamContext ctx = context_for(f);
    WeightTable rho;
    if (n >= 1) rho.values.push_back(f[1]);
    const RatFun rho1 = n >= 1 ? f[1] : RatFun();
    for (int m = 2; m <= n; ++m) {
        const RatFun denom = f[m - 1] + rho1 * f[m - 2];
        if (denom.is_zero())
            rho.values.push_back(fresh_or_fail(f[m], m, rho, ctx, rho.undetermined));
        else
            rho.values.push_back(f[m] / denom);
    }
    return rho;
}

TruncSeries hookgen(StructureKind kind, const WeightTable& rho, int order) {
    switch (kind) {
    case StructureKind::Partition: return partition_hookgen(rho, order);
    case StructureKind::BinaryTree: return binary_hookgen(rho, order);
    case StructureKind::CompleteBinaryTree: return complete_binary_hookgen(rho, order);
    case StructureKind::FibonacciTree: return fibonacci_hookgen(rho, order);
    }
    throw DomainError("unknown structure kind");
}

WeightTable hookexp(StructureKind kind, const TruncSeries& f, int n) {
    switch (kind) {
    case StructureKind::Partition: return partition_hookexp(f, n);
    case StructureKind::BinaryTree: return binary_hookexp(f, n);
    case StructureKind::CompleteBinaryTree: return complete_binary_hookexp(f, n);
    case StructureKind::FibonacciTree: return fibonacci_hookexp(f, n);
    }
    throw DomainError("unknown structure kind");
}

} // namespace hooklab
