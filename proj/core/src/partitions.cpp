#include "hooklab/partitions.hpp"

#include <numeric>

namespace hooklab {

int Partition::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
    std::vector<int> current;
    // Depth-first with parts bounded by the previous one gives
    // reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{current});
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<int> conjugate_parts(const Partition& p) {
    if (p.parts.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(p.parts[0]), 0);
    for (int part : p.parts)
        for (int j = 0; j < part; ++j) conj[static_cast<std::size_t>(j)] += 1;
    return conj;
}

HookMultiset hook_multiset(const Partition& p) {
    HookMultiset hooks;
    const std::vector<int> conj = conjugate_parts(p);
    for (int i = 1; i <= p.length(); ++i) {
        const int row = p.parts[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= row; ++j) {
            const int h = row - j + conj[static_cast<std::size_t>(j - 1)] - i + 1;
            hooks[h] += 1;
        }
    }
    return hooks;
}

RatFun hook_weight_product(const WeightTable& rho, const Partition& p) {
    RatFun prod(1);
    for (const auto& [h, mult] : hook_multiset(p)) {
        const RatFun& w = rho.rho(h);
        if (w.is_zero()) return RatFun();
        prod *= w.pow(mult);
    }
    return prod;
}

TruncSeries partition_hookgen(const WeightTable& rho, int order) {
    if (rho.size() < order)
        throw DomainError("weight table has fewer than " + std::to_string(order) + " entries");
    TruncSeries f(order);
    f.at(0) = RatFun(1);
    for (int n = 1; n <= order; ++n) {
        RatFun acc;
        for (const auto& p : enumerate_partitions(n)) acc += hook_weight_product(rho, p);
        f.at(n) = acc;
    }
    return f;
}

WeightTable partition_hookexp(const TruncSeries& f, int n) {
    if (n > f.order())
        throw DomainError("series order " + std::to_string(f.order()) +
                          " is smaller than the requested expansion length " + std::to_string(n));
    if (!f[0].is_one())
        throw DomainError("hook length expansion requires constant term 1");

    ParamContext ctx;
    for (int k = 0; k <= f.order(); ++k) mark_used_parameters(ctx, f[k]);

    WeightTable rho;
    std::vector<RatFun> prefix{RatFun(1)};  // prefix[k] = rho(1)...rho(k)

    for (int m = 1; m <= n; ++m) {
        RatFun value;
        if (m == 1) {
            value = f[1];
        } else {
            // Hooks of m, indexed by their length ell: multiset
            // {1..ell-1} u {1..m-ell} u {m}, so the m-free part of the sum is
            // D = sum_ell prefix[ell-1]*prefix[m-ell].
            RatFun denom;
            for (int ell = 1; ell <= m; ++ell)
                denom += prefix[static_cast<std::size_t>(ell - 1)] *
                         prefix[static_cast<std::size_t>(m - ell)];

            RatFun numer = f[m];
            for (const auto& p : enumerate_partitions(m)) {
                if (p.length() < 2 || p.parts[1] < 2) continue;  // hooks handled via D
                numer -= hook_weight_product(rho, p);
            }

            if (denom.is_zero()) {
                if (!numer.is_zero()) throw ExpansionError(m, rho);
                value = RatFun::variable(ctx.fresh("r" + std::to_string(m)));
                rho.undetermined.push_back(m);
            } else {
                value = numer / denom;
            }
        }
        rho.values.push_back(value);
        prefix.push_back(prefix.back() * value);
    }
    return rho;
}

} // namespace hooklab
