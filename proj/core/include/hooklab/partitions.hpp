#pragma once

#include <map>

#include "hooklab/series.hpp"
#include "hooklab/weight.hpp"

namespace hooklab {

/// Integer partition with weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
};

/// All partitions of n in reverse-lexicographic order ((n) first, (1^n) last);
/// n = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int n);

std::vector<int> conjugate_parts(const Partition& p);

/// Hook length -> multiplicity; total multiplicity equals |lambda|.
using HookMultiset = std::map<int, int>;

HookMultiset hook_multiset(const Partition& p);

/// Product of rho over the hook multiset of p.
RatFun hook_weight_product(const WeightTable& rho, const Partition& p);

/// Generating function: [x^n] = sum over partitions of n of prod rho(h).
TruncSeries partition_hookgen(const WeightTable& rho, int order);

/// Inverse direction: recovers rho(1..n) from f with f(0) = 1.  When a step's
/// hook-sum denominator and numerator both vanish the entry becomes a fresh
/// parameter; when only the denominator vanishes ExpansionError is thrown
/// with the partial table.
WeightTable partition_hookexp(const TruncSeries& f, int n);

} // namespace hooklab
