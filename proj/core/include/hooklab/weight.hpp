#pragma once

#include <string>
#include <vector>

#include "hooklab/ratfun.hpp"

namespace hooklab {

/// The four combinatorial structures a hook length expansion ranges over.
enum class StructureKind { Partition, BinaryTree, CompleteBinaryTree, FibonacciTree };

/// "PA", "BT", "CBT", "FT".
std::string structure_code(StructureKind kind);
StructureKind parse_structure(const std::string& code);

/// Weight function values rho(1..N); entries whose value the expansion could
/// not determine hold a fresh parameter and are listed in `undetermined`.
struct WeightTable {
    std::vector<RatFun> values;
    std::vector<int> undetermined;  // 1-based indices into values

    int size() const { return static_cast<int>(values.size()); }
    const RatFun& rho(int h) const { return values[static_cast<std::size_t>(h - 1)]; }

    WeightTable substituted(const std::map<std::string, Rational>& bindings) const;

    bool operator==(const WeightTable& o) const { return values == o.values; }
};

/// "[1, 1/4, 1/9]" rendering.
std::string to_string(const WeightTable& w);

/// Step n of an expansion had a vanishing denominator with a nonzero
/// numerator: no weight function exists.  Carries the values determined
/// before the failing step.
class ExpansionError : public Error {
public:
    ExpansionError(int step, WeightTable partial)
        : Error("Denominator is zero, no solution for n=" + std::to_string(step)),
          step(step),
          partial(std::move(partial)) {}

    int step;
    WeightTable partial;
};

} // namespace hooklab
