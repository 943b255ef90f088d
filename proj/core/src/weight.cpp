#include "hooklab/weight.hpp"

#include <sstream>

namespace hooklab {

std::string structure_code(StructureKind kind) {
    switch (kind) {
    case StructureKind::Partition: return "PA";
    case StructureKind::BinaryTree: return "BT";
    case StructureKind::CompleteBinaryTree: return "CBT";
    case StructureKind::FibonacciTree: return "FT";
    }
    return "?";
}

StructureKind parse_structure(const std::string& code) {
    if (code == "PA") return StructureKind::Partition;
    if (code == "BT") return StructureKind::BinaryTree;
    if (code == "CBT") return StructureKind::CompleteBinaryTree;
    if (code == "FT") return StructureKind::FibonacciTree;
    throw DomainError("unknown structure type '" + code + "' (expected PA, BT, CBT or FT)");
}

WeightTable WeightTable::substituted(const std::map<std::string, Rational>& bindings) const {
    WeightTable out;
    out.values.reserve(values.size());
    for (const auto& v : values) out.values.push_back(v.substituted(bindings));
    // Indices stay undetermined only while their parameter survives.
    for (int idx : undetermined) {
        const RatFun& v = out.values[static_cast<std::size_t>(idx - 1)];
        if (!v.parameters().empty()) out.undetermined.push_back(idx);
    }
    return out;
}

std::string to_string(const WeightTable& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.values.size(); ++i) {
        if (i) os << ", ";
        os << w.values[i].str();
    }
    os << "]";
    return os.str();
}

} // namespace hooklab
