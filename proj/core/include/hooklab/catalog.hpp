#pragma once

#include <functional>
#include <optional>

#include "hooklab/expr.hpp"
#include "hooklab/trees.hpp"

namespace hooklab::catalog {

enum class FormulaStatus { Classical, Proved, Conjecture };

std::string status_name(FormulaStatus s);

/// Parameter bindings used when instantiating an entry: integer parameters
/// map to rational constants, symbolic ones to parameter variables.
using Bindings = std::map<std::string, RatFun>;

/// One hook length formula: a weight rule paired with a closed form for the
/// generating function, verified by truncated series comparison.
struct FormulaEntry {
    std::string id;
    StructureKind kind = StructureKind::Partition;
    FormulaStatus status = FormulaStatus::Proved;
    std::string weight_text;                 // human-readable weight rule
    std::string gf_text;                     // closed form source (or description)
    std::vector<std::string> symbolic_params;
    std::string instance_param;              // integer parameter name ("" if none)
    std::vector<long> instances;             // values taken by instance_param
    std::function<RatFun(int h, const Bindings&)> weight;
    std::function<TruncSeries(int order, const Bindings&)> gf;
    int default_order = 18;
    std::string citation;

    /// Weight table rho(1..order) under the given bindings.
    WeightTable weight_table(int order, const Bindings& b) const;
    /// Bindings for one instantiation: symbolic params bound to themselves.
    Bindings bindings_for(std::optional<long> instance) const;
};

const std::vector<FormulaEntry>& builtin_catalog();
const FormulaEntry* find_entry(const std::string& id);

struct InstanceResult {
    std::string label;      // e.g. "t=2" or "" when there is no instance param
    bool pass = false;
    int mismatch_index = -1;
    std::string lhs, rhs;   // first mismatching coefficients
};

struct EntryReport {
    std::string id;
    FormulaStatus status = FormulaStatus::Proved;
    int order = 0;
    bool pass = false;
    std::string error;      // evaluation failure, if any
    std::vector<InstanceResult> results;
    double seconds = 0.0;
};

/// Verifies hookgen(weight) against the closed form coefficient by
/// coefficient for each instantiation.  order = 0 uses the entry default.
EntryReport verify_entry(const FormulaEntry& entry, int order = 0);

struct VerifySummary {
    std::vector<EntryReport> reports;
    int passed = 0;
    int failed = 0;             // proved/classical failures only
    int conjectures_failed = 0;

    bool ok() const { return failed == 0; }
};

/// Runs every entry (or the one with the given id); entries are independent
/// and fan out to `jobs` worker threads, reports merged by id.
VerifySummary verify_all(int order = 0, int jobs = 1, const std::string& only_id = "");

/// JSON export of the catalog (id, kind, weight description, gf text,
/// params, status, citation).
std::string catalog_json();

} // namespace hooklab::catalog
