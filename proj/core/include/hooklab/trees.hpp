#pragma once

#include <memory>

#include "hooklab/partitions.hpp"

namespace hooklab {

/// Shape-only binary tree node; empty subtrees are null.
struct TreeNode {
    std::shared_ptr<const TreeNode> left, right;
};
using TreePtr = std::shared_ptr<const TreeNode>;

int tree_size(const TreePtr& t);

/// Subtree sizes of all vertices (the tree hook lengths), root last.
std::vector<int> tree_hook_lengths(const TreePtr& t);

/// All shapes of the given kind with n vertices, deterministic order
/// (left subtree size ascending, then recursively).  Kind Partition is
/// invalid here.
std::vector<TreePtr> enumerate_trees(StructureKind kind, int n);

/// Recurrence-based generating functions; shapes are never materialized.
TruncSeries binary_hookgen(const WeightTable& rho, int order);
TruncSeries complete_binary_hookgen(const WeightTable& rho, int order);
TruncSeries fibonacci_hookgen(const WeightTable& rho, int order);

/// Inverse directions; a 0/0 step yields a fresh-parameter entry and a
/// nonzero/0 step throws ExpansionError with the partial table.
WeightTable binary_hookexp(const TruncSeries& f, int n);
WeightTable complete_binary_hookexp(const TruncSeries& f, int n);
WeightTable fibonacci_hookexp(const TruncSeries& f, int n);

/// Dispatch over all four structures.
TruncSeries hookgen(StructureKind kind, const WeightTable& rho, int order);
WeightTable hookexp(StructureKind kind, const TruncSeries& f, int n);

} // namespace hooklab
