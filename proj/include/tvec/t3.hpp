#pragma once

#include <string>
#include <vector>

#include "tvec/treepair.hpp"

namespace tvec {

/// Exhaustive search over reduced elements with at most max_leaves leaves
/// for elements of exactly the requested order.  A negative result is
/// only "none up to the bound".
std::vector<TreePair> search_torsion(int arity, int target_order,
                                     int max_leaves);

/// Leaf counts on both sides of a leaf boundary.  The boundary point is
/// the left endpoint of domain leaf `alpha_leafsplit` (1-based); range
/// leaves are split at the same circle point when it lies on a range
/// boundary.
struct LeafParityReport {
  int domain_below = 0;
  int domain_above = 0;
  int range_below = 0;   // range leaves entirely below the boundary point
  int range_above = 0;
  bool boundary_in_range = true;  // the point is a range leaf boundary
  std::string str() const;
};

LeafParityReport leaf_parity_report(const TreePair& tp, int alpha_leafsplit);

}  // namespace tvec
