#include "tvec/t3.hpp"

#include <stdexcept>

namespace tvec {

std::vector<TreePair> search_torsion(int arity, int target_order,
                                     int max_leaves) {
  if (arity < 2 || target_order < 2)
    throw std::invalid_argument("bad torsion search bounds");
  std::vector<TreePair> hits;
  for (const TreePair& f : enumerate_elements(arity, max_leaves)) {
    auto k = order(f, target_order);
    if (k && *k == target_order) hits.push_back(f);
  }
  return hits;
}

namespace {

// Left endpoint of the leaf at `addr` as a base-a fraction num / a^depth.
struct BaseFraction {
  Int num;
  int depth;
};

BaseFraction left_endpoint(const Word& addr, int arity) {
  Int num = 0;
  for (int d : addr) num = num * arity + d;
  return {num, static_cast<int>(addr.size())};
}

Int scale_pow(int arity, int e) {
  Int p = 1;
  for (int i = 0; i < e; ++i) p *= arity;
  return p;
}

int compare(const BaseFraction& a, const BaseFraction& b, int arity) {
  int m = std::max(a.depth, b.depth);
  Int lhs = a.num * scale_pow(arity, m - a.depth);
  Int rhs = b.num * scale_pow(arity, m - b.depth);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

LeafParityReport leaf_parity_report(const TreePair& tp, int alpha_leafsplit) {
  int L = tp.leaf_count();
  if (alpha_leafsplit < 1 || alpha_leafsplit > L)
    throw std::out_of_range("leaf split index out of range");
  int arity = tp.arity();
  auto dom_addr = tp.domain().leaf_addresses();
  auto ran_addr = tp.range().leaf_addresses();
  BaseFraction alpha =
      left_endpoint(dom_addr[static_cast<size_t>(alpha_leafsplit - 1)], arity);

  LeafParityReport report;
  report.domain_below = alpha_leafsplit - 1;
  report.domain_above = L - report.domain_below;
  report.range_below = 0;
  report.boundary_in_range = false;
  for (const Word& addr : ran_addr) {
    BaseFraction lo = left_endpoint(addr, arity);
    BaseFraction hi{lo.num + 1, lo.depth};
    if (compare(hi, alpha, arity) <= 0) ++report.range_below;
    if (compare(lo, alpha, arity) == 0) report.boundary_in_range = true;
  }
  report.range_above = L - report.range_below;
  return report;
}

std::string LeafParityReport::str() const {
  auto par = [](int n) { return n % 2 == 0 ? "even" : "odd"; };
  std::string out = "domain: " + std::to_string(domain_below) + " below (" +
                    par(domain_below) + "), " + std::to_string(domain_above) +
                    " above (" + par(domain_above) + "); range: " +
                    std::to_string(range_below) + " below (" +
                    par(range_below) + "), " + std::to_string(range_above) +
                    " above (" + par(range_above) + ")";
  if (!boundary_in_range) out += "; boundary not on a range leaf edge";
  return out;
}

}  // namespace tvec
