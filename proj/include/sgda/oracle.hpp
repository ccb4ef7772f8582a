#ifndef SGDA_ORACLE_HPP
#define SGDA_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "sgda/sgraph.hpp"
#include "sgda/verify.hpp"

namespace sgda {

struct MinAllianceResult {
  bool found = false;
  int size = 0;
  std::vector<int> witness;  // sorted dense indices, empty if not found
};

// Exhaustive reference solvers. They define ground truth for every other
// solver at desk scale; none of them is meant for large instances.

// Enumerates each connected vertex set of the underlying graph restricted
// to `allowed` exactly once (rooted expansion, roots ascending, extension
// only by exclusive neighbors with higher local order). Sets are reported
// at exactly `size` members, sorted. If `required` is given, only sets
// containing it are produced. Stops early when the callback returns true.
// Requires at most 64 candidate vertices.
bool for_each_connected_set(const SignedGraph& g,
                            const std::vector<int>& allowed, int size,
                            std::optional<int> required,
                            const std::function<bool(const std::vector<int>&)>& cb);

// Smallest defensive alliance of size <= k_max (containing `required` when
// given), by increasing size over connected candidate sets, pruned with the
// necessary membership condition and the size-bound filter. Every alliance
// contains a connected sub-alliance through any of its vertices, so the
// restriction to connected sets is sound.
MinAllianceResult min_alliance_bruteforce(const SignedGraph& g, int k_max,
                                          std::optional<int> required = {});

// Whether any defensive alliance exists (containing `required` when given).
bool alliable_bruteforce(const SignedGraph& g, std::optional<int> required = {});

// Smallest edge set T (by cardinality, ties by canonical edge order) whose
// sign flip makes d a defensive alliance; nullopt if none of size <= k_max
// exists. Pairs are returned canonically ordered.
std::optional<std::vector<std::pair<int, int>>> min_flip_bruteforce(
    const SignedGraph& g, const std::vector<int>& d, int k_max);

// Maximum-cardinality subset H of `edges` with deg_H(v) <= bound[v] for
// every v, by exhaustive subset scan (requires |edges| <= 22). Ties are
// broken toward the lexicographically first subset in edge-list order.
std::vector<std::pair<int, int>> udcs_bruteforce(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& bound);

}  // namespace sgda

#endif
