#ifndef SGDA_MATCHING_HPP
#define SGDA_MATCHING_HPP

#include <vector>

namespace sgda {

// Maximum cardinality matching on a general graph (blossom contraction,
// O(V^3)). Returns match[v] = partner of v, or -1 if v is unmatched.
// Deterministic for a fixed input order.
std::vector<int> max_cardinality_matching(
    int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace sgda

#endif
