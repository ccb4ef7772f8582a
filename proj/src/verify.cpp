#include "sgda/verify.hpp"

#include <algorithm>

namespace sgda {

AllianceReport check_alliance(const SignedGraph& g, const std::vector<int>& s) {
  if (s.empty()) throw EmptySet("an alliance is a non-empty set");
  AllianceReport r;
  r.set = s;
  std::sort(r.set.begin(), r.set.end());
  r.set.erase(std::unique(r.set.begin(), r.set.end()), r.set.end());
  std::vector<bool> in_s(g.n(), false);
  for (int v : r.set) {
    g.check_vertex(v);
    in_s[v] = true;
  }
  r.valid = true;
  for (int v : r.set) {
    int in_pos = 0, in_neg = 0, out_neg = 0;
    for (int u : g.positive_neighbors(v))
      if (in_s[u]) ++in_pos;
    for (int u : g.negative_neighbors(v))
      (in_s[u] ? in_neg : out_neg)++;
    VertexSlack sl{v, in_pos + 1 - in_neg, in_pos + 1 - out_neg};
    r.per_vertex.push_back(sl);
    if (sl.slack1 < 0) {
      r.violators.push_back({v, 1});
      r.valid = false;
    }
    if (sl.slack2 < 0) {
      r.violators.push_back({v, 2});
      r.valid = false;
    }
  }
  return r;
}

bool necessary_condition(const SignedGraph& g, int v) {
  g.check_vertex(v);
  return g.positive_degree(v) + 1 >= (g.negative_degree(v) + 1) / 2;
}

std::vector<int> size_bound_filter(const SignedGraph& g, int k) {
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v)
    if (g.negative_degree(v) <= 2 * k) keep.push_back(v);
  return keep;
}

}  // namespace sgda
