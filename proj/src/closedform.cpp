#include "sgda/closedform.hpp"

#include <algorithm>
#include <cassert>

#include "sgda/verify.hpp"

namespace sgda {

ClosedFormAnswer asd_leq2(const SignedGraph& g) {
  ClosedFormAnswer a;
  for (int v = 0; v < g.n(); ++v)
    if (g.negative_degree(v) <= 1) {
      a.kind = ClosedFormKind::Size1;
      a.size = 1;
      a.witness = {v};
      return a;
    }
  // Minimum negative degree is at least two from here on.
  for (const Edge& e : g.edges())
    if (g.negative_degree(e.u) == 2 && g.negative_degree(e.v) == 2) {
      a.kind = ClosedFormKind::Size2;
      a.size = 2;
      a.witness = {e.u, e.v};
      return a;
    }
  return a;
}

ClosedFormAnswer subcubic_solve(const SignedGraph& g) {
  if (g.max_degree() > 3)
    throw DegreeTooHigh("max degree " + std::to_string(g.max_degree()) +
                        " exceeds 3");
  ClosedFormAnswer a = asd_leq2(g);
  if (!a.answered()) {
    a.kind = ClosedFormKind::Unalliable;
    a.size = 0;
  }
  assert(a.kind == ClosedFormKind::Unalliable || a.size <= 2);
  return a;
}

ClosedFormAnswer complete_balanced_solve(const SignedGraph& g) {
  if (!underlying_complete(g))
    throw NotComplete("underlying graph is not complete");
  if (g.negative_edge_count() == 0)
    throw NoNegativeEdges("characterization needs a negative edge");
  auto clusters = clustering_partition(g);
  if (!clusters)
    throw NotClusterable("graph is not weakly balanced");

  std::vector<std::vector<int>> parts = clusters->groups;
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  const int n = g.n();
  const int v1 = static_cast<int>(parts[0].size());
  const int v2 = parts.size() > 1 ? static_cast<int>(parts[1].size()) : 0;

  ClosedFormAnswer a;
  std::optional<int> size_i, size_ii;
  if (3 * v1 >= n && 3 * v2 >= n) size_i = 2 * ((n - v2 + 1) / 2);
  if (2 * v1 >= n) size_ii = n - v1;
  if (!size_i && !size_ii) {
    a.kind = ClosedFormKind::Unalliable;
    a.case_label = "iii";
    return a;
  }
  a.kind = ClosedFormKind::ExactSize;
  bool use_ii = size_ii && (!size_i || *size_ii <= *size_i);
  if (use_ii) {
    a.case_label = "ii";
    a.size = *size_ii;
    a.witness.assign(parts[0].begin(), parts[0].begin() + a.size);
  } else {
    a.case_label = "i";
    a.size = *size_i;
    int half = a.size / 2;
    a.witness.assign(parts[0].begin(), parts[0].begin() + half);
    a.witness.insert(a.witness.end(), parts[1].begin(),
                     parts[1].begin() + half);
  }
  std::sort(a.witness.begin(), a.witness.end());
  assert(check_alliance(g, a.witness).valid);
  return a;
}

namespace {

bool is_forest(const SignedGraph& g) {
  // Acyclic iff every component has |E| = |V| - 1.
  int comps = static_cast<int>(underlying_components(g).size());
  return g.edge_count() == g.n() - comps;
}

bool is_cycle(const SignedGraph& g) {
  if (g.n() < 3 || g.edge_count() != g.n()) return false;
  if (underlying_components(g).size() != 1) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_unicyclic(const SignedGraph& g) {
  return g.edge_count() == g.n() &&
         underlying_components(g).size() == 1;
}

}  // namespace

std::optional<ClosedFormAnswer> special_class_dispatch(const SignedGraph& g) {
  if (g.n() == 0) return std::nullopt;
  auto tag = [](ClosedFormAnswer a, const char* route) {
    a.route = route;
    return a;
  };
  if (is_forest(g)) return tag(asd_leq2(g), "forest");
  if (is_cycle(g)) return tag(asd_leq2(g), "cycle");
  if (is_unicyclic(g)) return tag(asd_leq2(g), "unicyclic");
  if (g.max_degree() <= 3) return tag(subcubic_solve(g), "subcubic");
  if (underlying_complete(g)) {
    // Without negative edges the balanced-complete characterization does
    // not apply, but any vertex defends itself.
    if (g.negative_edge_count() == 0)
      return tag(asd_leq2(g), "complete-all-positive");
    if (clustering_partition(g))
      return tag(complete_balanced_solve(g), "complete-weakly-balanced");
  }
  return std::nullopt;
}

}  // namespace sgda
