#include "sgda/building.hpp"

#include <algorithm>
#include <cassert>

#include "sgda/matching.hpp"
#include "sgda/verify.hpp"

namespace sgda {

namespace {

std::vector<int> sorted_unique(const SignedGraph& g, const std::vector<int>& d) {
  if (d.empty()) throw EmptySet("target set is empty");
  std::vector<int> out = d;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int v : out) g.check_vertex(v);
  return out;
}

struct Split {
  std::vector<int> in_neg;   // negative neighbors inside d, ascending
  std::vector<int> out_neg;  // negative neighbors outside d, ascending
  int in_pos = 0;
};

Split split_neighbors(const SignedGraph& g, const std::vector<bool>& in_d,
                      int v) {
  Split s;
  for (int u : g.positive_neighbors(v))
    if (in_d[u]) ++s.in_pos;
  for (int u : g.negative_neighbors(v))
    (in_d[u] ? s.in_neg : s.out_neg).push_back(u);
  return s;
}

}  // namespace

ReductionResult reduction_rule_exhaust(const SignedGraph& g,
                                       const std::vector<int>& d,
                                       RuleMode mode) {
  std::vector<int> set = sorted_unique(g, d);
  std::vector<bool> in_d(g.n(), false);
  for (int v : set) in_d[v] = true;

  ReductionResult res{g, {}, 0};
  bool fired = true;
  while (fired) {
    fired = false;
    for (int v : set) {
      Split s = split_neighbors(res.reduced, in_d, v);
      int z = static_cast<int>(s.out_neg.size()) - s.in_pos -
              static_cast<int>(s.in_neg.size());
      int outside;
      if (mode == RuleMode::Literal) {
        if (z < 0) continue;
        outside = z;
        if (s.in_neg.empty() && outside == 0) continue;  // fixpoint
      } else {
        if (z < 2) continue;
        outside = z - 1;
      }
      std::vector<std::pair<int, int>> flips;
      for (int x : s.in_neg) flips.push_back({v, x});
      for (int i = 0; i < outside; ++i) flips.push_back({v, s.out_neg[i]});
      res.reduced = res.reduced.flipped(flips);
      for (auto& e : flips) {
        if (e.first > e.second) std::swap(e.first, e.second);
        res.forced.push_back(e);
      }
      res.budget_spent += static_cast<int>(flips.size());
      fired = true;
      break;  // rescan from the lowest vertex on the new graph
    }
  }
  std::sort(res.forced.begin(), res.forced.end());
  return res;
}

ViolationBounds violation_bounds(const SignedGraph& g,
                                 const std::vector<int>& d) {
  std::vector<int> set = sorted_unique(g, d);
  std::vector<bool> in_d(g.n(), false);
  for (int v : set) in_d[v] = true;

  ViolationBounds vb;
  vb.b.assign(g.n(), 0);
  vb.b1.assign(g.n(), 0);
  vb.b2.assign(g.n(), 0);
  for (int v : set) {
    Split s = split_neighbors(g, in_d, v);
    int in_neg = static_cast<int>(s.in_neg.size());
    int out_neg = static_cast<int>(s.out_neg.size());
    int z = out_neg - s.in_pos - in_neg;
    if (z >= 2)
      throw PreconditionViolated(
          "reduction rule not exhausted at vertex " + g.label(v) +
          " (z=" + std::to_string(z) + ")");
    if (s.in_pos + 1 >= std::max(in_neg, out_neg)) continue;
    vb.violators.push_back(v);
    vb.b1[v] = out_neg - s.in_pos - 1;
    // Each in-D flip improves the internal slack by two.
    int num = in_neg - s.in_pos - 1;
    vb.b2[v] = num <= 0 ? 0 : (num + 1) / 2;
    vb.b[v] = std::max(vb.b1[v], vb.b2[v]);
    assert(vb.b[v] >= 1 && vb.b[v] <= in_neg);
  }
  return vb;
}

std::vector<std::pair<int, int>> udcs_solve(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& bound) {
  if (static_cast<int>(bound.size()) != n)
    throw PreconditionViolated("bound map size mismatch");
  for (int b : bound)
    if (b < 0) throw PreconditionViolated("negative degree bound");

  std::vector<std::pair<int, int>> kept;
  std::vector<int> kept_deg(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw PreconditionViolated("bad edge in udcs instance");
    if (bound[u] == 0 || bound[v] == 0) continue;  // never selectable
    kept.push_back({u, v});
    ++kept_deg[u];
    ++kept_deg[v];
  }
  if (kept.empty()) return {};

  // Gadget: per vertex, min(bound, degree) copy nodes; per edge (u,v), a
  // split pair (a_e, b_e) with a_e--b_e, a_e--copies(u), b_e--copies(v).
  // An edge belongs to the solution iff its split pair is matched apart.
  std::vector<int> copy_begin(n, -1), copy_count(n, 0);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    copy_count[v] = std::min(bound[v], kept_deg[v]);
    if (copy_count[v] > 0) {
      copy_begin[v] = next;
      next += copy_count[v];
    }
  }
  const int m = static_cast<int>(kept.size());
  const int split_base = next;
  next += 2 * m;

  std::vector<std::pair<int, int>> gadget_edges;
  for (int e = 0; e < m; ++e) {
    int ae = split_base + 2 * e;
    int be = ae + 1;
    gadget_edges.push_back({ae, be});
    auto [u, v] = kept[e];
    for (int i = 0; i < copy_count[u]; ++i)
      gadget_edges.push_back({ae, copy_begin[u] + i});
    for (int i = 0; i < copy_count[v]; ++i)
      gadget_edges.push_back({be, copy_begin[v] + i});
  }
  std::vector<int> match = max_cardinality_matching(next, gadget_edges);

  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < m; ++e) {
    int ae = split_base + 2 * e;
    int be = ae + 1;
    if (match[ae] != -1 && match[be] != -1 && match[ae] != be)
      out.push_back(kept[e]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> FlipPlan::all() const {
  std::vector<std::pair<int, int>> t = reduction_flips;
  t.insert(t.end(), udcs_flips.begin(), udcs_flips.end());
  t.insert(t.end(), augment_flips.begin(), augment_flips.end());
  std::sort(t.begin(), t.end());
  return t;
}

std::optional<FlipPlan> build_alliance(const SignedGraph& g,
                                       const std::vector<int>& d, int k,
                                       RuleMode mode) {
  std::vector<int> set = sorted_unique(g, d);
  std::vector<bool> in_d(g.n(), false);
  for (int v : set) in_d[v] = true;

  ReductionResult red = reduction_rule_exhaust(g, set, mode);
  ViolationBounds vb = violation_bounds(red.reduced, set);

  std::vector<std::pair<int, int>> neg_edges;
  for (const Edge& e : red.reduced.edges())
    if (e.sign == Sign::Negative) neg_edges.push_back({e.u, e.v});

  FlipPlan plan;
  plan.reduction_flips = red.forced;
  plan.udcs_flips = udcs_solve(g.n(), neg_edges, vb.b);

  std::vector<int> deg_h(g.n(), 0);
  std::vector<std::pair<int, int>> chosen = plan.udcs_flips;
  for (auto [u, v] : chosen) {
    ++deg_h[u];
    ++deg_h[v];
  }
  std::sort(chosen.begin(), chosen.end());
  auto already = [&chosen](int a, int b) {
    if (a > b) std::swap(a, b);
    return std::binary_search(chosen.begin(), chosen.end(),
                              std::make_pair(a, b));
  };
  for (int v : vb.violators) {
    while (deg_h[v] < vb.b[v]) {
      int pick = -1;
      for (int x : red.reduced.negative_neighbors(v))
        if (in_d[x] && !already(v, x)) {
          pick = x;
          break;
        }
      if (pick == -1) return std::nullopt;  // no in-D edges left to flip
      if (deg_h[pick] < vb.b[pick])
        throw InternalVerificationFailed(
            "degree-constrained subgraph was not maximal");
      auto e = std::minmax(v, pick);
      plan.augment_flips.push_back({e.first, e.second});
      chosen.insert(std::lower_bound(chosen.begin(), chosen.end(),
                                     std::make_pair(e.first, e.second)),
                    {e.first, e.second});
      ++deg_h[v];
      ++deg_h[pick];
    }
  }
  std::sort(plan.augment_flips.begin(), plan.augment_flips.end());

  if (!check_alliance(g.flipped(plan.all()), set).valid)
    throw InternalVerificationFailed("flip plan does not validate");
  if (plan.total() > k) return std::nullopt;
  return plan;
}

std::vector<std::pair<int, int>> swap_preserves(
    const SignedGraph& g, const std::vector<int>& d,
    const std::vector<std::pair<int, int>>& solution,
    std::pair<int, int> vx_in, std::pair<int, int> vy_out) {
  std::vector<int> set = sorted_unique(g, d);
  std::vector<bool> in_d(g.n(), false);
  for (int v : set) in_d[v] = true;

  auto canon = [](std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
  };
  std::vector<std::pair<int, int>> sol;
  for (auto e : solution) sol.push_back(canon(e));
  std::sort(sol.begin(), sol.end());
  auto in_sol = [&sol](std::pair<int, int> e) {
    return std::binary_search(sol.begin(), sol.end(), e);
  };

  // Identify the shared endpoint v with x in d and y outside d.
  auto [a1, a2] = vx_in;
  auto [b1, b2] = vy_out;
  int v = -1, x = -1, y = -1;
  for (int cand : {a1, a2}) {
    int other = cand == a1 ? a2 : a1;
    if ((cand == b1 || cand == b2) && in_d[cand] && in_d[other]) {
      v = cand;
      x = other;
      y = cand == b1 ? b2 : b1;
    }
  }
  if (v < 0)
    throw PreconditionViolated("edges do not share an endpoint inside d");
  if (in_d[y]) throw PreconditionViolated("replaced edge must leave d");
  if (g.edge_sign(v, x) != Sign::Negative || in_sol(canon({v, x})))
    throw PreconditionViolated("added edge must be an unflipped negative edge");
  if (!g.edge_sign(v, y) || !in_sol(canon({v, y})))
    throw PreconditionViolated("replaced edge must be a flipped edge");
  if (!check_alliance(g.flipped(sol), set).valid)
    throw PreconditionViolated("given flip set is not a solution");

  std::vector<std::pair<int, int>> out;
  for (auto e : sol)
    if (e != canon({v, y})) out.push_back(e);
  out.push_back(canon({v, x}));
  std::sort(out.begin(), out.end());
  if (!check_alliance(g.flipped(out), set).valid)
    throw InternalVerificationFailed("swap produced an invalid flip set");
  return out;
}

}  // namespace sgda
