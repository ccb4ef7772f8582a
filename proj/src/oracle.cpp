#include "sgda/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>

namespace sgda {

namespace {

// Candidate universe remapped to local indices with bitmask adjacency.
struct LocalView {
  std::vector<int> order;            // local -> dense
  std::vector<std::uint64_t> adj;    // underlying adjacency among candidates
  int m = 0;

  explicit LocalView(const SignedGraph& g, std::vector<int> vertices) {
    order = std::move(vertices);
    m = static_cast<int>(order.size());
    std::vector<int> local(g.n(), -1);
    for (int i = 0; i < m; ++i) local[order[i]] = i;
    adj.assign(m, 0);
    for (int i = 0; i < m; ++i) {
      int v = order[i];
      auto add = [&](int u) {
        if (local[u] >= 0) adj[i] |= std::uint64_t{1} << local[u];
      };
      for (int u : g.positive_neighbors(v)) add(u);
      for (int u : g.negative_neighbors(v)) add(u);
    }
  }
};

bool extend(const LocalView& lv, int root, std::uint64_t sub,
            std::uint64_t sub_closed, std::uint64_t ext, int want,
            int have, const std::function<bool(const std::vector<int>&)>& cb) {
  if (have == want) {
    std::vector<int> out;
    out.reserve(want);
    for (int i = 0; i < lv.m; ++i)
      if (sub >> i & 1) out.push_back(lv.order[i]);
    std::sort(out.begin(), out.end());
    return cb(out);
  }
  const std::uint64_t above_root = ~((std::uint64_t{2} << root) - 1);
  while (ext) {
    int w = std::countr_zero(ext);
    ext &= ext - 1;
    std::uint64_t grown_ext =
        ext | (lv.adj[w] & ~sub_closed & above_root &
               ~(std::uint64_t{1} << w));
    if (extend(lv, root, sub | (std::uint64_t{1} << w),
               sub_closed | lv.adj[w] | (std::uint64_t{1} << w), grown_ext,
               want, have + 1, cb))
      return true;
  }
  return false;
}

}  // namespace

bool for_each_connected_set(
    const SignedGraph& g, const std::vector<int>& allowed, int size,
    std::optional<int> required,
    const std::function<bool(const std::vector<int>&)>& cb) {
  if (size <= 0) return false;
  std::vector<int> verts = allowed;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts) g.check_vertex(v);
  if (required) {
    g.check_vertex(*required);
    auto it = std::find(verts.begin(), verts.end(), *required);
    if (it == verts.end()) return false;
    // The required vertex becomes local index 0 so no candidate is ever
    // ordered below the only root used.
    verts.erase(it);
    verts.insert(verts.begin(), *required);
  }
  if (verts.size() > 64)
    throw PreconditionViolated(
        "bruteforce candidate universe exceeds 64 vertices (" +
        std::to_string(verts.size()) + ")");
  LocalView lv(g, verts);
  const int roots = required ? 1 : lv.m;
  for (int r = 0; r < roots; ++r) {
    const std::uint64_t above_root = ~((std::uint64_t{2} << r) - 1);
    std::uint64_t bit = std::uint64_t{1} << r;
    if (extend(lv, r, bit, bit | lv.adj[r], lv.adj[r] & above_root, size, 1,
               cb))
      return true;
  }
  return false;
}

MinAllianceResult min_alliance_bruteforce(const SignedGraph& g, int k_max,
                                          std::optional<int> required) {
  if (k_max < 1 || k_max > g.n())
    throw PreconditionViolated("k_max must be in [1, n]");
  if (required) g.check_vertex(*required);
  std::vector<int> allowed;
  for (int v : size_bound_filter(g, k_max))
    if (necessary_condition(g, v)) allowed.push_back(v);
  MinAllianceResult res;
  if (required &&
      !std::binary_search(allowed.begin(), allowed.end(), *required))
    return res;
  for (int s = 1; s <= k_max && !res.found; ++s) {
    for_each_connected_set(g, allowed, s, required,
                           [&](const std::vector<int>& set) {
                             if (check_alliance(g, set).valid) {
                               res.found = true;
                               res.size = s;
                               res.witness = set;
                               return true;
                             }
                             return false;
                           });
  }
  return res;
}

bool alliable_bruteforce(const SignedGraph& g, std::optional<int> required) {
  if (g.n() == 0) return false;
  return min_alliance_bruteforce(g, g.n(), required).found;
}

std::optional<std::vector<std::pair<int, int>>> min_flip_bruteforce(
    const SignedGraph& g, const std::vector<int>& d, int k_max) {
  if (d.empty()) throw EmptySet("target set is empty");
  const int m = g.edge_count();
  if (m > 24)
    throw PreconditionViolated("flip bruteforce limited to 24 edges, got " +
                               std::to_string(m));
  if (k_max > m) k_max = m;
  if (check_alliance(g, d).valid) return std::vector<std::pair<int, int>>{};

  std::vector<int> pick;
  std::vector<std::pair<int, int>> flips;
  // Combinations of edge indices in lexicographic order per size.
  std::function<bool(int, int)> rec = [&](int start, int need) {
    if (need == 0) {
      flips.clear();
      for (int i : pick) flips.push_back({g.edges()[i].u, g.edges()[i].v});
      return check_alliance(g.flipped(flips), d).valid;
    }
    for (int i = start; i + need <= m; ++i) {
      pick.push_back(i);
      if (rec(i + 1, need - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int s = 1; s <= k_max; ++s) {
    pick.clear();
    if (rec(0, s)) return flips;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> udcs_bruteforce(
    int n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& bound) {
  const int m = static_cast<int>(edges.size());
  if (m > 22)
    throw PreconditionViolated("udcs bruteforce limited to 22 edges");
  if (static_cast<int>(bound.size()) != n)
    throw PreconditionViolated("bound map size mismatch");
  std::vector<int> deg(n);
  std::uint64_t best_mask = 0;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    std::fill(deg.begin(), deg.end(), 0);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [u, v] = edges[i];
      ok = ++deg[u] <= bound[u] && ++deg[v] <= bound[v];
    }
    if (ok && size > best) {
      best = size;
      best_mask = mask;
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m; ++i)
    if (best_mask >> i & 1) out.push_back(edges[i]);
  return out;
}

}  // namespace sgda
