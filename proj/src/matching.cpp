#include "sgda/matching.hpp"

#include <algorithm>
#include <queue>

namespace sgda {

namespace {

struct Matcher {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, parent, base;
  std::vector<bool> used, blossom;

  explicit Matcher(int n_) : n(n_), adj(n_), match(n_, -1) {}

  int lca(int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child, std::queue<int>& q) {
    while (base[v] != b) {
      blossom[base[v]] = true;
      blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      if (!used[match[v]]) {
        used[match[v]] = true;
        q.push(match[v]);
      }
      v = parent[match[v]];
    }
  }

  bool augment(int root) {
    used.assign(n, false);
    parent.assign(n, -1);
    base.resize(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          // Odd cycle: contract the blossom.
          int cur = lca(v, to);
          blossom.assign(n, false);
          mark_path(v, cur, to, q);
          mark_path(to, cur, v, q);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            // Augmenting path found; alternate along it.
            for (int u = to; u != -1;) {
              int pv = parent[u];
              int ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match[to]] = true;
          q.push(match[to]);
        }
      }
    }
    return false;
  }
};

}  // namespace

std::vector<int> max_cardinality_matching(
    int n, const std::vector<std::pair<int, int>>& edges) {
  Matcher m(n);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    m.adj[u].push_back(v);
    m.adj[v].push_back(u);
  }
  // Greedy seed cuts the number of augmentation phases.
  for (auto [u, v] : edges)
    if (u != v && m.match[u] == -1 && m.match[v] == -1) {
      m.match[u] = v;
      m.match[v] = u;
    }
  for (int v = 0; v < n; ++v)
    if (m.match[v] == -1) m.augment(v);
  return m.match;
}

}  // namespace sgda
