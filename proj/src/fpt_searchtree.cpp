#include <algorithm>
#include <string>
#include <unordered_set>

#include "sgda/fpt.hpp"
#include "sgda/verify.hpp"

namespace sgda {

namespace {

struct SearchCtx {
  const SignedGraph& g;
  std::vector<bool> allowed;
  int target = 0;
  std::unordered_set<std::string> visited;
  std::vector<int> witness;

  explicit SearchCtx(const SignedGraph& g_) : g(g_) {}

  std::string key(const std::vector<int>& set) const {
    std::string k;
    k.reserve(set.size() * 3);
    for (int v : set) {
      k += static_cast<char>(v & 0xff);
      k += static_cast<char>((v >> 8) & 0xff);
      k += ',';
    }
    return k;
  }

  // Best-case slack bounds for every current member; a negative bound
  // means no superset within the size budget can repair the vertex.
  bool feasible(const std::vector<int>& set, const std::vector<bool>& in_set) {
    const int room = target - static_cast<int>(set.size());
    for (int v : set) {
      int in_pos = 0, in_neg = 0, pos_avail = 0, neg_avail = 0;
      for (int u : g.positive_neighbors(v)) {
        if (in_set[u])
          ++in_pos;
        else if (allowed[u])
          ++pos_avail;
      }
      for (int u : g.negative_neighbors(v)) {
        if (in_set[u])
          ++in_neg;
        else if (allowed[u])
          ++neg_avail;
      }
      int pos_gain = std::min(pos_avail, room);
      int neg_gain = std::min(neg_avail, room);
      int out_neg = g.negative_degree(v) - in_neg;
      if (in_pos + pos_gain + 1 < in_neg) return false;
      if (in_pos + pos_gain + 1 < out_neg - neg_gain) return false;
    }
    return true;
  }

  bool grow(std::vector<int>& set, std::vector<bool>& in_set) {
    if (static_cast<int>(set.size()) == target) {
      if (check_alliance(g, set).valid) {
        witness = set;
        return true;
      }
      return false;
    }
    std::string k = key(set);
    if (!visited.insert(std::move(k)).second) return false;
    if (!feasible(set, in_set)) return false;

    std::vector<int> frontier;
    for (int v : set) {
      for (int u : g.positive_neighbors(v))
        if (!in_set[u] && allowed[u]) frontier.push_back(u);
      for (int u : g.negative_neighbors(v))
        if (!in_set[u] && allowed[u]) frontier.push_back(u);
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()),
                   frontier.end());
    if (frontier.empty()) return false;

    const int room = target - static_cast<int>(set.size());
    const int fn = static_cast<int>(frontier.size());
    // Nonempty neighborhood subsets of size <= room, lexicographic.
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> bool {
      if (!pick.empty()) {
        std::vector<int> next = set;
        for (int u : pick) {
          next.insert(std::upper_bound(next.begin(), next.end(), u), u);
          in_set[u] = true;
        }
        bool hit = grow(next, in_set);
        for (int u : pick) in_set[u] = false;
        if (hit) return true;
      }
      if (static_cast<int>(pick.size()) == room) return false;
      for (int i = start; i < fn; ++i) {
        pick.push_back(frontier[i]);
        if (self(self, i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    return rec(rec, 0);
  }
};

}  // namespace

MinAllianceResult solve_k_delta(const SignedGraph& g, int k,
                                std::optional<int> required) {
  MinAllianceResult res;
  if (k < 1) throw PreconditionViolated("k must be at least 1");
  if (required) g.check_vertex(*required);
  k = std::min(k, g.n());
  for (int s = 1; s <= k; ++s) {
    SearchCtx ctx(g);
    ctx.target = s;
    ctx.allowed.assign(g.n(), false);
    for (int v : size_bound_filter(g, s))
      if (necessary_condition(g, v)) ctx.allowed[v] = true;
    std::vector<int> seeds;
    if (required) {
      if (!ctx.allowed[*required]) continue;
      seeds = {*required};
    } else {
      for (int v = 0; v < g.n(); ++v)
        if (ctx.allowed[v]) seeds.push_back(v);
    }
    for (int seed : seeds) {
      std::vector<int> set{seed};
      std::vector<bool> in_set(g.n(), false);
      in_set[seed] = true;
      if (ctx.grow(set, in_set)) {
        res.found = true;
        res.size = s;
        res.witness = ctx.witness;
        return res;
      }
    }
  }
  return res;
}

}  // namespace sgda
