#include <algorithm>
#include <cassert>
#include <numeric>

#include "sgda/fpt.hpp"
#include "sgda/verify.hpp"

namespace sgda {

namespace {

// v and u agree when their positive and negative neighborhoods coincide
// after discounting each other.
bool snd_equivalent(const SignedGraph& g, int v, int u) {
  auto matches = [&](const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (i < a.size() && a[i] == u) {
        ++i;
        continue;
      }
      if (j < b.size() && b[j] == v) {
        ++j;
        continue;
      }
      if (i == a.size() || j == b.size() || a[i] != b[j]) return false;
      ++i;
      ++j;
    }
    return true;
  };
  return matches(g.positive_neighbors(v), g.positive_neighbors(u)) &&
         matches(g.negative_neighbors(v), g.negative_neighbors(u));
}

}  // namespace

SndPartition snd_partition(const SignedGraph& g) {
  SndPartition p;
  for (int v = 0; v < g.n(); ++v) {
    bool placed = false;
    for (auto& cls : p.classes)
      if (snd_equivalent(g, v, cls.front())) {
        cls.push_back(v);
        placed = true;
        break;
      }
    if (!placed) p.classes.push_back({v});
  }
  const int d = p.d();
  p.n_pos.assign(d, {});
  p.n_neg.assign(d, {});
  p.z_pos.assign(d, 0);
  p.z_neg.assign(d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      std::optional<Sign> rel;
      if (i == j) {
        if (p.classes[i].size() >= 2)
          rel = g.edge_sign(p.classes[i][0], p.classes[i][1]);
      } else {
        rel = g.edge_sign(p.classes[i][0], p.classes[j][0]);
      }
      if (!rel) continue;
      if (*rel == Sign::Positive) {
        p.n_pos[i].push_back(j);
        if (i == j) p.z_pos[i] = 1;
      } else {
        p.n_neg[i].push_back(j);
        if (i == j) p.z_neg[i] = 1;
      }
    }
  }
  return p;
}

IlpModel ilp_build(const SndPartition& p, int n) {
  IlpModel m;
  m.d = p.d();
  m.n = n;
  m.big_m = 2 * n;
  m.n_pos = p.n_pos;
  m.n_neg = p.n_neg;
  m.z_pos = p.z_pos;
  m.z_neg = p.z_neg;
  m.class_size.reserve(p.classes.size());
  for (const auto& cls : p.classes)
    m.class_size.push_back(static_cast<int>(cls.size()));
  m.nonempty_row = true;
  return m;
}

bool IlpModel::feasible(const std::vector<int>& x, const std::vector<int>& w,
                        bool include_nonempty_row) const {
  if (static_cast<int>(x.size()) != d || static_cast<int>(w.size()) != d)
    return false;
  long long total = 0;
  for (int i = 0; i < d; ++i) {
    if (w[i] < 0 || w[i] > 1) return false;
    if (w[i] > x[i] || x[i] > class_size[i] * w[i]) return false;
    total += x[i];
  }
  if (include_nonempty_row && total < 1) return false;
  for (int i = 0; i < d; ++i) {
    long long pos = 0, neg = 0, neg_cap = 0;
    for (int j : n_pos[i]) pos += x[j];
    for (int j : n_neg[i]) {
      neg += x[j];
      neg_cap += class_size[j] - x[j];
    }
    long long relax = 2LL * (1 - w[i]) * n;
    if (pos + 1 - z_pos[i] < neg - z_neg[i] - relax) return false;
    if (pos + 1 - z_pos[i] < neg_cap - relax) return false;
  }
  return true;
}

namespace {

struct Row {
  std::vector<int> plus;   // +1 coefficients
  std::vector<int> minus;  // -1 coefficients
  long long rhs = 0;       // sum_plus x - sum_minus x >= rhs
};

struct BranchSolver {
  const IlpModel& m;
  std::vector<Row> rows;
  long long best = -1;
  std::vector<int> best_x;

  explicit BranchSolver(const IlpModel& model) : m(model) {}

  bool propagate(std::vector<int>& lo, std::vector<int>& hi) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Row& r : rows) {
        long long max_lhs = 0, min_lhs = 0;
        for (int j : r.plus) {
          max_lhs += hi[j];
          min_lhs += lo[j];
        }
        for (int j : r.minus) {
          max_lhs -= lo[j];
          min_lhs -= hi[j];
        }
        if (max_lhs < r.rhs) return false;
        for (int j : r.plus) {
          long long need = r.rhs - (max_lhs - hi[j]);
          if (need > lo[j]) {
            if (need > hi[j]) return false;
            lo[j] = static_cast<int>(need);
            changed = true;
          }
        }
        for (int j : r.minus) {
          long long cap = (max_lhs + lo[j]) - r.rhs;
          if (cap < hi[j]) {
            if (cap < lo[j]) return false;
            hi[j] = static_cast<int>(cap);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  void solve(std::vector<int> lo, std::vector<int> hi) {
    if (!propagate(lo, hi)) return;
    long long lb = std::accumulate(lo.begin(), lo.end(), 0LL);
    if (best >= 0 && lb >= best) return;
    int widest = -1, width = 0;
    for (int j = 0; j < m.d; ++j)
      if (hi[j] - lo[j] > width) {
        width = hi[j] - lo[j];
        widest = j;
      }
    if (widest < 0) {
      best = lb;
      best_x = lo;
      return;
    }
    int mid = lo[widest] + (hi[widest] - lo[widest]) / 2;
    auto lo2 = lo, hi2 = hi;
    hi2[widest] = mid;
    solve(lo2, hi2);
    lo[widest] = mid + 1;
    solve(lo, hi);
  }
};

}  // namespace

std::optional<IlpAssignment> ilp_solve(const IlpModel& model) {
  const int d = model.d;
  if (d > 30) throw PreconditionViolated("too many classes for exact solve");
  std::optional<IlpAssignment> result;
  for (std::uint32_t wmask = 0; wmask < (std::uint32_t{1} << d); ++wmask) {
    std::vector<int> w(d), lo(d), hi(d);
    long long lb = 0;
    for (int i = 0; i < d; ++i) {
      w[i] = wmask >> i & 1;
      lo[i] = w[i];
      hi[i] = w[i] * model.class_size[i];
      lb += lo[i];
    }
    if (model.nonempty_row && wmask == 0) continue;
    if (result && lb >= result->objective) continue;

    BranchSolver bs(model);
    for (int i = 0; i < d; ++i) {
      if (!w[i]) continue;  // big-M already deactivates both rows
      Row r1;
      r1.plus = model.n_pos[i];
      r1.minus = model.n_neg[i];
      r1.rhs = model.z_pos[i] - model.z_neg[i] - 1;
      bs.rows.push_back(r1);
      Row r2;
      r2.plus = model.n_pos[i];
      long long neg_total = 0;
      for (int j : model.n_neg[i]) {
        r2.plus.push_back(j);
        neg_total += model.class_size[j];
      }
      r2.rhs = neg_total + model.z_pos[i] - 1;
      bs.rows.push_back(r2);
    }
    if (model.nonempty_row) {
      Row r;
      r.plus.resize(d);
      std::iota(r.plus.begin(), r.plus.end(), 0);
      r.rhs = 1;
      bs.rows.push_back(r);
    }
    if (result) bs.best = result->objective;
    bs.solve(lo, hi);
    if (bs.best >= 0 && (!result || bs.best < result->objective)) {
      IlpAssignment a;
      a.x = bs.best_x;
      a.w = w;
      a.objective = static_cast<int>(bs.best);
      result = a;
    }
  }
  if (result) {
    assert(model.feasible(result->x, result->w, model.nonempty_row));
  }
  return result;
}

MinAllianceResult min_alliance_snd(const SignedGraph& g) {
  MinAllianceResult res;
  if (g.n() == 0) return res;
  SndPartition p = snd_partition(g);
  IlpModel model = ilp_build(p, g.n());
  auto sol = ilp_solve(model);
  if (!sol) return res;
  res.found = true;
  res.size = sol->objective;
  for (int i = 0; i < p.d(); ++i)
    for (int j = 0; j < sol->x[i]; ++j) res.witness.push_back(p.classes[i][j]);
  std::sort(res.witness.begin(), res.witness.end());
  if (!check_alliance(g, res.witness).valid)
    throw InternalVerificationFailed("class counts do not form an alliance");
  return res;
}

namespace {

// Bounded branching on a max-degree vertex; returns the smallest cover of
// size <= budget, or nullopt.
std::optional<std::vector<int>> vc_branch(
    const std::vector<std::vector<int>>& adj, std::vector<bool>& alive,
    int budget) {
  int pick = -1, deg = 0;
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    int d = 0;
    for (int u : adj[v])
      if (alive[u]) ++d;
    if (d > deg) {
      deg = d;
      pick = v;
    }
  }
  if (pick < 0) return std::vector<int>{};  // no edges left
  if (budget == 0) return std::nullopt;

  auto remove_and_recurse = [&](const std::vector<int>& removed)
      -> std::optional<std::vector<int>> {
    if (removed.empty() ||
        static_cast<int>(removed.size()) > budget)
      return std::nullopt;
    for (int v : removed) alive[v] = false;
    auto sub =
        vc_branch(adj, alive, budget - static_cast<int>(removed.size()));
    for (int v : removed) alive[v] = true;
    if (!sub) return std::nullopt;
    std::vector<int> out = removed;
    out.insert(out.end(), sub->begin(), sub->end());
    return out;
  };

  auto take_v = remove_and_recurse({pick});
  std::vector<int> nbrs;
  for (int u : adj[pick])
    if (alive[u]) nbrs.push_back(u);
  auto take_n = remove_and_recurse(nbrs);
  if (take_v && (!take_n || take_v->size() <= take_n->size())) return take_v;
  return take_n;
}

}  // namespace

ParameterReport analyze_parameters(const SignedGraph& g, int vc_exact_limit) {
  ParameterReport r;
  r.n = g.n();
  r.pos_edges = g.positive_edge_count();
  r.neg_edges = g.negative_edge_count();
  r.max_degree = g.max_degree();
  r.min_neg_degree = g.min_negative_degree();
  SndPartition p = snd_partition(g);
  r.snd = p.d();

  std::vector<std::vector<int>> adj(g.n());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  // Greedy maximal matching: its size lower-bounds the cover, its endpoint
  // set 2-approximates it.
  std::vector<int> greedy_cover;
  {
    std::vector<bool> covered(g.n(), false);
    for (const Edge& e : g.edges())
      if (!covered[e.u] && !covered[e.v]) {
        covered[e.u] = covered[e.v] = true;
        greedy_cover.push_back(e.u);
        greedy_cover.push_back(e.v);
      }
  }
  const int matching_lb = static_cast<int>(greedy_cover.size()) / 2;
  std::optional<std::vector<int>> cover;
  if (matching_lb <= vc_exact_limit) {
    std::vector<bool> alive(g.n(), true);
    for (int b = matching_lb; b <= vc_exact_limit && !cover; ++b)
      cover = vc_branch(adj, alive, b);
  }
  if (cover) {
    r.vertex_cover_exact = true;
    r.vertex_cover = *cover;
  } else {
    r.vertex_cover = greedy_cover;
  }
  std::sort(r.vertex_cover.begin(), r.vertex_cover.end());
  r.vertex_cover_size = static_cast<int>(r.vertex_cover.size());

  r.treewidth_upper = std::max(heuristic_decomposition(g).width(), 0);
  r.balanced = is_balanced(g).has_value();
  auto clusters = clustering_partition(g);
  r.clusterable = clusters.has_value();
  r.cluster_count = clusters ? clusters->k() : 0;

  if (r.vertex_cover_exact) {
    r.snd_vc_bound_checked = true;
    long long bound = r.vertex_cover_size;
    long long pw = 1;
    for (int i = 0; i < r.vertex_cover_size && pw < (1LL << 40); ++i) pw *= 3;
    bound += pw;
    r.snd_vc_bound_holds = r.snd <= bound;
  }
  return r;
}

}  // namespace sgda
