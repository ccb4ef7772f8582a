#include "sgda/treedec.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace sgda {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

void validate_decomposition(const SignedGraph& g,
                            const TreeDecomposition& td) {
  const int t = static_cast<int>(td.bags.size());
  if (t == 0) throw InvalidDecomposition("no bags");
  // Tree shape: t-1 edges, connected, ids in range.
  if (static_cast<int>(td.tree_edges.size()) != t - 1)
    throw InvalidDecomposition("tree must have exactly node_count-1 edges");
  std::vector<std::vector<int>> adj(t);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= t || b >= t || a == b)
      throw InvalidDecomposition("bad tree edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(t, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != t) throw InvalidDecomposition("tree is not connected");

  std::vector<bool> covered(g.n(), false);
  for (const auto& bag : td.bags)
    for (int v : bag) {
      g.check_vertex(v);
      covered[v] = true;
    }
  for (int v = 0; v < g.n(); ++v)
    if (!covered[v])
      throw InvalidDecomposition("vertex " + g.label(v) + " is in no bag");

  for (const Edge& e : g.edges()) {
    bool ok = false;
    for (const auto& bag : td.bags) {
      bool has_u = std::find(bag.begin(), bag.end(), e.u) != bag.end();
      bool has_v = std::find(bag.begin(), bag.end(), e.v) != bag.end();
      if (has_u && has_v) {
        ok = true;
        break;
      }
    }
    if (!ok)
      throw InvalidDecomposition("edge " + g.label(e.u) + "-" + g.label(e.v) +
                                 " is covered by no bag");
  }

  // Occurrence connectivity: the bags containing v induce a subtree.
  for (int v = 0; v < g.n(); ++v) {
    std::vector<bool> has(t, false);
    int first = -1, count = 0;
    for (int i = 0; i < t; ++i)
      if (std::find(td.bags[i].begin(), td.bags[i].end(), v) !=
          td.bags[i].end()) {
        has[i] = true;
        if (first < 0) first = i;
        ++count;
      }
    std::vector<bool> vis(t, false);
    std::vector<int> st{first};
    vis[first] = true;
    int got = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (has[y] && !vis[y]) {
          vis[y] = true;
          ++got;
          st.push_back(y);
        }
    }
    if (got != count)
      throw InvalidDecomposition("occurrences of vertex " + g.label(v) +
                                 " do not form a subtree");
  }
}

TreeDecomposition heuristic_decomposition(const SignedGraph& g,
                                          TdHeuristic h) {
  const int n = g.n();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    return td;
  }
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> gone(n, false);
  std::vector<int> elim_pos(n, -1);
  std::vector<std::vector<int>> bags;

  auto fill_in = [&](int v) {
    int fill = 0;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (!adj[nb[i]].count(nb[j])) ++fill;
    return fill;
  };

  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_key1 = 0, best_key2 = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long k1 = h == TdHeuristic::MinFill
                         ? fill_in(v)
                         : static_cast<long long>(adj[v].size());
      long long k2 = h == TdHeuristic::MinFill
                         ? static_cast<long long>(adj[v].size())
                         : 0;
      if (best < 0 || std::tie(k1, k2, v) < std::tie(best_key1, best_key2, best)) {
        best = v;
        best_key1 = k1;
        best_key2 = k2;
      }
    }
    std::vector<int> bag{best};
    bag.insert(bag.end(), adj[best].begin(), adj[best].end());
    std::sort(bag.begin(), bag.end());
    bags.push_back(bag);
    elim_pos[best] = step;
    std::vector<int> nb(adj[best].begin(), adj[best].end());
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
      adj[nb[i]].erase(best);
    }
    adj[best].clear();
    gone[best] = true;
  }

  // elim_order[p] = vertex eliminated at step p
  std::vector<int> elim_order(n);
  for (int v = 0; v < n; ++v) elim_order[elim_pos[v]] = v;

  td.bags = bags;
  for (int p = 0; p < n - 1; ++p) {
    // Attach to the bag of the earliest-eliminated later neighbor; fall
    // back to the next bag in elimination order for isolated vertices.
    int parent = p + 1;
    int best_pos = n;
    for (int u : bags[p])
      if (elim_pos[u] > p) best_pos = std::min(best_pos, elim_pos[u]);
    if (best_pos < n) parent = best_pos;
    td.tree_edges.push_back({p, parent});
  }
  return td;
}

namespace {

struct Nicifier {
  const TreeDecomposition& td;
  NiceTreeDecomposition out;
  std::vector<std::vector<int>> children;

  explicit Nicifier(const TreeDecomposition& t) : td(t) {}

  int add(NodeKind kind, int vertex, std::vector<int> bag, int c1 = -1,
          int c2 = -1) {
    out.nodes.push_back({kind, vertex, std::move(bag), c1, c2});
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // Chain from `from` (a nice node with bag `have`) to bag `want`:
  // forget have\want, then introduce want\have.
  int morph(int from, std::vector<int> have, const std::vector<int>& want) {
    std::vector<int> drop, take;
    std::set_difference(have.begin(), have.end(), want.begin(), want.end(),
                        std::back_inserter(drop));
    std::set_difference(want.begin(), want.end(), have.begin(), have.end(),
                        std::back_inserter(take));
    int cur = from;
    for (int v : drop) {
      have.erase(std::find(have.begin(), have.end(), v));
      cur = add(NodeKind::Forget, v, have, cur);
    }
    for (int v : take) {
      have.insert(std::upper_bound(have.begin(), have.end(), v), v);
      cur = add(NodeKind::Introduce, v, have, cur);
    }
    return cur;
  }

  int build(int t, int parent) {
    std::vector<int> bag = td.bags[t];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    std::vector<int> arms;
    for (int c : children[t])
      if (c != parent) arms.push_back(morph(build(c, t), sorted_bag(c), bag));
    if (arms.empty()) {
      int leaf = add(NodeKind::Leaf, -1, {});
      return morph(leaf, {}, bag);
    }
    int cur = arms[0];
    for (size_t i = 1; i < arms.size(); ++i)
      cur = add(NodeKind::Join, -1, bag, cur, arms[i]);
    return cur;
  }

  std::vector<int> sorted_bag(int t) const {
    std::vector<int> bag = td.bags[t];
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    return bag;
  }
};

}  // namespace

NiceTreeDecomposition nice_decomposition(
    const SignedGraph& g, const std::optional<TreeDecomposition>& external,
    TdHeuristic h) {
  TreeDecomposition td = external ? *external : heuristic_decomposition(g, h);
  validate_decomposition(g, td);

  Nicifier nf(td);
  const int t = static_cast<int>(td.bags.size());
  nf.children.assign(t, {});
  for (auto [a, b] : td.tree_edges) {
    nf.children[a].push_back(b);
    nf.children[b].push_back(a);
  }
  int top = nf.build(0, -1);
  top = nf.morph(top, nf.sorted_bag(0), {});  // empty root bag
  nf.out.root = top;
  nf.out.width = std::max(td.width(), 0);

  // Nice-form sanity: each node differs from its child by one vertex, join
  // children share the bag.
  for (const NiceNode& nd : nf.out.nodes) {
    switch (nd.kind) {
      case NodeKind::Leaf:
        assert(nd.bag.empty());
        break;
      case NodeKind::Introduce:
      case NodeKind::Forget:
        assert(nd.child1 >= 0 && nd.child2 < 0);
        break;
      case NodeKind::Join:
        assert(nd.child1 >= 0 && nd.child2 >= 0);
        assert(nf.out.nodes[nd.child1].bag == nd.bag &&
               nf.out.nodes[nd.child2].bag == nd.bag);
        break;
    }
  }
  assert(nf.out.nodes[nf.out.root].bag.empty());
  return nf.out;
}

TreeDecomposition parse_td_file(const SignedGraph& g, std::istream& in) {
  TreeDecomposition td;
  std::string line;
  int lineno = 0;
  int declared = -1, width = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "td") {
      if (!(ls >> declared >> width))
        throw InvalidDecomposition("line " + std::to_string(lineno) +
                                   ": bad header");
      td.bags.assign(declared, {});
    } else if (kind == "b") {
      int id;
      if (declared < 0 || !(ls >> id) || id < 1 || id > declared)
        throw InvalidDecomposition("line " + std::to_string(lineno) +
                                   ": bad bag id");
      std::vector<int> bag;
      for (std::string lbl; ls >> lbl;) bag.push_back(g.index_of(lbl));
      std::sort(bag.begin(), bag.end());
      bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
      td.bags[id - 1] = bag;
    } else if (kind == "e") {
      int a, b;
      if (declared < 0 || !(ls >> a >> b) || a < 1 || b < 1 || a > declared ||
          b > declared)
        throw InvalidDecomposition("line " + std::to_string(lineno) +
                                   ": bad tree edge");
      td.tree_edges.push_back({a - 1, b - 1});
    } else {
      throw InvalidDecomposition("line " + std::to_string(lineno) +
                                 ": unknown record '" + kind + "'");
    }
  }
  if (declared < 0) throw InvalidDecomposition("missing 'td' header");
  return td;
}

TreeDecomposition load_td_file(const SignedGraph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDecomposition("cannot open '" + path + "'");
  return parse_td_file(g, in);
}

std::string serialize_td(const SignedGraph& g, const TreeDecomposition& td) {
  std::ostringstream out;
  out << "td " << td.bags.size() << " " << td.width() << "\n";
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << " " << g.label(v);
    out << "\n";
  }
  for (auto [a, b] : td.tree_edges) out << "e " << a + 1 << " " << b + 1 << "\n";
  return out.str();
}

}  // namespace sgda
