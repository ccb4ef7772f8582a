#include "sgda/sgraph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace sgda {

SignedGraph::SignedGraph(std::vector<std::string> labels,
                         const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  index_.reserve(labels_.size());
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], i);
    if (!fresh) throw DuplicateEdge("duplicate vertex label '" + labels_[i] + "'");
  }
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v)
      throw SelfLoop("edge " + labels_.at(e.u) + "-" + labels_.at(e.v));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw UnknownVertex("edge endpoint index out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].key() == edges_[i - 1].key())
      throw DuplicateEdge("vertex pair " + labels_.at(edges_[i].u) + "-" +
                          labels_.at(edges_[i].v) + " listed twice");
  }
  pos_adj_.assign(n, {});
  neg_adj_.assign(n, {});
  for (const Edge& e : edges_) {
    auto& adj = e.sign == Sign::Positive ? pos_adj_ : neg_adj_;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    if (e.sign == Sign::Positive) ++pos_count_;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(pos_adj_[v].begin(), pos_adj_[v].end());
    std::sort(neg_adj_[v].begin(), neg_adj_[v].end());
  }
}

int SignedGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownVertex("no vertex '" + label + "'");
  return it->second;
}

int SignedGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
  return d;
}

int SignedGraph::min_negative_degree() const {
  int d = n() == 0 ? 0 : negative_degree(0);
  for (int v = 1; v < n(); ++v) d = std::min(d, negative_degree(v));
  return d;
}

std::optional<Sign> SignedGraph::edge_sign(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& pos = pos_adj_[u];
  if (std::binary_search(pos.begin(), pos.end(), v)) return Sign::Positive;
  const auto& neg = neg_adj_[u];
  if (std::binary_search(neg.begin(), neg.end(), v)) return Sign::Negative;
  return std::nullopt;
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n())
    throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
}

SignedGraph SignedGraph::flipped(
    const std::vector<std::pair<int, int>>& to_flip) const {
  std::vector<Edge> edges = edges_;
  for (auto [u, v] : to_flip) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(
        edges.begin(), edges.end(), std::make_pair(u, v),
        [](const Edge& e, const std::pair<int, int>& k) { return e.key() < k; });
    if (it == edges.end() || it->key() != std::make_pair(u, v))
      throw UnknownVertex("flip of non-edge " + std::to_string(u) + "-" +
                          std::to_string(v));
    it->sign = flip(it->sign);
  }
  return SignedGraph(labels_, edges);
}

// --- parsing ---------------------------------------------------------------

namespace {

Sign parse_sign(const std::string& tok, int lineno) {
  if (tok == "+") return Sign::Positive;
  if (tok == "-") return Sign::Negative;
  throw MalformedLine("line " + std::to_string(lineno) + ": bad sign '" + tok +
                      "'");
}

}  // namespace

SignedGraph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.push_back(name);
    index.emplace(name, id);
    return id;
  };

  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 2 && tok[0] == "v") {
      intern(tok[1]);
      continue;
    }
    if (tok.size() != 3)
      throw MalformedLine("line " + std::to_string(lineno) +
                          ": expected 'u v sign'");
    Sign s = parse_sign(tok[2], lineno);
    int u = intern(tok[0]);
    int v = intern(tok[1]);
    if (u == v)
      throw SelfLoop("line " + std::to_string(lineno) + ": " + tok[0] + "-" +
                     tok[1]);
    edges.push_back({u, v, s});
  }
  return SignedGraph(std::move(labels), edges);
}

SignedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

SignedGraph load_sg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedLine("cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string serialize_edge_list(const SignedGraph& g) {
  std::ostringstream out;
  std::vector<bool> touched(g.n(), false);
  for (const Edge& e : g.edges()) touched[e.u] = touched[e.v] = true;
  for (int v = 0; v < g.n(); ++v)
    if (!touched[v]) out << "v " << g.label(v) << "\n";
  for (const Edge& e : g.edges())
    out << g.label(e.u) << " " << g.label(e.v) << " "
        << (e.sign == Sign::Positive ? '+' : '-') << "\n";
  return out.str();
}

void write_sg_file(const SignedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MalformedLine("cannot write '" + path + "'");
  out << serialize_edge_list(g);
}

std::string to_dot(const SignedGraph& g, const std::vector<int>& fill) {
  std::vector<bool> filled(g.n(), false);
  for (int v : fill) {
    g.check_vertex(v);
    filled[v] = true;
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "  \"" << g.label(v) << "\"";
    if (filled[v]) out << " [style=filled, fillcolor=lightblue]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [style="
        << (e.sign == Sign::Positive ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

// --- queries ----------------------------------------------------------------

DegreeProfile degree_profile(const SignedGraph& g, int v,
                             const std::vector<int>& s) {
  g.check_vertex(v);
  std::vector<bool> in_s(g.n(), false);
  for (int u : s) {
    g.check_vertex(u);
    in_s[u] = true;
  }
  DegreeProfile p;
  for (int u : g.positive_neighbors(v))
    if (in_s[u]) ++p.deg_in_pos;
  for (int u : g.negative_neighbors(v))
    (in_s[u] ? p.deg_in_neg : p.deg_out_neg)++;
  return p;
}

SignedGraph induced(const SignedGraph& g, const std::vector<int>& x) {
  std::vector<int> keep = x;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> local(g.n(), -1);
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int v : keep) {
    g.check_vertex(v);
    local[v] = static_cast<int>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0)
      edges.push_back({local[e.u], local[e.v], e.sign});
  return SignedGraph(std::move(labels), edges);
}

std::optional<Bipartition> is_balanced(const SignedGraph& g) {
  std::vector<int> color(g.n(), -1);
  std::vector<int> stack;
  for (int root = 0; root < g.n(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto visit = [&](int u, int want) {
        if (color[u] == -1) {
          color[u] = want;
          stack.push_back(u);
          return true;
        }
        return color[u] == want;
      };
      for (int u : g.positive_neighbors(v))
        if (!visit(u, color[v])) return std::nullopt;
      for (int u : g.negative_neighbors(v))
        if (!visit(u, 1 - color[v])) return std::nullopt;
    }
  }
  Bipartition b;
  for (int v = 0; v < g.n(); ++v)
    (color[v] == 0 ? b.side0 : b.side1).push_back(v);
  return b;
}

std::optional<ClusterPartition> clustering_partition(const SignedGraph& g) {
  // Positive connected components.
  std::vector<int> comp(g.n(), -1);
  int groups = 0;
  std::vector<int> stack;
  for (int root = 0; root < g.n(); ++root) {
    if (comp[root] != -1) continue;
    comp[root] = groups++;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.positive_neighbors(v))
        if (comp[u] == -1) {
          comp[u] = comp[v];
          stack.push_back(u);
        }
    }
  }
  for (const Edge& e : g.edges())
    if (e.sign == Sign::Negative && comp[e.u] == comp[e.v]) return std::nullopt;
  ClusterPartition p;
  p.groups.assign(groups, {});
  for (int v = 0; v < g.n(); ++v) p.groups[comp[v]].push_back(v);
  return p;
}

bool underlying_complete(const SignedGraph& g) {
  long long n = g.n();
  return g.edge_count() == n * (n - 1) / 2;
}

std::vector<std::vector<int>> underlying_components(const SignedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int root = 0; root < g.n(); ++root) {
    if (comp[root] != -1) continue;
    comp[root] = count++;
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      auto grow = [&](int u) {
        if (comp[u] == -1) {
          comp[u] = comp[v];
          stack.push_back(u);
        }
      };
      for (int u : g.positive_neighbors(v)) grow(u);
      for (int u : g.negative_neighbors(v)) grow(u);
    }
  }
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

std::vector<int> indices_of(const SignedGraph& g,
                            const std::vector<std::string>& labels) {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(g.index_of(l));
  return out;
}

std::vector<std::string> labels_of(const SignedGraph& g,
                                   const std::vector<int>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int v : idx) {
    g.check_vertex(v);
    out.push_back(g.label(v));
  }
  return out;
}

}  // namespace sgda
