#ifndef SGDA_SGRAPH_HPP
#define SGDA_SGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgda/errors.hpp"

namespace sgda {

enum class Sign : std::int8_t { Positive = +1, Negative = -1 };

inline Sign flip(Sign s) {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

// Undirected edge with endpoints stored as canonical (u < v) dense indices.
struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::Positive;

  std::pair<int, int> key() const { return {u, v}; }
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v && a.sign == b.sign;
  }
};

// Immutable signed graph: a vertex set with an edge set partitioned into
// positive and negative edges. Vertices carry string labels mapped
// bijectively to dense indices 0..n-1. Edge and adjacency iteration order
// is canonical (sorted), so downstream tie-breaking is deterministic.
class SignedGraph {
 public:
  SignedGraph() = default;

  // `labels[i]` names vertex i; edges refer to dense indices.
  // Rejects self-loops and any repeated vertex pair.
  SignedGraph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int positive_edge_count() const { return pos_count_; }
  int negative_edge_count() const
      { return static_cast<int>(edges_.size()) - pos_count_; }

  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label(int v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws UnknownVertex if the label is not present.
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const
      { return index_.count(label) != 0; }

  const std::vector<int>& positive_neighbors(int v) const
      { return pos_adj_.at(v); }
  const std::vector<int>& negative_neighbors(int v) const
      { return neg_adj_.at(v); }
  int positive_degree(int v) const
      { return static_cast<int>(pos_adj_.at(v).size()); }
  int negative_degree(int v) const
      { return static_cast<int>(neg_adj_.at(v).size()); }
  int degree(int v) const { return positive_degree(v) + negative_degree(v); }
  int max_degree() const;
  int min_negative_degree() const;

  // Sign of edge uv, or nullopt if not adjacent.
  std::optional<Sign> edge_sign(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_sign(u, v).has_value(); }

  void check_vertex(int v) const;

  // Graph with the same vertex set and the signs of `to_flip` toggled.
  // Every listed pair must be an existing edge.
  SignedGraph flipped(const std::vector<std::pair<int, int>>& to_flip) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;  // sorted by (u, v)
  std::vector<std::vector<int>> pos_adj_;
  std::vector<std::vector<int>> neg_adj_;
  int pos_count_ = 0;
};

// --- parsing and serialization ------------------------------------------

// Text edge-list format: one edge per line as "u v s" with s in {+,-};
// '#' starts a comment; blank lines ignored. A line "v name" declares an
// isolated vertex. Labels are arbitrary whitespace-free strings, mapped to
// dense indices in order of first appearance.
SignedGraph parse_edge_list(std::istream& in);
SignedGraph parse_edge_list(const std::string& text);
SignedGraph load_sg_file(const std::string& path);

// Canonical text form; parse(serialize(g)) reproduces g exactly.
std::string serialize_edge_list(const SignedGraph& g);
void write_sg_file(const SignedGraph& g, const std::string& path);

// DOT export of the underlying graph: positive edges solid, negative edges
// dashed; vertices in `fill` (dense indices) are drawn filled.
std::string to_dot(const SignedGraph& g, const std::vector<int>& fill = {});

// --- basic queries --------------------------------------------------------

struct DegreeProfile {
  int deg_in_pos = 0;   // positive neighbors inside the set
  int deg_in_neg = 0;   // negative neighbors inside the set
  int deg_out_neg = 0;  // negative neighbors outside the set
};

// Neighborhood of v split against the vertex set `s` (dense indices).
DegreeProfile degree_profile(const SignedGraph& g, int v,
                             const std::vector<int>& s);

// Subgraph induced by `x`: keeps exactly the edges with both endpoints in
// x, signs and labels preserved.
SignedGraph induced(const SignedGraph& g, const std::vector<int>& x);

// --- balance structure ----------------------------------------------------

struct Bipartition {
  std::vector<int> side0;
  std::vector<int> side1;
};

// Two-coloring where positive edges join equal colors and negative edges
// join different colors; nullopt if none exists.
std::optional<Bipartition> is_balanced(const SignedGraph& g);

struct ClusterPartition {
  std::vector<std::vector<int>> groups;  // disjoint cover of V
  int k() const { return static_cast<int>(groups.size()); }
};

// Present iff every negative edge joins two distinct connected components
// of the positive subgraph; the groups returned are exactly those positive
// components (the finest valid clustering).
std::optional<ClusterPartition> clustering_partition(const SignedGraph& g);

// --- helpers shared by solvers --------------------------------------------

// True if the underlying unsigned graph is complete.
bool underlying_complete(const SignedGraph& g);

// Connected components of the underlying unsigned graph, each sorted,
// ordered by smallest member.
std::vector<std::vector<int>> underlying_components(const SignedGraph& g);

// Resolves labels to dense indices (throws UnknownVertex).
std::vector<int> indices_of(const SignedGraph& g,
                            const std::vector<std::string>& labels);
std::vector<std::string> labels_of(const SignedGraph& g,
                                   const std::vector<int>& idx);

}  // namespace sgda

#endif
