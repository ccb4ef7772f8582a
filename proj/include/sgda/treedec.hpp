#ifndef SGDA_TREEDEC_HPP
#define SGDA_TREEDEC_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgda/sgraph.hpp"

namespace sgda {

// Raw tree decomposition: bags of dense vertex indices plus tree edges
// over bag ids.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  int width() const;
};

// Throws InvalidDecomposition naming the violated condition: tree shape,
// vertex coverage, edge coverage, or occurrence connectivity.
void validate_decomposition(const SignedGraph& g, const TreeDecomposition& td);

enum class TdHeuristic { MinFill, MinDegree };

// Elimination-ordering decomposition of the underlying graph. Width is
// heuristic, not optimal; downstream correctness never depends on it.
TreeDecomposition heuristic_decomposition(const SignedGraph& g,
                                          TdHeuristic h = TdHeuristic::MinFill);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  int vertex = -1;               // introduced/forgotten vertex
  std::vector<int> bag;          // sorted
  int child1 = -1, child2 = -1;  // -1 when absent
};

// Rooted nice tree decomposition: only leaf/introduce/forget/join nodes,
// empty leaf and root bags, children of a join carry identical bags.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
};

// Validates `external` when given (otherwise builds a heuristic
// decomposition) and converts it to nice form.
NiceTreeDecomposition nice_decomposition(
    const SignedGraph& g,
    const std::optional<TreeDecomposition>& external = std::nullopt,
    TdHeuristic h = TdHeuristic::MinFill);

// Text exchange format: header "td <node_count> <width>", then one
// "b <id> <label...>" line per bag (ids 1-based) and "e <i> <j>" tree edge
// lines; '#' comments. Labels are graph vertex labels.
TreeDecomposition parse_td_file(const SignedGraph& g, std::istream& in);
TreeDecomposition load_td_file(const SignedGraph& g, const std::string& path);
std::string serialize_td(const SignedGraph& g, const TreeDecomposition& td);

}  // namespace sgda

#endif
