#ifndef SGDA_TEST_UTIL_HPP
#define SGDA_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "sgda/sgraph.hpp"

namespace sgda::test {

inline std::string fixture(const std::string& name) {
  return std::string(SGDA_FIXTURE_DIR) + "/" + name;
}

inline SignedGraph read_graph() { return load_sg_file(fixture("read1954.sg")); }
inline SignedGraph fig2b_graph() { return load_sg_file(fixture("fig2b.sg")); }

inline std::vector<int> ids(const SignedGraph& g,
                            const std::vector<std::string>& labels) {
  return indices_of(g, labels);
}

// All-negative complete graph on n vertices labeled a, b, c, ...
inline SignedGraph negative_clique(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, 'a' + i));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::Negative});
  return SignedGraph(labels, edges);
}

// Cycle with every edge negative.
inline SignedGraph negative_cycle(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, Sign::Negative});
  return SignedGraph(labels, edges);
}

}  // namespace sgda::test

#endif
