#ifndef SGDA_VERIFY_HPP
#define SGDA_VERIFY_HPP

#include <vector>

#include "sgda/sgraph.hpp"

namespace sgda {

// A vertex set S is a defensive alliance when it is nonempty and every
// member v satisfies
//   condition 1:  deg_S^+(v) + 1 >= deg_S^-(v)        (internal cohesion)
//   condition 2:  deg_S^+(v) + 1 >= deg_out^-(v)      (defensibility)
// where deg_out^- counts negative neighbors outside S.

struct VertexSlack {
  int vertex = 0;
  int slack1 = 0;  // deg_S^+ + 1 - deg_S^-
  int slack2 = 0;  // deg_S^+ + 1 - deg_out^-
};

struct Violation {
  int vertex = 0;
  int condition = 0;  // 1 or 2
};

struct AllianceReport {
  std::vector<int> set;  // sorted dense indices
  std::vector<VertexSlack> per_vertex;
  bool valid = false;
  std::vector<Violation> violators;  // ascending vertex, condition 1 before 2
};

// Evaluates both conditions for every member of s. Throws EmptySet for an
// empty set and UnknownVertex for out-of-range members.
AllianceReport check_alliance(const SignedGraph& g, const std::vector<int>& s);

// Necessary membership test: false means v is in no defensive alliance of
// g at all (deg^+(v) + 1 < ceil(deg^-(v)/2)).
bool necessary_condition(const SignedGraph& g, int v);

// Vertices that may appear in an alliance of size <= k: {v : deg^-(v) <= 2k}.
// The complement is excluded from every such alliance.
std::vector<int> size_bound_filter(const SignedGraph& g, int k);

}  // namespace sgda

#endif
