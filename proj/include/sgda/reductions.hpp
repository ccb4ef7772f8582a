#ifndef SGDA_REDUCTIONS_HPP
#define SGDA_REDUCTIONS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgda/sgraph.hpp"

namespace sgda {

// Constructive reductions used as instance generators and as
// cross-validation material, plus plain generators.

// --- formulas ---------------------------------------------------------------

// Monotone not-all-equal formula: clauses are sets of variables (1..n),
// each of size at most three; a clause is satisfied when its variables are
// not all assigned alike.
struct NaeFormula {
  int n = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> names;  // optional 1-based variable names

  int m() const { return static_cast<int>(clauses.size()); }
  void validate() const;  // throws MalformedFormula
  // True when `assignment` (1-based 0/1 values) leaves no clause constant.
  bool nae_satisfied(const std::vector<int>& assignment) const;
};

NaeFormula parse_nae_formula(std::istream& in);
std::string serialize_nae_formula(const NaeFormula& f);

// 3-CNF with signed literals (+v / -v).
struct CnfFormula {
  int n = 0;
  std::vector<std::vector<int>> clauses;

  int m() const { return static_cast<int>(clauses.size()); }
  bool satisfied(const std::vector<int>& assignment) const;
};

// DIMACS-style reader: "p cnf n m" header, clauses end with 0.
CnfFormula parse_dimacs_cnf(std::istream& in);

// --- unsigned graphs --------------------------------------------------------

struct UnsignedGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;  // canonical (u < v), sorted

  int n() const { return static_cast<int>(labels.size()); }
  std::vector<std::vector<int>> adjacency() const;
};

// Lines "u v"; '#' comments; "v name" declares an isolated vertex.
UnsignedGraph parse_unsigned_edge_list(std::istream& in);
UnsignedGraph load_unsigned_file(const std::string& path);

// Classical defensive alliance test: every member has at least as many
// neighbors inside (plus itself) as outside.
bool unsigned_alliance_valid(const UnsignedGraph& g, const std::vector<int>& a);

// --- reduction outputs -------------------------------------------------------

struct ReductionOutput {
  SignedGraph graph;
  std::optional<std::string> special_vertex;
  std::optional<long long> budget;
  // gadget role -> vertex labels; roles cover every vertex exactly once
  std::map<std::string, std::vector<std::string>> provenance;
};

// Signed graph with the same alliances as the unsigned input: positive
// edges copied, and ceil((deg(v)+1)/2) pendant negative 4-cliques per
// vertex fix every negative degree.
ReductionOutput unsigned_to_signed(const UnsignedGraph& g);

// Pointed alliability instance from a monotone NAE formula with size-3
// clauses: a negative clique holding the special vertex, one clause vertex
// per clause, a cycle of 2*n_x vertices per variable with positive
// matchings, and pendant negative 4-cliques pinning everything else out.
// For a variable in a single clause the cycle degenerates to one positive
// pair (the closing negative edge would duplicate the matching edge).
ReductionOutput nae_to_defall(const NaeFormula& f);

// Alliance witness for a satisfying NAE assignment: the special vertex,
// every clause vertex, and the cycles of the false variables.
std::vector<std::string> witness_from_assignment(const NaeFormula& f,
                                                 const std::vector<int>& a);

// Degree-bounded variant (max degree five): clause pairs (c_i, d_i) on a
// negative d-cycle replace the big clique, variable cycles as before with
// pendant gadgets on even vertices only and clause edges to odd vertices.
ReductionOutput nae_to_defall_maxdeg5(const NaeFormula& f);

// Witness for the degree-bounded variant: all clause pairs plus the cycles
// of the false variables.
std::vector<std::string> witness_from_assignment_maxdeg5(
    const NaeFormula& f, const std::vector<int>& a);

// Minimum-alliance instance from a clique question: positive edges from
// endpoints to an edge-vertex per original edge, k pendant negative
// 4-cliques per original vertex and three per edge-vertex; a k-clique
// corresponds to an alliance of size budget = k + k(k-1)/2.
ReductionOutput clique_to_minda(const UnsignedGraph& g, int k);

// Satisfiability-preserving 3-CNF to monotone NAE translation with
// O(n+m) variables and clauses.
NaeFormula threesat_to_nae(const CnfFormula& cnf);

// --- generators ---------------------------------------------------------------

// Complete graph, positive within consecutive parts, negative across.
SignedGraph gen_k_balanced_complete(const std::vector<int>& sizes);

// Independent edges with probability p_edge, negative with p_neg;
// deterministic under seed.
SignedGraph gen_random(int n, double p_edge, double p_neg,
                       std::uint64_t seed);

}  // namespace sgda

#endif
