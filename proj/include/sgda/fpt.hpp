#ifndef SGDA_FPT_HPP
#define SGDA_FPT_HPP

#include <optional>
#include <vector>

#include "sgda/oracle.hpp"
#include "sgda/sgraph.hpp"
#include "sgda/treedec.hpp"

namespace sgda {

// --- search tree (solution size + max degree) ------------------------------

// Exact minimum alliance of size <= k (containing `required` when given).
// For each seed vertex, candidate sets grow by branching over subsets of
// the open neighborhood of the current set; pruned by the necessary
// membership condition, the size-bound filter, and per-member best-case
// slack bounds. Iterates target sizes upward, so the first hit is minimum.
MinAllianceResult solve_k_delta(const SignedGraph& g, int k,
                                std::optional<int> required = {});

// --- dynamic programming over a nice tree decomposition --------------------

// Exact minimum nonempty alliance via sparse tables over bag
// configurations (membership plus per-member condition deltas), combined
// through the leaf/introduce/forget/join recurrences. Answer read at the
// empty root bag from nonempty-flagged entries.
MinAllianceResult dp_treewidth_delta(const SignedGraph& g,
                                     const NiceTreeDecomposition& ntd);

// --- signed neighborhood diversity and the class ILP ------------------------

// Equivalence classes of "same positive and same negative neighborhood up
// to each other"; between two classes (and inside one) the relation is
// uniform: fully positive, fully negative, or absent.
struct SndPartition {
  std::vector<std::vector<int>> classes;   // sorted members, by first member
  std::vector<std::vector<int>> n_pos;     // class ids fully positively adjacent
  std::vector<std::vector<int>> n_neg;     // (n_pos[i] contains i iff z_pos[i])
  std::vector<int> z_pos, z_neg;           // class internally +/- adjacent

  int d() const { return static_cast<int>(classes.size()); }
};

SndPartition snd_partition(const SignedGraph& g);

// Integer program over class counts x_i in [0,|C_i|] with indicators w_i:
// per class the two alliance-condition rows (big-M deactivated when
// w_i = 0), the coupling w_i <= x_i <= |C_i| w_i, and a nonemptiness row
// sum x_i >= 1; objective minimizes sum x_i.
struct IlpModel {
  int d = 0;
  int n = 0;
  int big_m = 0;
  std::vector<int> class_size;
  std::vector<std::vector<int>> n_pos, n_neg;
  std::vector<int> z_pos, z_neg;
  bool nonempty_row = true;

  // Row-by-row feasibility of a full assignment; the nonemptiness row can
  // be excluded to probe the printed system alone.
  bool feasible(const std::vector<int>& x, const std::vector<int>& w,
                bool include_nonempty_row) const;
};

IlpModel ilp_build(const SndPartition& p, int n);

struct IlpAssignment {
  std::vector<int> x;
  std::vector<int> w;
  int objective = 0;
};

// Exact optimum by branch and bound: enumerate the indicator vector, then
// integer interval propagation over the rows with objective pruning.
std::optional<IlpAssignment> ilp_solve(const IlpModel& model);

// Convenience wrapper: minimum alliance through the class ILP, witness
// materialized as lowest-index members per class.
MinAllianceResult min_alliance_snd(const SignedGraph& g);

// --- structural parameter report -------------------------------------------

struct ParameterReport {
  int n = 0;
  int pos_edges = 0;
  int neg_edges = 0;
  int max_degree = 0;
  int min_neg_degree = 0;
  int snd = 0;
  int vertex_cover_size = 0;
  bool vertex_cover_exact = false;
  std::vector<int> vertex_cover;
  int treewidth_upper = 0;
  bool balanced = false;
  bool clusterable = false;
  int cluster_count = 0;
  bool snd_vc_bound_checked = false;  // snd <= 3^vc + vc, only when vc exact
  bool snd_vc_bound_holds = false;
};

// Exact vertex cover by bounded branching up to `vc_exact_limit`, greedy
// 2-approximation beyond (labeled).
ParameterReport analyze_parameters(const SignedGraph& g,
                                   int vc_exact_limit = 20);

}  // namespace sgda

#endif
