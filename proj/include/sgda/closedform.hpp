#ifndef SGDA_CLOSEDFORM_HPP
#define SGDA_CLOSEDFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "sgda/sgraph.hpp"

namespace sgda {

// Polynomial-time exact answers for the combinatorially characterized
// graph classes.

enum class ClosedFormKind { Size1, Size2, ExactSize, Unalliable, Inapplicable };

struct ClosedFormAnswer {
  ClosedFormKind kind = ClosedFormKind::Inapplicable;
  int size = 0;                  // meaningful unless Unalliable/Inapplicable
  std::vector<int> witness;      // sorted dense indices when applicable
  std::string case_label;        // "i", "ii", "iii" for complete graphs
  std::string route;             // class detected by the dispatcher

  bool answered() const { return kind != ClosedFormKind::Inapplicable; }
  bool has_witness() const { return !witness.empty(); }
};

// Smallest-alliance characterization up to size two: a single vertex with
// deg^-(v) <= 1, else an adjacent pair with both negative degrees exactly
// two (only sound as "else" once no single vertex qualifies). Inapplicable
// means the minimum, if any, exceeds two.
ClosedFormAnswer asd_leq2(const SignedGraph& g);

// Exact solve for max degree <= 3: the size<=2 characterization is
// complete there, so Inapplicable becomes Unalliable. Throws DegreeTooHigh
// above degree three.
ClosedFormAnswer subcubic_solve(const SignedGraph& g);

// Exact solve for complete weakly balanced graphs with at least one
// negative edge. Parts sorted descending; with |V1| >= n/3 <= |V2| a
// two-part alliance of size 2*ceil((n-|V2|)/2) exists (case i); with
// |V1| >= n/2 a one-part alliance of size n-|V1| exists (case ii);
// otherwise there is none (case iii). When both constructions apply the
// smaller one wins. Witnesses take lowest-index vertices per part.
ClosedFormAnswer complete_balanced_solve(const SignedGraph& g);

// Detects forest / cycle / unicyclic / subcubic / complete weakly balanced
// structure and routes to the matching solver; nullopt when no class fits.
std::optional<ClosedFormAnswer> special_class_dispatch(const SignedGraph& g);

}  // namespace sgda

#endif
