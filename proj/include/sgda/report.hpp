#ifndef SGDA_REPORT_HPP
#define SGDA_REPORT_HPP

// JSON payload helpers shared by the CLI and its tests. Payloads are
// versioned (schema_version) and key order is fixed so identical inputs
// produce byte-identical documents. Header-only; requires the vendored
// nlohmann/json on the include path.

#include <string>

#include "json.hpp"
#include "sgda/building.hpp"
#include "sgda/closedform.hpp"
#include "sgda/fpt.hpp"
#include "sgda/oracle.hpp"
#include "sgda/reductions.hpp"
#include "sgda/sgraph.hpp"
#include "sgda/verify.hpp"

namespace sgda {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json report_alliance(const SignedGraph& g, const AllianceReport& r) {
  Json j;
  j["set"] = labels_of(g, r.set);
  j["valid"] = r.valid;
  Json violators = Json::array();
  for (const auto& v : r.violators)
    violators.push_back({{"vertex", g.label(v.vertex)},
                         {"condition", v.condition}});
  j["violators"] = violators;
  Json slacks = Json::object();
  for (const auto& s : r.per_vertex)
    slacks[g.label(s.vertex)] = {{"slack1", s.slack1}, {"slack2", s.slack2}};
  j["slacks"] = slacks;
  return j;
}

inline Json report_min_alliance(const SignedGraph& g,
                                const MinAllianceResult& r,
                                const std::string& solver) {
  Json j;
  j["found"] = r.found;
  if (r.found) {
    j["size"] = r.size;
    j["witness"] = labels_of(g, r.witness);
  }
  j["solver"] = solver;
  return j;
}

inline Json report_flip_plan(const SignedGraph& g, const FlipPlan& p) {
  Json j;
  Json flips = Json::array();
  auto emit = [&](const std::vector<std::pair<int, int>>& es,
                  const char* phase) {
    for (auto [u, v] : es)
      flips.push_back({{"u", g.label(u)}, {"v", g.label(v)},
                       {"phase", phase}});
  };
  emit(p.reduction_flips, "reduction");
  emit(p.udcs_flips, "udcs");
  emit(p.augment_flips, "augment");
  j["flips"] = flips;
  j["phase_counts"] = {{"reduction", p.reduction_flips.size()},
                       {"udcs", p.udcs_flips.size()},
                       {"augment", p.augment_flips.size()}};
  j["total"] = p.total();
  return j;
}

inline Json report_parameters(const SignedGraph& g, const ParameterReport& r) {
  Json j;
  j["n"] = r.n;
  j["positive_edges"] = r.pos_edges;
  j["negative_edges"] = r.neg_edges;
  j["max_degree"] = r.max_degree;
  j["min_negative_degree"] = r.min_neg_degree;
  j["snd"] = r.snd;
  j["vertex_cover"] = {{"size", r.vertex_cover_size},
                       {"exact", r.vertex_cover_exact},
                       {"vertices", labels_of(g, r.vertex_cover)}};
  j["treewidth_upper_bound"] = r.treewidth_upper;
  j["balanced"] = r.balanced;
  j["clusterable"] = r.clusterable;
  if (r.clusterable) {
    j["cluster_count"] = r.cluster_count;
    auto clusters = clustering_partition(g);
    Json groups = Json::array();
    for (const auto& grp : clusters->groups) groups.push_back(labels_of(g, grp));
    j["clusters"] = groups;
  }
  if (r.snd_vc_bound_checked)
    j["snd_within_vertex_cover_bound"] = r.snd_vc_bound_holds;
  return j;
}

inline Json report_reduction(const ReductionOutput& out) {
  Json j;
  j["vertices"] = out.graph.n();
  j["positive_edges"] = out.graph.positive_edge_count();
  j["negative_edges"] = out.graph.negative_edge_count();
  j["max_degree"] = out.graph.max_degree();
  if (out.special_vertex) j["special_vertex"] = *out.special_vertex;
  if (out.budget) j["budget"] = *out.budget;
  Json roles = Json::object();
  for (const auto& [role, verts] : out.provenance)
    roles[role] = verts.size();
  j["role_counts"] = roles;
  return j;
}

}  // namespace sgda

#endif
