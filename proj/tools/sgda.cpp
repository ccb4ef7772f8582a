// Command-line surface for the signed-graph defensive alliance toolkit.
// Payloads are JSON documents on stdout; artifacts go to files.
// Exit codes: 0 ok, 1 well-posed negative answer, 2 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sgda/report.hpp"

namespace {

using sgda::Json;

constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kError = 2;

struct AutoThresholds {
  int snd_max = 12;
  int kdelta_max = 40;
  int oracle_universe_max = 22;
};

AutoThresholds load_thresholds() {
  AutoThresholds t;
  const char* path = std::getenv("SGDA_CONFIG");
  if (!path) return t;
  std::ifstream in(path);
  if (!in) throw sgda::Error("ConfigError", "cannot open config '" +
                                                std::string(path) + "'");
  Json j = Json::parse(in);
  if (j.contains("auto")) {
    const Json& a = j["auto"];
    if (a.contains("snd_max")) t.snd_max = a["snd_max"].get<int>();
    if (a.contains("kdelta_max")) t.kdelta_max = a["kdelta_max"].get<int>();
    if (a.contains("oracle_universe_max"))
      t.oracle_universe_max = a["oracle_universe_max"].get<int>();
  }
  return t;
}

void emit(const std::string& command, const std::string& status,
          const Json& payload) {
  Json doc;
  doc["schema_version"] = sgda::kSchemaVersion;
  doc["command"] = command;
  doc["status"] = status;
  doc["payload"] = payload;
  std::cout << doc.dump(2) << "\n";
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int candidate_universe(const sgda::SignedGraph& g, int k) {
  int count = 0;
  for (int v : sgda::size_bound_filter(g, k))
    if (sgda::necessary_condition(g, v)) ++count;
  return count;
}

int cmd_verify(const std::string& file, const std::string& set_csv,
               const std::string& dot_path) {
  sgda::SignedGraph g = sgda::load_sg_file(file);
  auto set = sgda::indices_of(g, split_csv(set_csv));
  auto report = sgda::check_alliance(g, set);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out)
      throw sgda::Error("IoError", "cannot write '" + dot_path + "'");
    out << sgda::to_dot(g, report.set);
  }
  emit("verify", report.valid ? "ok" : "no-solution",
       sgda::report_alliance(g, report));
  return report.valid ? kOk : kNoSolution;
}

int cmd_min_alliance(const std::string& file, int k,
                     const std::string& contains,
                     std::string solver, const std::string& td_file) {
  sgda::SignedGraph g = sgda::load_sg_file(file);
  if (k < 1) throw sgda::PreconditionViolated("-k must be at least 1");
  k = std::min(k, std::max(g.n(), 1));
  std::optional<int> required;
  if (!contains.empty()) required = g.index_of(contains);

  AutoThresholds cfg = load_thresholds();
  sgda::MinAllianceResult res;
  std::string used = solver;

  auto run_treewidth = [&]() {
    std::optional<sgda::TreeDecomposition> external;
    if (!td_file.empty()) external = sgda::load_td_file(g, td_file);
    auto ntd = sgda::nice_decomposition(g, external);
    return sgda::dp_treewidth_delta(g, ntd);
  };

  if (solver == "auto") {
    if (!required) {
      if (auto cf = sgda::special_class_dispatch(g)) {
        used = "closedform:" + cf->route;
        sgda::MinAllianceResult r;
        if (cf->answered() && cf->kind != sgda::ClosedFormKind::Unalliable) {
          r.found = cf->size <= k;
          if (r.found) {
            r.size = cf->size;
            r.witness = cf->witness;
          }
        }
        res = r;
        emit("min-alliance", res.found ? "ok" : "no-solution",
             sgda::report_min_alliance(g, res, used));
        return res.found ? kOk : kNoSolution;
      }
      if (sgda::snd_partition(g).d() <= cfg.snd_max) {
        used = "snd";
        res = sgda::min_alliance_snd(g);
        if (res.found && res.size > k) res = sgda::MinAllianceResult{};
        emit("min-alliance", res.found ? "ok" : "no-solution",
             sgda::report_min_alliance(g, res, used));
        return res.found ? kOk : kNoSolution;
      }
    }
    if (k * g.max_degree() <= cfg.kdelta_max) {
      used = "searchtree";
      res = sgda::solve_k_delta(g, k, required);
    } else if (candidate_universe(g, k) <= cfg.oracle_universe_max) {
      used = "oracle";
      res = sgda::min_alliance_bruteforce(g, k, required);
    } else {
      throw sgda::Error(
          "InstanceTooLarge",
          "no exact solver is configured for this instance size; adjust the "
          "auto thresholds or pick a solver explicitly");
    }
  } else if (solver == "oracle") {
    res = sgda::min_alliance_bruteforce(g, k, required);
  } else if (solver == "searchtree") {
    res = sgda::solve_k_delta(g, k, required);
  } else if (solver == "treewidth") {
    if (required)
      throw sgda::PreconditionViolated(
          "--contains is not supported by the treewidth solver");
    res = run_treewidth();
    if (res.found && res.size > k) res = sgda::MinAllianceResult{};
  } else if (solver == "snd") {
    if (required)
      throw sgda::PreconditionViolated(
          "--contains is not supported by the snd solver");
    res = sgda::min_alliance_snd(g);
    if (res.found && res.size > k) res = sgda::MinAllianceResult{};
  } else {
    throw sgda::Error("BadSolver", "unknown solver '" + solver + "'");
  }
  emit("min-alliance", res.found ? "ok" : "no-solution",
       sgda::report_min_alliance(g, res, used));
  return res.found ? kOk : kNoSolution;
}

int cmd_build(const std::string& file, const std::string& target_csv, int k,
              const std::string& rule) {
  sgda::SignedGraph g = sgda::load_sg_file(file);
  auto target = sgda::indices_of(g, split_csv(target_csv));
  sgda::RuleMode mode;
  if (rule == "corrected")
    mode = sgda::RuleMode::Corrected;
  else if (rule == "literal")
    mode = sgda::RuleMode::Literal;
  else
    throw sgda::Error("BadRule", "unknown rule '" + rule + "'");
  auto plan = sgda::build_alliance(g, target, k, mode);
  if (!plan) {
    emit("build", "no-solution",
         Json{{"target", sgda::labels_of(g, target)}, {"budget", k}});
    return kNoSolution;
  }
  emit("build", "ok", sgda::report_flip_plan(g, *plan));
  return kOk;
}

int cmd_analyze(const std::string& file) {
  sgda::SignedGraph g = sgda::load_sg_file(file);
  auto report = sgda::analyze_parameters(g);
  emit("analyze", "ok", sgda::report_parameters(g, report));
  return kOk;
}

int cmd_reduce(const std::string& kind, const std::string& input,
               const std::string& prefix, int k) {
  std::ifstream in(input);
  if (!in) throw sgda::Error("IoError", "cannot open '" + input + "'");

  if (kind == "3sat2nae") {
    sgda::CnfFormula cnf = sgda::parse_dimacs_cnf(in);
    sgda::NaeFormula nae = sgda::threesat_to_nae(cnf);
    std::ofstream out(prefix + ".nae");
    out << sgda::serialize_nae_formula(nae);
    emit("reduce", "ok",
         Json{{"kind", kind},
              {"variables", nae.n},
              {"clauses", nae.m()},
              {"output", prefix + ".nae"}});
    return kOk;
  }

  sgda::ReductionOutput out = [&]() {
    if (kind == "unsigned2signed")
      return sgda::unsigned_to_signed(sgda::parse_unsigned_edge_list(in));
    if (kind == "nae2defall")
      return sgda::nae_to_defall(sgda::parse_nae_formula(in));
    if (kind == "nae2defall-d5")
      return sgda::nae_to_defall_maxdeg5(sgda::parse_nae_formula(in));
    if (kind == "clique2minda")
      return sgda::clique_to_minda(sgda::parse_unsigned_edge_list(in), k);
    throw sgda::Error("BadKind", "unknown reduction '" + kind + "'");
  }();

  sgda::write_sg_file(out.graph, prefix + ".sg");
  Json sidecar;
  sidecar["schema_version"] = sgda::kSchemaVersion;
  sidecar["kind"] = kind;
  if (out.special_vertex) sidecar["special_vertex"] = *out.special_vertex;
  if (out.budget) sidecar["budget"] = *out.budget;
  Json roles = Json::object();
  for (const auto& [role, verts] : out.provenance) roles[role] = verts;
  sidecar["roles"] = roles;
  std::ofstream side(prefix + ".provenance.json");
  side << sidecar.dump(2) << "\n";

  Json payload = sgda::report_reduction(out);
  payload["kind"] = kind;
  payload["output"] = prefix + ".sg";
  emit("reduce", "ok", payload);
  return kOk;
}

int cmd_gen(const std::string& kind, const std::string& sizes_csv, int n,
            double p_edge, double p_neg, std::uint64_t seed,
            const std::string& out_path) {
  sgda::SignedGraph g = [&]() {
    if (kind == "kbalanced") {
      std::vector<int> sizes;
      for (const auto& tok : split_csv(sizes_csv))
        sizes.push_back(std::stoi(tok));
      return sgda::gen_k_balanced_complete(sizes);
    }
    if (kind == "random") return sgda::gen_random(n, p_edge, p_neg, seed);
    throw sgda::Error("BadKind", "unknown generator '" + kind + "'");
  }();
  sgda::write_sg_file(g, out_path);
  emit("gen", "ok",
       Json{{"kind", kind},
            {"vertices", g.n()},
            {"positive_edges", g.positive_edge_count()},
            {"negative_edges", g.negative_edge_count()},
            {"output", out_path}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for defensive alliances in signed networks"};
  app.require_subcommand(1);

  std::string file, set_csv, dot_path;
  auto* verify = app.add_subcommand("verify", "check a candidate alliance");
  verify->add_option("graph", file)->required();
  verify->add_option("--set", set_csv, "comma-separated vertex labels")
      ->required();
  verify->add_option("--dot", dot_path, "write a DOT rendering");

  std::string ma_file, contains, solver = "auto", td_file;
  int ma_k = 0;
  auto* ma = app.add_subcommand("min-alliance", "find a smallest alliance");
  ma->add_option("graph", ma_file)->required();
  ma->add_option("-k,--max-size", ma_k, "size bound")->required();
  ma->add_option("--contains", contains, "required member label");
  ma->add_option("--solver", solver)
      ->check(CLI::IsMember({"oracle", "searchtree", "treewidth", "snd",
                             "auto"}));
  ma->add_option("--td-file", td_file, "tree decomposition file");

  std::string b_file, target_csv, rule = "corrected";
  int b_k = 0;
  auto* build = app.add_subcommand("build", "flip edges to build an alliance");
  build->add_option("graph", b_file)->required();
  build->add_option("--target", target_csv, "comma-separated vertex labels")
      ->required();
  build->add_option("-k,--budget", b_k, "flip budget")->required();
  build->add_option("--rule", rule)
      ->check(CLI::IsMember({"literal", "corrected"}));

  std::string a_file;
  auto* analyze = app.add_subcommand("analyze", "structural parameters");
  analyze->add_option("graph", a_file)->required();

  std::string r_kind, r_input, r_prefix;
  int r_k = 3;
  auto* reduce = app.add_subcommand("reduce", "run a hardness construction");
  reduce->add_option("kind", r_kind)
      ->required()
      ->check(CLI::IsMember({"unsigned2signed", "nae2defall", "nae2defall-d5",
                             "clique2minda", "3sat2nae"}));
  reduce->add_option("input", r_input)->required();
  reduce->add_option("output-prefix", r_prefix)->required();
  reduce->add_option("-k", r_k, "clique size for clique2minda");

  std::string g_kind, g_sizes, g_out;
  int g_n = 0;
  double g_pe = 0.5, g_pn = 0.5;
  std::uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("kind", g_kind)
      ->required()
      ->check(CLI::IsMember({"kbalanced", "random"}));
  gen->add_option("--sizes", g_sizes, "part sizes for kbalanced");
  gen->add_option("-n", g_n, "vertex count for random");
  gen->add_option("--p-edge", g_pe);
  gen->add_option("--p-neg", g_pn);
  gen->add_option("--seed", g_seed);
  gen->add_option("-o,--out", g_out)->required();

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(file, set_csv, dot_path);
    if (ma->parsed())
      return cmd_min_alliance(ma_file, ma_k, contains, solver, td_file);
    if (build->parsed()) return cmd_build(b_file, target_csv, b_k, rule);
    if (analyze->parsed()) return cmd_analyze(a_file);
    if (reduce->parsed()) return cmd_reduce(r_kind, r_input, r_prefix, r_k);
    if (gen->parsed())
      return cmd_gen(g_kind, g_sizes, g_n, g_pe, g_pn, g_seed, g_out);
    return kError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  } catch (const sgda::Error& e) {
    Json doc;
    doc["schema_version"] = sgda::kSchemaVersion;
    doc["status"] = "error";
    doc["error"] = {{"code", e.code()}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    return kError;
  } catch (const std::exception& e) {
    Json doc;
    doc["schema_version"] = sgda::kSchemaVersion;
    doc["status"] = "error";
    doc["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    return kError;
  }
}
