#include "sgda/reductions.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace sgda {

// --- formulas ---------------------------------------------------------------

void NaeFormula::validate() const {
  if (n < 0) throw MalformedFormula("negative variable count");
  for (const auto& c : clauses) {
    if (c.empty() || c.size() > 3)
      throw MalformedFormula("clause size must be 1..3");
    std::set<int> seen;
    for (int v : c) {
      if (v < 1 || v > n)
        throw MalformedFormula("variable " + std::to_string(v) +
                               " out of range");
      if (!seen.insert(v).second)
        throw MalformedFormula("variable repeated in clause");
    }
  }
}

bool NaeFormula::nae_satisfied(const std::vector<int>& assignment) const {
  for (const auto& c : clauses) {
    bool has0 = false, has1 = false;
    for (int v : c) (assignment.at(v) ? has1 : has0) = true;
    if (!has0 || !has1) return false;
  }
  return true;
}

NaeFormula parse_nae_formula(std::istream& in) {
  NaeFormula f;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<int> clause;
    for (int v; ls >> v;) clause.push_back(v);
    if (!ls.eof() && ls.fail())
      throw MalformedFormula("non-numeric token in clause line");
    if (clause.empty()) continue;
    for (int v : clause) f.n = std::max(f.n, v);
    f.clauses.push_back(clause);
  }
  f.validate();
  return f;
}

std::string serialize_nae_formula(const NaeFormula& f) {
  std::ostringstream out;
  out << "# nae formula: " << f.n << " variables, " << f.m() << " clauses\n";
  if (!f.names.empty()) {
    out << "#";
    for (int v = 1; v <= f.n && v < static_cast<int>(f.names.size()); ++v)
      out << " " << v << "=" << f.names[v];
    out << "\n";
  }
  for (const auto& c : f.clauses) {
    for (size_t i = 0; i < c.size(); ++i)
      out << (i ? " " : "") << c[i];
    out << "\n";
  }
  return out.str();
}

bool CnfFormula::satisfied(const std::vector<int>& assignment) const {
  for (const auto& c : clauses) {
    bool ok = false;
    for (int l : c) {
      int v = l > 0 ? l : -l;
      if ((l > 0) == (assignment.at(v) != 0)) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

CnfFormula parse_dimacs_cnf(std::istream& in) {
  CnfFormula f;
  int declared_m = -1;
  std::string tok;
  std::vector<int> clause;
  bool have_header = false;
  while (in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string fmt;
      if (!(in >> fmt >> f.n >> declared_m) || fmt != "cnf")
        throw MalformedFormula("bad DIMACS header");
      have_header = true;
      continue;
    }
    int lit;
    try {
      lit = std::stoi(tok);
    } catch (...) {
      throw MalformedFormula("unexpected token '" + tok + "'");
    }
    if (!have_header) throw MalformedFormula("clause before header");
    if (lit == 0) {
      f.clauses.push_back(clause);
      clause.clear();
    } else {
      int v = lit > 0 ? lit : -lit;
      if (v > f.n) throw MalformedFormula("literal out of range");
      clause.push_back(lit);
    }
  }
  if (!clause.empty()) throw MalformedFormula("unterminated clause");
  if (declared_m >= 0 && declared_m != f.m())
    throw MalformedFormula("clause count mismatch");
  return f;
}

// --- unsigned graphs ----------------------------------------------------------

std::vector<std::vector<int>> UnsignedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n());
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

UnsignedGraph parse_unsigned_edge_list(std::istream& in) {
  UnsignedGraph g;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(g.labels.size());
    g.labels.push_back(name);
    index.emplace(name, id);
    return id;
  };
  std::string line;
  int lineno = 0;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() == 1) {  // isolated-vertex declaration
      intern(tok[0]);
      continue;
    }
    if (tok.size() != 2)
      throw MalformedLine("line " + std::to_string(lineno) +
                          ": expected 'u v'");
    int u = intern(tok[0]);
    int v = intern(tok[1]);
    if (u == v) throw SelfLoop("line " + std::to_string(lineno));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw DuplicateEdge("line " + std::to_string(lineno));
    g.edges.push_back({u, v});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

UnsignedGraph load_unsigned_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedLine("cannot open '" + path + "'");
  return parse_unsigned_edge_list(in);
}

bool unsigned_alliance_valid(const UnsignedGraph& g,
                             const std::vector<int>& a) {
  if (a.empty()) return false;
  std::vector<bool> in_a(g.n(), false);
  for (int v : a) in_a.at(v) = true;
  auto adj = g.adjacency();
  for (int v : a) {
    int inside = 0, outside = 0;
    for (int u : adj[v]) (in_a[u] ? inside : outside)++;
    if (inside + 1 < outside) return false;
  }
  return true;
}

// --- construction helpers -------------------------------------------------------

namespace {

struct Builder {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::map<std::string, std::vector<std::string>> provenance;

  int vertex(const std::string& label, const std::string& role) {
    auto it = index.find(label);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(labels.size());
    labels.push_back(label);
    index.emplace(label, id);
    provenance[role].push_back(label);
    return id;
  }

  void edge(int u, int v, Sign s) { edges.push_back({u, v, s}); }

  // Pendant negative 4-clique attached to `anchor` through its first
  // member; members can never satisfy the membership precondition.
  void small_gadget(const std::string& prefix, int anchor) {
    int first = -1;
    std::vector<int> members;
    for (int j = 1; j <= 4; ++j) {
      int id = vertex(prefix + ":" + std::to_string(j), "small_gadget");
      if (first < 0) first = id;
      members.push_back(id);
    }
    for (size_t a = 0; a < members.size(); ++a)
      for (size_t b = a + 1; b < members.size(); ++b)
        edge(members[a], members[b], Sign::Negative);
    edge(anchor, first, Sign::Negative);
  }

  ReductionOutput finish(std::optional<std::string> special,
                         std::optional<long long> budget) {
    ReductionOutput out{SignedGraph(labels, edges), std::move(special),
                        budget, provenance};
    size_t covered = 0;
    for (const auto& [role, verts] : out.provenance) covered += verts.size();
    assert(covered == labels.size());
    return out;
  }
};

// Sorted indices of the clauses containing x, defining the occurrence
// order p = 1..n_x.
std::vector<int> occurrences(const NaeFormula& f, int x) {
  std::vector<int> occ;
  for (int j = 0; j < f.m(); ++j)
    if (std::find(f.clauses[j].begin(), f.clauses[j].end(), x) !=
        f.clauses[j].end())
      occ.push_back(j);
  return occ;
}

void require_exact3(const NaeFormula& f) {
  f.validate();
  for (const auto& c : f.clauses)
    if (c.size() != 3)
      throw MalformedFormula("construction needs clauses of size exactly 3");
}

}  // namespace

// --- reductions -------------------------------------------------------------

ReductionOutput unsigned_to_signed(const UnsignedGraph& g) {
  Builder b;
  for (const auto& l : g.labels) b.vertex(l, "original");
  for (auto [u, v] : g.edges) b.edge(u, v, Sign::Positive);
  auto adj = g.adjacency();
  for (int v = 0; v < g.n(); ++v) {
    int d_prime = (static_cast<int>(adj[v].size()) + 2) / 2;  // ceil((deg+1)/2)
    for (int i = 1; i <= d_prime; ++i)
      b.small_gadget("nsg:" + g.labels[v] + ":" + std::to_string(i), v);
  }
  return b.finish(std::nullopt, std::nullopt);
}

ReductionOutput nae_to_defall(const NaeFormula& f) {
  require_exact3(f);
  const int m = f.m();
  Builder b;
  int v = b.vertex("v", "special");
  std::vector<int> big{v};
  for (int i = 1; i <= m + 1; ++i)
    big.push_back(b.vertex("big:" + std::to_string(i), "big_clique"));
  for (size_t a = 0; a < big.size(); ++a)
    for (size_t c = a + 1; c < big.size(); ++c)
      b.edge(big[a], big[c], Sign::Negative);

  std::vector<int> clause_vertex(m);
  for (int j = 0; j < m; ++j) {
    clause_vertex[j] = b.vertex("c:" + std::to_string(j + 1), "clause");
    b.edge(v, clause_vertex[j], Sign::Positive);
  }

  for (int x = 1; x <= f.n; ++x) {
    auto occ = occurrences(f, x);
    const int nx = static_cast<int>(occ.size());
    if (nx == 0) continue;
    std::vector<int> cyc(2 * nx);
    for (int h = 1; h <= 2 * nx; ++h)
      cyc[h - 1] = b.vertex("x" + std::to_string(x) + ":" + std::to_string(h),
                            "var_cycle");
    for (int p = 1; p <= nx; ++p)
      b.edge(cyc[2 * p - 2], cyc[2 * p - 1], Sign::Positive);
    for (int p = 1; p <= nx - 1; ++p)
      b.edge(cyc[2 * p - 1], cyc[2 * p], Sign::Negative);
    if (nx >= 2) b.edge(cyc[2 * nx - 1], cyc[0], Sign::Negative);
    for (int p = 1; p <= nx; ++p)
      b.edge(clause_vertex[occ[p - 1]], cyc[2 * p - 1], Sign::Negative);
    auto gadget = [&](int l, int anchor) {
      b.small_gadget(
          "nsg:x" + std::to_string(x) + ":" + std::to_string(l), anchor);
    };
    for (int p = 1; p <= nx; ++p) {
      gadget(4 * p - 3, cyc[2 * p - 2]);
      gadget(4 * p - 2, cyc[2 * p - 2]);
      gadget(4 * p - 1, cyc[2 * p - 1]);
      gadget(4 * p, cyc[2 * p - 1]);
    }
  }
  return b.finish("v", std::nullopt);
}

std::vector<std::string> witness_from_assignment(const NaeFormula& f,
                                                 const std::vector<int>& a) {
  require_exact3(f);
  if (static_cast<int>(a.size()) < f.n + 1)
    throw NotAnNaeAssignment("assignment too short");
  if (!f.nae_satisfied(a))
    throw NotAnNaeAssignment("some clause is constant under the assignment");
  std::vector<std::string> d{"v"};
  for (int j = 1; j <= f.m(); ++j) d.push_back("c:" + std::to_string(j));
  for (int x = 1; x <= f.n; ++x) {
    if (a[x] != 0) continue;
    int nx = static_cast<int>(occurrences(f, x).size());
    for (int h = 1; h <= 2 * nx; ++h)
      d.push_back("x" + std::to_string(x) + ":" + std::to_string(h));
  }
  return d;
}

ReductionOutput nae_to_defall_maxdeg5(const NaeFormula& f) {
  require_exact3(f);
  const int m = f.m();
  Builder b;
  std::vector<int> cs(m), ds(m);
  for (int i = 0; i < m; ++i) {
    cs[i] = b.vertex("c:" + std::to_string(i + 1), "clause_c");
    ds[i] = b.vertex("d:" + std::to_string(i + 1), "clause_d");
    b.edge(cs[i], ds[i], Sign::Positive);
  }
  for (int i = 0; i + 1 < m; ++i) b.edge(ds[i], ds[i + 1], Sign::Negative);
  if (m >= 3) b.edge(ds[m - 1], ds[0], Sign::Negative);
  for (int i = 0; i < m; ++i)
    for (int l = 1; l <= 2; ++l)
      b.small_gadget(
          "nsg:d:" + std::to_string(i + 1) + ":" + std::to_string(l), ds[i]);

  for (int x = 1; x <= f.n; ++x) {
    auto occ = occurrences(f, x);
    const int nx = static_cast<int>(occ.size());
    if (nx == 0) continue;
    std::vector<int> cyc(2 * nx);
    for (int h = 1; h <= 2 * nx; ++h)
      cyc[h - 1] = b.vertex("x" + std::to_string(x) + ":" + std::to_string(h),
                            "var_cycle");
    for (int p = 1; p <= nx; ++p)
      b.edge(cyc[2 * p - 2], cyc[2 * p - 1], Sign::Positive);
    for (int p = 1; p <= nx - 1; ++p)
      b.edge(cyc[2 * p - 1], cyc[2 * p], Sign::Negative);
    if (nx >= 2) b.edge(cyc[2 * nx - 1], cyc[0], Sign::Negative);
    for (int p = 1; p <= nx; ++p)
      b.edge(cs[occ[p - 1]], cyc[2 * p - 2], Sign::Negative);
    for (int p = 1; p <= nx; ++p)
      for (int l = 1; l <= 2; ++l)
        b.small_gadget("nsg:x" + std::to_string(x) + ":" +
                           std::to_string(2 * p) + ":" + std::to_string(l),
                       cyc[2 * p - 1]);
  }
  ReductionOutput out = b.finish(std::nullopt, std::nullopt);
  assert(out.graph.max_degree() <= 5);
  return out;
}

std::vector<std::string> witness_from_assignment_maxdeg5(
    const NaeFormula& f, const std::vector<int>& a) {
  require_exact3(f);
  if (static_cast<int>(a.size()) < f.n + 1)
    throw NotAnNaeAssignment("assignment too short");
  if (!f.nae_satisfied(a))
    throw NotAnNaeAssignment("some clause is constant under the assignment");
  std::vector<std::string> d;
  for (int i = 1; i <= f.m(); ++i) {
    d.push_back("c:" + std::to_string(i));
    d.push_back("d:" + std::to_string(i));
  }
  for (int x = 1; x <= f.n; ++x) {
    if (a[x] != 0) continue;
    int nx = static_cast<int>(occurrences(f, x).size());
    for (int h = 1; h <= 2 * nx; ++h)
      d.push_back("x" + std::to_string(x) + ":" + std::to_string(h));
  }
  return d;
}

ReductionOutput clique_to_minda(const UnsignedGraph& g, int k) {
  if (k < 2) throw PreconditionViolated("k must be at least 2");
  Builder b;
  for (const auto& l : g.labels) b.vertex(l, "original");
  std::vector<int> edge_vertex;
  for (auto [u, v] : g.edges) {
    int ev = b.vertex("e:" + g.labels[u] + ":" + g.labels[v], "edge_vertex");
    edge_vertex.push_back(ev);
    b.edge(u, ev, Sign::Positive);
    b.edge(v, ev, Sign::Positive);
  }
  for (int v = 0; v < g.n(); ++v)
    for (int i = 1; i <= k; ++i)
      b.small_gadget("nsg:v:" + g.labels[v] + ":" + std::to_string(i), v);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    for (int i = 1; i <= 3; ++i)
      b.small_gadget("nsg:e:" + g.labels[u] + ":" + g.labels[v] + ":" +
                         std::to_string(i),
                     edge_vertex[e]);
  }
  return b.finish(std::nullopt, static_cast<long long>(k) +
                                    static_cast<long long>(k) * (k - 1) / 2);
}

NaeFormula threesat_to_nae(const CnfFormula& cnf) {
  for (const auto& c : cnf.clauses) {
    if (c.size() != 3) throw MalformedFormula("clauses must have size 3");
    std::set<int> vars;
    for (int l : c) {
      int v = l > 0 ? l : -l;
      if (v < 1 || v > cnf.n) throw MalformedFormula("literal out of range");
      if (!vars.insert(v).second)
        throw MalformedFormula("variable appears twice in a clause");
    }
  }
  const int n = cnf.n, m = cnf.m();
  NaeFormula f;
  f.n = 2 * n + 1 + 2 * m;
  f.names.assign(f.n + 1, "");
  auto pos_var = [&](int i) { return i; };
  auto neg_var = [&](int i) { return n + i; };
  const int s = 2 * n + 1;
  auto xc = [&](int c) { return 2 * n + 1 + 2 * c - 1; };   // c is 1-based
  auto nxc = [&](int c) { return 2 * n + 1 + 2 * c; };
  for (int i = 1; i <= n; ++i) {
    f.names[pos_var(i)] = "x" + std::to_string(i);
    f.names[neg_var(i)] = "nx" + std::to_string(i);
  }
  f.names[s] = "s";
  for (int c = 1; c <= m; ++c) {
    f.names[xc(c)] = "xc" + std::to_string(c);
    f.names[nxc(c)] = "nxc" + std::to_string(c);
  }
  auto lift = [&](int lit) { return lit > 0 ? pos_var(lit) : neg_var(-lit); };
  for (int c = 1; c <= m; ++c) {
    const auto& cl = cnf.clauses[c - 1];
    f.clauses.push_back({lift(cl[0]), lift(cl[1]), xc(c)});
    f.clauses.push_back({nxc(c), lift(cl[2]), s});
    f.clauses.push_back({xc(c), nxc(c)});
  }
  for (int i = 1; i <= n; ++i) f.clauses.push_back({pos_var(i), neg_var(i)});
  f.validate();
  return f;
}

// --- generators -----------------------------------------------------------------

SignedGraph gen_k_balanced_complete(const std::vector<int>& sizes) {
  if (sizes.empty()) throw PreconditionViolated("no part sizes");
  for (int s : sizes)
    if (s < 1) throw PreconditionViolated("part sizes must be positive");
  if (sizes.size() < 2)
    throw SinglePartAllPositive("a single part yields no negative edge");
  std::vector<std::string> labels;
  std::vector<int> part;
  for (size_t p = 0; p < sizes.size(); ++p)
    for (int i = 0; i < sizes[p]; ++i) {
      labels.push_back(std::to_string(labels.size() + 1));
      part.push_back(static_cast<int>(p));
    }
  std::vector<Edge> edges;
  const int n = static_cast<int>(labels.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back(
          {u, v, part[u] == part[v] ? Sign::Positive : Sign::Negative});
  return SignedGraph(std::move(labels), edges);
}

SignedGraph gen_random(int n, double p_edge, double p_neg,
                       std::uint64_t seed) {
  if (n < 0 || p_edge < 0 || p_edge > 1 || p_neg < 0 || p_neg > 1)
    throw PreconditionViolated("bad generator parameters");
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (unit() >= p_edge) continue;
      Sign s = unit() < p_neg ? Sign::Negative : Sign::Positive;
      edges.push_back({u, v, s});
    }
  return SignedGraph(std::move(labels), edges);
}

}  // namespace sgda
