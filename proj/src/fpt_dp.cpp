#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "sgda/fpt.hpp"
#include "sgda/verify.hpp"

namespace sgda {

namespace {

// Sparse table entry: minimum partial-solution size for one realizable
// configuration, plus the achieving set as a bitset.
struct Entry {
  int size = 0;
  std::vector<std::uint64_t> witness;
};

using Table = std::unordered_map<std::string, Entry>;

struct Dp {
  const SignedGraph& g;
  const NiceTreeDecomposition& ntd;
  int delta;  // max degree, bounds every coordinate to [-delta+1, delta+1]
  int words;

  Dp(const SignedGraph& g_, const NiceTreeDecomposition& ntd_)
      : g(g_), ntd(ntd_), delta(g_.max_degree()),
        words((g_.n() + 63) / 64) {}

  static std::string make_key(std::uint32_t mask, bool nonempty,
                              const std::vector<std::int8_t>& coords) {
    std::string k;
    k.reserve(5 + coords.size());
    k += static_cast<char>(mask & 0xff);
    k += static_cast<char>((mask >> 8) & 0xff);
    k += static_cast<char>((mask >> 16) & 0xff);
    k += static_cast<char>((mask >> 24) & 0xff);
    k += static_cast<char>(nonempty ? 1 : 0);
    for (std::int8_t c : coords) k += static_cast<char>(c);
    return k;
  }

  static std::uint32_t key_mask(const std::string& k) {
    return static_cast<std::uint8_t>(k[0]) |
           (static_cast<std::uint8_t>(k[1]) << 8) |
           (static_cast<std::uint8_t>(k[2]) << 16) |
           (static_cast<std::uint8_t>(k[3]) << 24);
  }
  static bool key_flag(const std::string& k) { return k[4] != 0; }
  static std::vector<std::int8_t> key_coords(const std::string& k) {
    std::vector<std::int8_t> c(k.size() - 5);
    for (size_t i = 5; i < k.size(); ++i)
      c[i - 5] = static_cast<std::int8_t>(k[i]);
    return c;
  }

  void check_range(int value) const {
    assert(value >= -delta + 1 && value <= delta + 1);
    (void)value;
  }

  static void combine(Table& t, std::string key, int size,
                      std::vector<std::uint64_t> witness) {
    auto it = t.find(key);
    if (it == t.end())
      t.emplace(std::move(key), Entry{size, std::move(witness)});
    else if (size < it->second.size)
      it->second = Entry{size, std::move(witness)};
  }

  int sign_value(int u, int v) const {
    auto s = g.edge_sign(u, v);
    if (!s) return 0;
    return *s == Sign::Positive ? 1 : -1;
  }

  Table leaf() const {
    Table t;
    t.emplace(make_key(0, false, {}),
              Entry{0, std::vector<std::uint64_t>(words, 0)});
    return t;
  }

  Table introduce(const NiceNode& node, const Table& child) const {
    const std::vector<int>& bag = node.bag;
    const int v = node.vertex;
    const int p = static_cast<int>(
        std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    const std::uint32_t low = (std::uint32_t{1} << p) - 1;

    Table t;
    for (const auto& [key, e] : child) {
      std::uint32_t cmask = key_mask(key);
      bool flag = key_flag(key);
      auto coords = key_coords(key);
      std::uint32_t base = ((cmask & ~low) << 1) | (cmask & low);

      // v stays outside the partial solution.
      combine(t, make_key(base, flag, coords), e.size, e.witness);

      // v joins: adjust every member's deltas by the edge to v and splice
      // in v's own bag-internal coordinates.
      std::vector<std::int8_t> up = coords;
      int members = std::popcount(cmask);
      int vi = 1, ve_adj = 0, ve = 0;
      {
        int idx = 0;
        for (int q = 0, seen = 0; q < static_cast<int>(bag.size()); ++q) {
          if (bag[q] == v) continue;
          if (!(cmask >> seen & 1)) {
            ++seen;
            continue;
          }
          int u = bag[q];
          int sv = sign_value(u, v);
          if (sv != 0) {
            up[2 * idx] = static_cast<std::int8_t>(up[2 * idx] + sv);
            up[2 * idx + 1] = static_cast<std::int8_t>(up[2 * idx + 1] + 1);
            vi += sv;
            ++ve_adj;
          }
          check_range(up[2 * idx]);
          check_range(up[2 * idx + 1]);
          ++seen;
          ++idx;
        }
        assert(idx == members);
      }
      ve = ve_adj - g.negative_degree(v) + 1;
      check_range(vi);
      check_range(ve);

      int insert_at = std::popcount(base & low);  // members below position p
      std::vector<std::int8_t> with_v;
      with_v.reserve(up.size() + 2);
      with_v.insert(with_v.end(), up.begin(), up.begin() + 2 * insert_at);
      with_v.push_back(static_cast<std::int8_t>(vi));
      with_v.push_back(static_cast<std::int8_t>(ve));
      with_v.insert(with_v.end(), up.begin() + 2 * insert_at, up.end());

      auto witness = e.witness;
      witness[v / 64] |= std::uint64_t{1} << (v % 64);
      combine(t, make_key(base | (std::uint32_t{1} << p), true, with_v),
              e.size + 1, std::move(witness));
    }
    return t;
  }

  Table forget(const NiceNode& node, const Table& child,
               const std::vector<int>& child_bag) const {
    const int v = node.vertex;
    const int p = static_cast<int>(
        std::lower_bound(child_bag.begin(), child_bag.end(), v) -
        child_bag.begin());
    const std::uint32_t low = (std::uint32_t{1} << p) - 1;

    Table t;
    for (const auto& [key, e] : child) {
      std::uint32_t cmask = key_mask(key);
      bool flag = key_flag(key);
      auto coords = key_coords(key);
      std::uint32_t base = ((cmask >> (p + 1)) << p) | (cmask & low);
      if (!(cmask >> p & 1)) {
        combine(t, make_key(base, flag, coords), e.size, e.witness);
        continue;
      }
      int idx = std::popcount(cmask & low);
      // The forgotten vertex sees no further neighbors: both conditions
      // become final now.
      if (coords[2 * idx] < 0 || coords[2 * idx + 1] < 0) continue;
      coords.erase(coords.begin() + 2 * idx, coords.begin() + 2 * idx + 2);
      assert(flag);
      combine(t, make_key(base, true, coords), e.size, e.witness);
    }
    return t;
  }

  Table join(const NiceNode& node, const Table& left,
             const Table& right) const {
    const std::vector<int>& bag = node.bag;
    // Bag-internal deltas, subtracted once per member when merging.
    auto internal = [&](std::uint32_t mask) {
      std::vector<std::pair<int, int>> base;
      std::vector<int> members;
      for (int q = 0; q < static_cast<int>(bag.size()); ++q)
        if (mask >> q & 1) members.push_back(bag[q]);
      for (int u : members) {
        int di = 1, de = 0;
        for (int w : members)
          if (w != u) {
            int sv = sign_value(u, w);
            di += sv;
            if (sv != 0) ++de;
          }
        base.push_back({di, de - g.negative_degree(u) + 1});
      }
      return base;
    };

    std::unordered_map<std::uint32_t, std::vector<const std::string*>> by_mask;
    for (const auto& [key, e] : right) by_mask[key_mask(key)].push_back(&key);

    Table t;
    for (const auto& [lkey, le] : left) {
      std::uint32_t mask = key_mask(lkey);
      auto bucket = by_mask.find(mask);
      if (bucket == by_mask.end()) continue;
      auto lcoords = key_coords(lkey);
      auto base = internal(mask);
      int members = std::popcount(mask);
      for (const std::string* rkey : bucket->second) {
        const Entry& re = right.at(*rkey);
        auto rcoords = key_coords(*rkey);
        std::vector<std::int8_t> coords(2 * members);
        bool ok = true;
        for (int i = 0; i < members && ok; ++i) {
          int di = lcoords[2 * i] + rcoords[2 * i] - base[i].first;
          int de = lcoords[2 * i + 1] + rcoords[2 * i + 1] - base[i].second;
          if (di < -delta + 1 || di > delta + 1 || de < -delta + 1 ||
              de > delta + 1) {
            ok = false;
            break;
          }
          coords[2 * i] = static_cast<std::int8_t>(di);
          coords[2 * i + 1] = static_cast<std::int8_t>(de);
        }
        if (!ok) continue;
        bool flag = key_flag(lkey) || key_flag(*rkey);
        auto witness = le.witness;
        for (int w = 0; w < words; ++w) witness[w] |= re.witness[w];
        combine(t, make_key(mask, flag, coords), le.size + re.size - members,
                std::move(witness));
      }
    }
    return t;
  }
};

}  // namespace

MinAllianceResult dp_treewidth_delta(const SignedGraph& g,
                                     const NiceTreeDecomposition& ntd) {
  if (ntd.root < 0 || ntd.nodes.empty())
    throw InvalidDecomposition("empty decomposition");
  for (const NiceNode& nd : ntd.nodes)
    if (nd.bag.size() > 32)
      throw InvalidDecomposition("bag larger than 32 vertices");
  if (g.max_degree() > 120)
    throw PreconditionViolated("degree too large for table coordinates");

  Dp dp(g, ntd);
  std::vector<Table> tables(ntd.nodes.size());
  // Post-order over the rooted tree.
  std::vector<int> order, stack{ntd.root};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    const NiceNode& nd = ntd.nodes[t];
    if (nd.child1 >= 0) stack.push_back(nd.child1);
    if (nd.child2 >= 0) stack.push_back(nd.child2);
  }
  std::reverse(order.begin(), order.end());

  for (int t : order) {
    const NiceNode& nd = ntd.nodes[t];
    switch (nd.kind) {
      case NodeKind::Leaf:
        tables[t] = dp.leaf();
        break;
      case NodeKind::Introduce:
        tables[t] = dp.introduce(nd, tables[nd.child1]);
        tables[nd.child1].clear();
        break;
      case NodeKind::Forget:
        tables[t] =
            dp.forget(nd, tables[nd.child1], ntd.nodes[nd.child1].bag);
        tables[nd.child1].clear();
        break;
      case NodeKind::Join:
        tables[t] = dp.join(nd, tables[nd.child1], tables[nd.child2]);
        tables[nd.child1].clear();
        tables[nd.child2].clear();
        break;
    }
  }

  MinAllianceResult res;
  const Table& root = tables[ntd.root];
  auto it = root.find(Dp::make_key(0, true, {}));
  if (it == root.end()) return res;
  res.found = true;
  res.size = it->second.size;
  for (int v = 0; v < g.n(); ++v)
    if (it->second.witness[v / 64] >> (v % 64) & 1) res.witness.push_back(v);
  assert(static_cast<int>(res.witness.size()) == res.size);
  assert(check_alliance(g, res.witness).valid);
  return res;
}

}  // namespace sgda
