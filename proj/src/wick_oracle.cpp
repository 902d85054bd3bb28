#include "feyncount/wick_oracle.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace feyncount::oracle {

namespace {

constexpr unsigned kMaxSlots = 2 * kAbsoluteMaxOrder + 1;
using SlotArray = std::array<std::uint8_t, kMaxSlots>;

// 4 bits per slot with slot 0 most significant, so integer order equals
// lexicographic order of the pairing.
std::uint64_t encode(const SlotArray& p, unsigned slots) {
  std::uint64_t key = 0;
  for (unsigned s = 0; s < slots; ++s) key = key << 4 | p[s];
  return key;
}

std::vector<std::uint8_t> decode(std::uint64_t key, unsigned slots) {
  std::vector<std::uint8_t> p(slots);
  for (unsigned s = slots; s-- > 0;) {
    p[s] = static_cast<std::uint8_t>(key & 0xF);
    key >>= 4;
  }
  return p;
}

void check_order(Order m, Order cap, const char* what) {
  if (m < 1) throw std::domain_error(std::string(what) + ": order must be at least 1");
  if (m > cap) throw OracleCapExceeded(m, cap, enumeration_cost(m));
}

Order matching_cap(const OracleOptions& options) {
  return options.allow_order_5 ? kAbsoluteMaxOrder : kDefaultMaxOrder;
}

// Slot maps for every element of S_m x| (Z_2)^m acting on an order-m
// string with external slots. Order: permutations lexicographic, then swap
// mask ascending; element 0 is the identity.
std::vector<SlotArray> group_slot_maps(Order m) {
  std::vector<SlotArray> maps;
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    for (std::uint32_t swap = 0; swap < (1u << m); ++swap) {
      SlotArray g{};
      g[0] = 0;
      for (unsigned i = 0; i < m; ++i) {
        for (unsigned p = 0; p < 2; ++p) {
          const unsigned q = p ^ (swap >> i & 1u);
          g[1 + 2 * i + p] = static_cast<std::uint8_t>(1 + 2 * perm[i] + q);
        }
      }
      maps.push_back(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

std::uint64_t canonical_key(const SlotArray& pairing, unsigned slots,
                            const std::vector<SlotArray>& group) {
  std::uint64_t best = ~std::uint64_t{0};
  SlotArray image{};
  for (const SlotArray& g : group) {
    for (unsigned a = 0; a < slots; ++a) image[g[a]] = g[pairing[a]];
    best = std::min(best, encode(image, slots));
  }
  return best;
}

// Bitmask reachability from X over the collapsed multigraph.
struct Connectivity {
  unsigned node_count;
  std::vector<unsigned> ann_node;
  std::vector<unsigned> cre_node;

  explicit Connectivity(const SlotModel& model) : node_count(model.node_count()) {
    for (unsigned s = 0; s < model.slot_count(); ++s) {
      ann_node.push_back(model.annihilation_node(s));
      cre_node.push_back(model.creation_node(s));
    }
  }

  std::uint32_t reach_from_x(const SlotArray& pairing) const {
    std::array<std::uint32_t, kAbsoluteMaxOrder + 2> adj{};
    for (unsigned a = 0; a < ann_node.size(); ++a) {
      const unsigned u = ann_node[a];
      const unsigned v = cre_node[pairing[a]];
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    std::uint32_t seen = 1u << kNodeX;
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (unsigned u = 0; u < node_count; ++u)
        if (frontier >> u & 1u) next |= adj[u];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen;
  }
};

// Runs fn(shard) for shard = 0..shards-1 across workers; each shard is
// handled by exactly one worker.
template <class Fn>
void run_sharded(unsigned shards, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min(workers, shards));
  if (workers == 1) {
    for (unsigned s = 0; s < shards; ++s) fn(s);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (unsigned s = w; s < shards; s += workers) fn(s);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Visits every pairing whose first contraction is fixed to `first`, in
// lexicographic order.
template <class Visit>
void for_each_in_shard(unsigned slots, unsigned first, Visit&& visit) {
  SlotArray p{};
  p[0] = static_cast<std::uint8_t>(first);
  unsigned k = 1;
  for (unsigned c = 0; c < slots; ++c)
    if (c != first) p[k++] = static_cast<std::uint8_t>(c);
  do {
    visit(p);
  } while (std::next_permutation(p.begin() + 1, p.begin() + slots));
}

struct ShardCounts {
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
};

}  // namespace

SlotModel::SlotModel(Order m, bool external) : m_(m), external_(external) {
  if (m > kAbsoluteMaxOrder) throw OracleCapExceeded(m, kAbsoluteMaxOrder, enumeration_cost(m));
  if (external_) {
    ann_node_.push_back(kNodeX);
    cre_node_.push_back(kNodeY);
  }
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned p = 0; p < 2; ++p) {
      ann_node_.push_back(kFirstVertexNode + i);
      cre_node_.push_back(kFirstVertexNode + i);
    }
  }
}

namespace {
std::string vertex_label(unsigned vertex_slot) {
  return "x" + std::to_string(vertex_slot / 2 + 1) + (vertex_slot % 2 ? "'" : "");
}
}  // namespace

std::string SlotModel::annihilation_label(unsigned slot) const {
  if (slot >= slot_count()) throw std::out_of_range("annihilation slot out of range");
  if (external_) return slot == 0 ? "x" : vertex_label(slot - 1);
  return vertex_label(slot);
}

std::string SlotModel::creation_label(unsigned slot) const {
  if (slot >= slot_count()) throw std::out_of_range("creation slot out of range");
  if (external_) return slot == 0 ? "y" : vertex_label(slot - 1);
  return vertex_label(slot);
}

WickMatching::WickMatching(Order m, std::vector<std::uint8_t> pairing)
    : m_(m), pairing_(std::move(pairing)) {
  if (m > kAbsoluteMaxOrder) throw std::invalid_argument("matching order above oracle limit");
  if (pairing_.size() != 2 * m + 1)
    throw std::invalid_argument("matching must pair 2m+1 annihilation slots");
  std::vector<bool> used(pairing_.size(), false);
  for (auto c : pairing_) {
    if (c >= pairing_.size() || used[c])
      throw std::invalid_argument("matching is not a bijection onto creation slots");
    used[c] = true;
  }
}

std::vector<unsigned> DiagramGraph::components() const {
  std::vector<unsigned> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned u) {
    while (parent[u] != u) u = parent[u] = parent[parent[u]];
    return u;
  };
  for (auto [u, v] : edges) {
    const unsigned ru = find(u), rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  std::vector<unsigned> label(node_count);
  for (unsigned u = 0; u < node_count; ++u) label[u] = find(u);
  return label;
}

bool DiagramGraph::connected() const {
  const auto label = components();
  return std::all_of(label.begin(), label.end(), [](unsigned l) { return l == 0; });
}

DiagramGraph diagram_graph(const WickMatching& match) {
  const SlotModel model(match.order());
  DiagramGraph g;
  g.node_count = model.node_count();
  for (unsigned a = 0; a < model.slot_count(); ++a)
    g.edges.emplace_back(model.annihilation_node(a), model.creation_node(match[a]));
  return g;
}

OracleCapExceeded::OracleCapExceeded(Order requested, Order cap, const std::string& cost)
    : std::runtime_error("order " + std::to_string(requested) + " exceeds oracle cap " +
                         std::to_string(cap) + "; enumeration would visit " + cost),
      requested_(requested),
      cap_(cap) {}

std::string enumeration_cost(Order m) {
  Count f = 1;
  for (unsigned k = 2; k <= 2 * m + 1; ++k) f *= k;
  return "(" + std::to_string(2 * m + 1) + ")! = " + f.str() + " matchings";
}

MatchingCensus enumerate_matchings(Order m, const OracleOptions& options) {
  check_order(m, matching_cap(options), "enumerate_matchings");
  const SlotModel model(m);
  const Connectivity conn(model);
  const unsigned slots = model.slot_count();
  const std::uint32_t all_nodes = (1u << model.node_count()) - 1;
  const std::uint32_t y_bit = 1u << kNodeY;

  std::vector<ShardCounts> per_shard(slots);
  run_sharded(slots, options.workers, [&](unsigned shard) {
    ShardCounts counts;
    for_each_in_shard(slots, shard, [&](const SlotArray& p) {
      const std::uint32_t reach = conn.reach_from_x(p);
      if (!(reach & y_bit))
        throw std::logic_error("external points X and Y fell into different components");
      ++counts.total;
      if (reach == all_nodes) ++counts.connected;
    });
    per_shard[shard] = counts;
  });

  MatchingCensus census{0, 0};
  for (const auto& s : per_shard) {
    census.total += s.total;
    census.connected += s.connected;
  }
  return census;
}

void for_each_matching(Order m, const std::function<void(const WickMatching&)>& visit,
                       const OracleOptions& options) {
  check_order(m, matching_cap(options), "for_each_matching");
  const unsigned slots = 2 * m + 1;
  for (unsigned shard = 0; shard < slots; ++shard) {
    for_each_in_shard(slots, shard, [&](const SlotArray& p) {
      visit(WickMatching(m, std::vector<std::uint8_t>(p.begin(), p.begin() + slots)));
    });
  }
}

Count enumerate_vacuum_matchings(Order m, const OracleOptions& options) {
  check_order(m, matching_cap(options), "enumerate_vacuum_matchings");
  const SlotModel model(m, /*external=*/false);
  const unsigned slots = model.slot_count();
  std::vector<std::uint64_t> per_shard(slots, 0);
  run_sharded(slots, options.workers, [&](unsigned shard) {
    std::uint64_t n = 0;
    for_each_in_shard(slots, shard, [&](const SlotArray&) { ++n; });
    per_shard[shard] = n;
  });
  Count total = 0;
  for (auto n : per_shard) total += n;
  return total;
}

OrbitCensus orbit_census(Order m, const OracleOptions& options) {
  // The census is never run above the default cap.
  check_order(m, kDefaultMaxOrder, "orbit_census");
  const SlotModel model(m);
  const Connectivity conn(model);
  const unsigned slots = model.slot_count();
  const std::uint32_t all_nodes = (1u << model.node_count()) - 1;
  const auto group = group_slot_maps(m);

  using KeyCounts = std::unordered_map<std::uint64_t, std::uint64_t>;
  std::vector<KeyCounts> per_shard(slots);
  run_sharded(slots, options.workers, [&](unsigned shard) {
    KeyCounts& counts = per_shard[shard];
    for_each_in_shard(slots, shard, [&](const SlotArray& p) {
      if (conn.reach_from_x(p) != all_nodes) return;
      ++counts[canonical_key(p, slots, group)];
    });
  });

  KeyCounts merged;
  for (const auto& shard : per_shard)
    for (const auto& [key, n] : shard) merged[key] += n;

  std::vector<std::uint64_t> keys;
  keys.reserve(merged.size());
  OrbitCensus census;
  for (const auto& [key, size] : merged) {
    keys.push_back(key);
    ++census.orbit_sizes[size];
  }
  std::sort(keys.begin(), keys.end());
  census.orbit_count = keys.size();
  census.representatives.reserve(keys.size());
  for (auto key : keys)
    census.representatives.push_back({WickMatching(m, decode(key, slots))});
  return census;
}

WickMatching act(const WickMatching& match, const std::vector<unsigned>& perm,
                 std::uint32_t swap_mask) {
  const Order m = match.order();
  if (perm.size() != m) throw std::invalid_argument("vertex permutation has wrong size");
  std::vector<bool> seen(m, false);
  for (unsigned v : perm) {
    if (v >= m || seen[v]) throw std::invalid_argument("vertex map is not a permutation");
    seen[v] = true;
  }
  std::vector<std::uint8_t> g(2 * m + 1);
  g[0] = 0;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned p = 0; p < 2; ++p)
      g[1 + 2 * i + p] = static_cast<std::uint8_t>(1 + 2 * perm[i] + (p ^ (swap_mask >> i & 1u)));
  std::vector<std::uint8_t> image(g.size());
  for (unsigned a = 0; a < g.size(); ++a) image[g[a]] = g[match[a]];
  return WickMatching(m, std::move(image));
}

CanonicalDiagram canonical_form(const WickMatching& match) {
  const Order m = match.order();
  const unsigned slots = 2 * m + 1;
  SlotArray p{};
  std::copy(match.pairing().begin(), match.pairing().end(), p.begin());
  const auto key = canonical_key(p, slots, group_slot_maps(m));
  return {WickMatching(m, decode(key, slots))};
}

std::string export_diagram(const CanonicalDiagram& d) {
  const Order m = d.order();
  const SlotModel model(m);
  auto node_name = [](unsigned node) -> std::string {
    if (node == kNodeX) return "X";
    if (node == kNodeY) return "Y";
    return "v" + std::to_string(node - kFirstVertexNode + 1);
  };
  std::ostringstream out;
  out << "graph diagram_m" << m << " {\n";
  for (unsigned node = 0; node < model.node_count(); ++node) out << "  " << node_name(node) << ";\n";
  for (unsigned a = 0; a < model.slot_count(); ++a) {
    const unsigned c = d.matching[a];
    out << "  " << node_name(model.annihilation_node(a)) << " -- "
        << node_name(model.creation_node(c)) << " [label=\"" << model.annihilation_label(a)
        << "|" << model.creation_label(c) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string diagram_file_name(Order m, std::size_t index) {
  return "diagram_m" + std::to_string(m) + "_" + std::to_string(index) + ".dot";
}

}  // namespace feyncount::oracle
