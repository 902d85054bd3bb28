#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "feyncount/count.hpp"

namespace feyncount::oracle {

/// Graph nodes: the two external points and one node per interaction line
/// (both endpoints of a wavy line collapse into one node).
enum : unsigned { kNodeX = 0, kNodeY = 1, kFirstVertexNode = 2 };

/// Largest order any oracle operation will ever enumerate.
inline constexpr Order kAbsoluteMaxOrder = 5;
/// Default cap; orders above need an explicit override.
inline constexpr Order kDefaultMaxOrder = 4;

/// Operator slots of the order-m string  H_1 ... H_m psi(x) psi^dagger(y).
///
/// Annihilation slot 0 is psi(x); creation slot 0 is psi^dagger(y). Vertex
/// i (0-based) owns slots 1 + 2i (unprimed point) and 2 + 2i (primed
/// point) on both sides. With external=false only the 2m vertex slots
/// exist, indexed from 0.
class SlotModel {
 public:
  explicit SlotModel(Order m, bool external = true);

  Order order() const noexcept { return m_; }
  bool has_external() const noexcept { return external_; }
  unsigned slot_count() const noexcept { return 2 * m_ + (external_ ? 1u : 0u); }
  unsigned node_count() const noexcept { return m_ + 2; }

  unsigned annihilation_node(unsigned slot) const { return ann_node_.at(slot); }
  unsigned creation_node(unsigned slot) const { return cre_node_.at(slot); }

  /// Human-readable slot labels ("x", "y", "x1", "x1'").
  std::string annihilation_label(unsigned slot) const;
  std::string creation_label(unsigned slot) const;

 private:
  Order m_;
  bool external_;
  std::vector<unsigned> ann_node_;
  std::vector<unsigned> cre_node_;
};

/// pairing[a] = creation slot contracted with annihilation slot a.
class WickMatching {
 public:
  WickMatching() = default;
  /// Throws std::invalid_argument unless pairing is a permutation of
  /// 0..2m for the given order.
  WickMatching(Order m, std::vector<std::uint8_t> pairing);

  Order order() const noexcept { return m_; }
  const std::vector<std::uint8_t>& pairing() const noexcept { return pairing_; }
  std::uint8_t operator[](std::size_t a) const { return pairing_[a]; }

  friend bool operator==(const WickMatching&, const WickMatching&) = default;
  friend auto operator<=>(const WickMatching& a, const WickMatching& b) {
    return a.pairing_ <=> b.pairing_;
  }

 private:
  Order m_ = 0;
  std::vector<std::uint8_t> pairing_;
};

/// Multigraph on {X, Y, v1..vm}, one edge per contraction.
struct DiagramGraph {
  unsigned node_count = 0;
  /// (node of the annihilation slot, node of the creation slot), in
  /// annihilation-slot order.
  std::vector<std::pair<unsigned, unsigned>> edges;

  /// Component label per node (smallest node id in the component).
  std::vector<unsigned> components() const;
  bool connected() const;
};

DiagramGraph diagram_graph(const WickMatching& match);

/// Orbit representative: the lexicographically smallest pairing over the
/// (2m)!!-element group of vertex relabelings and primed/unprimed swaps.
struct CanonicalDiagram {
  WickMatching matching;
  Order order() const noexcept { return matching.order(); }
  friend bool operator==(const CanonicalDiagram&, const CanonicalDiagram&) = default;
  friend auto operator<=>(const CanonicalDiagram&, const CanonicalDiagram&) = default;
};

/// Raised when a requested enumeration is above the order cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(Order requested, Order cap, const std::string& cost);
  Order requested() const noexcept { return requested_; }
  Order cap() const noexcept { return cap_; }

 private:
  Order requested_;
  Order cap_;
};

struct OracleOptions {
  /// Allows order 5 for matching enumeration (never for the orbit census).
  bool allow_order_5 = false;
  /// Worker threads; shards are fixed by the first contraction, so results
  /// do not depend on this.
  unsigned workers = 1;
};

struct MatchingCensus {
  Count total;
  Count connected;
};

/// Visits every full contraction of the order-m string with the external
/// pair, asserting that X and Y share a component, and counts connected ones.
MatchingCensus enumerate_matchings(Order m, const OracleOptions& options = {});

/// Calls visit on every full contraction (with the external pair) in
/// lexicographic order of the pairing. Single-threaded.
void for_each_matching(Order m, const std::function<void(const WickMatching&)>& visit,
                       const OracleOptions& options = {});

/// Counts contractions of the vertex-only string (no external slots).
Count enumerate_vacuum_matchings(Order m, const OracleOptions& options = {});

struct OrbitCensus {
  Count orbit_count;
  /// orbit size -> number of orbits of that size
  std::map<std::uint64_t, std::uint64_t> orbit_sizes;
  /// canonical representatives in ascending order
  std::vector<CanonicalDiagram> representatives;
};

/// Groups connected matchings into orbits under S_m x| (Z_2)^m. Capped at
/// order 4 regardless of options.
OrbitCensus orbit_census(Order m, const OracleOptions& options = {});

CanonicalDiagram canonical_form(const WickMatching& match);

/// Applies group element (vertex permutation, per-vertex swap mask) to a
/// matching. perm[i] is the image of vertex i.
WickMatching act(const WickMatching& match, const std::vector<unsigned>& perm,
                 std::uint32_t swap_mask);

/// DOT multigraph with nodes X, Y, v1..vm and one edge per contraction.
std::string export_diagram(const CanonicalDiagram& d);

/// "diagram_m{order}_{index}.dot"
std::string diagram_file_name(Order m, std::size_t index);

/// Rough cost text used in refusals, e.g. "(13)! = 6227020800 matchings".
std::string enumeration_cost(Order m);

}  // namespace feyncount::oracle
