#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "feyncount/count.hpp"

namespace feyncount {

/// Ordered sequence of positive parts with a cached total.
class Composition {
 public:
  Composition() = default;
  /// Throws std::invalid_argument if any part is zero.
  explicit Composition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const noexcept { return parts_; }
  unsigned total() const noexcept { return total_; }
  std::size_t size() const noexcept { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  /// "4+1", "1+1+3"; the empty composition renders as "".
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  friend Composition composition_from_mask(unsigned n, std::uint64_t mask);
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

/// Part value -> multiplicity.
using PartMultiset = std::map<unsigned, unsigned>;

/// Largest n whose compositions can be enumerated (cut masks are 64 bits).
inline constexpr unsigned kMaxCompositionTotal = 64;

/// Composition of n encoded by a cut mask: bit i set means a cut between
/// positions i+1 and i+2. Requires mask < 2^(n-1).
Composition composition_from_mask(unsigned n, std::uint64_t mask);

/// Lazy stream over the compositions of n in ascending cut-mask order.
///
/// Mask 0 is the single part [n]; mask 2^(n-1)-1 is [1,...,1]. A range can
/// be restricted to a half-open mask window, which is how long sums are
/// sharded; concatenating the windows reproduces the full order exactly.
/// n = 0 yields one empty composition.
class CompositionRange {
 public:
  explicit CompositionRange(unsigned n);
  CompositionRange(unsigned n, std::uint64_t first_mask, std::uint64_t last_mask);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    std::uint64_t mask() const noexcept { return mask_; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    friend class CompositionRange;
    iterator(unsigned n, std::uint64_t mask, std::uint64_t end);
    void load();

    unsigned n_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t end_ = 0;
    Composition current_;
  };

  iterator begin() const { return iterator(n_, first_, last_); }
  iterator end() const { return iterator(n_, last_, last_); }

  /// Number of masks in this window.
  std::uint64_t size() const noexcept { return last_ - first_; }
  unsigned total() const noexcept { return n_; }

  /// Total number of masks for n: 2^(n-1), or 1 for n = 0.
  static std::uint64_t mask_count(unsigned n);

 private:
  unsigned n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

inline CompositionRange enumerate_compositions(unsigned n) { return CompositionRange(n); }

/// 2^(n-1) exactly; 1 for n = 0.
Count count_compositions(unsigned n);

PartMultiset part_multiset(const Composition& c);

/// (sum M_k)! / prod M_k!: the number of orderings of the multiset.
/// Throws std::invalid_argument on an empty multiset, a zero part or a
/// zero multiplicity.
Count multiset_multiplicity(const PartMultiset& ms);

/// Sum of n_k * M_k.
unsigned multiset_total(const PartMultiset& ms);

}  // namespace feyncount
