#include "feyncount/compositions.hpp"

#include <numeric>
#include <stdexcept>

namespace feyncount {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_) {
    if (p == 0) throw std::invalid_argument("composition parts must be positive");
    total_ += p;
  }
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition composition_from_mask(unsigned n, std::uint64_t mask) {
  if (n > kMaxCompositionTotal) throw std::out_of_range("composition total exceeds 64");
  if (mask >= CompositionRange::mask_count(n))
    throw std::out_of_range("cut mask out of range for composition total");
  Composition c;
  c.total_ = n;
  if (n == 0) return c;
  unsigned run = 1;
  for (unsigned bit = 0; bit + 1 < n; ++bit) {
    if (mask >> bit & 1u) {
      c.parts_.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  c.parts_.push_back(run);
  return c;
}

std::uint64_t CompositionRange::mask_count(unsigned n) {
  if (n > kMaxCompositionTotal) throw std::out_of_range("composition total exceeds 64");
  return n == 0 ? 1 : std::uint64_t{1} << (n - 1);
}

CompositionRange::CompositionRange(unsigned n)
    : n_(n), first_(0), last_(mask_count(n)) {}

CompositionRange::CompositionRange(unsigned n, std::uint64_t first_mask,
                                   std::uint64_t last_mask)
    : n_(n), first_(first_mask), last_(last_mask) {
  if (first_ > last_ || last_ > mask_count(n))
    throw std::out_of_range("invalid composition mask window");
}

CompositionRange::iterator::iterator(unsigned n, std::uint64_t mask, std::uint64_t end)
    : n_(n), mask_(mask), end_(end) {
  load();
}

void CompositionRange::iterator::load() {
  if (mask_ < end_) current_ = composition_from_mask(n_, mask_);
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  ++mask_;
  load();
  return *this;
}

Count count_compositions(unsigned n) {
  if (n == 0) return 1;
  return Count(1) << (n - 1);
}

PartMultiset part_multiset(const Composition& c) {
  PartMultiset ms;
  for (unsigned p : c) ++ms[p];
  return ms;
}

unsigned multiset_total(const PartMultiset& ms) {
  unsigned total = 0;
  for (const auto& [part, mult] : ms) total += part * mult;
  return total;
}

Count multiset_multiplicity(const PartMultiset& ms) {
  if (ms.empty()) throw std::invalid_argument("part multiset must be non-empty");
  // Built up one block at a time: binom(placed + M_k, M_k).
  Count result = 1;
  unsigned placed = 0;
  for (const auto& [part, mult] : ms) {
    if (part == 0 || mult == 0)
      throw std::invalid_argument("part multiset entries must be positive");
    for (unsigned j = 1; j <= mult; ++j) {
      result *= placed + j;
      result /= j;
    }
    placed += mult;
  }
  return result;
}

}  // namespace feyncount
