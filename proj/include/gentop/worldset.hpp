#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gentop {

// Finite set of worlds over a fixed universe of at most 64 worlds,
// stored as a bit mask. Two sets are comparable only when their
// universe sizes match; mixing universes throws.
class WorldSet {
 public:
  static constexpr int kMaxWorlds = 64;

  WorldSet() = default;

  explicit WorldSet(int universe_size) : n_(check_size(universe_size)) {}

  static WorldSet full(int universe_size) {
    WorldSet s(universe_size);
    s.bits_ = mask_of(s.n_);
    return s;
  }

  static WorldSet of(int universe_size, std::initializer_list<int> worlds) {
    WorldSet s(universe_size);
    for (int w : worlds) s.set(w);
    return s;
  }

  static WorldSet from_bits(int universe_size, std::uint64_t bits) {
    WorldSet s(universe_size);
    if (bits & ~mask_of(s.n_))
      throw std::invalid_argument("WorldSet: bits outside universe");
    s.bits_ = bits;
    return s;
  }

  int universe_size() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  bool test(int w) const {
    check_world(w);
    return (bits_ >> w) & 1u;
  }

  WorldSet& set(int w) {
    check_world(w);
    bits_ |= std::uint64_t{1} << w;
    return *this;
  }

  WorldSet& reset(int w) {
    check_world(w);
    bits_ &= ~(std::uint64_t{1} << w);
    return *this;
  }

  bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }

  bool subset_of(const WorldSet& o) const {
    check_universe(o);
    return (bits_ & ~o.bits_) == 0;
  }

  bool intersects(const WorldSet& o) const {
    check_universe(o);
    return (bits_ & o.bits_) != 0;
  }

  WorldSet operator|(const WorldSet& o) const {
    check_universe(o);
    return with_bits(bits_ | o.bits_);
  }

  WorldSet operator&(const WorldSet& o) const {
    check_universe(o);
    return with_bits(bits_ & o.bits_);
  }

  // Set difference.
  WorldSet operator-(const WorldSet& o) const {
    check_universe(o);
    return with_bits(bits_ & ~o.bits_);
  }

  WorldSet complement() const { return with_bits(~bits_ & mask_of(n_)); }

  bool operator==(const WorldSet& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }
  bool operator!=(const WorldSet& o) const { return !(*this == o); }

  // Canonical order: by cardinality, then by bit pattern. Used to keep
  // open-set families in a reproducible order.
  bool operator<(const WorldSet& o) const {
    check_universe(o);
    if (count() != o.count()) return count() < o.count();
    return bits_ < o.bits_;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  template <class Fn>
  void for_each(Fn fn) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  static std::uint64_t mask_of(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  static int check_size(int n) {
    if (n < 0 || n > kMaxWorlds)
      throw std::invalid_argument("WorldSet: universe size out of range");
    return n;
  }

  void check_world(int w) const {
    if (w < 0 || w >= n_)
      throw std::invalid_argument("WorldSet: world index out of range");
  }

  void check_universe(const WorldSet& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("WorldSet: mismatched universe sizes");
  }

  WorldSet with_bits(std::uint64_t b) const {
    WorldSet s(n_);
    s.bits_ = b;
    return s;
  }

  std::uint64_t bits_ = 0;
  int n_ = 0;
};

}  // namespace gentop
