#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lpfd {

// A set of player indices backed by a 64-bit mask. Value type, totally
// ordered by mask so it can key maps and give deterministic enumeration
// orders everywhere.
class PlayerSet {
 public:
  static constexpr int kMaxPlayers = 64;

  constexpr PlayerSet() = default;

  static constexpr PlayerSet fromMask(std::uint64_t mask) { return PlayerSet(mask); }

  static constexpr PlayerSet single(int index) { return PlayerSet(std::uint64_t{1} << index); }

  // {0, 1, ..., n-1}
  static constexpr PlayerSet firstN(int n) {
    return PlayerSet(n >= kMaxPlayers ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static PlayerSet of(std::initializer_list<int> indices) {
    PlayerSet s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  constexpr bool contains(int index) const { return (bits_ >> index) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t mask() const { return bits_; }

  constexpr PlayerSet with(int index) const { return PlayerSet(bits_ | (std::uint64_t{1} << index)); }
  constexpr PlayerSet without(int index) const { return PlayerSet(bits_ & ~(std::uint64_t{1} << index)); }

  constexpr PlayerSet operator|(PlayerSet o) const { return PlayerSet(bits_ | o.bits_); }
  constexpr PlayerSet operator&(PlayerSet o) const { return PlayerSet(bits_ & o.bits_); }
  // Set difference.
  constexpr PlayerSet operator-(PlayerSet o) const { return PlayerSet(bits_ & ~o.bits_); }

  constexpr bool subsetOf(PlayerSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool properSubsetOf(PlayerSet o) const { return subsetOf(o) && bits_ != o.bits_; }

  // Smallest contained index; only meaningful on non-empty sets.
  constexpr int first() const { return std::countr_zero(bits_); }

  friend constexpr bool operator==(PlayerSet a, PlayerSet b) = default;
  friend constexpr bool operator<(PlayerSet a, PlayerSet b) { return a.bits_ < b.bits_; }

  // Iterates contained indices in ascending order.
  class iterator {
   public:
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int i : *this) out.push_back(i);
    return out;
  }

  // All subsets of this set in ascending mask order (2^size entries).
  std::vector<PlayerSet> subsets() const {
    std::vector<PlayerSet> out;
    std::uint64_t sub = 0;
    while (true) {
      out.push_back(PlayerSet(sub));
      if (sub == bits_) break;
      sub = (sub - bits_) & bits_;
    }
    return out;
  }

 private:
  explicit constexpr PlayerSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

}  // namespace lpfd
