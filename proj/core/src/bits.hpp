#ifndef FCNLAB_SRC_BITS_HPP
#define FCNLAB_SRC_BITS_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace fcnlab::detail {

/// Fixed-width vertex set for the search engines; W words hold 64*W
/// vertices. Trivially copyable so search states can be copied per node.
template <std::size_t W>
struct Bits {
  static constexpr unsigned kCapacity = 64 * W;
  std::array<std::uint64_t, W> w{};

  void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(unsigned i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

  unsigned count() const {
    unsigned c = 0;
    for (auto x : w) c += static_cast<unsigned>(std::popcount(x));
    return c;
  }
  bool any() const {
    for (auto x : w) {
      if (x) return true;
    }
    return false;
  }
  bool none() const { return !any(); }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] & o.w[i]) return true;
    }
    return false;
  }
  /// Index of the lowest member, or -1.
  int first() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    }
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      auto x = w[i];
      while (x) {
        f(static_cast<unsigned>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= o.w[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  /// a minus b.
  friend Bits minus(Bits a, const Bits& b) {
    for (std::size_t i = 0; i < W; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  friend bool operator==(const Bits&, const Bits&) = default;
};

}  // namespace fcnlab::detail

#endif  // FCNLAB_SRC_BITS_HPP
