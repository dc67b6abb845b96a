#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace wideness {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

/**
 * Word-packed membership vector over the universe 0..n-1.
 *
 * Bits at positions >= n are always zero, so word-level operations never
 * need masking on read.
 */
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}

  /// Throws Errc::out_of_range if a member is >= universe.
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members) {
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
  }
  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  /// Unchecked in release builds; callers validate against universe().
  void insert(Vertex v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void flip(Vertex v) noexcept { words_[v / kWordBits] ^= Word{1} << (v % kWordBits); }

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator^=(const VertexSet& other) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  /// Smallest member, or universe() when empty.
  Vertex first() const noexcept;
  /// Smallest member strictly greater than v, or universe() when none.
  Vertex next(Vertex v) const noexcept;

  std::vector<Vertex> to_vector() const;

  /// Copy onto a different universe size. Throws Errc::out_of_range if a
  /// member does not fit.
  VertexSet resized(std::size_t universe) const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto offset = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * kWordBits + offset));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace wideness
