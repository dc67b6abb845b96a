#include "wideness/vertex_set.hpp"

#include <string>

#include "wideness/error.hpp"

namespace wideness {

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet set(universe);
  for (Vertex v : members) {
    if (v >= universe)
      throw Error(Errc::out_of_range, "vertex " + std::to_string(v) +
                                          " outside universe of size " +
                                          std::to_string(universe));
    set.insert(v);
  }
  return set;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet set(universe);
  for (auto& w : set.words_) w = ~Word{0};
  if (const std::size_t tail = universe % kWordBits; tail != 0)
    set.words_.back() = (Word{1} << tail) - 1;
  return set;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
    words_[i] ^= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Vertex>(w * kWordBits + std::countr_zero(words_[w]));
  return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const noexcept {
  std::size_t pos = std::size_t{v} + 1;
  if (pos >= universe_) return static_cast<Vertex>(universe_);
  std::size_t w = pos / kWordBits;
  Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (bits != 0) return static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
    if (++w == words_.size()) return static_cast<Vertex>(universe_);
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::resized(std::size_t universe) const {
  VertexSet out(universe);
  for_each([&](Vertex v) {
    if (v >= universe)
      throw Error(Errc::out_of_range, "vertex " + std::to_string(v) +
                                          " outside universe of size " +
                                          std::to_string(universe));
    out.insert(v);
  });
  return out;
}

}  // namespace wideness
