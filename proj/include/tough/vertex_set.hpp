#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace tough {

using Vertex = std::size_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Raw word-span helpers shared by the search kernels. All spans passed to a
// single call must have the same length.
namespace bits {

inline bool test(std::span<const Word> w, Vertex v) { return (w[v / kWordBits] >> (v % kWordBits)) & 1U; }
inline void set(std::span<Word> w, Vertex v) { w[v / kWordBits] |= Word{1} << (v % kWordBits); }
inline void reset(std::span<Word> w, Vertex v) { w[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x) return true;
  return false;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

// Index of the lowest set bit at or after `from`, or `npos` when none.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t find_next(std::span<const Word> w, std::size_t from) {
  std::size_t wi = from / kWordBits;
  if (wi >= w.size()) return npos;
  Word cur = w[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++wi >= w.size()) return npos;
    cur = w[wi];
  }
}

inline std::size_t find_first(std::span<const Word> w) { return find_next(w, 0); }

template <class F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    Word cur = w[wi];
    while (cur) {
      f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(cur)));
      cur &= cur - 1;
    }
  }
}

}  // namespace bits

/// Set of vertices of a graph with `universe()` vertices, stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_(words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    return s;
  }
  static VertexSet from_words(std::size_t universe, std::span<const Word> w) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = w[i];
    return s;
  }

  std::size_t universe() const { return n_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  bool contains(Vertex v) const { return v < n_ && bits::test(words_, v); }
  void insert(Vertex v) {
    if (v >= n_) throw std::out_of_range("vertex index outside the vertex-set universe");
    bits::set(words_, v);
  }
  void erase(Vertex v) {
    if (v < n_) bits::reset(words_, v);
  }
  std::size_t size() const { return bits::count(words_); }
  bool empty() const { return !bits::any(words_); }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    bits::for_each(words_, [&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet complement() const {
    VertexSet r = full(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~words_[i];
    return r;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.n_ == b.n_ && a.words_ == b.words_; }

  // Lexicographic order of the sorted member lists; a proper prefix sorts first.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    std::size_t x = bits::find_first(a.words_);
    std::size_t y = bits::find_first(b.words_);
    while (x != bits::npos && y != bits::npos) {
      if (x != y) return x < y;
      x = bits::find_next(a.words_, x + 1);
      y = bits::find_next(b.words_, y + 1);
    }
    return x == bits::npos && y != bits::npos;
  }

 private:
  void check_same(const VertexSet& o) const {
    if (o.n_ != n_) throw std::invalid_argument("vertex sets over different universes");
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

struct LexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return lex_less(a, b); }
};

}  // namespace tough
