#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace monohs {

using Vertex = std::uint32_t;

// Dense bitset over the vertex indices 0..n-1. Bits beyond n stay zero.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* s, std::size_t pos) : set_(s), pos_(pos) {}
    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}
  VertexSet(std::size_t n, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t n);
  static VertexSet single(std::size_t n, Vertex v);
  template <class It>
  static VertexSet from(std::size_t n, It first, It last) {
    VertexSet s(n);
    for (; first != last; ++first) s.insert(static_cast<Vertex>(*first));
    return s;
  }

  std::size_t universe() const { return n_; }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear();

  std::size_t count() const;
  bool empty() const;
  bool any() const { return !empty(); }
  // Smallest member, or universe() when empty.
  std::size_t first() const { return next(0); }
  // Smallest member >= from, or universe() when none.
  std::size_t next(std::size_t from) const;

  bool intersects(const VertexSet& o) const;
  bool subset_of(const VertexSet& o) const;

  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }
  // Lexicographic order on the sorted member lists.
  bool lex_less(const VertexSet& o) const;

  std::vector<Vertex> members() const;
  std::size_t hash() const;

  const_iterator begin() const { return const_iterator(this, first()); }
  const_iterator end() const { return const_iterator(this, n_); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

struct VertexSetLex {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return a.lex_less(b); }
};

}  // namespace monohs
