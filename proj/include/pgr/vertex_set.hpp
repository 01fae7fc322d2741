// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pgr {

using vertex = std::uint32_t;

// Fixed-universe bit set. Up to 128 vertices live inline, so the many small
// temporaries of the fixpoint algorithms do not touch the heap.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), blocks_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<vertex> vs);

  static VertexSet full(std::size_t universe);
  static VertexSet from_vector(std::size_t universe, const std::vector<vertex>& vs);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(vertex v) const { return (blocks_[v >> 6] >> (v & 63)) & 1u; }
  void insert(vertex v)
  {
    auto& b = blocks_[v >> 6];
    const Block m = Block{1} << (v & 63);
    count_ += (b & m) == 0;
    b |= m;
  }
  void erase(vertex v)
  {
    auto& b = blocks_[v >> 6];
    const Block m = Block{1} << (v & 63);
    count_ -= (b & m) != 0;
    b &= ~m;
  }
  void clear()
  {
    for (auto& b : blocks_)
      b = 0;
    count_ = 0;
  }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool subset_of(const VertexSet& o) const;
  bool intersects(const VertexSet& o) const;
  bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && blocks_ == o.blocks_; }

  template <class F>
  void for_each(F&& f) const
  {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (Block b = blocks_[i]; b; b &= b - 1)
        f(static_cast<vertex>(i * 64 + std::countr_zero(b)));
  }
  // Smallest member; universe() if empty.
  vertex first() const;
  std::vector<vertex> to_vector() const;

private:
  using Block = std::uint64_t;
  std::size_t universe_ = 0;
  boost::container::small_vector<Block, 2> blocks_;
  std::size_t count_ = 0;

  void recount();
};

} // namespace pgr
