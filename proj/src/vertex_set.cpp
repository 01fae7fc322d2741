// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/vertex_set.hpp"

namespace pgr {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<vertex> vs) : VertexSet(universe)
{
  for (vertex v : vs)
    insert(v);
}

VertexSet VertexSet::full(std::size_t universe)
{
  VertexSet s(universe);
  for (auto& b : s.blocks_)
    b = ~Block{0};
  if (universe % 64)
    s.blocks_.back() = (Block{1} << (universe % 64)) - 1;
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::from_vector(std::size_t universe, const std::vector<vertex>& vs)
{
  VertexSet s(universe);
  for (vertex v : vs)
    s.insert(v);
  return s;
}

void VertexSet::recount()
{
  count_ = 0;
  for (Block b : blocks_)
    count_ += static_cast<std::size_t>(std::popcount(b));
}

VertexSet& VertexSet::operator|=(const VertexSet& o)
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    blocks_[i] |= o.blocks_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o)
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    blocks_[i] &= o.blocks_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o)
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    blocks_[i] &= ~o.blocks_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const
{
  VertexSet s = full(universe_);
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    s.blocks_[i] &= ~blocks_[i];
  s.count_ = universe_ - count_;
  return s;
}

bool VertexSet::subset_of(const VertexSet& o) const
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & ~o.blocks_[i])
      return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] & o.blocks_[i])
      return true;
  return false;
}

vertex VertexSet::first() const
{
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i])
      return static_cast<vertex>(i * 64 + std::countr_zero(blocks_[i]));
  return static_cast<vertex>(universe_);
}

std::vector<vertex> VertexSet::to_vector() const
{
  std::vector<vertex> out;
  out.reserve(count_);
  for_each([&](vertex v) { out.push_back(v); });
  return out;
}

} // namespace pgr
