// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/forcing.hpp"

namespace pgr {

std::vector<std::size_t> attractor_layers(const ParityGame& g, Player i, const VertexSet& U,
                                          const VertexSet& T)
{
  const std::size_t n = g.size();
  std::vector<std::size_t> rank(n, infinite_rank);
  std::vector<std::size_t> pending(n);
  for (vertex v = 0; v < n; ++v)
    pending[v] = g.successors(v).size();

  std::vector<vertex> layer, next;
  T.for_each([&](vertex v) {
    rank[v] = 0;
    layer.push_back(v);
  });
  // A vertex joins layer k+1 once enough of its successors sit in layers <= k.
  for (std::size_t k = 0; !layer.empty(); ++k) {
    next.clear();
    for (vertex u : layer)
      for (vertex p : g.predecessors(u)) {
        if (rank[p] != infinite_rank || !U.contains(p))
          continue;
        if (g.owner(p) == i || --pending[p] == 0) {
          rank[p] = k + 1;
          next.push_back(p);
        }
      }
    layer.swap(next);
  }
  return rank;
}

VertexSet attractor(const ParityGame& g, Player i, const VertexSet& U, const VertexSet& T)
{
  auto rank = attractor_layers(g, i, U, T);
  VertexSet s(g.size());
  for (vertex v = 0; v < g.size(); ++v)
    if (rank[v] != infinite_rank)
      s.insert(v);
  return s;
}

std::size_t attractor_rank(const ParityGame& g, Player i, const VertexSet& U, const VertexSet& T,
                           vertex v)
{
  return attractor_layers(g, i, U, T)[v];
}

bool forces(const ParityGame& g, Player i, vertex v, const VertexSet& U, const VertexSet& T)
{
  return attractor(g, i, U, T).contains(v);
}

bool diverges(const ParityGame& g, Player i, vertex v, const VertexSet& U)
{
  return !forces(g, opponent(i), v, U, U.complement());
}

bool steps(const ParityGame& g, Player i, vertex v, const VertexSet& T)
{
  auto succ = g.successors(v);
  if (g.owner(v) == i) {
    for (vertex u : succ)
      if (T.contains(u))
        return true;
    return false;
  }
  for (vertex u : succ)
    if (!T.contains(u))
      return false;
  return true;
}

} // namespace pgr
