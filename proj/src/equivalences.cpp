// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/equivalences.hpp"

#include "pgr/forcing.hpp"

#include <algorithm>
#include <map>

namespace pgr {

namespace {

bool direct_transfer(const ParityGame& g, const VertexRelation& R, vertex v, vertex w)
{
  if (g.owner(v) == Player::even) {
    for (vertex v1 : g.successors(v))
      if (!steps(g, Player::even, w, R.row(v1)))
        return false;
    return true;
  }
  VertexSet reach(g.size());
  for (vertex v1 : g.successors(v))
    reach |= R.row(v1);
  return steps(g, Player::even, w, reach);
}

VertexRelation direct_sim_impl(const ParityGame& g, bool same_owner)
{
  const std::size_t n = g.size();
  VertexRelation R(n, RelationKind::preorder);
  for (vertex v = 0; v < n; ++v)
    for (vertex w = 0; w < n; ++w)
      if (g.priority(v) == g.priority(w) && (!same_owner || g.owner(v) == g.owner(w)))
        R.insert(v, w);
  for (bool changed = true; changed;) {
    changed = false;
    for (vertex v = 0; v < n; ++v)
      for (vertex w : R.row(v).to_vector())
        if (!direct_transfer(g, R, v, w)) {
          R.erase(v, w);
          changed = true;
        }
  }
  return R;
}

using Signature = std::vector<std::uint64_t>;

// Splits every class of p by the signatures.
Partition split(const Partition& p, const std::vector<Signature>& sig)
{
  std::map<std::pair<std::size_t, Signature>, std::size_t> ids;
  std::vector<std::size_t> labels(p.vertex_count());
  for (vertex v = 0; v < p.vertex_count(); ++v)
    labels[v] = ids.try_emplace({p.class_of(v), sig[v]}, ids.size()).first->second;
  return Partition(labels);
}

Signature successor_classes(const ParityGame& g, const Partition& p, vertex v)
{
  Signature s;
  for (vertex u : g.successors(v))
    s.push_back(p.class_of(u));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

template <class Refine>
Partition stabilize(const ParityGame& g, Partition p, Refine refine)
{
  for (;;) {
    Partition q = refine(g, p);
    if (q.class_count() == p.class_count())
      return q;
    p = std::move(q);
  }
}

} // namespace

VertexRelation direct_sim(const ParityGame& g) { return direct_sim_impl(g, false); }
VertexRelation strong_direct_sim(const ParityGame& g) { return direct_sim_impl(g, true); }

Partition priority_partition(const ParityGame& g)
{
  std::vector<std::size_t> labels(g.size());
  for (vertex v = 0; v < g.size(); ++v)
    labels[v] = g.priority(v);
  return Partition(labels);
}

Partition priority_owner_partition(const ParityGame& g)
{
  std::map<std::pair<priority_t, Player>, std::size_t> ids;
  std::vector<std::size_t> labels(g.size());
  for (vertex v = 0; v < g.size(); ++v)
    labels[v] = ids.try_emplace({g.priority(v), g.owner(v)}, ids.size()).first->second;
  return Partition(labels);
}

// Vertices of different owners may only share a class when each of them has
// a single successor class; the owner is part of the signature otherwise.
Partition refine_governed(const ParityGame& g, const Partition& p)
{
  std::vector<Signature> sig(g.size());
  for (vertex v = 0; v < g.size(); ++v) {
    sig[v] = successor_classes(g, p, v);
    sig[v].push_back(sig[v].size() > 1 ? static_cast<std::uint64_t>(g.owner(v)) : 2);
  }
  return split(p, sig);
}

Partition refine_strong(const ParityGame& g, const Partition& p)
{
  std::vector<Signature> sig(g.size());
  for (vertex v = 0; v < g.size(); ++v) {
    sig[v] = successor_classes(g, p, v);
    sig[v].push_back(static_cast<std::uint64_t>(g.owner(v)));
  }
  return split(p, sig);
}

// Signature of v: the classes each player can force v to through [v], and
// the players that can keep play inside [v] forever.
Partition refine_gstut(const ParityGame& g, const Partition& p)
{
  const std::uint64_t div_tag = 2 * p.class_count();
  std::vector<Signature> sig(g.size());
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const VertexSet& U = p.members(c);
    std::vector<std::size_t> targets;
    U.for_each([&](vertex v) {
      for (vertex u : g.successors(v))
        if (p.class_of(u) != c)
          targets.push_back(p.class_of(u));
    });
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

    for (Player i : {Player::even, Player::odd}) {
      const auto pi = static_cast<std::uint64_t>(i);
      for (std::size_t t : targets) {
        VertexSet A = attractor(g, i, U, p.members(t));
        U.for_each([&](vertex v) {
          if (A.contains(v))
            sig[v].push_back(2 * t + pi);
        });
      }
      VertexSet escape = attractor(g, opponent(i), U, U.complement());
      U.for_each([&](vertex v) {
        if (!escape.contains(v))
          sig[v].push_back(div_tag + pi);
      });
    }
  }
  return split(p, sig);
}

Partition governed_bisim(const ParityGame& g) { return stabilize(g, priority_partition(g), refine_governed); }
Partition strong_bisim(const ParityGame& g) { return stabilize(g, priority_owner_partition(g), refine_strong); }
Partition gstut_bisim(const ParityGame& g) { return stabilize(g, priority_partition(g), refine_gstut); }
Partition stut_bisim(const ParityGame& g) { return stabilize(g, priority_owner_partition(g), refine_gstut); }

} // namespace pgr
