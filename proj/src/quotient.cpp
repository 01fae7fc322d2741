// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/quotient.hpp"

#include "pgr/equivalences.hpp"
#include "pgr/forcing.hpp"
#include "pgr/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace pgr {

const char* to_string(Equivalence e)
{
  switch (e) {
  case Equivalence::strong_bisim:
    return "strong-bisim";
  case Equivalence::governed_bisim:
    return "governed-bisim";
  case Equivalence::stut_bisim:
    return "stut";
  case Equivalence::gstut_bisim:
    return "gstut";
  case Equivalence::direct_sim:
    return "direct-sim";
  }
  return "?";
}

const char* supported_equivalences() { return "strong-bisim|governed-bisim|stut|gstut|direct-sim"; }

std::optional<Equivalence> parse_equivalence(std::string_view name)
{
  for (auto e : {Equivalence::strong_bisim, Equivalence::governed_bisim, Equivalence::stut_bisim,
                 Equivalence::gstut_bisim, Equivalence::direct_sim})
    if (name == to_string(e))
      return e;
  return std::nullopt;
}

Partition classes_of(const ParityGame& g, Equivalence e)
{
  switch (e) {
  case Equivalence::strong_bisim:
    return strong_bisim(g);
  case Equivalence::governed_bisim:
    return governed_bisim(g);
  case Equivalence::stut_bisim:
    return stut_bisim(g);
  case Equivalence::gstut_bisim:
    return gstut_bisim(g);
  case Equivalence::direct_sim:
    return equivalence_from_preorder(direct_sim(g));
  }
  throw std::invalid_argument("unknown equivalence");
}

VertexSet min_successors(const ParityGame& g, const VertexRelation& R, vertex v)
{
  VertexSet out(g.size());
  for (vertex x : g.successors(v)) {
    bool minimal = true;
    for (vertex u : g.successors(v))
      if (R.contains(u, x) && !R.contains(x, u))
        minimal = false;
    if (minimal)
      out.insert(x);
  }
  return out;
}

VertexSet max_successors(const ParityGame& g, const VertexRelation& R, vertex v)
{
  VertexSet out(g.size());
  for (vertex x : g.successors(v)) {
    bool maximal = true;
    for (vertex u : g.successors(v))
      if (R.contains(x, u) && !R.contains(u, x))
        maximal = false;
    if (maximal)
      out.insert(x);
  }
  return out;
}

namespace {

using ClassSet = std::vector<std::size_t>;

ClassSet classes_in(const Partition& p, const VertexSet& s)
{
  ClassSet out;
  s.for_each([&](vertex v) { out.push_back(p.class_of(v)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool all_owned(const ParityGame& g, const VertexSet& C, Player p)
{
  bool all = true;
  C.for_each([&](vertex v) { all = all && g.owner(v) == p; });
  return all;
}

// Quotient skeleton: one vertex per class, minimum priority; the callbacks
// decide owner and edges.
QuotientResult assemble(const ParityGame& g, const Partition& p, Equivalence kind,
                        const std::function<Player(std::size_t)>& owner,
                        const std::function<bool(std::size_t, std::size_t)>& edge)
{
  const std::size_t m = p.class_count();
  std::vector<priority_t> prio(m);
  std::vector<Player> own(m);
  std::vector<std::vector<vertex>> succ(m);
  for (std::size_t c = 0; c < m; ++c) {
    priority_t lo = ~priority_t(0);
    p.members(c).for_each([&](vertex v) { lo = std::min(lo, g.priority(v)); });
    prio[c] = lo;
    own[c] = owner(c);
    for (std::size_t d = 0; d < m; ++d)
      if (edge(c, d))
        succ[c].push_back(static_cast<vertex>(d));
  }
  QuotientResult r{ParityGame(std::move(prio), std::move(own), std::move(succ)), {}, kind, p};
  for (vertex v = 0; v < g.size(); ++v)
    r.class_map.push_back(static_cast<vertex>(r.partition.class_of(v)));
  return r;
}

} // namespace

QuotientResult quotient_direct_sim(const ParityGame& g)
{
  const VertexRelation R = direct_sim(g);
  Partition p = equivalence_from_preorder(R);
  const std::size_t m = p.class_count();
  std::vector<ClassSet> min_cls(g.size()), max_cls(g.size());
  for (vertex v = 0; v < g.size(); ++v) {
    min_cls[v] = classes_in(p, min_successors(g, R, v));
    max_cls[v] = classes_in(p, max_successors(g, R, v));
  }
  std::vector<bool> odd_class(m);
  for (std::size_t c = 0; c < m; ++c) {
    const VertexSet& C = p.members(c);
    odd_class[c] = all_owned(g, C, Player::odd);
    // Well-definedness: members agree on their minimal (Odd) / maximal
    // (Even) successor classes; a mixed class has one successor class.
    const vertex first = C.first();
    C.for_each([&](vertex v) {
      bool ok = true;
      if (odd_class[c])
        ok = min_cls[v] == min_cls[first];
      else if (all_owned(g, C, Player::even))
        ok = max_cls[v] == max_cls[first];
      else {
        const ClassSet& mine = g.owner(v) == Player::even ? max_cls[v] : min_cls[v];
        ok = mine.size() == 1 &&
             mine == (g.owner(first) == Player::even ? max_cls[first] : min_cls[first]);
      }
      if (!ok)
        throw std::logic_error("direct simulation classes disagree on successor classes");
    });
  }
  auto owner = [&](std::size_t c) {
    if (!odd_class[c])
      return Player::even;
    bool many = true;
    p.members(c).for_each([&](vertex u) { many = many && min_cls[u].size() > 1; });
    return many ? Player::odd : Player::even;
  };
  auto edge = [&](std::size_t c, std::size_t d) {
    bool all = true;
    p.members(c).for_each([&](vertex v) {
      if (odd_class[c])
        all = all && std::binary_search(min_cls[v].begin(), min_cls[v].end(), d);
      else if (g.owner(v) == Player::even)
        all = all && std::binary_search(max_cls[v].begin(), max_cls[v].end(), d);
    });
    return all;
  };
  return assemble(g, p, Equivalence::direct_sim, owner, edge);
}

QuotientResult quotient_governed_bisim(const ParityGame& g)
{
  Partition p = governed_bisim(g);
  std::vector<ClassSet> succ_cls(g.size());
  for (vertex v = 0; v < g.size(); ++v)
    succ_cls[v] = classes_in(p, g.successor_set(v));
  auto owner = [&](std::size_t c) {
    bool odd = all_owned(g, p.members(c), Player::odd);
    p.members(c).for_each([&](vertex u) { odd = odd && succ_cls[u].size() > 1; });
    return odd ? Player::odd : Player::even;
  };
  auto edge = [&](std::size_t c, std::size_t d) {
    bool all = true;
    p.members(c).for_each(
        [&](vertex v) { all = all && std::binary_search(succ_cls[v].begin(), succ_cls[v].end(), d); });
    return all;
  };
  return assemble(g, p, Equivalence::governed_bisim, owner, edge);
}

QuotientResult quotient_gstut(const ParityGame& g)
{
  Partition p = gstut_bisim(g);
  auto every = [&](std::size_t c, auto&& pred) {
    bool all = true;
    p.members(c).for_each([&](vertex v) { all = all && pred(v); });
    return all;
  };
  auto owner = [&](std::size_t c) {
    const VertexSet& C = p.members(c);
    if (every(c, [&](vertex v) { return diverges(g, Player::even, v, C); }))
      return Player::even;
    bool escape = false;
    C.for_each([&](vertex v) {
      for (std::size_t d = 0; d < p.class_count(); ++d)
        if (d != c && steps(g, Player::even, v, p.members(d)))
          escape = true;
    });
    return escape ? Player::even : Player::odd;
  };
  auto edge = [&](std::size_t c, std::size_t d) {
    const VertexSet& C = p.members(c);
    for (Player i : {Player::even, Player::odd}) {
      bool ok = c == d ? every(c, [&](vertex v) { return diverges(g, i, v, C); })
                       : every(c, [&](vertex v) { return forces(g, i, v, C, p.members(d)); });
      if (ok)
        return true;
    }
    return false;
  };
  return assemble(g, p, Equivalence::gstut_bisim, owner, edge);
}

QuotientResult quotient_strong_bisim(const ParityGame& g)
{
  Partition p = strong_bisim(g);
  auto owner = [&](std::size_t c) { return g.owner(p.members(c).first()); };
  auto edge = [&](std::size_t c, std::size_t d) {
    for (vertex u : g.successors(p.members(c).first()))
      if (p.class_of(u) == d)
        return true;
    return false;
  };
  return assemble(g, p, Equivalence::strong_bisim, owner, edge);
}

// Classes are single-owner; the owner i keeps control: a self-loop when i
// can diverge inside the class, an edge to every class i can force.
QuotientResult quotient_stut(const ParityGame& g)
{
  Partition p = stut_bisim(g);
  auto owner = [&](std::size_t c) { return g.owner(p.members(c).first()); };
  auto edge = [&](std::size_t c, std::size_t d) {
    const VertexSet& C = p.members(c);
    const Player i = g.owner(C.first());
    bool all = true;
    C.for_each([&](vertex v) {
      all = all && (c == d ? diverges(g, i, v, C) : forces(g, i, v, C, p.members(d)));
    });
    return all;
  };
  return assemble(g, p, Equivalence::stut_bisim, owner, edge);
}

QuotientResult quotient(const ParityGame& g, Equivalence e)
{
  switch (e) {
  case Equivalence::strong_bisim:
    return quotient_strong_bisim(g);
  case Equivalence::governed_bisim:
    return quotient_governed_bisim(g);
  case Equivalence::stut_bisim:
    return quotient_stut(g);
  case Equivalence::gstut_bisim:
    return quotient_gstut(g);
  case Equivalence::direct_sim:
    return quotient_direct_sim(g);
  }
  throw std::invalid_argument("unknown equivalence");
}

// Isomorphism ----------------------------------------------------------------

namespace {

// Colour refinement run jointly on both games so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> joint_colours(const ParityGame& a,
                                                                           const ParityGame& b)
{
  const ParityGame u = disjoint_union(a, b);
  using Key = std::vector<std::uint64_t>;
  std::vector<std::size_t> colour(u.size());
  {
    std::map<Key, std::size_t> ids;
    for (vertex v = 0; v < u.size(); ++v) {
      Key k{u.priority(v), static_cast<std::uint64_t>(u.owner(v)), u.successors(v).size(),
            u.predecessors(v).size()};
      colour[v] = ids.try_emplace(k, ids.size()).first->second;
    }
  }
  for (std::size_t count = 0;;) {
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> next(u.size());
    for (vertex v = 0; v < u.size(); ++v) {
      Key k{colour[v]}, in;
      for (vertex x : u.successors(v))
        k.push_back(colour[x]);
      std::sort(k.begin() + 1, k.end());
      for (vertex x : u.predecessors(v))
        in.push_back(colour[x]);
      std::sort(in.begin(), in.end());
      k.push_back(~std::uint64_t(0));
      k.insert(k.end(), in.begin(), in.end());
      next[v] = ids.try_emplace(k, ids.size()).first->second;
    }
    colour.swap(next);
    if (ids.size() == count)
      break;
    count = ids.size();
  }
  std::vector<std::size_t> ca(colour.begin(), colour.begin() + a.size());
  std::vector<std::size_t> cb(colour.begin() + a.size(), colour.end());
  return {ca, cb};
}

} // namespace

std::optional<std::vector<vertex>> find_isomorphism(const ParityGame& a, const ParityGame& b,
                                                    std::optional<std::pair<vertex, vertex>> pin)
{
  if (a.size() > iso_size_limit || b.size() > iso_size_limit)
    throw std::length_error("isomorphism check limited to " + std::to_string(iso_size_limit) + " vertices");
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count())
    return std::nullopt;
  auto [ca, cb] = joint_colours(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return std::nullopt;
  }
  std::vector<VertexSet> adj_a, adj_b;
  for (vertex v = 0; v < n; ++v) {
    adj_a.push_back(a.successor_set(v));
    adj_b.push_back(b.successor_set(v));
  }

  // Most constrained vertices first: rare colours, pinned vertex at the front.
  std::vector<std::size_t> freq(2 * n + 1, 0);
  for (auto c : ca)
    ++freq[c];
  std::vector<vertex> order(n);
  for (vertex v = 0; v < n; ++v)
    order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](vertex x, vertex y) { return freq[ca[x]] < freq[ca[y]]; });
  if (pin) {
    if (ca[pin->first] != cb[pin->second])
      return std::nullopt;
    std::stable_partition(order.begin(), order.end(), [&](vertex v) { return v == pin->first; });
  }

  std::vector<vertex> map(n, static_cast<vertex>(n));
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n)
      return true;
    const vertex v = order[depth];
    for (vertex w = 0; w < n; ++w) {
      if (used[w] || ca[v] != cb[w])
        continue;
      if (pin && v == pin->first && w != pin->second)
        continue;
      if (adj_a[v].contains(v) != adj_b[w].contains(w))
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const vertex u = order[i], x = map[u];
        ok = adj_a[v].contains(u) == adj_b[w].contains(x) && adj_a[u].contains(v) == adj_b[x].contains(w);
      }
      if (!ok)
        continue;
      map[v] = w;
      used[w] = true;
      if (extend(depth + 1))
        return true;
      used[w] = false;
    }
    return false;
  };
  if (!extend(0))
    return std::nullopt;
  return map;
}

bool iso_check(const ParityGame& a, const ParityGame& b) { return find_isomorphism(a, b).has_value(); }

VertexRelation isomorphic_vertices(const ParityGame& g)
{
  const std::size_t n = g.size();
  VertexRelation R = VertexRelation::identity(n, RelationKind::equivalence);
  for (vertex v = 0; v < n; ++v)
    for (vertex w = v + 1; w < n; ++w) {
      if (R.contains(v, w))
        continue;
      auto phi = find_isomorphism(g, g, std::pair{v, w});
      if (!phi)
        continue;
      // Close under the orbit found so far.
      R.insert(v, w);
      R.insert(w, v);
      VertexSet merged = R.row(v) | R.row(w);
      merged.for_each([&](vertex x) {
        merged.for_each([&](vertex y) { R.insert(x, y); });
      });
    }
  return R;
}

bool verify_preservation(const ParityGame& g, const QuotientResult& r)
{
  const auto wg = solve_zielonka(g);
  const auto wq = solve_zielonka(r.quotient);
  for (vertex v = 0; v < g.size(); ++v)
    if (wg.winner(v) != wq.winner(r.class_map[v]))
      return false;
  return true;
}

bool quotient_equivalent(const ParityGame& g, const QuotientResult& r)
{
  const ParityGame u = disjoint_union(g, r.quotient);
  const auto shift = static_cast<vertex>(g.size());
  Partition p = classes_of(u, r.kind);
  for (vertex v = 0; v < g.size(); ++v)
    if (!p.related(v, shift + r.class_map[v]))
      return false;
  return true;
}

} // namespace pgr
