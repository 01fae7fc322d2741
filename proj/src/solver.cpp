// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/solver.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pgr {

namespace {

// Attractor inside the subgame `within`, only counting edges that stay in it.
// Layer indices go to `rank` when given (entries outside are left alone).
template <class Graph, class Owner>
VertexSet subgame_attractor(const Graph& g, Owner who, const VertexSet& within,
                            const VertexSet& target, std::vector<std::uint32_t>* rank = nullptr)
{
  constexpr std::uint32_t unknown = UINT32_MAX;
  VertexSet attr = target & within;
  boost::container::small_vector<std::uint32_t, 64> pending(g.size(), unknown), layer, next;
  attr.for_each([&](vertex v) { layer.push_back(v); });
  if (rank)
    for (auto p : layer)
      (*rank)[p] = 0;
  for (std::uint32_t k = 0; !layer.empty(); ++k) {
    next.clear();
    for (auto u : layer)
      for (auto p : g.predecessors(u)) {
        if (!within.contains(p) || attr.contains(p))
          continue;
        if (g.owner(p) != who) {
          if (pending[p] == unknown) {
            pending[p] = 0;
            for (auto s : g.successors(p))
              pending[p] += within.contains(s);
          }
          if (--pending[p] != 0)
            continue;
        }
        attr.insert(p);
        if (rank)
          (*rank)[p] = k + 1;
        next.push_back(p);
      }
    layer.swap(next);
  }
  return attr;
}

void zielonka(const ParityGame& g, const VertexSet& X, VertexSet& even, VertexSet& odd)
{
  even = VertexSet(g.size());
  odd = VertexSet(g.size());
  if (X.empty())
    return;
  priority_t p = ~priority_t(0);
  X.for_each([&](vertex v) { p = std::min(p, g.priority(v)); });
  VertexSet top(g.size());
  X.for_each([&](vertex v) {
    if (g.priority(v) == p)
      top.insert(v);
  });
  const Player i = parity_of(p);
  VertexSet A = subgame_attractor(g, i, X, top);

  VertexSet sub_even, sub_odd;
  zielonka(g, X - A, sub_even, sub_odd);
  VertexSet& opp_won = i == Player::even ? sub_odd : sub_even;
  if (opp_won.empty()) {
    (i == Player::even ? even : odd) = X;
    return;
  }
  VertexSet B = subgame_attractor(g, opponent(i), X, opp_won);
  zielonka(g, X - B, even, odd);
  (i == Player::even ? odd : even) |= B;
}

} // namespace

WinningRegions solve_zielonka(const ParityGame& g)
{
  WinningRegions w;
  zielonka(g, VertexSet::full(g.size()), w.even, w.odd);
  return w;
}

bool winner_equivalent(const WinningRegions& w, vertex v, vertex u)
{
  return w.winner(v) == w.winner(u);
}

bool winner_equivalent(const ParityGame& g, vertex v, vertex u)
{
  return winner_equivalent(solve_zielonka(g), v, u);
}

// Arena ----------------------------------------------------------------------

position Arena::add_position(Side owner, bool accepting, Tag tag)
{
  owner_.push_back(owner);
  accepting_.push_back(accepting);
  tag_.push_back(tag);
  succ_.emplace_back();
  return static_cast<position>(owner_.size() - 1);
}

void Arena::add_edge(position from, position to) { succ_[from].push_back(to); }

void Arena::finalize()
{
  pred_.assign(size(), {});
  for (position p = 0; p < size(); ++p) {
    auto& s = succ_[p];
    if (s.empty())
      throw std::logic_error("arena position " + std::to_string(p) + " has no successors");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (position q : s)
      pred_[q].push_back(p);
  }
}

BuchiSolution solve_buchi(const Arena& a)
{
  const std::size_t n = a.size();
  VertexSet accepting(n);
  for (position p = 0; p < n; ++p)
    if (a.accepting(p))
      accepting.insert(p);

  BuchiSolution s;
  s.won = VertexSet::full(n);
  s.rank.assign(n, no_rank);
  for (;;) {
    std::fill(s.rank.begin(), s.rank.end(), no_rank);
    VertexSet reach = subgame_attractor(a, Side::duplicator, s.won, accepting, &s.rank);
    VertexSet trap = s.won - reach;
    if (trap.empty())
      break;
    s.won -= subgame_attractor(a, Side::spoiler, s.won, trap);
  }

  s.strategy.assign(n, no_rank);
  s.won.for_each([&](position p) {
    if (a.owner(p) != Side::duplicator)
      return;
    position best = no_rank;
    for (position q : a.successors(p)) {
      if (!s.won.contains(q))
        continue;
      if (best == no_rank || (s.rank[p] != 0 && s.rank[q] < s.rank[best]))
        best = q;
    }
    s.strategy[p] = best;
  });
  return s;
}

std::uint32_t buchi_rank(const BuchiSolution& s, position p)
{
  if (p >= s.rank.size() || !s.won.contains(p))
    throw std::out_of_range("position " + std::to_string(p) + " is not won by Duplicator");
  return s.rank[p];
}

ParityGame arena_as_parity_game(const Arena& a)
{
  std::vector<priority_t> prio(a.size());
  std::vector<Player> owner(a.size());
  std::vector<std::vector<vertex>> succ(a.size());
  for (position p = 0; p < a.size(); ++p) {
    prio[p] = a.accepting(p) ? 0 : 1;
    owner[p] = a.owner(p) == Side::duplicator ? Player::even : Player::odd;
    succ[p].assign(a.successors(p).begin(), a.successors(p).end());
  }
  return ParityGame(std::move(prio), std::move(owner), std::move(succ));
}

} // namespace pgr
