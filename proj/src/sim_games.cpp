// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/sim_games.hpp"

#include "pgr/equivalences.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pgr {

std::string to_string(Obligation k) { return k.is_check() ? "check" : std::to_string(k.value()); }

std::string to_string(Challenge c)
{
  switch (c.kind) {
  case Challenge::dagger:
    return "dagger";
  case Challenge::check:
    return "check";
  case Challenge::side0:
    return "(0," + std::to_string(c.target) + ")";
  case Challenge::side1:
    return "(1," + std::to_string(c.target) + ")";
  }
  return "?";
}

Obligation gamma(priority_t n, priority_t m, Obligation k)
{
  if (k.is_check())
    return reward_leq(m, n) ? Obligation::check() : Obligation::of(std::min(n, m));
  const priority_t kv = k.value();
  if (reward_leq(m, n) && ((n % 2 == 1 && n <= kv) || (m % 2 == 0 && m <= kv)))
    return Obligation::check();
  return Obligation::of(std::min({n, m, kv}));
}

// With k = check every numeric comparison against k is false, so both
// biased updates fall through to gamma.
Obligation gamma_even(priority_t n, priority_t m, Obligation k)
{
  if (!k.is_check() && reward_leq(m, n) && n % 2 == 1 && n <= k.value() &&
      (m % 2 == 1 || k.value() < m))
    return k;
  return gamma(n, m, k);
}

Obligation gamma_odd(priority_t n, priority_t m, Obligation k)
{
  if (!k.is_check() && reward_leq(m, n) && m % 2 == 0 && m <= k.value() &&
      (n % 2 == 0 || k.value() < n))
    return k;
  return gamma(n, m, k);
}

Obligation update(Bias b, priority_t n, priority_t m, Obligation k)
{
  switch (b) {
  case Bias::even:
    return gamma_even(n, m, k);
  case Bias::odd:
    return gamma_odd(n, m, k);
  default:
    return gamma(n, m, k);
  }
}

Challenge gstut_update(Challenge c, Challenge c2, vertex u, vertex t, bool spoiler_played_on_t)
{
  const bool open = c.kind == Challenge::dagger || c.kind == Challenge::check || c == c2;
  if (spoiler_played_on_t && u == t && open)
    return c2;
  if (u != t || (spoiler_played_on_t && !open))
    return Challenge::make_check();
  return Challenge::make_dagger();
}

bool spoiler_plays_left(const ParityGame& g, vertex u0) { return g.owner(u0) == Player::even; }
bool spoiler_plays_right(const ParityGame& g, vertex u1) { return g.owner(u1) == Player::odd; }

Side first_mover(const ParityGame& g, vertex u0, vertex u1)
{
  if (spoiler_plays_left(g, u0) || spoiler_plays_right(g, u1))
    return Side::spoiler;
  return Side::duplicator;
}

namespace {

// One round of moves from `start`, which plays (u0, u1). If u0 is Even's,
// Spoiler moves on u0 first; otherwise the u1 side moves first. `land`
// yields the position reached after both half-moves.
template <class Land>
void expand_round(Arena& a, const ParityGame& g, position start, vertex u0, vertex u1,
                  bool mid_accepting, Land&& land)
{
  if (spoiler_plays_left(g, u0)) {
    const Side second = spoiler_plays_right(g, u1) ? Side::spoiler : Side::duplicator;
    for (vertex x : g.successors(u0)) {
      position mid = a.add_position(second, mid_accepting, {move_first, x, u1, 0});
      a.add_edge(start, mid);
      for (vertex y : g.successors(u1))
        a.add_edge(mid, land(x, y));
    }
  } else {
    for (vertex y : g.successors(u1)) {
      position mid = a.add_position(Side::duplicator, mid_accepting, {move_second, u0, y, 0});
      a.add_edge(start, mid);
      for (vertex x : g.successors(u0))
        a.add_edge(mid, land(x, y));
    }
  }
}

position add_sink(Arena& a)
{
  position s = a.add_position(Side::spoiler, false, {sink_pos, 0, 0, 0});
  a.add_edge(s, s);
  return s;
}

bool matches(const ParityGame& g, vertex v, vertex w) { return g.priority(v) == g.priority(w); }

VertexRelation relation_from(const Arena& a, const BuchiSolution& s, std::size_t n,
                             RelationKind kind, auto config)
{
  (void)a;
  VertexRelation R(n, kind);
  for (vertex v = 0; v < n; ++v)
    for (vertex w = 0; w < n; ++w)
      if (s.won.contains(config(v, w)))
        R.insert(v, w);
  return R;
}

} // namespace

DirectArena build_direct_sim_arena(const ParityGame& g)
{
  DirectArena d;
  d.n = g.size();
  Arena& a = d.arena;
  for (vertex v = 0; v < d.n; ++v)
    for (vertex w = 0; w < d.n; ++w) {
      if (matches(g, v, w))
        a.add_position(first_mover(g, v, w), true, {config_pos, v, w, 0});
      else
        a.add_position(Side::duplicator, false, {config_pos, v, w, 0});
    }
  const position sink = add_sink(a);
  for (vertex v = 0; v < d.n; ++v)
    for (vertex w = 0; w < d.n; ++w) {
      if (!matches(g, v, w)) {
        a.add_edge(d.config(v, w), sink);
        continue;
      }
      expand_round(a, g, d.config(v, w), v, w, true, [&](vertex x, vertex y) { return d.config(x, y); });
    }
  a.finalize();
  return d;
}

VertexRelation direct_sim_via_game(const ParityGame& g)
{
  auto d = build_direct_sim_arena(g);
  auto s = solve_buchi(d.arena);
  return relation_from(d.arena, s, d.n, RelationKind::preorder,
                       [&](vertex v, vertex w) { return d.config(v, w); });
}

// Configurations are Spoiler's swap choices; round positions (u0, u1)
// follow them at index n*n + u0*n + u1.
GovernedArena build_governed_bisim_arena(const ParityGame& g)
{
  GovernedArena d;
  const std::size_t n = d.n = g.size();
  Arena& a = d.arena;
  for (vertex v = 0; v < n; ++v)
    for (vertex w = 0; w < n; ++w) {
      if (matches(g, v, w))
        a.add_position(Side::spoiler, true, {config_pos, v, w, 0});
      else
        a.add_position(Side::duplicator, false, {config_pos, v, w, 0});
    }
  for (vertex u0 = 0; u0 < n; ++u0)
    for (vertex u1 = 0; u1 < n; ++u1)
      a.add_position(first_mover(g, u0, u1), true, {round_pos, u0, u1, 0});
  auto round = [&](vertex u0, vertex u1) { return static_cast<position>(n * n + u0 * n + u1); };
  const position sink = add_sink(a);
  for (vertex v = 0; v < n; ++v)
    for (vertex w = 0; w < n; ++w) {
      if (!matches(g, v, w)) {
        a.add_edge(d.config(v, w), sink);
        continue;
      }
      a.add_edge(d.config(v, w), round(v, w));
      a.add_edge(d.config(v, w), round(w, v));
    }
  for (vertex u0 = 0; u0 < n; ++u0)
    for (vertex u1 = 0; u1 < n; ++u1)
      expand_round(a, g, round(u0, u1), u0, u1, true, [&](vertex x, vertex y) { return d.config(x, y); });
  a.finalize();
  return d;
}

VertexRelation governed_bisim_via_game(const ParityGame& g)
{
  auto d = build_governed_bisim_arena(g);
  auto s = solve_buchi(d.arena);
  return relation_from(d.arena, s, d.n, RelationKind::equivalence,
                       [&](vertex v, vertex w) { return d.config(v, w); });
}

// Delayed simulation ---------------------------------------------------------

std::optional<position> DelayedArena::find(vertex v, vertex w, Obligation k) const
{
  auto it = index.find({static_cast<std::uint64_t>(v) * n + w, k.raw});
  if (it == index.end())
    return std::nullopt;
  return config_position[it->second];
}

DelayedArena build_delayed_sim_arena(const ParityGame& g, Bias b)
{
  DelayedArena d;
  d.n = g.size();
  d.bias = b;
  Arena& a = d.arena;
  std::deque<std::size_t> todo;
  auto get = [&](vertex v, vertex w, Obligation k) -> position {
    DelayedArena::Key key{static_cast<std::uint64_t>(v) * d.n + w, k.raw};
    auto [it, fresh] = d.index.try_emplace(key, d.configs.size());
    if (!fresh)
      return d.config_position[it->second];
    const auto idx = static_cast<std::uint32_t>(d.configs.size());
    d.configs.push_back({v, w, k});
    d.config_position.push_back(a.add_position(first_mover(g, v, w), k.is_check(), {config_pos, idx, 0, 0}));
    todo.push_back(idx);
    return d.config_position.back();
  };
  for (vertex v = 0; v < d.n; ++v)
    for (vertex w = 0; w < d.n; ++w)
      get(v, w, update(b, g.priority(v), g.priority(w), Obligation::check()));
  while (!todo.empty()) {
    const DelayedConfig c = d.configs[todo.front()];
    const position p = d.config_position[todo.front()];
    todo.pop_front();
    expand_round(a, g, p, c.v, c.w, false, [&](vertex x, vertex y) {
      return get(x, y, update(b, g.priority(x), g.priority(y), c.k));
    });
  }
  a.finalize();
  return d;
}

VertexRelation delayed_sim(const ParityGame& g, Bias b)
{
  auto d = build_delayed_sim_arena(g, b);
  auto s = solve_buchi(d.arena);
  return relation_from(d.arena, s, d.n, RelationKind::preorder, [&](vertex v, vertex w) {
    return *d.find(v, w, update(b, g.priority(v), g.priority(w), Obligation::check()));
  });
}

std::size_t WfDelayedSim::index_of(Obligation k) const
{
  if (k.is_check())
    return 0;
  auto it = std::lower_bound(obligations.begin() + 1, obligations.end(), k,
                             [](Obligation a, Obligation b) { return a.value() < b.value(); });
  if (it == obligations.end() || *it != k)
    throw std::out_of_range("obligation " + to_string(k) + " is not a priority of the game");
  return static_cast<std::size_t>(it - obligations.begin());
}

WfDelayedSim wf_delayed_sim(const ParityGame& g, Bias b)
{
  WfDelayedSim r;
  const std::size_t n = r.n = g.size();
  std::vector<priority_t> prios = g.priorities();
  std::sort(prios.begin(), prios.end());
  prios.erase(std::unique(prios.begin(), prios.end()), prios.end());
  r.obligations.push_back(Obligation::check());
  for (priority_t p : prios)
    r.obligations.push_back(Obligation::of(p));
  const std::size_t nk = r.obligations.size();

  // next[(x * n + y) * nk + k]: obligation index after moving to (x, y)
  std::vector<std::uint32_t> next(n * n * nk);
  for (vertex x = 0; x < n; ++x)
    for (vertex y = 0; y < n; ++y)
      for (std::size_t k = 0; k < nk; ++k)
        next[(x * n + y) * nk + k] = static_cast<std::uint32_t>(
            r.index_of(update(b, g.priority(x), g.priority(y), r.obligations[k])));

  const std::size_t total = n * n * nk;
  auto id = [&](vertex v, vertex w, std::size_t k) { return (v * n + w) * nk + k; };
  auto transfer = [&](vertex v, std::size_t k, vertex w, const std::vector<bool>& S) {
    auto in = [&](vertex x, vertex y) { return static_cast<bool>(S[id(x, y, next[(x * n + y) * nk + k])]); };
    const bool w_even = g.owner(w) == Player::even;
    if (g.owner(v) == Player::even) {
      for (vertex x : g.successors(v)) {
        bool ok = !w_even;
        for (vertex y : g.successors(w))
          ok = w_even ? (ok || in(x, y)) : (ok && in(x, y));
        if (!ok)
          return false;
      }
      return true;
    }
    bool ok = !w_even;
    for (vertex y : g.successors(w)) {
      bool some = false;
      for (vertex x : g.successors(v))
        some = some || in(x, y);
      ok = w_even ? (ok || some) : (ok && some);
    }
    return ok;
  };

  std::vector<bool> Z(total, true);
  r.rank.assign(total, no_rank);
  for (;;) {
    std::vector<bool> Y(total, false);
    std::fill(r.rank.begin(), r.rank.end(), no_rank);
    std::vector<std::size_t> fresh;
    for (std::uint32_t layer = 0;; ++layer) {
      fresh.clear();
      for (vertex v = 0; v < n; ++v)
        for (vertex w = 0; w < n; ++w)
          for (std::size_t k = 0; k < nk; ++k) {
            const auto t = id(v, w, k);
            if (!Z[t] || Y[t])
              continue;
            if (transfer(v, k, w, k == 0 ? Z : Y))
              fresh.push_back(t);
          }
      if (fresh.empty())
        break;
      for (auto t : fresh) {
        Y[t] = true;
        r.rank[t] = layer;
      }
    }
    if (Y == Z)
      break;
    Z = std::move(Y);
  }
  r.member = std::move(Z);
  r.relation = VertexRelation(n, RelationKind::preorder);
  for (vertex v = 0; v < n; ++v)
    for (vertex w = 0; w < n; ++w)
      if (r.contains(v, r.index_of(update(b, g.priority(v), g.priority(w), Obligation::check())), w))
        r.relation.insert(v, w);
  return r;
}

bool wf_rank_check(const ParityGame& g, Bias b)
{
  const auto d = build_delayed_sim_arena(g, b);
  const auto s = solve_buchi(d.arena);
  const Arena& a = d.arena;

  // Ranks strictly decrease along Duplicator's strategy (and every Spoiler
  // move) until an accepting position is reached.
  for (position p = 0; p < a.size(); ++p) {
    if (!s.won.contains(p))
      continue;
    if (a.owner(p) == Side::duplicator) {
      position q = s.strategy[p];
      if (q == no_rank || !s.won.contains(q))
        return false;
      if (!a.accepting(p) && s.rank[q] >= s.rank[p])
        return false;
    } else {
      for (position q : a.successors(p)) {
        if (!s.won.contains(q))
          return false;
        if (!a.accepting(p) && s.rank[q] >= s.rank[p])
          return false;
      }
    }
  }

  // The won configurations, ordered by rank, form a well-founded delayed
  // simulation.
  for (std::size_t c = 0; c < d.configs.size(); ++c) {
    const position p = d.config_position[c];
    if (!s.won.contains(p))
      continue;
    const auto [v, w, k] = d.configs[c];
    auto related = [&](vertex x, vertex y) {
      auto q = d.find(x, y, update(b, g.priority(x), g.priority(y), k));
      if (!q || !s.won.contains(*q))
        return false;
      return k.is_check() || s.rank[*q] < s.rank[p];
    };
    const bool w_even = g.owner(w) == Player::even;
    auto steps_even = [&](auto&& good) {
      bool ok = !w_even;
      for (vertex y : g.successors(w))
        ok = w_even ? (ok || good(y)) : (ok && good(y));
      return ok;
    };
    bool ok;
    if (g.owner(v) == Player::even) {
      ok = true;
      for (vertex x : g.successors(v))
        ok = ok && steps_even([&](vertex y) { return related(x, y); });
    } else {
      ok = steps_even([&](vertex y) {
        for (vertex x : g.successors(v))
          if (related(x, y))
            return true;
        return false;
      });
    }
    if (!ok)
      return false;
  }
  return true;
}

// Governed stuttering bisimulation -------------------------------------------

namespace {

std::uint64_t encode(Challenge c)
{
  switch (c.kind) {
  case Challenge::dagger:
    return 0;
  case Challenge::check:
    return 1;
  case Challenge::side0:
    return 2 + 2 * static_cast<std::uint64_t>(c.target);
  default:
    return 3 + 2 * static_cast<std::uint64_t>(c.target);
  }
}

} // namespace

std::optional<position> GstutArena::find(vertex v, vertex w, Challenge c) const
{
  auto it = index.find({static_cast<std::uint64_t>(v) * n + w, encode(c)});
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

// A round from ((v, w), c): Spoiler picks the orientation (u0, u1), the
// players move to (t0, t1), then Duplicator picks one of three
// configurations.
GstutArena build_gstut_arena(const ParityGame& g)
{
  GstutArena d;
  d.n = g.size();
  Arena& a = d.arena;
  const position sink = add_sink(a);
  struct Pending {
    vertex v, w;
    Challenge c;
    position p;
  };
  std::deque<Pending> todo;
  auto get = [&](vertex v, vertex w, Challenge c) -> position {
    GstutArena::Key key{static_cast<std::uint64_t>(v) * d.n + w, encode(c)};
    auto it = d.index.find(key);
    if (it != d.index.end())
      return it->second;
    const std::uint32_t code = static_cast<std::uint32_t>(encode(c));
    position p = matches(g, v, w)
                     ? a.add_position(Side::spoiler, c.kind == Challenge::check, {config_pos, v, w, code})
                     : a.add_position(Side::duplicator, false, {config_pos, v, w, code});
    d.index.emplace(key, p);
    todo.push_back({v, w, c, p});
    return p;
  };
  for (vertex v = 0; v < d.n; ++v)
    for (vertex w = 0; w < d.n; ++w)
      get(v, w, Challenge::make_check());

  while (!todo.empty()) {
    const Pending cur = todo.front();
    todo.pop_front();
    const auto [v, w, c, p] = cur;
    if (!matches(g, v, w)) {
      a.add_edge(p, sink);
      continue;
    }
    for (int swapped = 0; swapped < 2; ++swapped) {
      const vertex u0 = swapped ? w : v, u1 = swapped ? v : w;
      position r = a.add_position(first_mover(g, u0, u1), false,
                                  {round_pos, u0, u1, static_cast<std::uint32_t>(swapped)});
      a.add_edge(p, r);
      expand_round(a, g, r, u0, u1, false, [&](vertex t0, vertex t1) {
        position choice = a.add_position(Side::duplicator, false, {choice_pos, t0, t1, 0});
        a.add_edge(choice, get(t0, t1, Challenge::make_check()));
        a.add_edge(choice, get(u0, t1, gstut_update(c, Challenge::on(0, t0), v, u0, spoiler_plays_left(g, u0))));
        a.add_edge(choice, get(t0, u1, gstut_update(c, Challenge::on(1, t1), w, u1, spoiler_plays_right(g, u1))));
        return choice;
      });
    }
  }
  a.finalize();
  return d;
}

VertexRelation gstut_via_game_relation(const ParityGame& g)
{
  auto d = build_gstut_arena(g);
  auto s = solve_buchi(d.arena);
  VertexRelation R(d.n, RelationKind::equivalence);
  for (vertex v = 0; v < d.n; ++v)
    for (vertex w = 0; w < d.n; ++w)
      if (s.won.contains(*d.find(v, w, Challenge::make_check())))
        R.insert(v, w);
  return R;
}

Partition gstut_via_game(const ParityGame& g)
{
  auto R = gstut_via_game_relation(g);
  if (!R.valid())
    throw std::logic_error("governed stuttering game winning pairs are not an equivalence");
  return Partition::from_relation(R);
}

const char* to_string(Notion n)
{
  switch (n) {
  case Notion::direct:
    return "direct";
  case Notion::governed_bisim:
    return "governed-bisim";
  case Notion::gstut:
    return "gstut";
  case Notion::delayed:
    return "delayed";
  case Notion::delayed_even:
    return "delayed-even";
  case Notion::delayed_odd:
    return "delayed-odd";
  }
  return "?";
}

bool coincidence_check(const ParityGame& g, Notion n)
{
  switch (n) {
  case Notion::direct:
    return direct_sim_via_game(g) == direct_sim(g);
  case Notion::governed_bisim:
    return governed_bisim_via_game(g) == governed_bisim(g).relation();
  case Notion::gstut:
    return gstut_via_game_relation(g) == gstut_bisim(g).relation();
  case Notion::delayed:
    return delayed_sim(g, Bias::none) == wf_delayed_sim(g, Bias::none).relation;
  case Notion::delayed_even:
    return delayed_sim(g, Bias::even) == wf_delayed_sim(g, Bias::even).relation;
  case Notion::delayed_odd:
    return delayed_sim(g, Bias::odd) == wf_delayed_sim(g, Bias::odd).relation;
  }
  return false;
}

} // namespace pgr
