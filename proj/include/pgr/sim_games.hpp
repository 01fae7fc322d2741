// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/game.hpp"
#include "pgr/relation.hpp"
#include "pgr/solver.hpp"

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pgr {

// k in N or the check mark (no pending obligation).
struct Obligation {
  static constexpr priority_t check_raw = ~priority_t(0);
  priority_t raw = check_raw;

  static constexpr Obligation check() { return {}; }
  static constexpr Obligation of(priority_t k) { return {k}; }
  constexpr bool is_check() const { return raw == check_raw; }
  constexpr priority_t value() const { return raw; }
  constexpr bool operator==(const Obligation&) const = default;
};

std::string to_string(Obligation k);

enum class Bias { none, even, odd };

Obligation gamma(priority_t n, priority_t m, Obligation k);
// Keep k when only an odd (resp. even) priority would discharge it.
Obligation gamma_even(priority_t n, priority_t m, Obligation k);
Obligation gamma_odd(priority_t n, priority_t m, Obligation k);
Obligation update(Bias b, priority_t n, priority_t m, Obligation k);

// Governed stuttering bookkeeping: dagger, check, or a pending challenge
// (side, target).
struct Challenge {
  enum Kind : std::uint8_t { dagger, check, side0, side1 };
  Kind kind = check;
  vertex target = 0;

  static constexpr Challenge make_dagger() { return {dagger, 0}; }
  static constexpr Challenge make_check() { return {check, 0}; }
  static constexpr Challenge on(int side, vertex t) { return {side == 0 ? side0 : side1, t}; }
  constexpr bool operator==(const Challenge&) const = default;
};

std::string to_string(Challenge c);

// The challenge update: renew c2 when Spoiler moved on t and u = t, and c
// is dagger, check or c2 already; reward check when u differs from t or
// Spoiler dropped a different pending challenge; dagger otherwise.
Challenge gstut_update(Challenge c, Challenge c2, vertex u, vertex t, bool spoiler_played_on_t);

// Position kinds stored in Arena::Tag[0].
enum PositionKind : std::uint32_t { config_pos, move_first, move_second, round_pos, choice_pos, sink_pos };

// Who owns the first half-move from (u0, u1), following the (bi)simulation
// move table: Spoiler plays on u0 iff u0 is Even's, on u1 iff u1 is Odd's.
Side first_mover(const ParityGame& g, vertex u0, vertex u1);
bool spoiler_plays_left(const ParityGame& g, vertex u0);
bool spoiler_plays_right(const ParityGame& g, vertex u1);

struct DirectArena {
  Arena arena;
  std::size_t n = 0;
  position config(vertex v, vertex w) const { return static_cast<position>(v * n + w); }
};
DirectArena build_direct_sim_arena(const ParityGame& g);
VertexRelation direct_sim_via_game(const ParityGame& g);

struct GovernedArena {
  Arena arena;
  std::size_t n = 0;
  position config(vertex v, vertex w) const { return static_cast<position>(v * n + w); }
};
GovernedArena build_governed_bisim_arena(const ParityGame& g);
VertexRelation governed_bisim_via_game(const ParityGame& g);

struct DelayedConfig {
  vertex v, w;
  Obligation k;
};

struct DelayedArena {
  Arena arena;
  Bias bias = Bias::none;
  std::vector<DelayedConfig> configs; // indexed by Tag[1] of config positions
  std::vector<position> config_position;
  std::optional<position> find(vertex v, vertex w, Obligation k) const;

  struct Key {
    std::uint64_t pair;
    priority_t k;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const
    {
      return std::hash<std::uint64_t>()(key.pair * 0x9E3779B97F4A7C15ULL ^ key.k);
    }
  };
  std::unordered_map<Key, std::size_t, KeyHash> index; // -> configs
  std::size_t n = 0;
};

DelayedArena build_delayed_sim_arena(const ParityGame& g, Bias b);
// v below w iff Duplicator wins from (v, w, update(v, w, check)).
VertexRelation delayed_sim(const ParityGame& g, Bias b);

// Greatest well-founded delayed simulation, computed directly on triples
// (v, k, w) as a nested fixpoint of the transfer conditions; the order is
// the layer in which a triple entered the inner least fixpoint.
struct WfDelayedSim {
  std::vector<Obligation> obligations; // index 0 is check
  std::size_t n = 0;
  std::vector<bool> member;            // (v * n + w) * |K| + k
  std::vector<std::uint32_t> rank;
  bool contains(vertex v, std::size_t k, vertex w) const
  {
    return member[(v * n + w) * obligations.size() + k];
  }
  std::size_t index_of(Obligation k) const;
  VertexRelation relation;             // v R_{update(v,w,check)} w
};
WfDelayedSim wf_delayed_sim(const ParityGame& g, Bias b);

// Validates that the ranks of the solved delayed arena witness a
// well-founded delayed simulation.
bool wf_rank_check(const ParityGame& g, Bias b);

struct GstutArena {
  Arena arena;
  std::size_t n = 0;
  struct Key {
    std::uint64_t pair;
    std::uint64_t c;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const
    {
      return std::hash<std::uint64_t>()(key.pair * 0x9E3779B97F4A7C15ULL ^ key.c);
    }
  };
  std::unordered_map<Key, position, KeyHash> index;
  std::optional<position> find(vertex v, vertex w, Challenge c) const;
};
GstutArena build_gstut_arena(const ParityGame& g);
VertexRelation gstut_via_game_relation(const ParityGame& g);
// Throws std::logic_error if the winning pairs are not an equivalence.
Partition gstut_via_game(const ParityGame& g);

enum class Notion { direct, governed_bisim, gstut, delayed, delayed_even, delayed_odd };
const char* to_string(Notion n);
// Game-based relation equals the fixpoint one.
bool coincidence_check(const ParityGame& g, Notion n);

} // namespace pgr
