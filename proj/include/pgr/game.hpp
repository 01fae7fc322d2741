// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/vertex_set.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgr {

using priority_t = std::uint64_t;

enum class Player : std::uint8_t { even = 0, odd = 1 };

constexpr Player opponent(Player p) { return p == Player::even ? Player::odd : Player::even; }
constexpr Player parity_of(priority_t p) { return (p & 1) ? Player::odd : Player::even; }
constexpr const char* to_string(Player p) { return p == Player::even ? "even" : "odd"; }

// m is at least as good for Even as n is not: smaller-even is best for Even,
// smaller-odd is best for Odd.
constexpr bool reward_leq(priority_t n, priority_t m)
{
  bool ne = n % 2 == 0, me = m % 2 == 0;
  if (ne && !me)
    return true;
  if (ne && me)
    return n <= m;
  if (!ne && !me)
    return m <= n;
  return false;
}

struct game_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : game_error {
  parse_error(std::size_t line, const std::string& what);
  std::size_t line;
};

// Total game graph. Successor lists are sorted and duplicate free.
class ParityGame {
public:
  ParityGame() = default;
  // Normalizes successor lists; throws game_error on a dead end or an
  // out-of-range successor.
  ParityGame(std::vector<priority_t> prio, std::vector<Player> owner,
             std::vector<std::vector<vertex>> succ, std::vector<std::string> labels = {});

  std::size_t size() const { return prio_.size(); }
  priority_t priority(vertex v) const { return prio_[v]; }
  Player owner(vertex v) const { return owner_[v]; }
  std::span<const vertex> successors(vertex v) const
  {
    return {succ_.data() + succ_off_[v], succ_off_[v + 1] - succ_off_[v]};
  }
  std::span<const vertex> predecessors(vertex v) const
  {
    return {pred_.data() + pred_off_[v], pred_off_[v + 1] - pred_off_[v]};
  }
  bool has_labels() const { return !labels_.empty(); }
  // Empty when the vertex carries no name.
  const std::string& label(vertex v) const;
  priority_t max_priority() const;
  std::size_t edge_count() const;

  VertexSet owned_by(Player p) const;
  VertexSet successor_set(vertex v) const;

  const std::vector<priority_t>& priorities() const { return prio_; }
  const std::vector<Player>& owners() const { return owner_; }
  std::vector<std::vector<vertex>> successor_lists() const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Structural equality; labels are ignored.
  bool operator==(const ParityGame& o) const;

private:
  std::vector<priority_t> prio_;
  std::vector<Player> owner_;
  // Compressed rows: successors of v are succ_[succ_off_[v] .. succ_off_[v+1]).
  std::vector<std::size_t> succ_off_, pred_off_;
  std::vector<vertex> succ_, pred_;
  std::vector<std::string> labels_;
};

ParityGame parse_pgsolver(std::string_view text);
std::string serialize_pgsolver(const ParityGame& g);
// Even vertices as diamonds, Odd as boxes, labelled <id>:<priority>.
std::string to_dot(const ParityGame& g);

// Degree range [lo, hi]; hi is clamped to n. Deterministic in all arguments.
ParityGame random_game(std::size_t n, priority_t max_priority, std::size_t degree_lo,
                       std::size_t degree_hi, std::uint64_t seed);

// Vertices of b are shifted by a.size().
ParityGame disjoint_union(const ParityGame& a, const ParityGame& b);

} // namespace pgr
