// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/game.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace pgr {

struct WinningRegions {
  VertexSet even, odd;

  const VertexSet& won_by(Player p) const { return p == Player::even ? even : odd; }
  Player winner(vertex v) const { return even.contains(v) ? Player::even : Player::odd; }
};

WinningRegions solve_zielonka(const ParityGame& g);
bool winner_equivalent(const WinningRegions& w, vertex v, vertex u);
bool winner_equivalent(const ParityGame& g, vertex v, vertex u);

// Product arenas for the simulation games ------------------------------------

enum class Side : std::uint8_t { spoiler, duplicator };

using position = std::uint32_t;

// Turn-based graph with a Buchi condition for Duplicator. The tag is an
// opaque payload the builder uses to map positions back to configurations.
class Arena {
public:
  using Tag = std::array<std::uint32_t, 4>;

  position add_position(Side owner, bool accepting, Tag tag = {});
  void add_edge(position from, position to);
  // Sorts and deduplicates edges, builds predecessor lists, checks totality.
  void finalize();

  std::size_t size() const { return owner_.size(); }
  Side owner(position p) const { return owner_[p]; }
  bool accepting(position p) const { return accepting_[p]; }
  const Tag& tag(position p) const { return tag_[p]; }
  std::span<const position> successors(position p) const { return succ_[p]; }
  std::span<const position> predecessors(position p) const { return pred_[p]; }

private:
  std::vector<Side> owner_;
  std::vector<bool> accepting_;
  std::vector<Tag> tag_;
  std::vector<std::vector<position>> succ_, pred_;
};

inline constexpr std::uint32_t no_rank = UINT32_MAX;

struct BuchiSolution {
  VertexSet won;                  // positions won by Duplicator
  std::vector<std::uint32_t> rank; // attractor layer in the final iteration; no_rank if lost
  std::vector<position> strategy; // Duplicator's move at each won position
};

// Nested attractor fixpoint.
BuchiSolution solve_buchi(const Arena& a);
// Throws std::out_of_range on a position Duplicator does not win.
std::uint32_t buchi_rank(const BuchiSolution& s, position p);

// Duplicator as Even, priority 0 on accepting positions and 1 elsewhere.
ParityGame arena_as_parity_game(const Arena& a);

} // namespace pgr
