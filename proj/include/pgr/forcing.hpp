// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/game.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace pgr {

inline constexpr std::size_t infinite_rank = std::numeric_limits<std::size_t>::max();

// Least fixpoint of: T, plus i-vertices of U with a successor inside, plus
// opponent vertices of U with all successors inside.
VertexSet attractor(const ParityGame& g, Player i, const VertexSet& U, const VertexSet& T);

// Layer index of every vertex (infinite_rank outside the attractor).
std::vector<std::size_t> attractor_layers(const ParityGame& g, Player i, const VertexSet& U,
                                          const VertexSet& T);
std::size_t attractor_rank(const ParityGame& g, Player i, const VertexSet& U, const VertexSet& T,
                           vertex v);

// i can force every play from v into T, staying in U until then.
bool forces(const ParityGame& g, Player i, vertex v, const VertexSet& U, const VertexSet& T);
// i can keep every play from v inside U forever.
bool diverges(const ParityGame& g, Player i, vertex v, const VertexSet& U);
// One controlled step: some successor in T if v is i's, all of them otherwise.
bool steps(const ParityGame& g, Player i, vertex v, const VertexSet& T);

} // namespace pgr
