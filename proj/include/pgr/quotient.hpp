// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/game.hpp"
#include "pgr/relation.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace pgr {

enum class Equivalence { strong_bisim, governed_bisim, stut_bisim, gstut_bisim, direct_sim };

const char* to_string(Equivalence e);
std::optional<Equivalence> parse_equivalence(std::string_view name);
// "strong-bisim|governed-bisim|stut|gstut|direct-sim"
const char* supported_equivalences();

// The relation of kind e on g, as a partition.
Partition classes_of(const ParityGame& g, Equivalence e);

struct QuotientResult {
  ParityGame quotient;
  std::vector<vertex> class_map; // original vertex -> quotient vertex
  Equivalence kind;
  Partition partition;
};

// Minimal / maximal elements of v's successors under the preorder R.
VertexSet min_successors(const ParityGame& g, const VertexRelation& R, vertex v);
VertexSet max_successors(const ParityGame& g, const VertexRelation& R, vertex v);

QuotientResult quotient_direct_sim(const ParityGame& g);
QuotientResult quotient_governed_bisim(const ParityGame& g);
QuotientResult quotient_gstut(const ParityGame& g);
// Owner-preserving quotients for the two same-owner bisimulations.
QuotientResult quotient_strong_bisim(const ParityGame& g);
QuotientResult quotient_stut(const ParityGame& g);
QuotientResult quotient(const ParityGame& g, Equivalence e);

inline constexpr std::size_t iso_size_limit = 64;

// Priority, owner and edge preserving bijection from a onto b; `pin` forces
// one vertex pair. Throws std::length_error beyond iso_size_limit vertices.
std::optional<std::vector<vertex>> find_isomorphism(const ParityGame& a, const ParityGame& b,
                                                    std::optional<std::pair<vertex, vertex>> pin = {});
bool iso_check(const ParityGame& a, const ParityGame& b);
// v ~ w iff some automorphism maps v to w.
VertexRelation isomorphic_vertices(const ParityGame& g);

// Winner of every vertex equals the winner of its class vertex.
bool verify_preservation(const ParityGame& g, const QuotientResult& r);
// Every vertex is related to its class vertex in the disjoint union of the
// game and its quotient, under the defining equivalence.
bool quotient_equivalent(const ParityGame& g, const QuotientResult& r);

} // namespace pgr
