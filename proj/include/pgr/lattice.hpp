// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/game.hpp"
#include "pgr/relation.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgr {

// Finest to coarsest (a linear extension of the lattice).
enum class Rel {
  isomorphic,
  strong_bisim,
  governed_bisim,
  stut_bisim,
  strong_direct_sim_eq,
  direct_sim_eq,
  gstut_bisim,
  delayed_even_eq,
  delayed_odd_eq,
  delayed_eq,
  winner,
};
inline constexpr std::size_t rel_count = 11;

const char* to_string(Rel r);

// Every relation of the lattice on one game, as equivalence relations.
// `isomorphic` is absent beyond the isomorphism size limit.
struct RelationTable {
  std::array<std::optional<VertexRelation>, rel_count> rel;
  const std::optional<VertexRelation>& operator[](Rel r) const { return rel[static_cast<std::size_t>(r)]; }
  std::optional<VertexRelation>& operator[](Rel r) { return rel[static_cast<std::size_t>(r)]; }
};

RelationTable compute_relations(const ParityGame& g);

struct LatticeEdge {
  Rel finer, coarser;
};
// The inclusion edges, iso -> strong first.
const std::vector<LatticeEdge>& lattice_edges();

struct EdgeVerdict {
  LatticeEdge edge;
  bool holds;
  bool skipped; // a relation was not computed
  std::optional<std::pair<vertex, vertex>> counterexample;
};

std::vector<EdgeVerdict> check_lattice(const RelationTable& t);
std::string edge_name(const LatticeEdge& e);

} // namespace pgr
