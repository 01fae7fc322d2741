// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/vertex_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgr {

enum class RelationKind { preorder, equivalence };

// Square bit matrix over V x V.
class VertexRelation {
public:
  VertexRelation() = default;
  VertexRelation(std::size_t n, RelationKind kind);
  static VertexRelation identity(std::size_t n, RelationKind kind);

  std::size_t size() const { return rows_.size(); }
  RelationKind kind() const { return kind_; }
  void set_kind(RelationKind k) { kind_ = k; }

  bool contains(vertex v, vertex w) const { return rows_[v].contains(w); }
  void insert(vertex v, vertex w) { rows_[v].insert(w); }
  void erase(vertex v, vertex w) { rows_[v].erase(w); }
  // vR = { w | v R w }
  const VertexSet& row(vertex v) const { return rows_[v]; }

  bool reflexive() const;
  bool symmetric() const;
  bool transitive() const;
  // Checks the invariants its kind promises.
  bool valid() const;

  bool subset_of(const VertexRelation& o) const;
  std::optional<std::pair<vertex, vertex>> first_pair_not_in(const VertexRelation& o) const;
  VertexRelation kernel() const; // R intersected with its inverse
  bool operator==(const VertexRelation& o) const { return rows_ == o.rows_; }

private:
  std::vector<VertexSet> rows_;
  RelationKind kind_ = RelationKind::preorder;
};

// Disjoint classes covering V, numbered by their least vertex.
class Partition {
public:
  Partition() = default;
  // Any labelling of vertices; classes are renumbered by least member.
  explicit Partition(const std::vector<std::size_t>& labels);
  static Partition discrete(std::size_t n);
  static Partition from_relation(const VertexRelation& equivalence);

  std::size_t vertex_count() const { return class_of_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_of(vertex v) const { return class_of_[v]; }
  const VertexSet& members(std::size_t c) const { return classes_[c]; }
  const std::vector<VertexSet>& classes() const { return classes_; }
  const std::vector<std::size_t>& class_map() const { return class_of_; }
  bool related(vertex v, vertex w) const { return class_of_[v] == class_of_[w]; }

  VertexRelation relation() const;
  bool refines(const Partition& coarser) const;
  bool valid() const;
  bool operator==(const Partition& o) const { return class_of_ == o.class_of_; }

private:
  std::vector<std::size_t> class_of_;
  std::vector<VertexSet> classes_;
};

// Classes of R intersected with its inverse; throws std::invalid_argument
// unless R is tagged as a preorder.
Partition equivalence_from_preorder(const VertexRelation& R);

std::string describe(const Partition& p);

} // namespace pgr
