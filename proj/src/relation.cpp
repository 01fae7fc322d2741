// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/relation.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace pgr {

VertexRelation::VertexRelation(std::size_t n, RelationKind kind) : rows_(n, VertexSet(n)), kind_(kind)
{
}

VertexRelation VertexRelation::identity(std::size_t n, RelationKind kind)
{
  VertexRelation r(n, kind);
  for (vertex v = 0; v < n; ++v)
    r.insert(v, v);
  return r;
}

bool VertexRelation::reflexive() const
{
  for (vertex v = 0; v < size(); ++v)
    if (!contains(v, v))
      return false;
  return true;
}

bool VertexRelation::symmetric() const
{
  for (vertex v = 0; v < size(); ++v)
    for (vertex w = 0; w < size(); ++w)
      if (contains(v, w) != contains(w, v))
        return false;
  return true;
}

bool VertexRelation::transitive() const
{
  for (vertex v = 0; v < size(); ++v) {
    bool ok = true;
    rows_[v].for_each([&](vertex w) { ok = ok && rows_[w].subset_of(rows_[v]); });
    if (!ok)
      return false;
  }
  return true;
}

bool VertexRelation::valid() const
{
  if (!reflexive() || !transitive())
    return false;
  return kind_ == RelationKind::preorder || symmetric();
}

bool VertexRelation::subset_of(const VertexRelation& o) const { return !first_pair_not_in(o); }

std::optional<std::pair<vertex, vertex>> VertexRelation::first_pair_not_in(const VertexRelation& o) const
{
  for (vertex v = 0; v < size(); ++v)
    if (!rows_[v].subset_of(o.rows_[v]))
      return std::pair{v, (rows_[v] - o.rows_[v]).first()};
  return std::nullopt;
}

VertexRelation VertexRelation::kernel() const
{
  VertexRelation k(size(), RelationKind::equivalence);
  for (vertex v = 0; v < size(); ++v)
    rows_[v].for_each([&](vertex w) {
      if (contains(w, v))
        k.insert(v, w);
    });
  return k;
}

Partition::Partition(const std::vector<std::size_t>& labels)
{
  std::map<std::size_t, std::size_t> renumber;
  class_of_.resize(labels.size());
  for (vertex v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = renumber.emplace(labels[v], classes_.size());
    if (fresh)
      classes_.emplace_back(labels.size());
    class_of_[v] = it->second;
    classes_[it->second].insert(v);
  }
}

Partition Partition::discrete(std::size_t n)
{
  std::vector<std::size_t> labels(n);
  for (std::size_t v = 0; v < n; ++v)
    labels[v] = v;
  return Partition(labels);
}

Partition Partition::from_relation(const VertexRelation& equivalence)
{
  std::vector<std::size_t> labels(equivalence.size());
  for (vertex v = 0; v < equivalence.size(); ++v)
    labels[v] = equivalence.row(v).first();
  return Partition(labels);
}

VertexRelation Partition::relation() const
{
  VertexRelation r(vertex_count(), RelationKind::equivalence);
  for (vertex v = 0; v < vertex_count(); ++v)
    classes_[class_of_[v]].for_each([&](vertex w) { r.insert(v, w); });
  return r;
}

bool Partition::refines(const Partition& coarser) const
{
  for (auto& c : classes_) {
    auto target = coarser.class_of(c.first());
    bool ok = true;
    c.for_each([&](vertex v) { ok = ok && coarser.class_of(v) == target; });
    if (!ok)
      return false;
  }
  return true;
}

bool Partition::valid() const
{
  VertexSet seen(vertex_count());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty() || classes_[c].intersects(seen))
      return false;
    if (c > 0 && classes_[c].first() < classes_[c - 1].first())
      return false;
    bool ok = true;
    classes_[c].for_each([&](vertex v) { ok = ok && class_of_[v] == c; });
    if (!ok)
      return false;
    seen |= classes_[c];
  }
  return seen.size() == vertex_count();
}

Partition equivalence_from_preorder(const VertexRelation& R)
{
  if (R.kind() != RelationKind::preorder)
    throw std::invalid_argument("equivalence_from_preorder needs a preorder");
  return Partition::from_relation(R.kernel());
}

std::string describe(const Partition& p)
{
  std::ostringstream os;
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    os << (c ? " " : "") << '{';
    bool first = true;
    p.members(c).for_each([&](vertex v) {
      os << (first ? "" : ",") << v;
      first = false;
    });
    os << '}';
  }
  return os.str();
}

} // namespace pgr
