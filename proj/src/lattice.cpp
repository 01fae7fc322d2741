// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "pgr/lattice.hpp"

#include "pgr/equivalences.hpp"
#include "pgr/quotient.hpp"
#include "pgr/sim_games.hpp"
#include "pgr/solver.hpp"

namespace pgr {

const char* to_string(Rel r)
{
  switch (r) {
  case Rel::isomorphic:
    return "isomorphic";
  case Rel::strong_bisim:
    return "strong-bisim";
  case Rel::governed_bisim:
    return "governed-bisim";
  case Rel::stut_bisim:
    return "stut";
  case Rel::strong_direct_sim_eq:
    return "strong-direct-sim-equiv";
  case Rel::direct_sim_eq:
    return "direct-sim-equiv";
  case Rel::gstut_bisim:
    return "gstut";
  case Rel::delayed_even_eq:
    return "delayed-even-equiv";
  case Rel::delayed_odd_eq:
    return "delayed-odd-equiv";
  case Rel::delayed_eq:
    return "delayed-equiv";
  case Rel::winner:
    return "winner";
  }
  return "?";
}

RelationTable compute_relations(const ParityGame& g)
{
  RelationTable t;
  if (g.size() <= iso_size_limit)
    t[Rel::isomorphic] = isomorphic_vertices(g);
  t[Rel::strong_bisim] = strong_bisim(g).relation();
  t[Rel::governed_bisim] = governed_bisim(g).relation();
  t[Rel::stut_bisim] = stut_bisim(g).relation();
  t[Rel::strong_direct_sim_eq] = strong_direct_sim(g).kernel();
  t[Rel::direct_sim_eq] = direct_sim(g).kernel();
  t[Rel::gstut_bisim] = gstut_bisim(g).relation();
  t[Rel::delayed_even_eq] = delayed_sim(g, Bias::even).kernel();
  t[Rel::delayed_odd_eq] = delayed_sim(g, Bias::odd).kernel();
  t[Rel::delayed_eq] = delayed_sim(g, Bias::none).kernel();
  const auto w = solve_zielonka(g);
  VertexRelation win(g.size(), RelationKind::equivalence);
  for (vertex v = 0; v < g.size(); ++v)
    for (vertex u = 0; u < g.size(); ++u)
      if (w.winner(v) == w.winner(u))
        win.insert(v, u);
  t[Rel::winner] = std::move(win);
  return t;
}

const std::vector<LatticeEdge>& lattice_edges()
{
  static const std::vector<LatticeEdge> edges = {
      {Rel::isomorphic, Rel::strong_bisim},
      {Rel::strong_bisim, Rel::stut_bisim},
      {Rel::strong_bisim, Rel::governed_bisim},
      {Rel::strong_bisim, Rel::strong_direct_sim_eq},
      {Rel::governed_bisim, Rel::gstut_bisim},
      {Rel::governed_bisim, Rel::direct_sim_eq},
      {Rel::strong_direct_sim_eq, Rel::direct_sim_eq},
      {Rel::direct_sim_eq, Rel::delayed_even_eq},
      {Rel::direct_sim_eq, Rel::delayed_odd_eq},
      {Rel::delayed_even_eq, Rel::delayed_eq},
      {Rel::delayed_odd_eq, Rel::delayed_eq},
      {Rel::delayed_eq, Rel::winner},
      {Rel::stut_bisim, Rel::gstut_bisim},
      {Rel::gstut_bisim, Rel::winner},
  };
  return edges;
}

std::string edge_name(const LatticeEdge& e)
{
  return std::string(to_string(e.finer)) + " <= " + to_string(e.coarser);
}

std::vector<EdgeVerdict> check_lattice(const RelationTable& t)
{
  std::vector<EdgeVerdict> out;
  for (const auto& e : lattice_edges()) {
    const auto& a = t[e.finer];
    const auto& b = t[e.coarser];
    if (!a || !b) {
      out.push_back({e, true, true, std::nullopt});
      continue;
    }
    auto bad = a->first_pair_not_in(*b);
    out.push_back({e, !bad, false, bad});
  }
  return out;
}

} // namespace pgr
