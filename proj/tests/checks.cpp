// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "checks.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgr/equivalences.hpp"
#include "pgr/forcing.hpp"
#include "pgr/lattice.hpp"
#include "pgr/quotient.hpp"
#include "pgr/sim_games.hpp"
#include "pgr/solver.hpp"

#include <random>
#include <sstream>

namespace checks {

using namespace pgr;

void Failures::add(const ParityGame& g, const std::string& what)
{
  if (msgs.size() < 20)
    msgs.push_back(what + "\n" + serialize_pgsolver(g));
  else if (msgs.size() == 20)
    msgs.push_back("(further failures suppressed)");
}

namespace {

VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng)
{
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (vertex v = 0; v < n; ++v)
    if (coin(rng))
      s.insert(v);
  return s;
}

std::string at(const char* what, vertex v, Player i)
{
  std::ostringstream os;
  os << what << " at v" << v << " for " << to_string(i);
  return os.str();
}

} // namespace

void forcing_lemmas(const ParityGame& g, std::uint64_t seed, Failures& f)
{
  ++f.checked;
  std::mt19937_64 rng(seed);
  const std::size_t n = g.size();
  const VertexSet all = VertexSet::full(n);
  for (int round = 0; round < 3; ++round) {
    const VertexSet U = random_subset(n, 0.6, rng);
    const VertexSet T = random_subset(n, 0.3, rng);
    const VertexSet T2 = random_subset(n, 0.3, rng);
    // Exits of U, for the restriction lemma; its target must avoid U, as a
    // vertex of U inside the target is reached in zero steps.
    VertexSet exits(n);
    U.for_each([&](vertex w) {
      for (vertex u : g.successors(w))
        if (!U.contains(u))
          exits.insert(u);
    });
    const VertexSet Tr = exits | (T - U);
    for (Player i : {Player::even, Player::odd}) {
      const Player j = opponent(i);
      const VertexSet attr = attractor(g, i, U, T);
      for (vertex v = 0; v < n; ++v) {
        const bool fv = forces(g, i, v, U, T);
        // Forcing coincides with the attractor and with strategy enumeration.
        if (fv != attr.contains(v) || fv != oracle::forces(g, i, v, U, T))
          f.add(g, at("forces/attractor/oracle disagree", v, i));
        // One of the two players forces.
        if (!fv && !forces(g, j, v, U, all - T))
          f.add(g, at("neither player forces", v, i));
        // Opposing forcings meet.
        if (fv && forces(g, j, v, U, T2)) {
          bool meet = false;
          T.for_each([&](vertex u) {
            T2.for_each([&](vertex u2) { meet = meet || u == u2 || U.contains(u) || U.contains(u2); });
          });
          if (!meet)
            f.add(g, at("opposing forcings disjoint", v, i));
        }
        // Divergence is the dual of forcing an exit.
        const bool dv = diverges(g, i, v, U);
        if (dv != oracle::diverges(g, i, v, U) || dv != (U.contains(v) && !forces(g, j, v, U, all - U)))
          f.add(g, at("divergence duality", v, i));
        // Gluing strategies.
        bool chain = fv;
        T.for_each([&](vertex u) { chain = chain && forces(g, i, u, U, T2); });
        if (chain && !forces(g, i, v, U, T2))
          f.add(g, at("glued forcing failed", v, i));
        // Some exit into T is usable.
        if (fv && !T.contains(v)) {
          VertexSet S(n);
          U.for_each([&](vertex u) {
            for (vertex x : g.successors(u))
              if (T.contains(x))
                S.insert(u);
          });
          bool exit = S.intersects(g.owned_by(i));
          S.for_each([&](vertex u) { exit = exit || g.successor_set(u).subset_of(T); });
          if (!exit)
            f.add(g, at("no usable exit", v, i));
        }
        // Restricting the target to the exits of U.
        if (U.contains(v) && forces(g, i, v, U, Tr) && !forces(g, i, v, U, exits))
          f.add(g, at("restricted target lost", v, i));
      }
    }
  }
}

void solver_oracle(const ParityGame& g, Failures& f)
{
  ++f.checked;
  const auto w = solve_zielonka(g);
  const auto even = oracle::even_wins(g);
  if (!(w.even == even) || !(w.odd == even.complement()))
    f.add(g, "Zielonka disagrees with strategy enumeration");
}

void coincidence(const ParityGame& g, bool oracles, Failures& f)
{
  ++f.checked;
  for (Notion n : {Notion::direct, Notion::governed_bisim, Notion::gstut, Notion::delayed,
                   Notion::delayed_even, Notion::delayed_odd})
    if (!coincidence_check(g, n))
      f.add(g, std::string("coincidence fails for ") + to_string(n));
  if (!oracles)
    return;
  const auto d = direct_sim(g);
  if (!oracle::is_direct_simulation(g, d))
    f.add(g, "direct_sim is not a direct simulation");
  if (g.size() <= 4) {
    if (!(d == oracle::largest_direct_simulation(g)))
      f.add(g, "direct_sim differs from the union of all direct simulations");
    if (!(strong_direct_sim(g) == oracle::largest_direct_simulation(g, true)))
      f.add(g, "strong_direct_sim differs from the union of owner-respecting direct simulations");
  }
  if (!(governed_bisim(g).relation() == oracle::largest_symmetric_direct_simulation(g)))
    f.add(g, "governed_bisim differs from the largest symmetric direct simulation");
  if (g.size() <= 5) {
    if (!(gstut_bisim(g).relation() == oracle::largest_gstut_bisimulation(g)))
      f.add(g, "gstut_bisim differs from the union of all gstut bisimulations");
    if (!(stut_bisim(g).relation() == oracle::largest_gstut_bisimulation(g, true)))
      f.add(g, "stut_bisim differs from the union of owner-respecting gstut bisimulations");
  }
  for (Bias b : {Bias::none, Bias::even, Bias::odd}) {
    const auto r = delayed_sim(g, b);
    if (!r.reflexive() || !r.transitive() || !d.subset_of(r))
      f.add(g, "delayed preorder malformed or missing direct pairs");
  }
  gstut_set_transfer(g, f);
}

void gstut_set_transfer(const ParityGame& g, Failures& f)
{
  const auto p = gstut_bisim(g);
  if (p.class_count() > 7)
    return;
  const std::size_t n = g.size();
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    const VertexSet& own = p.members(c);
    // Every set of other classes, as a bit mask over class indices.
    for (std::uint32_t m = 0; m < (1u << p.class_count()); ++m) {
      if (m & (1u << c))
        continue;
      VertexSet target(n);
      for (std::size_t d = 0; d < p.class_count(); ++d)
        if (m & (1u << d))
          target |= p.members(d);
      for (Player i : {Player::even, Player::odd}) {
        const vertex v = own.first();
        const bool expected = forces(g, i, v, own, target);
        bool same = true;
        own.for_each([&](vertex w) { same = same && forces(g, i, w, own, target) == expected; });
        if (!same) {
          f.add(g, "gstut class " + std::to_string(c) + " splits on forcing a set of classes");
          return;
        }
      }
    }
  }
}

void lattice(const ParityGame& g, Failures& f)
{
  ++f.checked;
  const auto t = compute_relations(g);
  for (const auto& v : check_lattice(t))
    if (!v.holds)
      f.add(g, "lattice edge fails: " + edge_name(v.edge) + " at (" + std::to_string(v.counterexample->first) +
                   "," + std::to_string(v.counterexample->second) + ")");
}

void quotients(const ParityGame& g, Failures& f)
{
  ++f.checked;
  for (Equivalence e : {Equivalence::direct_sim, Equivalence::governed_bisim, Equivalence::gstut_bisim,
                        Equivalence::strong_bisim, Equivalence::stut_bisim}) {
    const std::string name = to_string(e);
    QuotientResult r;
    try {
      r = quotient(g, e);
    } catch (const std::exception& ex) {
      f.add(g, name + " quotient threw: " + ex.what());
      continue;
    }
    const auto& q = r.quotient;
    // (a) a total game whose vertices are exactly the classes.
    bool total = q.size() == r.partition.class_count() && r.class_map.size() == g.size();
    for (vertex c = 0; c < q.size() && total; ++c)
      total = !q.successors(c).empty();
    std::vector<char> hit(q.size(), 0);
    for (vertex v = 0; v < g.size() && total; ++v) {
      total = r.class_map[v] < q.size() && q.priority(r.class_map[v]) == g.priority(v);
      if (total)
        hit[r.class_map[v]] = 1;
    }
    for (char h : hit)
      total = total && h;
    if (!total)
      f.add(g, name + " quotient is not a total game over the classes");
    // (b) equivalent to the original.
    if (!quotient_equivalent(g, r))
      f.add(g, name + " quotient is not equivalent to the original");
    // (c) winners preserved.
    if (!verify_preservation(g, r))
      f.add(g, name + " quotient changes a winner");
    // (d) idempotent up to isomorphism.
    const auto rr = quotient(q, e);
    if (!iso_check(rr.quotient, q))
      f.add(g, name + " quotient of the quotient is not isomorphic to the quotient");
  }
}

void wf_ranks(const ParityGame& g, Failures& f)
{
  ++f.checked;
  for (Bias b : {Bias::none, Bias::even, Bias::odd})
    if (!wf_rank_check(g, b))
      f.add(g, std::string("well-founded rank check fails, bias ") +
                   (b == Bias::none ? "none" : b == Bias::even ? "even" : "odd"));
}

namespace {

bool pre(const VertexRelation& r, vertex v, vertex w) { return r.contains(v, w); }

bool universal(const VertexRelation& r)
{
  for (vertex v = 0; v < r.size(); ++v)
    for (vertex w = 0; w < r.size(); ++w)
      if (!r.contains(v, w))
        return false;
  return true;
}

bool won(const GstutArena& a, const BuchiSolution& s, vertex v, vertex w, Challenge c)
{
  auto p = a.find(v, w, c);
  return p && s.won.contains(*p);
}

bool has_edge(const ParityGame& g, vertex a, vertex b)
{
  for (vertex x : g.successors(a))
    if (x == b)
      return true;
  return false;
}

} // namespace

std::vector<Claim> fixture_claims()
{
  std::vector<Claim> out;
  auto claim = [&](std::string what, bool holds) { out.push_back({std::move(what), holds}); };

  {
    const auto g = fixture::direct_sim_pair();
    const auto d = direct_sim(g), dg = direct_sim_via_game(g), o = oracle::largest_direct_simulation(g);
    for (const auto* r : {&d, &dg, &o}) {
      claim("direct_sim_pair: v0 <=d v1", pre(*r, 0, 1));
      claim("direct_sim_pair: v0 <=d v2", pre(*r, 0, 2));
      claim("direct_sim_pair: v2 <=d v0", pre(*r, 2, 0));
      claim("direct_sim_pair: not v1 <=d v0", !pre(*r, 1, 0));
      bool refl = true;
      for (vertex v = 0; v < 4; ++v)
        refl = refl && pre(*r, v, v);
      claim("direct_sim_pair: <=d reflexive", refl);
    }
    claim("direct_sim_pair: classes {v0,v2} {v1} {v3}", describe(equivalence_from_preorder(d)) == "{0,2} {1} {3}");
    const auto w = solve_zielonka(g);
    claim("direct_sim_pair: Even wins {v1,v3}", w.even == VertexSet(4, {1, 3}));
  }
  {
    const auto g = fixture::delayed_universal();
    claim("delayed_universal: delayed simulation is universal", universal(delayed_sim(g, Bias::none)));
    claim("delayed_universal: a single delayed class", equivalence_from_preorder(delayed_sim(g, Bias::none)).class_count() == 1);
    claim("delayed_universal: Even wins everywhere", solve_zielonka(g).even.size() == 3);
    claim("delayed_universal: direct simulation is not universal", !universal(direct_sim(g)));
  }
  {
    const auto g = fixture::little_brother();
    const auto d = direct_sim(g), sd = strong_direct_sim(g);
    const auto gb = governed_bisim(g);
    const auto gbo = oracle::largest_symmetric_direct_simulation(g);
    bool deq = true;
    for (vertex a : {0u, 1u, 6u})
      for (vertex b : {0u, 1u, 6u})
        deq = deq && pre(d, a, b);
    claim("little_brother: v0, v1, v6 direct simulation equivalent", deq);
    claim("little_brother: v0, v1, v6 direct simulation equivalent (game)",
          pre(direct_sim_via_game(g), 0, 6) && pre(direct_sim_via_game(g), 6, 1) && pre(direct_sim_via_game(g), 1, 0));
    claim("little_brother: v2 and v3 governed bisimilar", gb.related(2, 3) && gbo.contains(2, 3));
    claim("little_brother: v0 and v6 governed bisimilar", gb.related(0, 6) && gbo.contains(0, 6));
    claim("little_brother: v0 and v6 not strong direct simulation equivalent", !(pre(sd, 0, 6) && pre(sd, 6, 0)));
    claim("little_brother: v0 and v1 strong direct simulation equivalent", pre(sd, 0, 1) && pre(sd, 1, 0));
    claim("little_brother: v0 and v1 not governed bisimilar", !gb.related(0, 1) && !gbo.contains(0, 1));
  }
  {
    const auto g = fixture::fake_divergence();
    const auto p = gstut_bisim(g);
    claim("fake_divergence: gstut classes {v0,v1,v3,v4} {v2}", describe(p) == "{0,1,3,4} {2}");
    claim("fake_divergence: gstut agrees with the partition oracle",
          p.relation() == oracle::largest_gstut_bisimulation(g));
    const VertexSet zero(5, {0, 1, 3, 4});
    bool diverge = false;
    for (vertex v : {0u, 1u, 3u, 4u})
      for (Player i : {Player::even, Player::odd})
        diverge = diverge || diverges(g, i, v, zero) || oracle::diverges(g, i, v, zero);
    claim("fake_divergence: neither player keeps play at priority 0", !diverge);
    bool force = true;
    for (vertex v : {0u, 1u, 3u, 4u})
      for (Player i : {Player::even, Player::odd})
        force = force && forces(g, i, v, zero, VertexSet(5, {2}));
    claim("fake_divergence: both players force play to v2", force);
    const auto s = stut_bisim(g);
    claim("fake_divergence: v3 and v4 stuttering bisimilar", s.related(3, 4));
    claim("fake_divergence: v0 and v3 not stuttering bisimilar", !s.related(0, 3));
    claim("fake_divergence: v3 and v4 not direct simulation equivalent",
          !(pre(direct_sim(g), 3, 4) && pre(direct_sim(g), 4, 3)));
    const auto a = build_gstut_arena(g);
    const auto sol = solve_buchi(a.arena);
    claim("fake_divergence: Duplicator wins ((v1,v3),check)", won(a, sol, 1, 3, Challenge::make_check()));
    claim("fake_divergence: Duplicator wins ((v1,v4),check)", won(a, sol, 1, 4, Challenge::make_check()));
    claim("fake_divergence: challenge ((v1,v3),(0,v2)) reached and won", won(a, sol, 1, 3, Challenge::on(0, 2)));
    claim("fake_divergence: Spoiler wins ((v0,v2),check)",
          a.find(0, 2, Challenge::make_check()) && !won(a, sol, 0, 2, Challenge::make_check()));
    const auto q = quotient_gstut(g);
    const vertex zc = q.class_map[0], tc = q.class_map[2];
    claim("fake_divergence: gstut quotient has 2 vertices", q.quotient.size() == 2);
    claim("fake_divergence: priority-0 class has no self-loop and an edge to {v2}",
          !has_edge(q.quotient, zc, zc) && has_edge(q.quotient, zc, tc));
    claim("fake_divergence: {v2} keeps its self-loop", has_edge(q.quotient, tc, tc));
    claim("fake_divergence: gstut quotient preserves winners", verify_preservation(g, q));
  }
  {
    const auto g = fixture::owner_blind_pair();
    claim("owner_blind_pair: minimal under strong bisimilarity", strong_bisim(g).class_count() == 3);
    claim("owner_blind_pair: v2 and v3 governed bisimilar", governed_bisim(g).related(1, 2));
    const auto q = quotient_governed_bisim(g);
    const vertex a = q.class_map[0], b = q.class_map[1];
    claim("owner_blind_pair: governed quotient {v1} {v2,v3}",
          q.quotient.size() == 2 && q.class_map[2] == b && a != b);
    claim("owner_blind_pair: merged class owned by Even", q.quotient.owner(b) == Player::even);
    claim("owner_blind_pair: quotient edges {v1}->{v2,v3}, {v2,v3}->{v2,v3}",
          q.quotient.successors(a).size() == 1 && has_edge(q.quotient, a, b) &&
              q.quotient.successors(b).size() == 1 && has_edge(q.quotient, b, b));
  }
  {
    const auto g = fixture::cycle_vs_loop();
    claim("cycle_vs_loop: all three vertices strongly bisimilar", strong_bisim(g).class_count() == 1);
    const ParityGame two({0, 0}, {Player::even, Player::even}, {{1}, {0}});
    claim("cycle_vs_loop: cycle and loop games not isomorphic", !iso_check(two, fixture::single_loop()));
    const auto iso = isomorphic_vertices(g);
    claim("cycle_vs_loop: cycle vertex not isomorphic to loop vertex", iso.contains(0, 1) && !iso.contains(0, 2));
  }
  return out;
}

namespace {

struct Witness {
  const char* fixture;
  ParityGame game;
  Rel finer, coarser;
  vertex v, w;
};

} // namespace

std::vector<Claim> strictness_witnesses()
{
  const std::vector<Witness> ws = {
      {"cycle_vs_loop", fixture::cycle_vs_loop(), Rel::isomorphic, Rel::strong_bisim, 0, 2},
      {"fake_divergence", fixture::fake_divergence(), Rel::strong_bisim, Rel::stut_bisim, 3, 4},
      {"owner_blind_pair", fixture::owner_blind_pair(), Rel::strong_bisim, Rel::governed_bisim, 1, 2},
      {"little_brother", fixture::little_brother(), Rel::strong_bisim, Rel::strong_direct_sim_eq, 0, 1},
      {"fake_divergence", fixture::fake_divergence(), Rel::governed_bisim, Rel::gstut_bisim, 0, 1},
      {"little_brother", fixture::little_brother(), Rel::governed_bisim, Rel::direct_sim_eq, 0, 1},
      {"little_brother", fixture::little_brother(), Rel::strong_direct_sim_eq, Rel::direct_sim_eq, 0, 6},
      {"even_discharge", fixture::even_discharge(), Rel::direct_sim_eq, Rel::delayed_even_eq, 0, 1},
      {"odd_discharge", fixture::odd_discharge(), Rel::direct_sim_eq, Rel::delayed_odd_eq, 0, 1},
      {"odd_discharge", fixture::odd_discharge(), Rel::delayed_even_eq, Rel::delayed_eq, 0, 1},
      {"even_discharge", fixture::even_discharge(), Rel::delayed_odd_eq, Rel::delayed_eq, 0, 1},
      {"fake_divergence", fixture::fake_divergence(), Rel::delayed_eq, Rel::winner, 3, 4},
      {"fake_divergence", fixture::fake_divergence(), Rel::stut_bisim, Rel::gstut_bisim, 0, 1},
      {"delayed_universal", fixture::delayed_universal(), Rel::gstut_bisim, Rel::winner, 0, 1},
  };
  std::vector<Claim> out;
  for (const auto& w : ws) {
    const auto t = compute_relations(w.game);
    const auto& fine = *t[w.finer];
    const auto& coarse = *t[w.coarser];
    out.push_back({std::string(to_string(w.finer)) + " < " + to_string(w.coarser) + " witnessed by " + w.fixture +
                       " (v" + std::to_string(w.v) + ", v" + std::to_string(w.w) + ")",
                   coarse.contains(w.v, w.w) && !fine.contains(w.v, w.w)});
  }
  return out;
}

std::vector<ParityGame> small_corpus()
{
  std::vector<ParityGame> out;
  for (std::size_t n = 1; n <= 3; ++n)
    oracle::for_each_game(n, 2, 2, [&](const ParityGame& g) { out.push_back(g); });
  return out;
}

std::vector<ParityGame> random_corpus(std::size_t count, std::size_t max_vertices)
{
  std::vector<ParityGame> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % max_vertices;
    out.push_back(random_game(n, 1 + i % 5, 1, 1 + i % 3, 1000 + i));
  }
  return out;
}

} // namespace checks
