// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#include "checks.hpp"
#include "fixtures.hpp"
#include "pgr/lattice.hpp"
#include "pgr/quotient.hpp"

#include <doctest.h>

#include <set>

using namespace pgr;

TEST_SUITE("lattice")
{
  TEST_CASE("edges run from finer to coarser")
  {
    const auto& es = lattice_edges();
    CHECK(es.size() == 14);
    CHECK(es.front().finer == Rel::isomorphic);
    CHECK(es.front().coarser == Rel::strong_bisim);
    std::set<std::pair<Rel, Rel>> seen;
    for (const auto& e : es) {
      CHECK(static_cast<int>(e.finer) < static_cast<int>(e.coarser));
      CHECK(seen.insert({e.finer, e.coarser}).second);
    }
    CHECK(edge_name(es.front()) == std::string(to_string(Rel::isomorphic)) + " <= " + to_string(Rel::strong_bisim));
  }

  TEST_CASE("every relation is an equivalence")
  {
    for (const auto& [name, g] : fixture::all()) {
      auto t = compute_relations(g);
      for (std::size_t r = 0; r < rel_count; ++r) {
        REQUIRE(t.rel[r]);
        CHECK(t.rel[r]->reflexive());
        CHECK(t.rel[r]->symmetric());
        CHECK(t.rel[r]->transitive());
      }
    }
  }

  TEST_CASE("a broken table names the violated edge")
  {
    auto g = fixture::fake_divergence();
    auto t = compute_relations(g);
    t[Rel::strong_bisim]->insert(0, 2);
    t[Rel::strong_bisim]->insert(2, 0);
    bool named = false;
    for (const auto& v : check_lattice(t))
      if (!v.holds) {
        named |= v.edge.finer == Rel::strong_bisim;
        REQUIRE(v.counterexample);
      }
    CHECK(named);
  }

  TEST_CASE("isomorphism is skipped beyond the size limit")
  {
    auto t = compute_relations(random_game(iso_size_limit + 1, 1, 1, 2, 9));
    CHECK_FALSE(t[Rel::isomorphic]);
    for (const auto& v : check_lattice(t))
      if (v.edge.finer == Rel::isomorphic)
        CHECK(v.skipped);
  }

  TEST_CASE("lattice on the corpora")
  {
    checks::Failures f;
    for (const auto& g : checks::small_corpus())
      checks::lattice(g, f);
    for (const auto& g : checks::random_corpus(200, 8))
      checks::lattice(g, f);
    for (const auto& m : f.msgs)
      FAIL_CHECK(m);
  }
}
