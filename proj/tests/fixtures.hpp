// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

// Small hand-built games, named by what they exhibit. Vertex i carries the
// label "v<i>".

#pragma once

#include "pgr/game.hpp"

#include <string>
#include <vector>

namespace fixture {

using pgr::ParityGame;
inline constexpr pgr::Player E = pgr::Player::even;
inline constexpr pgr::Player O = pgr::Player::odd;

inline std::vector<std::string> names(std::size_t n)
{
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back("v" + std::to_string(i));
  return out;
}

// Four priority-0 vertices that can all be forced to an odd sink v2, while
// neither player can keep play among them.
inline ParityGame fake_divergence()
{
  return ParityGame({0, 0, 1, 0, 0}, {O, E, O, E, E}, {{2, 1}, {2, 0}, {2}, {2}, {3}}, names(5));
}

// v0 and v2 simulate each other; v1 cannot be simulated by v0.
inline ParityGame direct_sim_pair()
{
  return ParityGame({1, 1, 1, 0}, {O, E, O, E}, {{2}, {2, 3}, {2}, {3}}, names(4));
}

// Every vertex delayed-simulates every other, while priorities differ.
inline ParityGame delayed_universal()
{
  return ParityGame({0, 1, 0}, {E, E, O}, {{1}, {2}, {2}}, names(3));
}

// v0, v1, v6 separate strong-direct, direct and governed relations.
inline ParityGame little_brother()
{
  return ParityGame({0, 0, 1, 1, 1, 2, 0}, {E, E, E, E, E, O, O},
                    {{2}, {2, 4}, {3, 5}, {2, 5}, {4}, {5}, {2}}, names(7));
}

// Minimal under strong bisimilarity, yet v1 and v2 are governed bisimilar.
inline ParityGame owner_blind_pair()
{
  return ParityGame({0, 1, 1}, {O, O, E}, {{1, 2}, {1}, {2}}, {"v1", "v2", "v3"});
}

// A two-cycle and a self-loop: bisimilar but not isomorphic.
inline ParityGame cycle_vs_loop()
{
  return ParityGame({0, 0, 0}, {E, E, E}, {{1}, {0}, {2}}, names(3));
}

// A 1/0 cycle: obligations are discharged only by an even priority, so the
// even-biased and plain delayed simulations relate v0 and v1, the odd-biased
// and direct ones do not.
inline ParityGame even_discharge()
{
  return ParityGame({1, 0}, {E, E}, {{1}, {0}}, names(2));
}

// A 2/1 cycle: the mirror image, discharged only by an odd priority.
inline ParityGame odd_discharge()
{
  return ParityGame({2, 1}, {E, E}, {{1}, {0}}, names(2));
}

inline ParityGame single_loop(pgr::priority_t p = 0, pgr::Player o = E)
{
  return ParityGame({p}, {o}, {{0}});
}

struct Named {
  const char* name;
  ParityGame game;
};

inline std::vector<Named> all()
{
  return {{"fake_divergence", fake_divergence()}, {"direct_sim_pair", direct_sim_pair()},
          {"delayed_universal", delayed_universal()}, {"little_brother", little_brother()},
          {"owner_blind_pair", owner_blind_pair()}, {"cycle_vs_loop", cycle_vs_loop()},
          {"even_discharge", even_discharge()},       {"odd_discharge", odd_discharge()}};
}

} // namespace fixture
