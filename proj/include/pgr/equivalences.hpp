// Copyright (C) 2026 The pgreduce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pgr/game.hpp"
#include "pgr/relation.hpp"

namespace pgr {

// Greatest direct simulation, by deleting pairs that violate the transfer
// condition until nothing changes.
VertexRelation direct_sim(const ParityGame& g);
// Same, but never relating vertices of different owners.
VertexRelation strong_direct_sim(const ParityGame& g);

Partition governed_bisim(const ParityGame& g);
Partition strong_bisim(const ParityGame& g);
Partition gstut_bisim(const ParityGame& g);
// gstut refinement started from a priority-and-owner split.
Partition stut_bisim(const ParityGame& g);

// One signature pass over p. A result of the corresponding computation is a
// fixpoint: refining it again returns it unchanged.
Partition refine_governed(const ParityGame& g, const Partition& p);
Partition refine_strong(const ParityGame& g, const Partition& p);
Partition refine_gstut(const ParityGame& g, const Partition& p);

Partition priority_partition(const ParityGame& g);
Partition priority_owner_partition(const ParityGame& g);

} // namespace pgr
