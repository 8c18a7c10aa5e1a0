#pragma once

// Internal: shared machinery for deciding piece properties (categorical /
// Farber) by contiguity search.
//
// Both properties ask whether the inclusion of a piece U can be walked to
// a distinguished family of maps.  The walk is searched over the *core*
// of U instead of U itself: chains restrict to the core (precompose with
// the core inclusion) and extend back (postcompose with the retraction),
// so reachability is unchanged, while the state space shrinks
// dramatically -- a strongly collapsible piece reduces to a point and the
// search degenerates to a walk in the 1-skeleton.

#include "tcplex/collapse.hpp"
#include "tcplex/complex.hpp"
#include "tcplex/contiguity.hpp"
#include "tcplex/simplicial_map.hpp"

namespace tcplex {

struct CoreSetup {
  ComplexPtr ambient;        // codomain of every map below
  ComplexPtr piece;          // U, reindexed densely (Subcomplex::complex())
  CollapseTrace trace;       // collapse of the piece
  SimplicialMap embed_piece;  // i_U : piece -> ambient
  SimplicialMap embed_core;   // core -> ambient
  SimplicialMap to_core;      // retraction piece -> core
  ContiguityChain retract;    // i_U ~ embed_core . to_core, maps piece -> ambient
};

CoreSetup make_core_setup(const Subcomplex& U);

// BFS from embed_core over maps core -> ambient.  On Found the chain is
// already spliced into a full chain of maps piece -> ambient running from
// the inclusion i_U to (found map . to_core), compressed.
ReachOutcome reach_from_core(const CoreSetup& s,
                             const std::function<bool(const uint16_t*)>& stop,
                             uint64_t budget, int jobs);

}  // namespace tcplex
