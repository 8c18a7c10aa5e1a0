#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "tcplex/simplicial_map.hpp"

namespace tcplex {

enum class SearchStatus {
  Found,      // target reached, chain attached
  NoPath,     // component exhausted without reaching the target
  Exhausted,  // budget ran out first; nothing is decided
};

struct ReachOutcome {
  SearchStatus status = SearchStatus::NoPath;
  ContiguityChain chain;  // start ... stop map, when Found
  uint64_t visited = 0;   // states discovered before stopping
};

// Breadth-first scan of one contiguity class in the one-vertex-move graph:
// states are simplicial maps dom -> cod, and a move rewrites a single
// vertex value v -> t subject to: for every facet s containing v, the
// current image of s together with t spans a simplex of the codomain.
// Moving one vertex at a time loses nothing -- two contiguous maps are
// linked by the mixed sequence that switches one vertex per step -- so the
// states reached from f are exactly the contiguity class of f, and running
// dry is a genuine "no".
//
// The scan is deterministic: vertices and target vertices are tried in
// ascending order, so chains and visit order are reproducible, including
// under jobs > 1 (parallel expansion merges level results in frontier
// order).
class ComponentScan {
 public:
  explicit ComponentScan(SimplicialMap start);
  ~ComponentScan();

  // Runs until stop() accepts a state, the component is exhausted, or
  // `budget` states have been discovered.  stop == nullptr scans the whole
  // component.  May be called once per instance.
  ReachOutcome run(const std::function<bool(const uint16_t*)>& stop,
                   uint64_t budget, int jobs = 1);

  // After run: is this packed assignment in the scanned part?
  bool contains(const uint16_t* packed) const;

  // Chain from the start map to a previously discovered state.
  ContiguityChain chain_to(const uint16_t* packed) const;

  const SimplicialMap& start() const { return start_; }
  int state_width() const;  // vertices per packed state

  SimplicialMap unpack(const uint16_t* packed) const;

 private:
  struct Impl;
  SimplicialMap start_;
  std::unique_ptr<Impl> impl_;
};

// Is g reachable from f by contiguity steps?  Found carries a verified
// chain f ... g.  NoPath is exact; Exhausted means the budget stopped the
// scan first.
ReachOutcome same_contiguity_class(const SimplicialMap& f,
                                   const SimplicialMap& g, uint64_t budget,
                                   int jobs = 1);

}  // namespace tcplex
