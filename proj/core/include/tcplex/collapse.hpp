#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcplex/simplicial_map.hpp"

namespace tcplex {

// One elementary strong collapse: `removed` was dominated by `dominator`
// (every facet containing it contained the dominator) at the moment it was
// deleted.  Labels, not indices: the complex is reindexed as it shrinks.
struct CollapseStep {
  std::string removed;
  std::string dominator;
};

struct CollapseTrace {
  ComplexPtr start;
  std::vector<CollapseStep> steps;
  ComplexPtr core;           // no dominated vertices remain
  VertexSet core_vertices;   // in the indexing of `start`
};

// Lowest-index vertex dominated by another vertex, with its lowest
// dominator; nullopt when none exists.  d may be null.
std::optional<VertexId> dominated_vertex(const SimplicialComplex& K,
                                         VertexId* dominator);

// Deletes dominated vertices greedily (always the lowest) until none is
// left.  The core is unique up to isomorphism, and this rule makes the
// run itself deterministic.
CollapseTrace core_of(const ComplexPtr& K);

bool is_strongly_collapsible(const ComplexPtr& K);

// The chain id = g_0 ~ g_1 ~ ... ~ g_m of maps K -> K obtained by folding
// each removed vertex onto its dominator in trace order; g_m retracts K
// onto the core.  For a strongly collapsible K this exhibits id ~ const.
ContiguityChain retraction_chain(const CollapseTrace& trace);

// Elementary strong expansion, the inverse move: a new vertex is attached
// over an existing simplex (labels `over`), producing one extra facet
// {new} + over.  The new vertex is dominated by every vertex of `over`,
// so the result strong-collapses back to K.
ComplexPtr strong_expand(const ComplexPtr& K,
                         const std::vector<std::string>& over,
                         const std::string& fresh_label);

}  // namespace tcplex
