#pragma once

// Brute-force reference implementations used to cross-check the library on
// small instances, plus the four oracle-equivalence suites.  Everything
// here prefers clarity over speed and shares as little code as possible
// with the solver paths it audits.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tcplex/complex.hpp"
#include "tcplex/simplicial_map.hpp"

namespace oracle {

using tcplex::ComplexPtr;
using tcplex::Simplex;
using tcplex::SimplicialMap;
using tcplex::VertexId;
using tcplex::VertexSet;

// Every nonempty simplex of K, found by scanning all vertex subsets.
std::vector<Simplex> all_simplices(const ComplexPtr& K);

// Simpliciality / contiguity checked over every simplex, not just facets.
bool is_simplicial_all(const SimplicialMap& f);
bool contiguous_all(const SimplicialMap& f, const SimplicialMap& g);

// Every simplicial map dom -> cod, by exhaustive vertex assignment in
// odometer order.
std::vector<SimplicialMap> all_maps(const ComplexPtr& dom,
                                    const ComplexPtr& cod);

// Union-find partition of n items under a pairwise relation; returns a
// class id per item (ids are least member indices).
std::vector<int> components(size_t n,
                            const std::function<bool(size_t, size_t)>& edge);

// All complexes on exactly v labeled vertices (every vertex in a facet),
// as antichains of nonempty vertex subsets; and their union over 1..max_v.
std::vector<ComplexPtr> all_complexes_exact(int v);
std::vector<ComplexPtr> all_complexes(int max_v);

ComplexPtr random_complex(std::mt19937& rng, int max_v, int max_facets);

// Minimum size of a cover of K by categorical subcomplexes allowing
// arbitrary pieces (any antichain of simplices as generators), minus one.
// Only sensible for tiny K: enumerates every subcomplex.
int unrestricted_scat(const ComplexPtr& K);

// ---------------------------------------------------------------------------
// Equivalence suites.  Each returns how many instances were checked and
// how many disagreed; a sound build reports zero discrepancies.

struct SuiteResult {
  int checked = 0;
  int discrepancies = 0;
};

// (a) facet-based contiguity / simpliciality vs the all-simplex
// definitions, on random map pairs over random complexes.
SuiteResult suite_contiguity_facet_vs_all(uint32_t seed, int n_pairs);

// (b) one-vertex-move components vs full contiguity-graph components of
// maps(K -> K), on every complex with at most max_v vertices.
SuiteResult suite_move_components(int max_v);

// (c) is_strongly_collapsible vs "identity walks to a constant map" by a
// plain breadth-first scan (no core reduction), on every complex with at
// most max_v vertices.
SuiteResult suite_collapsible_vs_walk(int max_v);

// (d) facet-generated cover optimum vs unrestricted-piece optimum for the
// category, on every <= 4-vertex complex with at most five facets plus
// n_random sampled 5-vertex ones.
SuiteResult suite_scat_unrestricted(uint32_t seed, int n_random);

}  // namespace oracle
