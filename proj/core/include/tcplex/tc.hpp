#pragma once

#include "tcplex/category.hpp"

namespace tcplex {

// Shared tables for one targeted instance (K, L): the categorical product
// K x L and the diagonal {(y, y) : y in L} inside it, as a set of product
// vertex indices.
struct PairContext {
  ComplexPtr K;
  Subcomplex L;        // target subcomplex of K
  ComplexPtr product;  // categorical_product(K, L.complex())
  VertexSet diagonal;
};

PairContext make_pair_context(const ComplexPtr& K, const Subcomplex& L);

struct FarberOutcome {
  SearchStatus status = SearchStatus::NoPath;
  std::optional<FarberWitness> witness;  // on Found
  uint64_t visited = 0;
};

// Does the piece Omega of K x L admit a section sigma: Omega -> L with
// Delta_L . sigma in the contiguity class of the inclusion?  Decided by a
// single scan from the inclusion, stopping at any diagonal-valued map;
// sigma is read off the reached map (its second coordinate), so no
// enumeration of candidate sections ever happens.  NoPath is exact.
FarberOutcome is_farber(const PairContext& ctx, const Subcomplex& omega,
                        uint64_t budget = kDefaultBudget, int jobs = 1);

struct TcOptions {
  uint64_t budget = kDefaultBudget;
  int jobs = 1;
  bool with_upper_bound = false;  // additionally run the cover search on K x K
};

// Exact targeted complexity TC(K, L): minimum number of Farber pieces
// covering K x L, minus one, with a verified certificate.  Value -1 means
// no cover of any size exists (the complexity is infinite; this happens
// exactly when some part of the product cannot reach the diagonal, e.g.
// for disconnected K) -- the result then carries an explanatory note and
// an empty certificate.  Throws ExhaustedError when the budget prevents
// certifying exactness.
ComplexityResult tc_targeted(const ComplexPtr& K, const Subcomplex& L,
                             const TcOptions& opts = {});

// Discrete topological complexity TC(K) = TC(K, K).
ComplexityResult tc_discrete(const ComplexPtr& K, const TcOptions& opts = {});

// Audit of the theorem-backed inequality chain on one pair:
//   scat(K) <= TC(K, L) <= TC(K)   and, on request, TC(K) <= scat(K x K);
// plus the equality cases TC(K, v0) = scat(K) when L is a single vertex,
// TC(K, L) = scat(K) when L is categorical in K, and TC(K, L) = 0 iff K
// is strongly collapsible.  A violation means an implementation bug, since
// every one of these is a theorem; `ok` goes false and the offending line
// says so.
struct BoundsCheck {
  BoundsReport bounds;  // scat_K, tc_K, scat_KK (-1 = not computed)
  int tc_KL = -1;
  bool l_is_vertex = false;
  bool l_categorical = false;
  bool ok = true;
  std::vector<std::string> lines;  // one audit line per checked relation
};

BoundsCheck check_bounds(const ComplexPtr& K, const Subcomplex& L,
                         const TcOptions& opts = {});

// One elementary strong expansion / strong collapse applied to the pair,
// keeping L a subcomplex throughout.
struct PairMove {
  enum class Kind { Expand, Collapse };
  Kind kind = Kind::Expand;
  // Expand: attachment simplex (labels) coned over by a fresh vertex.
  std::vector<std::string> over;
  // Expand: the fresh vertex's label.  Collapse: the vertex to delete,
  // which must be dominated in K (and in L, when it lies in L).
  std::string label;
  // Expand only: also add the cone facet to L (requires `over` inside L).
  bool into_L = false;
};

std::pair<ComplexPtr, Subcomplex> apply_pair_move(const ComplexPtr& K,
                                                  const Subcomplex& L,
                                                  const PairMove& move);

// Recomputes TC(K', L') after each move and asserts it never changes.
struct InvarianceReport {
  int before = -1;  // TC of the untouched pair
  bool ok = true;
  std::vector<std::string> lines;
};

InvarianceReport invariance_check(const ComplexPtr& K, const Subcomplex& L,
                                  const std::vector<PairMove>& moves,
                                  const TcOptions& opts = {});

}  // namespace tcplex
