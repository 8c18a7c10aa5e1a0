#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcplex/simplicial_map.hpp"

namespace tcplex {

// Witness that a subcomplex U is categorical in K: a chain from the
// inclusion i_U to the constant map at `vertex`, as maps U -> K.
struct CategoricalWitness {
  VertexId vertex;
  ContiguityChain chain;
};

// Witness that a piece Omega of K x L is a Farber subcomplex: a section
// sigma: Omega -> L and a chain from Delta_L . sigma to the inclusion
// i_Omega, as maps Omega -> K x L.
struct FarberWitness {
  SimplicialMap section;
  ContiguityChain chain;
};

struct CoverPiece {
  Subcomplex piece;
  std::optional<CategoricalWitness> categorical;
  std::optional<FarberWitness> farber;
};

// A cover of `target` (K for scat, K x L for complexity) by witnessed
// pieces, in the deterministic order produced by the search.  Everything
// needed to re-check it is embedded, so a certificate stands alone.
struct CoverCertificate {
  ComplexPtr target;
  ComplexPtr K;                 // ambient complex
  std::optional<Subcomplex> L;  // target subcomplex; present for Farber covers
  std::vector<CoverPiece> pieces;
};

// Re-checks a certificate from first principles: coverage of every facet of
// the target plus every per-piece witness chain.  Deliberately search-free so
// a certificate stands or falls on its own contents; implemented apart from
// the solvers so it cannot inherit their assumptions.
bool verify_cover(const CoverCertificate& cert, std::string* why = nullptr);

struct BoundsReport {
  int scat_K = -1;   // -1 = not computed
  int tc_K = -1;
  int scat_KK = -1;
};

struct ComplexityResult {
  int value = -1;
  CoverCertificate cert;
  BoundsReport bounds;
  uint64_t visited = 0;            // states discovered across all scans
  std::vector<std::string> notes;  // warnings, fast-path disagreements
};

// Sequence (x = x_m, ..., x_0 = sigma(x,y) = y_0, ..., y_m = y) extracted
// from one piece's chain.  `points` are vertices of K; the tail from
// `tail_start` on lies in L.
struct MotionPlan {
  VertexId x, y;  // vertices of K; y also lies in L
  int piece_index;
  std::vector<VertexId> points;
  int tail_start;
};

}  // namespace tcplex
