#pragma once

#include "tcplex/certificates.hpp"
#include "tcplex/contiguity.hpp"
#include "tcplex/cover.hpp"

namespace tcplex {

inline constexpr uint64_t kDefaultBudget = 5'000'000;

struct CategoricalOutcome {
  SearchStatus status = SearchStatus::NoPath;
  std::optional<CategoricalWitness> witness;  // on Found
  uint64_t visited = 0;
};

// Is the inclusion of U in the contiguity class of a constant map K -> K?
// Found carries a verified witness; NoPath is exact.
CategoricalOutcome is_categorical(const ComplexPtr& K, const Subcomplex& U,
                                  uint64_t budget = kDefaultBudget,
                                  int jobs = 1);

struct ScatResult {
  int value = -1;
  CoverCertificate cert;
  uint64_t visited = 0;
  std::vector<std::string> notes;
};

// Exact simplicial LS-category: minimum cover of K by categorical
// subcomplexes, minus one, with a verified certificate.  Throws
// ExhaustedError when the budget prevents certifying exactness.
ScatResult scat(const ComplexPtr& K, uint64_t budget = kDefaultBudget,
                int jobs = 1);

}  // namespace tcplex
