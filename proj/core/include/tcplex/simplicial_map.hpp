#pragma once

#include <string>
#include <vector>

#include "tcplex/complex.hpp"

namespace tcplex {

// A vertex map between complexes, stored as a dense assignment.  Whether it
// is actually simplicial is a property (validate_map), not an invariant of
// the type: searches build candidate assignments first and check after.
struct SimplicialMap {
  ComplexPtr dom, cod;
  std::vector<VertexId> at;

  VertexId operator()(VertexId v) const { return at[size_t(v)]; }

  Simplex image(const Simplex& s) const {
    Simplex t;
    s.for_each([&](int v) { t.set(at[size_t(v)]); });
    return t;
  }
};

SimplicialMap identity_map(const ComplexPtr& K);
SimplicialMap constant_map(const ComplexPtr& K, const ComplexPtr& L, VertexId v);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g . f

// The two projections of a categorical product, and the diagonal K -> K x K.
SimplicialMap projection_left(const ComplexPtr& product);
SimplicialMap projection_right(const ComplexPtr& product);
SimplicialMap diagonal_map(const ComplexPtr& K, const ComplexPtr& KxK);

// Same underlying complexes (by identity) and same assignment.
bool same_map(const SimplicialMap& f, const SimplicialMap& g);

// f carries every simplex to a simplex; checking facets suffices.
bool validate_map(const SimplicialMap& f, std::string* why = nullptr);

// f and g are contiguous when f(s) united with g(s) is a simplex of the
// codomain for every simplex s; again facets suffice.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g,
                    std::string* why = nullptr);

// A walk in the contiguity graph: consecutive entries are contiguous.
// Both endpoints are included, so length in steps is maps.size() - 1.
struct ContiguityChain {
  std::vector<SimplicialMap> maps;

  int steps() const { return int(maps.size()) - 1; }
};

// Re-checks everything from scratch: endpoints match, every map is
// simplicial, every consecutive pair is contiguous.  Search results are
// only trusted after passing through here.
bool verify_chain(const ContiguityChain& chain, const SimplicialMap& from,
                  const SimplicialMap& to, std::string* why = nullptr);

// Shorten a chain in place: drop repeated entries and any middle map whose
// neighbours are already contiguous with each other.  Keeps endpoints.
void compress_chain(ContiguityChain& chain);

}  // namespace tcplex
