#include "piece_search.h"

#include <cassert>

namespace tcplex {

CoreSetup make_core_setup(const Subcomplex& U) {
  CoreSetup s;
  s.ambient = U.parent();
  s.piece = U.complex();
  s.trace = core_of(s.piece);

  s.embed_piece = SimplicialMap{s.piece, s.ambient, {}};
  s.embed_piece.at.reserve(size_t(s.piece->vertex_count()));
  for (VertexId v = 0; v < s.piece->vertex_count(); ++v)
    s.embed_piece.at.push_back(U.to_parent(v));

  const ComplexPtr& core = s.trace.core;
  s.embed_core = SimplicialMap{core, s.ambient, {}};
  s.embed_core.at.reserve(size_t(core->vertex_count()));
  for (VertexId c = 0; c < core->vertex_count(); ++c)
    s.embed_core.at.push_back(
        s.embed_piece.at[size_t(s.piece->vertex_checked(core->label(c)))]);

  ContiguityChain folds = retraction_chain(s.trace);  // maps piece -> piece
  s.to_core = SimplicialMap{s.piece, core, {}};
  s.to_core.at.reserve(size_t(s.piece->vertex_count()));
  for (VertexId v : folds.maps.back().at)
    s.to_core.at.push_back(core->vertex_checked(s.piece->label(v)));

  s.retract.maps.reserve(folds.maps.size());
  for (const auto& g : folds.maps)
    s.retract.maps.push_back(compose(s.embed_piece, g));
  return s;
}

ReachOutcome reach_from_core(const CoreSetup& s,
                             const std::function<bool(const uint16_t*)>& stop,
                             uint64_t budget, int jobs) {
  ComponentScan scan(s.embed_core);
  ReachOutcome out = scan.run(stop, budget, jobs);
  if (out.status != SearchStatus::Found) return out;

  // Splice: i_U ~ ... ~ embed_core.to_core, then the found chain pulled
  // back along to_core.  The seam repeats one map; compression drops it.
  ContiguityChain full = s.retract;
  for (size_t j = 1; j < out.chain.maps.size(); ++j)
    full.maps.push_back(compose(out.chain.maps[j], s.to_core));
  if (out.chain.maps.size() == 1)  // found at the start: chain ends at retract
    assert(same_map(full.maps.back(), compose(out.chain.maps[0], s.to_core)));
  compress_chain(full);
  out.chain = std::move(full);
  return out;
}

}  // namespace tcplex
