#include "tcplex/category.hpp"

#include <stdexcept>

#include "piece_search.h"

namespace tcplex {

CategoricalOutcome is_categorical(const ComplexPtr& K, const Subcomplex& U,
                                  uint64_t budget, int jobs) {
  if (U.parent() != K)
    throw InputError("is_categorical: the subcomplex does not live in '" +
                     K->name() + "'");
  CoreSetup s = make_core_setup(U);
  const int w = s.trace.core->vertex_count();
  auto constant = [w](const uint16_t* p) {
    for (int i = 1; i < w; ++i)
      if (p[i] != p[0]) return false;
    return true;
  };
  ReachOutcome out = reach_from_core(s, constant, budget, jobs);

  CategoricalOutcome res;
  res.status = out.status;
  res.visited = out.visited;
  if (out.status != SearchStatus::Found) return res;

  CategoricalWitness wit;
  wit.vertex = out.chain.maps.back().at[0];
  wit.chain = std::move(out.chain);
  std::string why;
  if (!verify_chain(wit.chain, s.embed_piece,
                    constant_map(s.piece, K, wit.vertex), &why))
    throw std::logic_error("is_categorical produced a bad chain: " + why);
  res.witness = std::move(wit);
  return res;
}

ScatResult scat(const ComplexPtr& K, uint64_t budget, int jobs) {
  ScatResult res;
  const int nf = K->facet_count();

  auto piece_of = [&](const VertexSet& mask) {
    return Subcomplex::from_facet_mask(K, mask, K->name() + ".piece");
  };

  // Cheap sufficient test: a piece that strong-collapses to a point in
  // itself is categorical (fold it inside itself, constant at the end).
  auto quick_good = [&](const VertexSet& mask) {
    return core_of(piece_of(mask).complex()).core->vertex_count() == 1;
  };

  auto eval = [&](const VertexSet& mask) {
    if (quick_good(mask)) return PieceVerdict::Good;
    CategoricalOutcome out = is_categorical(K, piece_of(mask), budget, jobs);
    res.visited += out.visited;
    switch (out.status) {
      case SearchStatus::Found:
        return PieceVerdict::Good;
      case SearchStatus::NoPath:
        return PieceVerdict::Bad;
      default:
        return PieceVerdict::Exhausted;
    }
  };

  int lb = is_strongly_collapsible(K) ? 1 : 2;
  PieceMemo memo;
  MinimumCover mc = minimum_cover(nf, lb, eval, quick_good, memo);
  if (!mc.found || !mc.exact)
    throw ExhaustedError(
        "scat('" + K->name() + "'): state budget exhausted before the value was certified",
        mc.found ? int(mc.pieces.size()) - 1 : -1);

  res.value = int(mc.pieces.size()) - 1;
  res.cert.target = K;
  res.cert.K = K;
  for (size_t i = 0; i < mc.pieces.size(); ++i) {
    Subcomplex piece = Subcomplex::from_facet_mask(
        K, mc.pieces[i], K->name() + ".U" + std::to_string(i));
    CategoricalOutcome out = is_categorical(K, piece, budget, jobs);
    if (out.status != SearchStatus::Found)
      throw std::logic_error("scat: a piece of the final cover failed its witness run");
    res.visited += out.visited;
    res.cert.pieces.push_back(
        CoverPiece{std::move(piece), std::move(out.witness), std::nullopt});
  }

  std::string why;
  if (!verify_cover(res.cert, &why))
    throw std::logic_error("scat produced a cover that does not verify: " + why);
  return res;
}

}  // namespace tcplex
