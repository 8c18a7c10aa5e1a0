// Certificate verification.  This translation unit deliberately sees only
// the complex core and the simplicial-map primitives (validation,
// contiguity of a pair, chain checking) -- none of the search machinery --
// so a verified certificate never leans on solver state.

#include <string>

#include "tcplex/certificates.hpp"
#include "tcplex/complex.hpp"
#include "tcplex/simplicial_map.hpp"

namespace tcplex {

namespace {

SimplicialMap embedding_of(const Subcomplex& U) {
  SimplicialMap m{U.complex(), U.parent(), {}};
  m.at.reserve(size_t(U.complex()->vertex_count()));
  for (VertexId v = 0; v < U.complex()->vertex_count(); ++v)
    m.at.push_back(U.to_parent(v));
  return m;
}

}  // namespace

bool verify_cover(const CoverCertificate& cert, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };

  if (!cert.target || !cert.K) return fail("certificate is missing a complex");
  if (cert.pieces.empty()) return fail("certificate has no pieces");

  if (cert.L) {
    if (cert.L->parent() != cert.K)
      return fail("target subcomplex does not live in K");
    if (!cert.target->is_product() || cert.target->product_left() != cert.K ||
        cert.target->product_right() != cert.L->complex())
      return fail("target is not the categorical product of K and L");
  } else {
    if (cert.target != cert.K)
      return fail("category certificate must cover K itself");
  }

  const ComplexPtr& T = cert.target;
  for (size_t i = 0; i < cert.pieces.size(); ++i)
    if (cert.pieces[i].piece.parent() != T)
      return fail("piece " + std::to_string(i) +
                  " is not a subcomplex of the target");

  // Coverage: every facet of the target lies inside some piece.
  for (int f = 0; f < T->facet_count(); ++f) {
    bool covered = false;
    for (const auto& p : cert.pieces)
      if (p.piece.contains(T->facet(f))) {
        covered = true;
        break;
      }
    if (!covered)
      return fail("facet " + std::to_string(f) +
                  " of the target is not covered by any piece");
  }

  // Per-piece witnesses.
  std::string chain_why;
  for (size_t i = 0; i < cert.pieces.size(); ++i) {
    const CoverPiece& p = cert.pieces[i];
    const std::string tag = "piece " + std::to_string(i) + " ('" +
                            p.piece.name() + "'): ";
    SimplicialMap embed = embedding_of(p.piece);

    if (cert.L) {
      if (!p.farber) return fail(tag + "no Farber witness");
      const SimplicialMap& sigma = p.farber->section;
      if (sigma.dom != p.piece.complex() || sigma.cod != cert.L->complex())
        return fail(tag + "section does not map the piece into L");
      if (!validate_map(sigma, &chain_why))
        return fail(tag + "section is not simplicial: " + chain_why);

      SimplicialMap delta_sigma{p.piece.complex(), T, {}};
      delta_sigma.at.reserve(sigma.at.size());
      for (VertexId y : sigma.at)
        delta_sigma.at.push_back(T->pair_index(cert.L->to_parent(y), y));

      if (!verify_chain(p.farber->chain, delta_sigma, embed, &chain_why))
        return fail(tag + "witness chain fails: " + chain_why);
    } else {
      if (!p.categorical) return fail(tag + "no categorical witness");
      VertexId v = p.categorical->vertex;
      if (v < 0 || v >= T->vertex_count())
        return fail(tag + "witness vertex out of range");
      if (!verify_chain(p.categorical->chain, embed,
                        constant_map(p.piece.complex(), T, v), &chain_why))
        return fail(tag + "witness chain fails: " + chain_why);
    }
  }
  return true;
}

}  // namespace tcplex
