#include "tcplex/tc.hpp"

#include <algorithm>
#include <stdexcept>

#include "piece_search.h"

namespace tcplex {

namespace {

std::string val_str(int v) {
  return v < 0 ? std::string("infinity") : std::to_string(v);
}

// Comparisons with -1 standing for infinity.
bool le_inf(int a, int b) { return b < 0 || (a >= 0 && a <= b); }
bool eq_inf(int a, int b) { return a == b; }

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ", ";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

PairContext make_pair_context(const ComplexPtr& K, const Subcomplex& L) {
  if (L.parent() != K)
    throw InputError("tc: the target subcomplex does not live in '" +
                     K->name() + "'");
  PairContext ctx{K, L, categorical_product(K, L.complex()), {}};
  for (VertexId y = 0; y < L.complex()->vertex_count(); ++y)
    ctx.diagonal.set(ctx.product->pair_index(L.to_parent(y), y));
  return ctx;
}

FarberOutcome is_farber(const PairContext& ctx, const Subcomplex& omega,
                        uint64_t budget, int jobs) {
  if (omega.parent() != ctx.product)
    throw InputError("is_farber: the piece does not live in the product '" +
                     ctx.product->name() + "'");
  CoreSetup s = make_core_setup(omega);
  const int w = s.trace.core->vertex_count();
  const VertexSet& diag = ctx.diagonal;
  auto diagonal_valued = [&diag, w](const uint16_t* p) {
    for (int i = 0; i < w; ++i)
      if (!diag.test(p[i])) return false;
    return true;
  };
  ReachOutcome out = reach_from_core(s, diagonal_valued, budget, jobs);

  FarberOutcome res;
  res.status = out.status;
  res.visited = out.visited;
  if (out.status != SearchStatus::Found) return res;

  // The scan walked i_Omega ... (diagonal-valued map); the witness chain
  // is read in the other direction, from Delta_L . sigma to i_Omega.
  ContiguityChain chain = std::move(out.chain);
  std::reverse(chain.maps.begin(), chain.maps.end());

  // sigma = second coordinate of the diagonal-valued end.  It lands in L
  // by construction and is simplicial because projections of product
  // simplices are simplices.
  const SimplicialMap& end = chain.maps.front();
  SimplicialMap sigma{s.piece, ctx.L.complex(), {}};
  sigma.at.reserve(end.at.size());
  for (VertexId pv : end.at)
    sigma.at.push_back(ctx.product->pair_split(pv).second);
  std::string why;
  if (!validate_map(sigma, &why))
    throw std::logic_error("is_farber: extracted section is not simplicial: " +
                           why);

  SimplicialMap delta_sigma{s.piece, ctx.product, {}};
  delta_sigma.at.reserve(sigma.at.size());
  for (VertexId y : sigma.at)
    delta_sigma.at.push_back(ctx.product->pair_index(ctx.L.to_parent(y), y));
  if (!same_map(delta_sigma, end))
    throw std::logic_error(
        "is_farber: reached map is not the diagonal composite of its section");
  if (!verify_chain(chain, delta_sigma, s.embed_piece, &why))
    throw std::logic_error("is_farber produced a bad chain: " + why);

  res.witness = FarberWitness{std::move(sigma), std::move(chain)};
  return res;
}

ComplexityResult tc_targeted(const ComplexPtr& K, const Subcomplex& L,
                             const TcOptions& opts) {
  PairContext ctx = make_pair_context(K, L);
  ComplexityResult res;
  res.cert.target = ctx.product;
  res.cert.K = K;
  res.cert.L = L;

  // scat(K) <= TC(K, L) for connected K prunes the deepening from below;
  // its value is reported either way.
  int lb = 1;
  if (K->is_connected()) {
    try {
      ScatResult sr = scat(K, opts.budget, opts.jobs);
      res.bounds.scat_K = sr.value;
      res.visited += sr.visited;
      lb = sr.value + 1;
    } catch (const ExhaustedError&) {
      res.notes.push_back(
          "scat(K) was not certified within the budget; "
          "lower-bound pruning disabled");
    }
  }
  if (opts.with_upper_bound) {
    try {
      ScatResult skk =
          scat(categorical_product(K, K), opts.budget, opts.jobs);
      res.bounds.scat_KK = skk.value;
      res.visited += skk.visited;
    } catch (const ExhaustedError&) {
      res.notes.push_back("scat(K x K) was not certified within the budget");
    }
  }

  // Product vertices whose component contains a diagonal vertex.  A
  // strongly collapsible piece inside such components is always Farber:
  // fold it to its apex, then slide the constant along edges onto the
  // diagonal.  That is the cheap sufficient test seeding the search.
  VertexSet diag_reach;
  {
    const auto& comp = ctx.product->component_of();
    std::vector<char> good(size_t(ctx.product->component_count()), 0);
    ctx.diagonal.for_each([&](int v) { good[size_t(comp[size_t(v)])] = 1; });
    for (VertexId v = 0; v < ctx.product->vertex_count(); ++v)
      if (good[size_t(comp[size_t(v)])]) diag_reach.set(v);
  }

  auto piece_of = [&](const VertexSet& mask) {
    return Subcomplex::from_facet_mask(ctx.product, mask,
                                       ctx.product->name() + ".piece");
  };
  auto quick_good = [&](const VertexSet& mask) {
    Subcomplex p = piece_of(mask);
    if (!p.parent_vertices().subset_of(diag_reach)) return false;
    return core_of(p.complex()).core->vertex_count() == 1;
  };
  auto eval = [&](const VertexSet& mask) {
    if (quick_good(mask)) return PieceVerdict::Good;
    FarberOutcome out = is_farber(ctx, piece_of(mask), opts.budget, opts.jobs);
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

  PieceMemo memo;
  MinimumCover mc =
      minimum_cover(ctx.product->facet_count(), lb, eval, quick_good, memo);

  if (!mc.found && mc.exact) {
    res.value = -1;
    res.notes.push_back(
        "no Farber cover exists: a facet of '" + ctx.product->name() +
        "' cannot reach the diagonal, so the complexity is infinite "
        "(the certificate is empty)");
    return res;
  }
  if (!mc.found || !mc.exact)
    throw ExhaustedError("tc('" + K->name() + "', '" + L.name() +
                             "'): state budget exhausted before the value "
                             "was certified",
                         mc.found ? int(mc.pieces.size()) - 1 : -1);

  res.value = int(mc.pieces.size()) - 1;
  for (size_t i = 0; i < mc.pieces.size(); ++i) {
    Subcomplex piece = Subcomplex::from_facet_mask(
        ctx.product, mc.pieces[i],
        ctx.product->name() + ".O" + std::to_string(i));
    FarberOutcome out = is_farber(ctx, piece, opts.budget, opts.jobs);
    if (out.status != SearchStatus::Found)
      throw std::logic_error(
          "tc: a piece of the final cover failed its witness run "
          "(the collapsibility fast path disagreed with the full scan)");
    res.visited += out.visited;
    res.cert.pieces.push_back(
        CoverPiece{std::move(piece), std::nullopt, std::move(out.witness)});
  }

  std::string why;
  if (!verify_cover(res.cert, &why))
    throw std::logic_error("tc produced a cover that does not verify: " + why);
  return res;
}

ComplexityResult tc_discrete(const ComplexPtr& K, const TcOptions& opts) {
  return tc_targeted(K, Subcomplex::whole(K), opts);
}

BoundsCheck check_bounds(const ComplexPtr& K, const Subcomplex& L,
                         const TcOptions& opts) {
  BoundsCheck bc;
  TcOptions inner = opts;
  inner.with_upper_bound = false;

  ScatResult sr = scat(K, opts.budget, opts.jobs);
  ComplexityResult tl = tc_targeted(K, L, inner);
  ComplexityResult tk = tc_discrete(K, inner);
  bc.bounds.scat_K = sr.value;
  bc.tc_KL = tl.value;
  bc.bounds.tc_K = tk.value;
  if (opts.with_upper_bound) {
    ScatResult skk = scat(categorical_product(K, K), opts.budget, opts.jobs);
    bc.bounds.scat_KK = skk.value;
  }

  auto check = [&](bool cond, const std::string& line) {
    bc.lines.push_back((cond ? "ok: " : "VIOLATION: ") + line);
    if (!cond) bc.ok = false;
  };

  check(le_inf(sr.value, tl.value), "scat(K) = " + val_str(sr.value) +
                                        " <= TC(K, L) = " + val_str(tl.value));
  check(le_inf(tl.value, tk.value), "TC(K, L) = " + val_str(tl.value) +
                                        " <= TC(K) = " + val_str(tk.value));
  if (bc.bounds.scat_KK >= 0) {
    check(le_inf(tk.value, bc.bounds.scat_KK),
          "TC(K) = " + val_str(tk.value) +
              " <= scat(K x K) = " + val_str(bc.bounds.scat_KK));
  }

  bool collapsible = is_strongly_collapsible(K);
  check((tl.value == 0) == collapsible,
        "TC(K, L) = 0 exactly when K is strongly collapsible (TC = " +
            val_str(tl.value) + ", " +
            (collapsible ? "collapsible" : "not collapsible") + ")");

  bc.l_is_vertex = L.complex()->vertex_count() == 1;
  if (bc.l_is_vertex && K->is_connected())
    check(eq_inf(tl.value, sr.value), "L is a vertex: TC(K, v0) = " +
                                          val_str(tl.value) +
                                          " equals scat(K) = " +
                                          val_str(sr.value));

  CategoricalOutcome cat = is_categorical(K, L, opts.budget, opts.jobs);
  if (cat.status == SearchStatus::Exhausted) {
    bc.lines.push_back(
        "note: is_categorical(K, L) ran out of budget; equality case skipped");
  } else {
    bc.l_categorical = cat.status == SearchStatus::Found;
    if (bc.l_categorical && K->is_connected())
      check(eq_inf(tl.value, sr.value), "L is categorical: TC(K, L) = " +
                                            val_str(tl.value) +
                                            " equals scat(K) = " +
                                            val_str(sr.value));
  }
  return bc;
}

std::pair<ComplexPtr, Subcomplex> apply_pair_move(const ComplexPtr& K,
                                                  const Subcomplex& L,
                                                  const PairMove& move) {
  if (L.parent() != K)
    throw InputError("apply_pair_move: the subcomplex does not live in '" +
                     K->name() + "'");

  auto facet_labels = [](const ComplexPtr& C) {
    std::vector<std::vector<std::string>> out;
    out.reserve(size_t(C->facet_count()));
    for (const auto& f : C->facets()) {
      std::vector<std::string> labs;
      f.for_each([&](int v) { labs.push_back(C->label(v)); });
      out.push_back(std::move(labs));
    }
    return out;
  };

  if (move.kind == PairMove::Kind::Expand) {
    if (move.into_L) {
      Simplex base;
      for (const auto& lab : move.over) base.set(K->vertex_checked(lab));
      if (!L.contains(base))
        throw InputError(
            "apply_pair_move: the attachment simplex is not in '" + L.name() +
            "', so coning into L would break the subcomplex relation");
    }
    ComplexPtr K2 = strong_expand(K, move.over, move.label);
    auto gens = facet_labels(L.complex());
    if (move.into_L) {
      auto cone = move.over;
      cone.push_back(move.label);
      gens.push_back(std::move(cone));
    }
    Subcomplex L2 = Subcomplex::from_labels(K2, L.name(), gens);
    return {K2, L2};
  }

  // Collapse: delete the named vertex, which must be dominated.
  VertexId v = K->vertex_checked(move.label);
  bool dominated = false;
  for (VertexId d = 0; d < K->vertex_count() && !dominated; ++d)
    dominated = d != v && K->facets_with(v).subset_of(K->facets_with(d));
  if (!dominated)
    throw InputError("apply_pair_move: vertex '" + move.label +
                     "' is not dominated in '" + K->name() + "'");

  bool in_L = L.parent_vertices().test(v);
  if (in_L) {
    const ComplexPtr& LC = L.complex();
    VertexId lv = LC->vertex_checked(move.label);
    bool dom_in_L = false;
    for (VertexId d = 0; d < LC->vertex_count() && !dom_in_L; ++d)
      dom_in_L =
          d != lv && LC->facets_with(lv).subset_of(LC->facets_with(d));
    if (!dom_in_L)
      throw InputError("apply_pair_move: vertex '" + move.label +
                       "' lies in '" + L.name() +
                       "' but is not dominated there");
  }

  auto strip = [&](std::vector<std::vector<std::string>> lists) {
    std::vector<std::vector<std::string>> out;
    for (auto& labs : lists) {
      std::erase(labs, move.label);
      if (!labs.empty()) out.push_back(std::move(labs));
    }
    return out;
  };
  ComplexPtr K2 = build_complex(K->name() + "-", strip(facet_labels(K)));
  auto gens = in_L ? strip(facet_labels(L.complex()))
                   : facet_labels(L.complex());
  if (gens.empty())
    throw InputError("apply_pair_move: deleting '" + move.label +
                     "' would empty '" + L.name() + "'");
  Subcomplex L2 = Subcomplex::from_labels(K2, L.name(), gens);
  return {K2, L2};
}

InvarianceReport invariance_check(const ComplexPtr& K, const Subcomplex& L,
                                  const std::vector<PairMove>& moves,
                                  const TcOptions& opts) {
  InvarianceReport rep;
  rep.before = tc_targeted(K, L, opts).value;
  rep.lines.push_back("start: TC(K, L) = " + val_str(rep.before));

  ComplexPtr curK = K;
  Subcomplex curL = L;
  for (const auto& mv : moves) {
    auto next = apply_pair_move(curK, curL, mv);
    curK = next.first;
    curL = next.second;
    int after = tc_targeted(curK, curL, opts).value;

    std::string what =
        mv.kind == PairMove::Kind::Expand
            ? "expand: cone '" + mv.label + "' over " + join_labels(mv.over) +
                  (mv.into_L ? " (into L)" : "")
            : "collapse: delete dominated '" + mv.label + "'";
    bool same = after == rep.before;
    rep.lines.push_back(what + " -> TC = " + val_str(after) +
                        (same ? "" : "  ** changed, expected " +
                                         val_str(rep.before) + " **"));
    if (!same) rep.ok = false;
  }
  return rep;
}

}  // namespace tcplex
