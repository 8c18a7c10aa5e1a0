#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "tcplex/collapse.hpp"
#include "tcplex/complex.hpp"
#include "tcplex/tc.hpp"

using namespace tcplex;

namespace {

Subcomplex vertex_sub(const ComplexPtr& K, const std::string& label) {
  return Subcomplex::from_labels(K, "pt", {{label}});
}

}  // namespace

TEST_CASE("the triangle boundary: full target 2, two-edge target 1") {
  auto K = gen_boundary(2);

  auto full = tc_discrete(K);
  CHECK(full.value == 2);
  CHECK(full.cert.pieces.size() == 3);
  CHECK(verify_cover(full.cert));

  auto path = Subcomplex::from_labels(K, "path", {{"v0", "v1"}, {"v1", "v2"}});
  auto part = tc_targeted(K, path);
  CHECK(part.value == 1);
  CHECK(part.cert.pieces.size() == 2);
  CHECK(verify_cover(part.cert));
}

TEST_CASE("targeted value zero exactly for strongly collapsible K") {
  auto K = gen_simplex(2);
  auto r = tc_discrete(K);
  CHECK(r.value == 0);
  CHECK(verify_cover(r.cert));

  // Non-collapsible K never reaches zero, whatever the target.
  auto C = gen_circle(4);
  CHECK(tc_targeted(C, vertex_sub(C, "v0")).value >= 1);
}

TEST_CASE("every subcomplex target of a collapsible complex gives zero") {
  // All subcomplex targets of the 2-simplex, enumerated by facet-mask of
  // the full simplex lattice via the brute-force simplex list.
  auto K = gen_simplex(2);
  auto simps = oracle::all_simplices(K);
  int cases = 0;
  for (uint32_t bits = 1; bits < (1u << simps.size()); ++bits) {
    std::vector<Simplex> gens;
    for (size_t i = 0; i < simps.size(); ++i)
      if (bits & (1u << i)) gens.push_back(simps[i]);
    Subcomplex L(K, std::move(gens), "L");
    if (tc_targeted(K, L).value != 0) ++cases;
  }
  CHECK(cases == 0);
}

TEST_CASE("wedge of two circles with one circle as target") {
  auto K = gen_wedge({4, 3});  // cycle 1 is c1_*, cycle 2 is c2_* (3 edges)
  auto L = Subcomplex::from_labels(
      K, "circle3", {{"w", "c2_1"}, {"c2_1", "c2_2"}, {"c2_2", "w"}});
  REQUIRE(L.complex()->facet_count() == 3);
  auto r = tc_targeted(K, L);
  CHECK(r.value == 2);
  CHECK(r.cert.pieces.size() == 3);
  CHECK(verify_cover(r.cert));
}

TEST_CASE("a vertex target reproduces scat") {
  for (auto K : {gen_boundary(2), gen_circle(5), gen_wedge({3, 3}),
                 gen_simplex(2)}) {
    auto r = tc_targeted(K, vertex_sub(K, K->label(0)));
    CHECK(r.value == scat(K).value);
  }
  // Same through a categorical (non-vertex) target.
  auto K = gen_boundary(2);
  auto edge = Subcomplex::from_labels(K, "edge", {{"v0", "v1"}});
  CHECK(tc_targeted(K, edge).value == scat(K).value);
}

TEST_CASE("tc of the 4-cycle and the tetrahedron boundary") {
  auto c = tc_discrete(gen_circle(4));
  CHECK(c.value == 2);
  CHECK(verify_cover(c.cert));
  auto b = tc_discrete(gen_boundary(3));
  CHECK(b.value == 2);
  CHECK(verify_cover(b.cert));
}

TEST_CASE("Farber pieces are downward closed") {
  auto K = gen_boundary(2);
  auto ctx = make_pair_context(K, Subcomplex::whole(K));
  const int nf = ctx.product->facet_count();
  REQUIRE(nf == 9);
  // For every facet mask: if the generated piece is Farber, so is every
  // sub-mask piece.  2^9 masks, each a cheap scan on this small product.
  std::vector<char> good(size_t(1) << nf, 0);
  for (uint32_t bits = 1; bits < (1u << nf); ++bits) {
    VertexSet mask;
    for (int f = 0; f < nf; ++f)
      if (bits & (1u << f)) mask.set(f);
    auto piece = Subcomplex::from_facet_mask(ctx.product, mask, "piece");
    auto out = is_farber(ctx, piece);
    REQUIRE(out.status != SearchStatus::Exhausted);
    good[bits] = out.status == SearchStatus::Found;
  }
  for (uint32_t bits = 1; bits < (1u << nf); ++bits) {
    if (!good[bits] || (bits & (bits - 1)) == 0) continue;
    for (int f = 0; f < nf; ++f)
      if ((bits >> f) & 1) {
        bool sub_good = good[bits & ~(1u << f)];
        CHECK(sub_good);
      }
  }
  // Sanity at the ends: single boxes are Farber, the whole product is not.
  CHECK(good[1]);
  CHECK_FALSE(good[(1u << nf) - 1]);
}

TEST_CASE("is_farber witnesses verify and respect the section property") {
  auto K = gen_boundary(2);
  auto ctx = make_pair_context(K, Subcomplex::whole(K));
  auto piece = Subcomplex::from_facet_mask(ctx.product,
                                           VertexSet::single(0), "box");
  auto out = is_farber(ctx, piece);
  REQUIRE(out.status == SearchStatus::Found);
  REQUIRE(out.witness.has_value());
  CHECK(validate_map(out.witness->section));
  CHECK(out.witness->section.dom == piece.complex());
  CHECK(out.witness->section.cod == ctx.L.complex());
}

TEST_CASE("infinite targeted complexity on a disconnected complex") {
  auto K = build_complex("two", {{"a", "b"}, {"c", "d"}});
  auto r = tc_targeted(K, vertex_sub(K, "a"));
  CHECK(r.value == -1);
  CHECK(r.cert.pieces.empty());
  REQUIRE_FALSE(r.notes.empty());

  auto rd = tc_discrete(K);
  CHECK(rd.value == -1);
}

TEST_CASE("check_bounds holds on a small catalog") {
  struct Case {
    ComplexPtr K;
    Subcomplex L;
  };
  std::vector<Case> cases;
  {
    auto b2 = gen_boundary(2);
    cases.push_back({b2, Subcomplex::whole(b2)});
    cases.push_back({b2, vertex_sub(b2, "v1")});
    cases.push_back(
        {b2, Subcomplex::from_labels(b2, "path", {{"v0", "v1"}, {"v1", "v2"}})});
    auto s2 = gen_simplex(2);
    cases.push_back({s2, vertex_sub(s2, "v2")});
    auto c4 = gen_circle(4);
    cases.push_back({c4, vertex_sub(c4, "v0")});
  }
  for (auto& c : cases) {
    TcOptions opts;
    opts.with_upper_bound = c.K->vertex_count() <= 3;
    auto bc = check_bounds(c.K, c.L, opts);
    CHECK(bc.ok);
    for (const auto& line : bc.lines) {
      CAPTURE(line);
      CHECK(line.rfind("VIOLATION", 0) != 0);
    }
    if (opts.with_upper_bound) CHECK(bc.bounds.scat_KK >= 0);
  }
}

TEST_CASE("pair moves preserve the targeted value") {
  auto K = gen_boundary(2);
  auto L = Subcomplex::from_labels(K, "path", {{"v0", "v1"}, {"v1", "v2"}});

  SUBCASE("expansion outside L") {
    PairMove m;
    m.kind = PairMove::Kind::Expand;
    m.over = {"v0", "v2"};
    m.label = "z";
    auto [K2, L2] = apply_pair_move(K, L, m);
    CHECK(K2->vertex_count() == 4);
    CHECK(tc_targeted(K2, L2).value == 1);
  }
  SUBCASE("expansion into L") {
    PairMove m;
    m.kind = PairMove::Kind::Expand;
    m.over = {"v0", "v1"};
    m.label = "z";
    m.into_L = true;
    auto [K2, L2] = apply_pair_move(K, L, m);
    CHECK(L2.complex()->vertex_count() == 4);
    CHECK(tc_targeted(K2, L2).value == 1);
  }
  SUBCASE("into_L demands the attachment simplex inside L") {
    PairMove m;
    m.kind = PairMove::Kind::Expand;
    m.over = {"v0", "v2"};  // an edge of K not in L
    m.label = "z";
    m.into_L = true;
    CHECK_THROWS_AS(apply_pair_move(K, L, m), InputError);
  }
  SUBCASE("collapse undoes an expansion") {
    PairMove e;
    e.kind = PairMove::Kind::Expand;
    e.over = {"v1"};
    e.label = "z";
    auto [K2, L2] = apply_pair_move(K, L, e);
    PairMove c;
    c.kind = PairMove::Kind::Collapse;
    c.label = "z";
    auto [K3, L3] = apply_pair_move(K2, L2, c);
    CHECK(K3->vertex_count() == 3);
    CHECK(tc_targeted(K3, L3).value == 1);
  }
  SUBCASE("collapsing an essential vertex is rejected") {
    PairMove c;
    c.kind = PairMove::Kind::Collapse;
    c.label = "v1";
    CHECK_THROWS_AS(apply_pair_move(K, L, c), InputError);
  }

  auto rep = invariance_check(
      K, L,
      {[] {
        PairMove m;
        m.kind = PairMove::Kind::Expand;
        m.over = {"v1", "v2"};
        m.label = "q";
        m.into_L = true;
        return m;
      }()});
  CHECK(rep.before == 1);
  CHECK(rep.ok);
}

TEST_CASE("tc_targeted throws ExhaustedError on a starved budget") {
  auto K = gen_boundary(2);
  CHECK_THROWS_AS((void)tc_discrete(K, TcOptions{1, 1, false}),
                  ExhaustedError);
}
