#include <string>

#include "doctest.h"
#include "tcplex/category.hpp"
#include "tcplex/complex.hpp"
#include "tcplex/motion_plan.hpp"
#include "tcplex/tc.hpp"

using namespace tcplex;

TEST_CASE("plans for every query on the triangle with a path target") {
  auto K = gen_boundary(2);
  auto L = Subcomplex::from_labels(K, "path", {{"v0", "v1"}, {"v1", "v2"}});
  auto r = tc_targeted(K, L);
  REQUIRE(r.value == 1);

  for (VertexId x = 0; x < K->vertex_count(); ++x)
    for (VertexId yl = 0; yl < L.complex()->vertex_count(); ++yl) {
      VertexId y = L.to_parent(yl);
      auto plan = motion_plan(r.cert, x, y);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(plan.x == x);
      CHECK(plan.y == y);
      REQUIRE_FALSE(plan.points.empty());
      CHECK(plan.points.front() == x);
      CHECK(plan.points.back() == y);
      CHECK(plan.piece_index >= 0);
      CHECK(plan.piece_index < int(r.cert.pieces.size()));
      CHECK(plan.tail_start >= 0);
      CHECK(plan.tail_start < int(plan.points.size()));
      std::string why;
      CHECK_MESSAGE(check_plan(r.cert, plan, &why), why);
    }

  SUBCASE("a stationary query is a one-point plan") {
    auto plan = motion_plan(r.cert, 1, 1);
    CHECK(plan.points.size() == 1);
    CHECK(plan.tail_start == 0);
  }
}

TEST_CASE("check_plan rejects corrupted plans") {
  auto K = gen_boundary(2);
  auto L = Subcomplex::whole(K);
  auto r = tc_targeted(K, L);
  auto plan = motion_plan(r.cert, 0, 2);
  REQUIRE(check_plan(r.cert, plan));

  SUBCASE("wrong endpoint") {
    auto bad = plan;
    bad.points.back() = (bad.points.back() + 1) % 3;
    CHECK_FALSE(check_plan(r.cert, bad));
  }
  SUBCASE("a jump that is no simplex of K") {
    // On the triangle boundary every vertex pair is an edge, so use the
    // path v0 - v1 - v2, where hopping v0 -> v2 skips a non-edge.
    auto P = gen_interval(2);
    auto Lp = Subcomplex::whole(P);
    auto rp = tc_targeted(P, Lp);
    auto pp = motion_plan(rp.cert, 0, 2);
    REQUIRE(check_plan(rp.cert, pp));
    auto bad = pp;
    bad.points = {0, 2};
    bad.tail_start = 1;
    bad.x = 0;
    bad.y = 2;
    CHECK_FALSE(check_plan(rp.cert, bad));
  }
  SUBCASE("tail marker out of range") {
    auto bad = plan;
    bad.tail_start = int(bad.points.size());
    CHECK_FALSE(check_plan(r.cert, bad));
  }
}

TEST_CASE("the tail genuinely stays inside a proper target") {
  auto K = gen_wedge({4, 3});  // the 3-cycle is the second one: c2_*
  auto L = Subcomplex::from_labels(
      K, "circle3", {{"w", "c2_1"}, {"c2_1", "c2_2"}, {"c2_2", "w"}});
  auto r = tc_targeted(K, L);
  REQUIRE(r.value == 2);
  int tail_points = 0;
  for (VertexId x = 0; x < K->vertex_count(); ++x)
    for (VertexId yl = 0; yl < L.complex()->vertex_count(); ++yl) {
      auto plan = motion_plan(r.cert, x, L.to_parent(yl));
      std::string why;
      REQUIRE_MESSAGE(check_plan(r.cert, plan, &why), why);
      for (size_t i = size_t(plan.tail_start); i < plan.points.size(); ++i) {
        CHECK(L.contains(Simplex::single(plan.points[i])));
        ++tail_points;
      }
    }
  CHECK(tail_points > 0);
}

TEST_CASE("plan queries outside the contract throw InputError") {
  auto K = gen_boundary(2);
  auto L = Subcomplex::from_labels(K, "pt", {{"v0"}});
  auto r = tc_targeted(K, L);
  CHECK_THROWS_AS(motion_plan(r.cert, 0, 1), InputError);   // y not in L
  CHECK_THROWS_AS(motion_plan(r.cert, 7, 0), InputError);   // x out of range
  auto s = scat(K);
  CHECK_THROWS_AS(motion_plan(s.cert, 0, 0), InputError);   // wrong cert kind
}
