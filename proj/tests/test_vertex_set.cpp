#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "tcplex/vertex_set.hpp"

using tcplex::VertexSet;
using tcplex::VertexSetHash;

TEST_CASE("bit operations across word boundaries") {
  VertexSet s;
  for (int i : {0, 63, 64, 127, 128, 511}) {
    CHECK_FALSE(s.test(i));
    s.set(i);
    CHECK(s.test(i));
  }
  CHECK(s.count() == 6);
  CHECK(s.lowest() == 0);
  s.reset(0);
  CHECK(s.lowest() == 63);
  CHECK(s.indices() == std::vector<int>{63, 64, 127, 128, 511});

  VertexSet t = VertexSet::single(64) | VertexSet::single(200);
  CHECK((s & t).indices() == std::vector<int>{64});
  CHECK((s | t).count() == 6);
  CHECK(s.minus(t).count() == 4);
  CHECK_FALSE(s.minus(t).test(64));
}

TEST_CASE("range, any, none") {
  CHECK(VertexSet{}.none());
  CHECK_FALSE(VertexSet{}.any());
  CHECK(VertexSet::range(0).none());
  auto r = VertexSet::range(70);
  CHECK(r.count() == 70);
  CHECK(r.test(69));
  CHECK_FALSE(r.test(70));
}

TEST_CASE("subset and intersection") {
  auto a = VertexSet::single(3) | VertexSet::single(100);
  auto b = a | VertexSet::single(7);
  CHECK(a.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  CHECK(a.subset_of(a));
  CHECK(VertexSet{}.subset_of(a));
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(VertexSet::single(7)));
  CHECK_FALSE(VertexSet{}.intersects(a));
}

TEST_CASE("lex order on ascending index sequences") {
  auto mk = [](std::initializer_list<int> is) {
    VertexSet s;
    for (int i : is) s.set(i);
    return s;
  };
  // {0,5} < {1,2}: first indices decide.
  CHECK(VertexSet::lex_less(mk({0, 5}), mk({1, 2})));
  CHECK_FALSE(VertexSet::lex_less(mk({1, 2}), mk({0, 5})));
  // Shared prefix: {1,2} < {1,3}.
  CHECK(VertexSet::lex_less(mk({1, 2}), mk({1, 3})));
  // Proper prefix comes first: {1} < {1,9}.
  CHECK(VertexSet::lex_less(mk({1}), mk({1, 9})));
  CHECK_FALSE(VertexSet::lex_less(mk({1, 9}), mk({1})));
  // Irreflexive.
  CHECK_FALSE(VertexSet::lex_less(mk({2, 64}), mk({2, 64})));
  // Differs from the raw word order when high bits dominate.
  CHECK(VertexSet::lex_less(mk({0, 300}), mk({1})));
  CHECK(mk({1}) < mk({0, 300}));
}

TEST_CASE("for_each visits ascending; hash is usable") {
  VertexSet s;
  for (int i : {2, 65, 64, 130}) s.set(i);
  std::vector<int> seen;
  s.for_each([&](int i) { seen.push_back(i); });
  CHECK(seen == std::vector<int>{2, 64, 65, 130});

  std::unordered_set<VertexSet, VertexSetHash> us;
  us.insert(s);
  us.insert(VertexSet::single(2));
  us.insert(s);
  CHECK(us.size() == 2);
  CHECK(us.count(s) == 1);
}
