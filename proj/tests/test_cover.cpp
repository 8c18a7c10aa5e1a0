#include <vector>

#include "doctest.h"
#include "tcplex/cover.hpp"

using namespace tcplex;

namespace {

VertexSet mk(std::initializer_list<int> is) {
  VertexSet s;
  for (int i : is) s.set(i);
  return s;
}

// Downward-closed synthetic verdict: a mask is Good iff it is a subset of
// one of the given caps.
struct CapEval {
  std::vector<VertexSet> caps;
  int calls = 0;
  PieceVerdict operator()(const VertexSet& m) {
    ++calls;
    for (const auto& c : caps)
      if (m.subset_of(c)) return PieceVerdict::Good;
    return PieceVerdict::Bad;
  }
};

}  // namespace

TEST_CASE("minimum_cover finds the optimum of a synthetic instance") {
  // 6 facets; Good caps {0,1,2}, {2,3}, {3,4,5}: optimum is 2 pieces
  // ({0,1,2} and {3,4,5}), and 1 piece is impossible.
  CapEval eval{{mk({0, 1, 2}), mk({2, 3}), mk({3, 4, 5})}};
  PieceMemo memo;
  auto f = [&](const VertexSet& m) { return eval(m); };
  auto mc = minimum_cover(6, 1, f, [](const VertexSet&) { return false; }, memo);
  REQUIRE(mc.found);
  CHECK(mc.exact);
  CHECK(mc.pieces.size() == 2);
  VertexSet all;
  for (const auto& p : mc.pieces) {
    CHECK(f(p) == PieceVerdict::Good);
    all |= p;
  }
  CHECK(all == VertexSet::range(6));
}

TEST_CASE("a quick_good incumbent does not change the optimum") {
  CapEval eval{{mk({0, 1}), mk({1, 2}), mk({2, 3}), mk({0, 3})}};
  auto quick = [&](const VertexSet& m) {
    return m.count() == 1;  // singletons are trivially inside some cap
  };
  PieceMemo memo;
  auto f = [&](const VertexSet& m) { return eval(m); };
  auto mc = minimum_cover(4, 1, f, quick, memo);
  REQUIRE(mc.found);
  CHECK(mc.exact);
  CHECK(mc.pieces.size() == 2);  // e.g. {0,1} + {2,3}, beats 4 singletons
}

TEST_CASE("an uncoverable facet yields found == false with exactness") {
  // Facet 2 is Bad even as a singleton, so no cover exists at any k.
  CapEval eval{{mk({0, 1}), mk({3})}};
  PieceMemo memo;
  auto mc = minimum_cover(4, 1, [&](const VertexSet& m) { return eval(m); },
                          [](const VertexSet&) { return false; }, memo);
  CHECK_FALSE(mc.found);
  CHECK(mc.exact);
}

TEST_CASE("exhausted verdicts taint the result") {
  PieceMemo memo;
  auto eval = [&](const VertexSet& m) {
    if (m.count() >= 2) return PieceVerdict::Exhausted;
    return PieceVerdict::Good;
  };
  auto mc = minimum_cover(3, 1, eval, [](const VertexSet&) { return false; },
                          memo);
  REQUIRE(mc.found);             // three singletons still cover
  CHECK(mc.pieces.size() == 3);
  CHECK_FALSE(mc.exact);         // but 2 pieces were pruned unproven
}

TEST_CASE("first-use order gives the lexicographically least assignment") {
  CapEval eval{{mk({0, 1, 2, 3})}};
  PieceMemo memo;
  auto out = cover_with_k_pieces(4, 3, [&](const VertexSet& m) { return eval(m); },
                                 memo);
  REQUIRE(out.status == CoverOutcome::Status::Solved);
  // Everything fits in one class, so the first-use solution is one piece.
  REQUIRE(out.pieces.size() >= 1);
  CHECK(out.pieces[0] == mk({0, 1, 2, 3}));
}

TEST_CASE("PieceMemo closes verdicts up and down") {
  PieceMemo memo;
  memo.record(mk({0, 1, 2}), PieceVerdict::Good);
  memo.record(mk({4, 5}), PieceVerdict::Bad);

  CHECK(memo.lookup(mk({0, 2})) == PieceVerdict::Good);   // subset of Good
  CHECK(memo.lookup(mk({0, 1, 2})) == PieceVerdict::Good);
  CHECK(memo.lookup(mk({3, 4, 5})) == PieceVerdict::Bad);  // superset of Bad
  CHECK_FALSE(memo.lookup(mk({0, 3})).has_value());        // genuinely unknown
  CHECK_FALSE(memo.lookup(mk({0, 1, 2, 3})).has_value());  // superset of Good

  // Closure lists stay antichains: a dominated Good entry is absorbed.
  memo.record(mk({0, 1}), PieceVerdict::Good);
  CHECK(memo.lookup(mk({1})) == PieceVerdict::Good);
  memo.record(mk({0, 1, 2, 3}), PieceVerdict::Good);
  CHECK(memo.lookup(mk({2, 3})) == PieceVerdict::Good);
}
