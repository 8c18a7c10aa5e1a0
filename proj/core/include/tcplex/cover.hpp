#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tcplex/vertex_set.hpp"

namespace tcplex {

// A required exact answer could not be certified within the state budget.
class ExhaustedError : public std::runtime_error {
 public:
  explicit ExhaustedError(const std::string& what, int incumbent = -1)
      : std::runtime_error(what), incumbent_value(incumbent) {}
  // Best cover size found before giving up, -1 if none.
  int incumbent_value;
};

enum class PieceVerdict { Good, Bad, Exhausted };

// Shared verdict store for candidate pieces, keyed by facet mask.  The
// piece property (categorical / Farber) is downward closed, so a subset of
// a Good mask is Good and a superset of a Bad mask is Bad; the memo
// answers through that closure before falling back to the oracle.
class PieceMemo {
 public:
  std::optional<PieceVerdict> lookup(const VertexSet& mask) const {
    if (auto it = exact_.find(mask); it != exact_.end()) return it->second;
    for (const auto& g : good_)
      if (mask.subset_of(g)) return PieceVerdict::Good;
    for (const auto& b : bad_)
      if (b.subset_of(mask)) return PieceVerdict::Bad;
    return std::nullopt;
  }

  // The closure lists are kept as antichains: entries subsumed by the
  // newcomer are dropped, and a newcomer already covered is not stored.
  void record(const VertexSet& mask, PieceVerdict v) {
    exact_.emplace(mask, v);
    if (v == PieceVerdict::Good) absorb(good_, mask, /*keep_maximal=*/true);
    if (v == PieceVerdict::Bad) absorb(bad_, mask, /*keep_maximal=*/false);
  }

 private:
  static void absorb(std::vector<VertexSet>& list, const VertexSet& mask,
                     bool keep_maximal) {
    for (const auto& m : list) {
      bool covered = keep_maximal ? mask.subset_of(m) : m.subset_of(mask);
      if (covered) return;
    }
    std::erase_if(list, [&](const VertexSet& m) {
      return keep_maximal ? m.subset_of(mask) : mask.subset_of(m);
    });
    list.push_back(mask);
  }

  std::unordered_map<VertexSet, PieceVerdict, VertexSetHash> exact_;
  std::vector<VertexSet> good_, bad_;
};

struct CoverOutcome {
  enum class Status { Solved, NoCover };
  Status status = Status::NoCover;
  std::vector<VertexSet> pieces;  // facet masks in first-use class order
  bool tainted = false;  // an Exhausted verdict pruned part of the tree
};

// Can n_facets facets be split into at most k Good classes?  Depth-first
// over facets in index order, trying classes in first-use order (class c
// only after classes 0..c-1 are in use), so the first solution found is
// the lexicographically least assignment vector.  Exhausted verdicts
// prune like Bad but set `tainted`.
CoverOutcome cover_with_k_pieces(
    int n_facets, int k,
    const std::function<PieceVerdict(const VertexSet&)>& eval,
    PieceMemo& memo);

struct MinimumCover {
  std::vector<VertexSet> pieces;
  bool exact = true;   // no taint at any level below the answer
  bool found = false;  // false: no cover exists (exact) or budget ran dry
};

// Iterative deepening from lb_pieces.  quick_good is a cheap sufficient
// test used to seed a greedy incumbent (warming the memo and capping the
// deepening); it must imply eval(mask) == Good.
MinimumCover minimum_cover(
    int n_facets, int lb_pieces,
    const std::function<PieceVerdict(const VertexSet&)>& eval,
    const std::function<bool(const VertexSet&)>& quick_good, PieceMemo& memo);

}  // namespace tcplex
