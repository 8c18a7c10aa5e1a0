#include "tcplex/cover.hpp"

#include <algorithm>

namespace tcplex {

CoverOutcome cover_with_k_pieces(
    int n_facets, int k,
    const std::function<PieceVerdict(const VertexSet&)>& eval,
    PieceMemo& memo) {
  CoverOutcome out;
  std::vector<VertexSet> cls(static_cast<size_t>(k));
  int used = 0;

  auto verdict_of = [&](const VertexSet& mask) {
    if (auto hit = memo.lookup(mask)) return *hit;
    PieceVerdict v = eval(mask);
    memo.record(mask, v);
    return v;
  };

  std::function<bool(int)> dfs = [&](int f) -> bool {
    if (f == n_facets) {
      out.pieces.assign(cls.begin(), cls.begin() + used);
      return true;
    }
    int limit = std::min(used, k - 1);
    for (int c = 0; c <= limit; ++c) {
      VertexSet next = cls[size_t(c)];
      next.set(f);
      PieceVerdict v = verdict_of(next);
      if (v != PieceVerdict::Good) {
        if (v == PieceVerdict::Exhausted) out.tainted = true;
        continue;
      }
      VertexSet saved = cls[size_t(c)];
      int saved_used = used;
      cls[size_t(c)] = next;
      if (c == used) ++used;
      if (dfs(f + 1)) return true;
      cls[size_t(c)] = saved;
      used = saved_used;
    }
    return false;
  };

  out.status = dfs(0) ? CoverOutcome::Status::Solved : CoverOutcome::Status::NoCover;
  return out;
}

MinimumCover minimum_cover(
    int n_facets, int lb_pieces,
    const std::function<PieceVerdict(const VertexSet&)>& eval,
    const std::function<bool(const VertexSet&)>& quick_good, PieceMemo& memo) {
  MinimumCover result;

  // Singleton feasibility: a facet whose one-facet piece is definitively
  // Bad can never sit inside any Good piece, so no cover exists at all.
  bool singleton_taint = false;
  for (int f = 0; f < n_facets; ++f) {
    VertexSet s = VertexSet::single(f);
    PieceVerdict v;
    if (auto hit = memo.lookup(s)) {
      v = *hit;
    } else if (quick_good(s)) {
      v = PieceVerdict::Good;
      memo.record(s, v);
    } else {
      v = eval(s);
      memo.record(s, v);
    }
    if (v == PieceVerdict::Bad) {
      result.found = false;
      result.exact = true;
      return result;
    }
    if (v == PieceVerdict::Exhausted) singleton_taint = true;
  }

  // Greedy incumbent over quick_good only: caps the deepening and leaves
  // Good marks in the memo that later let the depth-first search walk the
  // same partition without re-deciding prefixes.
  std::vector<VertexSet> greedy;
  bool greedy_ok = !singleton_taint;
  if (greedy_ok) {
    VertexSet cur;
    bool open = false;
    for (int f = 0; f < n_facets && greedy_ok; ++f) {
      VertexSet trial = cur;
      trial.set(f);
      if (open && quick_good(trial)) {
        cur = trial;
        continue;
      }
      if (open) greedy.push_back(cur);
      cur = VertexSet::single(f);
      open = true;
      if (!quick_good(cur)) {
        // fall back on the singleton verdict from the scan
        if (memo.lookup(cur) != PieceVerdict::Good) greedy_ok = false;
        greedy.push_back(cur);
        open = false;
      }
    }
    if (open) greedy.push_back(cur);
    if (greedy_ok)
      for (const auto& p : greedy) memo.record(p, PieceVerdict::Good);
  }

  int ub = greedy_ok ? int(greedy.size()) : n_facets;
  int lb = std::max(1, lb_pieces);
  if (lb > ub)
    throw std::logic_error("cover search: lower bound exceeds a certified cover");

  bool taint_below = false;
  for (int k = lb; k <= ub; ++k) {
    CoverOutcome out = cover_with_k_pieces(n_facets, k, eval, memo);
    if (out.status == CoverOutcome::Status::Solved) {
      result.pieces = std::move(out.pieces);
      result.found = true;
      result.exact = !taint_below;
      return result;
    }
    if (out.tainted) taint_below = true;
  }
  result.found = false;
  result.exact = !taint_below && !singleton_taint;
  return result;
}

}  // namespace tcplex
