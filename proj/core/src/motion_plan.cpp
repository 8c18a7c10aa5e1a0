#include "tcplex/motion_plan.hpp"

#include <stdexcept>

namespace tcplex {

MotionPlan motion_plan(const CoverCertificate& cert, VertexId x, VertexId y) {
  if (!cert.L)
    throw InputError(
        "motion_plan: the certificate is a category cover; motion plans "
        "need a complexity cover with a target subcomplex");
  const ComplexPtr& K = cert.K;
  const Subcomplex& L = *cert.L;
  if (x < 0 || x >= K->vertex_count() || y < 0 || y >= K->vertex_count())
    throw InputError("motion_plan: query vertex out of range");
  if (!L.parent_vertices().test(y))
    throw InputError("motion_plan: '" + K->label(y) + "' is not a vertex of '" +
                     L.name() + "'");

  const ComplexPtr& P = cert.target;
  VertexId pv = P->pair_index(x, L.to_local(y));

  int idx = -1;
  for (size_t i = 0; i < cert.pieces.size() && idx < 0; ++i)
    if (cert.pieces[i].piece.parent_vertices().test(pv)) idx = int(i);
  if (idx < 0)
    throw InputError(
        "motion_plan: no piece contains the query pair; the certificate "
        "does not cover its target");
  const CoverPiece& cp = cert.pieces[size_t(idx)];
  if (!cp.farber)
    throw InputError("motion_plan: piece " + std::to_string(idx) +
                     " carries no Farber witness");

  // Evaluate the chain h_0 = Delta_L . sigma, ..., h_m = i_Omega at the
  // query.  Walking j = m .. 0 gives the x-leg ending at sigma(x, y);
  // walking j = 0 .. m gives the y-leg, which stays inside L because
  // second coordinates of a chain in the product move along simplices
  // of L.
  VertexId u = cp.piece.to_local(pv);
  const auto& maps = cp.farber->chain.maps;

  std::vector<std::pair<VertexId, bool>> raw;  // (vertex of K, tail?)
  raw.reserve(2 * maps.size());
  for (size_t j = maps.size(); j-- > 0;) {
    auto [xj, yj] = P->pair_split(maps[j].at[size_t(u)]);
    (void)yj;
    raw.emplace_back(xj, j == 0);  // x_0 = y_0 already lies in L
  }
  for (size_t j = 1; j < maps.size(); ++j) {
    auto [xj, yj] = P->pair_split(maps[j].at[size_t(u)]);
    (void)xj;
    raw.emplace_back(L.to_parent(yj), true);
  }

  MotionPlan plan;
  plan.x = x;
  plan.y = y;
  plan.piece_index = idx;

  // Erase revisit loops over the whole walk: closing a loop at a vertex
  // rewinds to its earlier occurrence.  Every consecutive pair that
  // survives was consecutive at some moment of the walk, so the steps
  // stay edges of K (and of L where both ends survive in the tail).
  std::vector<VertexId>& pts = plan.points;
  for (const auto& [p, tail] : raw) {
    (void)tail;
    size_t j = pts.size();
    while (j > 0 && pts[j - 1] != p) --j;
    if (j > 0)
      pts.resize(j);  // keep the earlier occurrence, drop the loop
    else
      pts.push_back(p);
  }

  // The tail is the longest suffix that lives in L; it is nonempty
  // because the walk ends at y, a vertex of L.  A stationary query
  // collapses to a single point with an immediate tail.
  size_t t = pts.size() - 1;
  while (t > 0) {
    if (!L.parent_vertices().test(pts[t - 1])) break;
    Simplex e;
    e.set(pts[t - 1]);
    e.set(pts[t]);
    if (!L.contains(e)) break;
    --t;
  }
  plan.tail_start = int(t);

  std::string why;
  if (!check_plan(cert, plan, &why))
    throw std::logic_error("motion_plan produced an invalid sequence: " + why);
  return plan;
}

bool check_plan(const CoverCertificate& cert, const MotionPlan& plan,
                std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (!cert.L) return fail("certificate has no target subcomplex");
  const ComplexPtr& K = cert.K;
  const Subcomplex& L = *cert.L;

  if (plan.points.empty()) return fail("empty point sequence");
  if (plan.points.front() != plan.x)
    return fail("sequence does not start at x");
  if (plan.points.back() != plan.y) return fail("sequence does not end at y");
  if (plan.tail_start < 0 || plan.tail_start >= int(plan.points.size()))
    return fail("tail marker out of range");

  for (size_t i = 0; i + 1 < plan.points.size(); ++i) {
    Simplex e;
    e.set(plan.points[i]);
    e.set(plan.points[i + 1]);
    if (!K->is_simplex(e))
      return fail("points " + std::to_string(i) + " and " +
                  std::to_string(i + 1) + " do not span a simplex of K");
  }
  for (size_t i = size_t(plan.tail_start); i < plan.points.size(); ++i) {
    if (!L.parent_vertices().test(plan.points[i]))
      return fail("tail point " + std::to_string(i) + " ('" +
                  K->label(plan.points[i]) + "') is not a vertex of L");
    if (i + 1 < plan.points.size()) {
      Simplex e;
      e.set(plan.points[i]);
      e.set(plan.points[i + 1]);
      if (!L.contains(e))
        return fail("tail points " + std::to_string(i) + " and " +
                    std::to_string(i + 1) + " do not span a simplex of L");
    }
  }
  return true;
}

}  // namespace tcplex
