#pragma once

#include "tcplex/certificates.hpp"

namespace tcplex {

// Answers one query (x, y) from a complexity certificate: picks the
// lowest-indexed piece whose subcomplex contains the product vertex
// (x, y), evaluates that piece's witness chain at it, and reads off the
// sequence
//
//     x = x_m, ..., x_1, x_0 = sigma(x, y) = y_0, y_1, ..., y_m = y
//
// with consecutive duplicates removed.  Two invariants hold and are
// re-checked before returning: consecutive points span simplices of K,
// and every point from tail_start on is a vertex of L (with consecutive
// tail points spanning simplices of L).  Requires a Farber certificate
// (cert.L present); x, y are vertex ids of K with y in L.
MotionPlan motion_plan(const CoverCertificate& cert, VertexId x, VertexId y);

// Re-checks the invariants above directly against K and L, without
// trusting how the plan was produced.
bool check_plan(const CoverCertificate& cert, const MotionPlan& plan,
                std::string* why = nullptr);

}  // namespace tcplex
