#include "tcplex/collapse.hpp"

#include <algorithm>

namespace tcplex {

std::optional<VertexId> dominated_vertex(const SimplicialComplex& K,
                                         VertexId* dominator) {
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    const VertexSet& fv = K.facets_with(v);
    for (VertexId d = 0; d < K.vertex_count(); ++d) {
      if (d == v) continue;
      if (fv.subset_of(K.facets_with(d))) {
        if (dominator) *dominator = d;
        return v;
      }
    }
  }
  return std::nullopt;
}

CollapseTrace core_of(const ComplexPtr& K) {
  CollapseTrace trace;
  trace.start = K;

  ComplexPtr cur = K;
  std::vector<VertexId> to_start(size_t(K->vertex_count()));
  for (size_t v = 0; v < to_start.size(); ++v) to_start[v] = VertexId(v);

  for (;;) {
    VertexId dom = -1;
    auto v = dominated_vertex(*cur, &dom);
    if (!v) break;
    trace.steps.push_back({cur->label(*v), cur->label(dom)});

    // Delete *v: drop it from every facet and reindex densely.
    std::vector<std::string> labels;
    std::vector<VertexId> next_to_start;
    std::vector<VertexId> remap(size_t(cur->vertex_count()), -1);
    for (VertexId u = 0; u < cur->vertex_count(); ++u) {
      if (u == *v) continue;
      remap[size_t(u)] = VertexId(labels.size());
      labels.push_back(cur->label(u));
      next_to_start.push_back(to_start[size_t(u)]);
    }
    std::vector<Simplex> facets;
    facets.reserve(size_t(cur->facet_count()));
    for (const auto& f : cur->facets()) {
      Simplex s;
      f.for_each([&](int u) {
        if (u != *v) s.set(remap[size_t(u)]);
      });
      facets.push_back(s);  // never empty: a dominated vertex is not alone
    }
    cur = build_complex_indexed(cur->name(), std::move(labels),
                                std::move(facets));
    to_start = std::move(next_to_start);
  }

  trace.core = cur;
  for (VertexId v : to_start) trace.core_vertices.set(v);
  return trace;
}

bool is_strongly_collapsible(const ComplexPtr& K) {
  return core_of(K).core->vertex_count() == 1;
}

ContiguityChain retraction_chain(const CollapseTrace& trace) {
  const ComplexPtr& K = trace.start;
  ContiguityChain chain;
  chain.maps.push_back(identity_map(K));
  std::vector<VertexId> g = chain.maps.back().at;
  for (const auto& step : trace.steps) {
    VertexId vr = K->vertex_checked(step.removed);
    VertexId vd = K->vertex_checked(step.dominator);
    for (auto& x : g)
      if (x == vr) x = vd;
    chain.maps.push_back(SimplicialMap{K, K, g});
  }
  return chain;
}

ComplexPtr strong_expand(const ComplexPtr& K,
                         const std::vector<std::string>& over,
                         const std::string& fresh_label) {
  Simplex s;
  for (const auto& lab : over) s.set(K->vertex_checked(lab));
  if (!K->is_simplex(s))
    throw InputError("strong_expand: the attachment set is not a simplex of '" +
                     K->name() + "'");
  if (K->find_vertex(fresh_label) >= 0)
    throw InputError("strong_expand: label '" + fresh_label +
                     "' already names a vertex of '" + K->name() + "'");

  std::vector<std::string> labels;
  labels.reserve(size_t(K->vertex_count()) + 1);
  for (VertexId v = 0; v < K->vertex_count(); ++v) labels.push_back(K->label(v));
  labels.push_back(fresh_label);

  std::vector<Simplex> facets = K->facets();
  Simplex cone = s;
  cone.set(K->vertex_count());
  facets.push_back(cone);

  return build_complex_indexed(K->name() + "+", std::move(labels),
                               std::move(facets));
}

}  // namespace tcplex
