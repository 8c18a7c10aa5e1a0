#include "tcplex/simplicial_map.hpp"

namespace tcplex {

SimplicialMap identity_map(const ComplexPtr& K) {
  SimplicialMap f{K, K, {}};
  f.at.resize(size_t(K->vertex_count()));
  for (int v = 0; v < K->vertex_count(); ++v) f.at[size_t(v)] = v;
  return f;
}

SimplicialMap constant_map(const ComplexPtr& K, const ComplexPtr& L,
                           VertexId v) {
  return SimplicialMap{K, L, std::vector<VertexId>(size_t(K->vertex_count()), v)};
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h{f.dom, g.cod, {}};
  h.at.reserve(f.at.size());
  for (VertexId v : f.at) h.at.push_back(g.at[size_t(v)]);
  return h;
}

SimplicialMap projection_left(const ComplexPtr& product) {
  SimplicialMap p{product, product->product_left(), {}};
  p.at.reserve(size_t(product->vertex_count()));
  for (int v = 0; v < product->vertex_count(); ++v)
    p.at.push_back(product->pair_split(v).first);
  return p;
}

SimplicialMap projection_right(const ComplexPtr& product) {
  SimplicialMap p{product, product->product_right(), {}};
  p.at.reserve(size_t(product->vertex_count()));
  for (int v = 0; v < product->vertex_count(); ++v)
    p.at.push_back(product->pair_split(v).second);
  return p;
}

SimplicialMap diagonal_map(const ComplexPtr& K, const ComplexPtr& KxK) {
  SimplicialMap d{K, KxK, {}};
  d.at.reserve(size_t(K->vertex_count()));
  for (int v = 0; v < K->vertex_count(); ++v)
    d.at.push_back(KxK->pair_index(v, v));
  return d;
}

bool same_map(const SimplicialMap& f, const SimplicialMap& g) {
  return f.dom == g.dom && f.cod == g.cod && f.at == g.at;
}

bool validate_map(const SimplicialMap& f, std::string* why) {
  if (!f.dom || !f.cod) {
    if (why) *why = "map has no domain or codomain";
    return false;
  }
  if (int(f.at.size()) != f.dom->vertex_count()) {
    if (why) *why = "assignment size does not match the domain";
    return false;
  }
  for (VertexId v : f.at)
    if (v < 0 || v >= f.cod->vertex_count()) {
      if (why) *why = "assignment leaves the codomain vertex range";
      return false;
    }
  for (const auto& s : f.dom->facets())
    if (!f.cod->is_simplex(f.image(s))) {
      if (why)
        *why = "image of a facet is not a simplex of '" + f.cod->name() + "'";
      return false;
    }
  return true;
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g,
                    std::string* why) {
  if (f.dom != g.dom || f.cod != g.cod) {
    if (why) *why = "maps do not share domain and codomain";
    return false;
  }
  for (const auto& s : f.dom->facets())
    if (!f.cod->is_simplex(f.image(s) | g.image(s))) {
      if (why)
        *why = "union image of a facet is not a simplex of '" + f.cod->name() +
               "'";
      return false;
    }
  return true;
}

bool verify_chain(const ContiguityChain& chain, const SimplicialMap& from,
                  const SimplicialMap& to, std::string* why) {
  if (chain.maps.empty()) {
    if (why) *why = "chain is empty";
    return false;
  }
  if (!same_map(chain.maps.front(), from)) {
    if (why) *why = "chain does not start at the requested map";
    return false;
  }
  if (!same_map(chain.maps.back(), to)) {
    if (why) *why = "chain does not end at the requested map";
    return false;
  }
  for (size_t i = 0; i < chain.maps.size(); ++i) {
    std::string detail;
    if (!validate_map(chain.maps[i], &detail)) {
      if (why)
        *why = "chain entry " + std::to_string(i) + " is not simplicial: " +
               detail;
      return false;
    }
    if (i > 0 && !are_contiguous(chain.maps[i - 1], chain.maps[i], &detail)) {
      if (why)
        *why = "chain entries " + std::to_string(i - 1) + " and " +
               std::to_string(i) + " are not contiguous: " + detail;
      return false;
    }
  }
  return true;
}

void compress_chain(ContiguityChain& chain) {
  auto& m = chain.maps;
  bool shrunk = true;
  while (shrunk && m.size() > 2) {
    shrunk = false;
    for (size_t i = 0; i + 1 < m.size();) {
      if (same_map(m[i], m[i + 1])) {
        m.erase(m.begin() + long(i) + 1);
        shrunk = true;
      } else {
        ++i;
      }
    }
    for (size_t i = 0; i + 2 < m.size();) {
      if (are_contiguous(m[i], m[i + 2])) {
        m.erase(m.begin() + long(i) + 1);
        shrunk = true;
      } else {
        ++i;
      }
    }
  }
}

}  // namespace tcplex
