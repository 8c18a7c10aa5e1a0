#include "tcplex/complex.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace tcplex {

namespace {

bool valid_label(std::string_view s) {
  if (s.empty() || s.front() == '#') return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// Drop duplicates and non-maximal members; sort into canonical order.
std::vector<Simplex> antichain(std::vector<Simplex> sets) {
  std::stable_sort(sets.begin(), sets.end(),
                   [](const Simplex& a, const Simplex& b) {
                     return a.count() > b.count();
                   });
  std::vector<Simplex> out;
  for (const auto& s : sets) {
    bool absorbed = false;
    for (const auto& kept : out)
      if (s.subset_of(kept)) {
        absorbed = true;
        break;
      }
    if (!absorbed) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), VertexSet::lex_less);
  return out;
}

}  // namespace

VertexId SimplicialComplex::find_vertex(std::string_view label) const {
  auto it = index_.find(std::string(label));
  return it == index_.end() ? -1 : it->second;
}

VertexId SimplicialComplex::vertex_checked(std::string_view label) const {
  VertexId v = find_vertex(label);
  if (v < 0)
    throw InputError("no vertex '" + std::string(label) + "' in complex '" +
                     name_ + "'");
  return v;
}

VertexSet SimplicialComplex::facets_containing(const Simplex& s) const {
  VertexSet m = all_facets_mask();
  s.for_each([&](int v) { m &= facet_in_[size_t(v)]; });
  return m;
}

void SimplicialComplex::finalize() {
  facets_ = antichain(std::move(facets_));
  facet_in_.assign(labels_.size(), VertexSet{});
  dim_ = -1;
  for (int f = 0; f < int(facets_.size()); ++f) {
    dim_ = std::max(dim_, facets_[size_t(f)].count() - 1);
    facets_[size_t(f)].for_each(
        [&](int v) { facet_in_[size_t(v)].set(f); });
  }
  for (int v = 0; v < vertex_count(); ++v)
    if (facet_in_[size_t(v)].none())
      throw InputError("vertex '" + labels_[size_t(v)] +
                       "' lies in no facet of complex '" + name_ + "'");

  // Connected components via union-find over vertices.
  component_.resize(labels_.size());
  std::vector<int> up(labels_.size());
  for (size_t v = 0; v < up.size(); ++v) up[v] = int(v);
  auto find = [&](int v) {
    while (up[size_t(v)] != v) v = up[size_t(v)] = up[size_t(up[size_t(v)])];
    return v;
  };
  for (const auto& f : facets_) {
    int root = -1;
    f.for_each([&](int v) {
      if (root < 0)
        root = find(v);
      else
        up[size_t(find(v))] = root;
    });
  }
  components_ = 0;
  std::vector<int> id(labels_.size(), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    int r = find(v);
    if (id[size_t(r)] < 0) id[size_t(r)] = components_++;
    component_[size_t(v)] = id[size_t(r)];
  }
  connected_ = components_ <= 1;
}

ComplexPtr build_complex_indexed(std::string name,
                                 std::vector<std::string> labels,
                                 std::vector<Simplex> facets) {
  if (int(labels.size()) > VertexSet::kCapacity)
    throw InputError("complex '" + name + "' exceeds the vertex capacity of " +
                     std::to_string(VertexSet::kCapacity));
  if (facets.empty())
    throw InputError("complex '" + name + "' has no facets");
  for (const auto& f : facets)
    if (f.none()) throw InputError("empty facet in complex '" + name + "'");

  auto c = std::shared_ptr<SimplicialComplex>(new SimplicialComplex);
  c->name_ = std::move(name);
  c->labels_ = std::move(labels);
  for (size_t v = 0; v < c->labels_.size(); ++v) {
    auto [it, fresh] = c->index_.emplace(c->labels_[v], VertexId(v));
    if (!fresh)
      throw InputError("duplicate vertex label '" + c->labels_[v] +
                       "' in complex '" + c->name_ + "'");
  }
  c->facets_ = std::move(facets);
  if (int(c->facets_.size()) > VertexSet::kCapacity)
    throw InputError("complex '" + c->name_ + "' exceeds the facet capacity of " +
                     std::to_string(VertexSet::kCapacity));
  c->finalize();
  if (int(c->facets_.size()) > VertexSet::kCapacity)
    throw InputError("complex '" + c->name_ + "' exceeds the facet capacity of " +
                     std::to_string(VertexSet::kCapacity));
  return c;
}

ComplexPtr build_complex(std::string name,
                         const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Simplex> sets;
  sets.reserve(facets.size());
  for (const auto& facet : facets) {
    if (facet.empty()) throw InputError("empty facet in complex '" + name + "'");
    Simplex s;
    for (const auto& lab : facet) {
      if (!valid_label(lab))
        throw InputError("bad vertex label '" + lab + "' in complex '" + name +
                         "'");
      auto it = index.find(lab);
      VertexId v;
      if (it == index.end()) {
        v = VertexId(labels.size());
        if (v >= VertexSet::kCapacity)
          throw InputError("complex '" + name +
                           "' exceeds the vertex capacity of " +
                           std::to_string(VertexSet::kCapacity));
        labels.push_back(lab);
        index.emplace(lab, v);
      } else {
        v = it->second;
      }
      if (s.test(v))
        throw InputError("vertex '" + lab + "' repeated inside one facet of '" +
                         name + "'");
      s.set(v);
    }
    sets.push_back(s);
  }
  return build_complex_indexed(std::move(name), std::move(labels),
                               std::move(sets));
}

ComplexPtr categorical_product(const ComplexPtr& K, const ComplexPtr& L) {
  const int nL = L->vertex_count();
  const long pairs = long(K->vertex_count()) * nL;
  if (pairs > VertexSet::kCapacity)
    throw InputError("product of '" + K->name() + "' and '" + L->name() +
                     "' exceeds the vertex capacity of " +
                     std::to_string(VertexSet::kCapacity));
  const long boxes = long(K->facet_count()) * L->facet_count();
  if (boxes > VertexSet::kCapacity)
    throw InputError("product of '" + K->name() + "' and '" + L->name() +
                     "' exceeds the facet capacity of " +
                     std::to_string(VertexSet::kCapacity));

  std::vector<std::string> labels;
  labels.reserve(size_t(pairs));
  for (int a = 0; a < K->vertex_count(); ++a)
    for (int b = 0; b < nL; ++b)
      labels.push_back("(" + K->label(a) + "," + L->label(b) + ")");

  // The facets are exactly the boxes f x g: a box is contained in a box
  // only coordinatewise, so the collection is already an antichain.
  std::vector<Simplex> facets;
  facets.reserve(size_t(boxes));
  for (const auto& f : K->facets())
    for (const auto& g : L->facets()) {
      Simplex box;
      f.for_each([&](int a) {
        g.for_each([&](int b) { box.set(a * nL + b); });
      });
      facets.push_back(box);
    }

  auto P = build_complex_indexed(K->name() + " x " + L->name(),
                                 std::move(labels), std::move(facets));
  assert(P->facet_count() == int(boxes));
  auto* raw = const_cast<SimplicialComplex*>(P.get());
  raw->prod_left_ = K;
  raw->prod_right_ = L;
  return P;
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex::Subcomplex(ComplexPtr parent, std::vector<Simplex> generators,
                       std::string name)
    : parent_(std::move(parent)) {
  if (generators.empty())
    throw InputError("subcomplex '" + name + "' has no generating simplices");
  for (const auto& g : generators)
    if (!parent_->is_simplex(g))
      throw InputError("subcomplex '" + name +
                       "' has a generator that is not a simplex of '" +
                       parent_->name() + "'");
  parent_facets_ = antichain(std::move(generators));
  for (const auto& f : parent_facets_) support_ |= f;

  to_local_.assign(size_t(parent_->vertex_count()), -1);
  std::vector<std::string> labels;
  support_.for_each([&](int v) {
    to_local_[size_t(v)] = VertexId(to_parent_.size());
    to_parent_.push_back(v);
    labels.push_back(parent_->label(v));
  });

  std::vector<Simplex> local_facets;
  local_facets.reserve(parent_facets_.size());
  for (const auto& f : parent_facets_) {
    Simplex s;
    f.for_each([&](int v) { s.set(to_local_[size_t(v)]); });
    local_facets.push_back(s);
  }
  local_ = build_complex_indexed(std::move(name), std::move(labels),
                                 std::move(local_facets));
}

Subcomplex Subcomplex::whole(ComplexPtr parent) {
  auto facets = parent->facets();
  auto name = parent->name();
  return Subcomplex(std::move(parent), std::move(facets), std::move(name));
}

Subcomplex Subcomplex::from_labels(
    ComplexPtr parent, std::string name,
    const std::vector<std::vector<std::string>>& gens) {
  std::vector<Simplex> sets;
  sets.reserve(gens.size());
  for (const auto& g : gens) {
    Simplex s;
    for (const auto& lab : g) s.set(parent->vertex_checked(lab));
    sets.push_back(s);
  }
  return Subcomplex(std::move(parent), std::move(sets), std::move(name));
}

Subcomplex Subcomplex::from_facet_mask(ComplexPtr parent, const VertexSet& mask,
                                       std::string name) {
  std::vector<Simplex> sets;
  mask.for_each([&](int f) { sets.push_back(parent->facet(f)); });
  return Subcomplex(std::move(parent), std::move(sets), std::move(name));
}

bool Subcomplex::contains(const Simplex& parent_set) const {
  if (parent_set.none() || !parent_set.subset_of(support_)) return false;
  for (const auto& f : parent_facets_)
    if (parent_set.subset_of(f)) return true;
  return false;
}

bool Subcomplex::is_whole() const {
  return parent_facets_ == parent_->facets();
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::vector<std::string> v_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(size_t(n));
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

}  // namespace

ComplexPtr gen_simplex(int n) {
  if (n < 0) throw InputError("gen_simplex: dimension must be >= 0");
  return build_complex_indexed("simplex" + std::to_string(n), v_labels(n + 1),
                               {VertexSet::range(n + 1)});
}

ComplexPtr gen_boundary(int n) {
  if (n < 1) throw InputError("gen_boundary: dimension must be >= 1");
  std::vector<Simplex> facets;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex s = VertexSet::range(n + 1);
    s.reset(skip);
    facets.push_back(s);
  }
  return build_complex_indexed("boundary" + std::to_string(n), v_labels(n + 1),
                               std::move(facets));
}

ComplexPtr gen_circle(int m) {
  if (m < 3) throw InputError("gen_circle: need at least 3 vertices");
  std::vector<Simplex> facets;
  for (int i = 0; i < m; ++i) {
    Simplex e;
    e.set(i);
    e.set((i + 1) % m);
    facets.push_back(e);
  }
  return build_complex_indexed("circle" + std::to_string(m), v_labels(m),
                               std::move(facets));
}

ComplexPtr gen_interval(int n) {
  if (n < 0) throw InputError("gen_interval: edge count must be >= 0");
  if (n == 0)
    return build_complex_indexed("interval0", v_labels(1),
                                 {VertexSet::single(0)});
  std::vector<Simplex> facets;
  for (int i = 0; i < n; ++i) {
    Simplex e;
    e.set(i);
    e.set(i + 1);
    facets.push_back(e);
  }
  return build_complex_indexed("interval" + std::to_string(n), v_labels(n + 1),
                               std::move(facets));
}

ComplexPtr gen_wedge(const std::vector<int>& cycle_sizes) {
  if (cycle_sizes.empty()) throw InputError("gen_wedge: need at least one cycle");
  std::string name = "wedge";
  std::vector<std::string> labels = {"w"};
  std::vector<Simplex> facets;
  for (size_t c = 0; c < cycle_sizes.size(); ++c) {
    int m = cycle_sizes[c];
    if (m < 3) throw InputError("gen_wedge: every cycle needs >= 3 vertices");
    name += (c ? "_" : "") + std::to_string(m);
    // Cycle c: w, c<i>_1, ..., c<i>_{m-1}, back to w.
    std::vector<VertexId> ring = {0};
    for (int j = 1; j < m; ++j) {
      ring.push_back(VertexId(labels.size()));
      labels.push_back("c" + std::to_string(c + 1) + "_" + std::to_string(j));
    }
    for (int j = 0; j < m; ++j) {
      Simplex e;
      e.set(ring[size_t(j)]);
      e.set(ring[size_t((j + 1) % m)]);
      facets.push_back(e);
    }
  }
  return build_complex_indexed(std::move(name), std::move(labels),
                               std::move(facets));
}

}  // namespace tcplex
