#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tcplex/vertex_set.hpp"

namespace tcplex {

using VertexId = int;
using Simplex = VertexSet;  // vertices by dense index

// Thrown for malformed input: bad labels, empty facets, capacity overflow,
// files that do not parse.  The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// A finite abstract simplicial complex stored by its facets (maximal
// simplices).  Vertices carry string labels; all internal structure works
// on dense indices.  Immutable once built.
//
// Membership: a non-empty vertex set is a simplex iff it is contained in
// some facet.  The per-vertex facet incidence masks make that a word-AND.
class SimplicialComplex {
 public:
  const std::string& name() const { return name_; }
  int vertex_count() const { return int(labels_.size()); }
  int facet_count() const { return int(facets_.size()); }

  const std::string& label(VertexId v) const { return labels_[size_t(v)]; }
  // Dense index for a label, -1 when absent.
  VertexId find_vertex(std::string_view label) const;
  // As above but throws InputError when absent.
  VertexId vertex_checked(std::string_view label) const;

  const std::vector<Simplex>& facets() const { return facets_; }
  const Simplex& facet(int f) const { return facets_[size_t(f)]; }
  // Mask over facet indices: which facets contain vertex v.
  const VertexSet& facets_with(VertexId v) const { return facet_in_[size_t(v)]; }

  VertexSet all_vertices() const { return VertexSet::range(vertex_count()); }
  VertexSet all_facets_mask() const { return VertexSet::range(facet_count()); }

  // AND of facets_with over the members of s: the facets containing s.
  VertexSet facets_containing(const Simplex& s) const;
  bool is_simplex(const Simplex& s) const {
    return s.any() && facets_containing(s).any();
  }

  int dimension() const { return dim_; }
  bool is_connected() const { return connected_; }
  int component_count() const { return components_; }
  // Component id per vertex (dense, stable).
  const std::vector<int>& component_of() const { return component_; }

  // Categorical product bookkeeping: set when this complex was produced by
  // categorical_product.  Vertex (a, b) of K x L lives at index
  // a * L.vertex_count() + b.
  bool is_product() const { return bool(prod_left_); }
  const ComplexPtr& product_left() const { return prod_left_; }
  const ComplexPtr& product_right() const { return prod_right_; }
  VertexId pair_index(VertexId a, VertexId b) const {
    return a * prod_right_->vertex_count() + b;
  }
  std::pair<VertexId, VertexId> pair_split(VertexId v) const {
    int n = prod_right_->vertex_count();
    return {v / n, v % n};
  }

  friend ComplexPtr build_complex(std::string,
                                  const std::vector<std::vector<std::string>>&);
  friend ComplexPtr build_complex_indexed(std::string, std::vector<std::string>,
                                          std::vector<Simplex>);
  friend ComplexPtr categorical_product(const ComplexPtr&, const ComplexPtr&);

 private:
  SimplicialComplex() = default;
  void finalize();  // sort facets, build incidence, components, dimension

  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Simplex> facets_;     // canonical order, antichain
  std::vector<VertexSet> facet_in_;  // per vertex: mask of facet indices
  int dim_ = -1;
  bool connected_ = true;
  int components_ = 0;
  std::vector<int> component_;
  ComplexPtr prod_left_, prod_right_;
};

// Build from labelled facet lists.  Vertex indices are assigned by first
// appearance.  Non-maximal or duplicate entries are absorbed; an empty
// facet list, an empty facet, or a label repeated inside one facet is an
// InputError.  Labels are free-form non-whitespace strings not starting
// with '#'.
ComplexPtr build_complex(std::string name,
                         const std::vector<std::vector<std::string>>& facets);

// Same, but with explicit labels and index-based facets (generators and
// the product use this).
ComplexPtr build_complex_indexed(std::string name,
                                 std::vector<std::string> labels,
                                 std::vector<Simplex> facets);

// Categorical product K x L: vertices are pairs, and a set of pairs is a
// simplex iff both coordinate projections are.  Its facets are exactly the
// boxes f x g over facets f of K, g of L.
ComplexPtr categorical_product(const ComplexPtr& K, const ComplexPtr& L);

// A subcomplex of a parent complex, generated by simplices of the parent.
// Keeps the embedding (local index <-> parent index) so maps into the
// parent compose cleanly.
class Subcomplex {
 public:
  // generators: simplices of the parent; non-maximal ones are absorbed.
  Subcomplex(ComplexPtr parent, std::vector<Simplex> generators,
             std::string name);

  static Subcomplex whole(ComplexPtr parent);
  static Subcomplex from_labels(ComplexPtr parent, std::string name,
                                const std::vector<std::vector<std::string>>& gens);
  // Subcomplex generated by a subset of the parent's facets.
  static Subcomplex from_facet_mask(ComplexPtr parent, const VertexSet& mask,
                                    std::string name);

  const ComplexPtr& parent() const { return parent_; }
  const ComplexPtr& complex() const { return local_; }  // dense reindexing
  const std::string& name() const { return local_->name(); }

  VertexId to_parent(VertexId local) const { return to_parent_[size_t(local)]; }
  VertexId to_local(VertexId parent) const { return to_local_[size_t(parent)]; }
  const VertexSet& parent_vertices() const { return support_; }

  // Does a vertex set of the *parent* lie in this subcomplex?
  bool contains(const Simplex& parent_set) const;
  bool is_whole() const;

 private:
  ComplexPtr parent_;
  ComplexPtr local_;
  std::vector<VertexId> to_parent_;
  std::vector<VertexId> to_local_;  // -1 when absent
  VertexSet support_;
  std::vector<Simplex> parent_facets_;  // antichain, parent indices
};

// Generators.  Vertex labels are v0, v1, ... unless noted.
ComplexPtr gen_simplex(int n);             // full n-simplex (n+1 vertices)
ComplexPtr gen_boundary(int n);            // boundary of the n-simplex
ComplexPtr gen_circle(int m);              // m-gon cycle, m >= 3
ComplexPtr gen_interval(int n);            // path with n edges
ComplexPtr gen_wedge(const std::vector<int>& cycle_sizes);  // cycles joined at w

}  // namespace tcplex
