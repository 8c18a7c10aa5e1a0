#include "tcplex/contiguity.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace tcplex {

namespace {

uint64_t hash_packed(const uint16_t* p, int n) {
  uint64_t h = 14695981039346656037ull;
  for (int i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

struct ComponentScan::Impl {
  ComplexPtr dom, cod;
  int nV = 0, nT = 0, nF = 0;
  std::vector<std::vector<int>> facets_of;  // dom facet indices per vertex
  std::vector<VertexSet> cod_fw;            // cod facet mask per cod vertex

  // State storage: packed assignments in one arena, parent links for chain
  // reconstruction, and an open-addressing index over the arena.
  std::vector<uint16_t> arena;
  std::vector<int32_t> parent;
  std::vector<uint32_t> slots;  // state index + 1; 0 = empty
  size_t slot_mask = 0;
  size_t count = 0;
  bool ran = false;

  const uint16_t* state(size_t i) const { return arena.data() + i * size_t(nV); }

  void grow_slots() {
    size_t cap = slots.empty() ? 1024 : slots.size() * 2;
    std::vector<uint32_t> next(cap, 0);
    size_t mask = cap - 1;
    for (uint32_t s : slots) {
      if (!s) continue;
      size_t at = hash_packed(state(s - 1), nV) & mask;
      while (next[at]) at = (at + 1) & mask;
      next[at] = s;
    }
    slots.swap(next);
    slot_mask = mask;
  }

  long find(const uint16_t* p) const {
    if (slots.empty()) return -1;
    size_t at = hash_packed(p, nV) & slot_mask;
    while (slots[at]) {
      uint32_t s = slots[at];
      if (std::memcmp(state(s - 1), p, size_t(nV) * 2) == 0) return long(s - 1);
      at = (at + 1) & slot_mask;
    }
    return -1;
  }

  // Returns the state index; fresh tells whether it was new.
  size_t insert(const uint16_t* p, int32_t par, bool* fresh) {
    if (slots.empty() || count * 10 >= slots.size() * 7) grow_slots();
    size_t at = hash_packed(p, nV) & slot_mask;
    while (slots[at]) {
      uint32_t s = slots[at];
      if (std::memcmp(state(s - 1), p, size_t(nV) * 2) == 0) {
        *fresh = false;
        return s - 1;
      }
      at = (at + 1) & slot_mask;
    }
    arena.insert(arena.end(), p, p + nV);
    parent.push_back(par);
    slots[at] = uint32_t(count + 1);
    *fresh = true;
    return count++;
  }

  // Facet cover masks for one state: M[f] = cod facets containing the
  // image of dom facet f.  All masks non-empty iff the map is simplicial.
  void cover_masks(const uint16_t* a, std::vector<VertexSet>& M) const {
    const auto& df = dom->facets();
    for (int f = 0; f < nF; ++f) {
      VertexSet m = cod->all_facets_mask();
      df[size_t(f)].for_each([&](int u) { m &= cod_fw[a[u]]; });
      M[size_t(f)] = m;
    }
  }
};

ComponentScan::ComponentScan(SimplicialMap start)
    : start_(std::move(start)), impl_(new Impl) {
  std::string why;
  if (!validate_map(start_, &why))
    throw std::logic_error("contiguity scan started from a non-simplicial map: " +
                           why);
  impl_->dom = start_.dom;
  impl_->cod = start_.cod;
  impl_->nV = impl_->dom->vertex_count();
  impl_->nT = impl_->cod->vertex_count();
  impl_->nF = impl_->dom->facet_count();
  impl_->facets_of.resize(size_t(impl_->nV));
  for (int v = 0; v < impl_->nV; ++v)
    impl_->dom->facets_with(v).for_each(
        [&](int f) { impl_->facets_of[size_t(v)].push_back(f); });
  impl_->cod_fw.reserve(size_t(impl_->nT));
  for (int t = 0; t < impl_->nT; ++t)
    impl_->cod_fw.push_back(impl_->cod->facets_with(t));
}

ComponentScan::~ComponentScan() = default;

int ComponentScan::state_width() const { return impl_->nV; }

SimplicialMap ComponentScan::unpack(const uint16_t* packed) const {
  SimplicialMap m{impl_->dom, impl_->cod, {}};
  m.at.assign(packed, packed + impl_->nV);
  return m;
}

bool ComponentScan::contains(const uint16_t* packed) const {
  return impl_->find(packed) >= 0;
}

ContiguityChain ComponentScan::chain_to(const uint16_t* packed) const {
  long at = impl_->find(packed);
  if (at < 0) throw std::logic_error("chain_to: state was never discovered");
  ContiguityChain chain;
  for (long i = at; i >= 0; i = impl_->parent[size_t(i)])
    chain.maps.push_back(unpack(impl_->state(size_t(i))));
  std::reverse(chain.maps.begin(), chain.maps.end());
  return chain;
}

ReachOutcome ComponentScan::run(
    const std::function<bool(const uint16_t*)>& stop, uint64_t budget,
    int jobs) {
  auto& im = *impl_;
  if (im.ran) throw std::logic_error("ComponentScan::run called twice");
  im.ran = true;
  if (budget == 0) return {SearchStatus::Exhausted, {}, 0};

  const int nV = im.nV, nT = im.nT;
  std::vector<uint16_t> packed(static_cast<size_t>(nV));
  for (int v = 0; v < nV; ++v) packed[size_t(v)] = uint16_t(start_.at[size_t(v)]);
  bool fresh = false;
  im.insert(packed.data(), -1, &fresh);
  if (stop && stop(packed.data()))
    return {SearchStatus::Found, chain_to(packed.data()), 1};

  // One-vertex moves from state a, in deterministic (v, t) order.
  struct Move {
    uint32_t from;
    uint16_t v, t;
  };
  auto expand = [&](size_t idx, std::vector<VertexSet>& M,
                    std::vector<Move>& out) {
    const uint16_t* a = im.state(idx);
    im.cover_masks(a, M);
    for (int v = 0; v < nV; ++v) {
      const auto& fv = im.facets_of[size_t(v)];
      for (int t = 0; t < nT; ++t) {
        if (t == a[v]) continue;
        bool ok = true;
        for (int f : fv)
          if (!M[size_t(f)].intersects(im.cod_fw[size_t(t)])) {
            ok = false;
            break;
          }
        if (ok) out.push_back({uint32_t(idx), uint16_t(v), uint16_t(t)});
      }
    }
  };

  std::vector<VertexSet> M(size_t(im.nF));
  std::vector<Move> moves;
  std::vector<uint16_t> tmp(static_cast<size_t>(nV));

  size_t lo = 0;
  while (lo < im.count) {
    size_t hi = im.count;

    moves.clear();
    if (jobs <= 1 || hi - lo < 64) {
      for (size_t i = lo; i < hi; ++i) expand(i, M, moves);
    } else {
      // Level-synchronous parallel expansion.  Chunks are merged in
      // frontier order, so the discovery order matches the serial run.
      size_t n = hi - lo;
      int workers = std::min<int>(jobs, int(n));
      std::vector<std::vector<Move>> chunk(static_cast<size_t>(workers));
      std::vector<std::thread> pool;
      pool.reserve(size_t(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          std::vector<VertexSet> Mw(size_t(im.nF));
          size_t a = lo + n * size_t(w) / size_t(workers);
          size_t b = lo + n * size_t(w + 1) / size_t(workers);
          for (size_t i = a; i < b; ++i) expand(i, Mw, chunk[size_t(w)]);
        });
      }
      for (auto& t : pool) t.join();
      for (auto& c : chunk)
        moves.insert(moves.end(), c.begin(), c.end());
    }

    for (const Move& mv : moves) {
      std::memcpy(tmp.data(), im.state(mv.from), size_t(nV) * 2);
      tmp[mv.v] = mv.t;
      if (im.count >= budget) {
        long seen = im.find(tmp.data());
        if (seen >= 0) continue;  // duplicate, costs nothing
        return {SearchStatus::Exhausted, {}, im.count};
      }
      im.insert(tmp.data(), int32_t(mv.from), &fresh);
      if (fresh && stop && stop(tmp.data()))
        return {SearchStatus::Found, chain_to(tmp.data()), im.count};
    }
    lo = hi;
  }
  return {SearchStatus::NoPath, {}, im.count};
}

ReachOutcome same_contiguity_class(const SimplicialMap& f,
                                   const SimplicialMap& g, uint64_t budget,
                                   int jobs) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw InputError("contiguity class query needs maps with one domain and codomain");
  std::string why;
  if (!validate_map(f, &why)) throw InputError("first map: " + why);
  if (!validate_map(g, &why)) throw InputError("second map: " + why);
  if (same_map(f, g)) return {SearchStatus::Found, ContiguityChain{{f}}, 1};

  const int nV = f.dom->vertex_count();
  std::vector<uint16_t> goal(static_cast<size_t>(nV));
  for (int v = 0; v < nV; ++v) goal[size_t(v)] = uint16_t(g.at[size_t(v)]);

  ComponentScan scan(f);
  auto out = scan.run(
      [&](const uint16_t* p) {
        return std::memcmp(p, goal.data(), size_t(nV) * 2) == 0;
      },
      budget, jobs);
  if (out.status == SearchStatus::Found) compress_chain(out.chain);
  return out;
}

}  // namespace tcplex
