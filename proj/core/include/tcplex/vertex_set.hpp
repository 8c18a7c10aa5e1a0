#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tcplex {

// Fixed-capacity bit set over dense indices.  Used both for vertex sets
// (simplices) and for facet-index masks, so one type covers the whole
// search core.  Capacity is a hard ceiling checked at build time; the
// complexes this library targets stay far below it.
class VertexSet {
 public:
  static constexpr int kCapacity = 512;
  static constexpr int kWords = kCapacity / 64;

  constexpr VertexSet() : w_{} {}

  static VertexSet single(int i) {
    VertexSet s;
    s.set(i);
    return s;
  }

  static VertexSet range(int n) {  // {0, 1, ..., n-1}
    VertexSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int n = 0;
    for (auto w : w_) n += std::popcount(w);
    return n;
  }

  // Lowest set index, or -1 when empty.
  int lowest() const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k]) return 64 * k + std::countr_zero(w_[k]);
    return -1;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r;
    for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r;
    for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] &= o.w_[k];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int k = 0; k < kWords; ++k) w_[k] |= o.w_[k];
    return *this;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r;
    for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }

  bool intersects(const VertexSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const = default;

  // Total order on raw words (high word first); deterministic but not the
  // human lexicographic order on index sequences -- see lex_less for that.
  bool operator<(const VertexSet& o) const {
    for (int k = kWords - 1; k >= 0; --k)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  // Lexicographic order on the ascending index sequences, used as the
  // canonical facet order so output and certificates are reproducible.
  static bool lex_less(const VertexSet& a, const VertexSet& b) {
    VertexSet x = a, y = b;
    for (;;) {
      int i = x.lowest(), j = y.lowest();
      // A proper prefix (i == -1, j != -1) comes first.
      if (i != j) return (j == -1) ? false : (i == -1 || i < j);
      if (i == -1) return false;  // equal
      x.reset(i);
      y.reset(j);
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int k = 0; k < kWords; ++k) {
      uint64_t w = w_[k];
      while (w) {
        fn(64 * k + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> v;
    v.reserve(size_t(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return size_t(h);
  }

 private:
  std::array<uint64_t, kWords> w_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace tcplex
