#pragma once

// Slow reference computations used to cross-check the library.

#include <random>

#include "qtors/rep.hpp"
#include "qtors/taurig.hpp"

namespace oracle {

using namespace qtors;

/// dim Hom(X, Y) from the dense intertwining system and its reduced echelon form.
inline Index hom_dim(const Rep& x, const Rep& y) {
  const Quiver& q = x.quiver();
  std::vector<Index> off{0};
  for (int v = 0; v < q.vertex_count(); ++v) off.push_back(off.back() + x.dim(v) * y.dim(v));
  Index eqs = 0;
  for (const Arrow& a : q.arrows()) eqs += y.dim(a.target) * x.dim(a.source);
  RationalMatrix sys = RationalMatrix::Zero(std::max<Index>(eqs, 1), off.back());
  Index row = 0;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const Arrow& a = q.arrows()[k];
    for (Index r = 0; r < y.dim(a.target); ++r)
      for (Index c = 0; c < x.dim(a.source); ++c, ++row) {
        for (Index j = 0; j < y.dim(a.source); ++j) sys(row, off[a.source] + j * x.dim(a.source) + c) += y.map(k)(r, j);
        for (Index j = 0; j < x.dim(a.target); ++j) sys(row, off[a.target] + r * x.dim(a.target) + j) -= x.map(k)(j, c);
      }
  }
  return off.back() - rref(sys).rank();
}

inline Rep random_rep(const Quiver& q, const IntVector& dims, std::mt19937& rng, int bound = 2) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<RationalMatrix> maps;
  for (const Arrow& a : q.arrows()) {
    RationalMatrix m(dims(a.target), dims(a.source));
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = d(rng);
    maps.push_back(m);
  }
  return Rep(q, dims, maps);
}

/// Support tau-tilting pairs as n-subsets of pairwise compatible items.
inline std::size_t stt_count(const Catalog& cat) {
  const auto items = decorated_items(cat);
  const int k = static_cast<int>(items.size()), n = cat.vertex_count();
  std::size_t count = 0;
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      ++count;
      return;
    }
    for (int i = start; i < k; ++i) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) ok = is_compatible(cat, items[pick[j]], items[i]);
      if (!ok) continue;
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return count;
}

inline IntVector dv(std::initializer_list<std::int64_t> xs) {
  IntVector d(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) d(i++) = x;
  return d;
}

}  // namespace oracle
