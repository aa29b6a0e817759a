#include "qtors/rep.hpp"

#include <map>
#include <random>
#include <sstream>

namespace qtors {

Rep::Rep(Quiver quiver, IntVector dims, std::vector<RationalMatrix> maps)
    : quiver_(std::move(quiver)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != quiver_.vertex_count())
    throw std::invalid_argument("Rep: one dimension per vertex required");
  if ((dims_.array() < 0).any()) throw std::invalid_argument("Rep: negative dimension");
  if (maps_.size() != quiver_.arrow_count())
    throw std::invalid_argument("Rep: one matrix per arrow required");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const Arrow& ar = quiver_.arrows()[a];
    if (maps_[a].rows() != dims_(ar.target) || maps_[a].cols() != dims_(ar.source))
      throw std::invalid_argument("Rep: arrow matrix has the wrong shape");
  }
}

Rep Rep::zero(const Quiver& q) {
  std::vector<RationalMatrix> maps(q.arrow_count(), RationalMatrix(0, 0));
  return Rep(q, IntVector::Zero(q.vertex_count()), std::move(maps));
}

bool operator==(const Rep& a, const Rep& b) {
  return a.quiver_ == b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

namespace {

using Path = std::vector<std::size_t>;

std::vector<std::vector<Path>> paths_from(const Quiver& q, int v) {
  if (!q.is_acyclic()) throw QuiverError(QuiverError::Kind::Cyclic, "path algebra of a cyclic quiver");
  std::vector<std::vector<Path>> out(q.vertex_count());
  std::vector<std::pair<int, Path>> layer{{v, {}}};
  while (!layer.empty()) {
    std::vector<std::pair<int, Path>> next;
    for (auto& [end, p] : layer) {
      for (std::size_t a : q.outgoing(end)) {
        Path longer = p;
        longer.push_back(a);
        next.emplace_back(q.arrows()[a].target, std::move(longer));
      }
      out[end].push_back(std::move(p));
    }
    layer = std::move(next);
  }
  return out;
}

RationalVector apply_path(const Rep& y, const Path& p, RationalVector x) {
  for (std::size_t a : p) x = y.map(a) * x;
  return x;
}

void require_same_quiver(const Rep& x, const Rep& y) {
  if (!(x.quiver() == y.quiver())) throw std::invalid_argument("representations of different quivers");
}

std::vector<Index> block_offsets(const Rep& x, const Rep& y) {
  std::vector<Index> off(x.quiver().vertex_count() + 1, 0);
  for (int v = 0; v < x.quiver().vertex_count(); ++v) off[v + 1] = off[v] + x.dim(v) * y.dim(v);
  return off;
}

Morphism unvectorize(const SparseVector<Rational>& vec, const Rep& x, const Rep& y) {
  const auto off = block_offsets(x, y);
  Morphism f;
  for (int v = 0; v < x.quiver().vertex_count(); ++v) f.push_back(RationalMatrix::Zero(y.dim(v), x.dim(v)));
  int v = 0;
  for (const auto& [i, val] : vec) {
    while (i >= off[v + 1]) ++v;
    const Index local = i - off[v];
    f[v](local / x.dim(v), local % x.dim(v)) = val;
  }
  return f;
}

}  // namespace

Rep simple_rep(const Quiver& q, int v) {
  IntVector dims = IntVector::Zero(q.vertex_count());
  dims(v) = 1;
  std::vector<RationalMatrix> maps;
  for (const Arrow& a : q.arrows()) maps.push_back(RationalMatrix::Zero(dims(a.target), dims(a.source)));
  return Rep(q, dims, std::move(maps));
}

Rep projective_rep(const Quiver& q, int v) {
  const auto paths = paths_from(q, v);
  std::vector<std::map<Path, Index>> index(q.vertex_count());
  IntVector dims(q.vertex_count());
  for (int w = 0; w < q.vertex_count(); ++w) {
    dims(w) = static_cast<std::int64_t>(paths[w].size());
    for (std::size_t j = 0; j < paths[w].size(); ++j) index[w][paths[w][j]] = static_cast<Index>(j);
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    RationalMatrix m = RationalMatrix::Zero(dims(ar.target), dims(ar.source));
    for (std::size_t j = 0; j < paths[ar.source].size(); ++j) {
      Path longer = paths[ar.source][j];
      longer.push_back(a);
      m(index[ar.target].at(longer), static_cast<Index>(j)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(q, dims, std::move(maps));
}

Rep injective_rep(const Quiver& q, int v) { return dualize(projective_rep(opposite(q), v)); }

Rep standard_rep(const Quiver& q, StandardKind kind, int v) {
  if (v < 0 || v >= q.vertex_count()) throw std::out_of_range("vertex out of range");
  switch (kind) {
    case StandardKind::Simple: return simple_rep(q, v);
    case StandardKind::Projective: return projective_rep(q, v);
    case StandardKind::Injective: return injective_rep(q, v);
  }
  throw std::invalid_argument("unknown standard representation");
}

Rep direct_sum(const Rep& a, const Rep& b) {
  require_same_quiver(a, b);
  const Quiver& q = a.quiver();
  std::vector<RationalMatrix> maps;
  for (std::size_t k = 0; k < q.arrow_count(); ++k) {
    const RationalMatrix& ma = a.map(k);
    const RationalMatrix& mb = b.map(k);
    RationalMatrix m = RationalMatrix::Zero(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    m.topLeftCorner(ma.rows(), ma.cols()) = ma;
    m.bottomRightCorner(mb.rows(), mb.cols()) = mb;
    maps.push_back(std::move(m));
  }
  return Rep(q, a.dims() + b.dims(), std::move(maps));
}

Rep direct_sum(const Quiver& q, const std::vector<Rep>& summands) {
  Rep out = Rep::zero(q);
  for (const Rep& s : summands) out = direct_sum(out, s);
  return out;
}

Rep transport(const Rep& x, const Quiver& target, const std::vector<int>& vertex_map) {
  const Quiver& src = x.quiver();
  if (target.vertex_count() != src.vertex_count() || target.arrow_count() != src.arrow_count() ||
      static_cast<int>(vertex_map.size()) != src.vertex_count())
    throw std::invalid_argument("transport: quivers do not match");
  IntVector dims(target.vertex_count());
  for (int v = 0; v < src.vertex_count(); ++v) dims(vertex_map[v]) = x.dims()(v);
  std::vector<char> used(src.arrow_count(), 0);
  std::vector<RationalMatrix> maps;
  for (const Arrow& t : target.arrows()) {
    std::size_t pick = src.arrow_count();
    for (std::size_t a = 0; a < src.arrow_count(); ++a) {
      const Arrow& s = src.arrows()[a];
      if (!used[a] && vertex_map[s.source] == t.source && vertex_map[s.target] == t.target) {
        pick = a;
        break;
      }
    }
    if (pick == src.arrow_count()) throw std::invalid_argument("transport: arrow has no preimage");
    used[pick] = 1;
    maps.push_back(x.map(pick));
  }
  return Rep(target, dims, std::move(maps));
}

// ---------------------------------------------------------------------------
// Morphisms

bool is_morphism(const Rep& x, const Rep& y, const Morphism& f) {
  const Quiver& q = x.quiver();
  if (static_cast<int>(f.size()) != q.vertex_count()) return false;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (f[v].rows() != y.dim(v) || f[v].cols() != x.dim(v)) return false;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    if (y.map(a) * f[ar.source] != f[ar.target] * x.map(a)) return false;
  }
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  for (std::size_t v = 0; v < f.size(); ++v) out.push_back(g[v] * f[v]);
  return out;
}

Morphism identity_morphism(const Rep& x) {
  Morphism out;
  for (int v = 0; v < x.quiver().vertex_count(); ++v) out.push_back(RationalMatrix::Identity(x.dim(v), x.dim(v)));
  return out;
}

Morphism zero_morphism(const Rep& x, const Rep& y) {
  Morphism out;
  for (int v = 0; v < x.quiver().vertex_count(); ++v) out.push_back(RationalMatrix::Zero(y.dim(v), x.dim(v)));
  return out;
}

Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs) {
  if (basis.empty()) throw std::invalid_argument("linear_combination of an empty basis");
  Morphism out = basis[0];
  for (auto& m : out) m.setZero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (is_zero(coeffs[k])) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += coeffs[k] * basis[k][v];
  }
  return out;
}

SparseVector<Rational> vectorize(const Morphism& f) {
  SparseVector<Rational> out;
  Index off = 0;
  for (const RationalMatrix& m : f) {
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c)
        if (!is_zero(m(r, c))) out.emplace_back(off + r * m.cols() + c, m(r, c));
    off += m.size();
  }
  return out;
}

RationalVector HomSpace::coordinates(const Morphism& f) const {
  return space.coordinates(to_dense(vectorize(f), space.ambient));
}

Subspace<Rational> hom_solutions(const Rep& x, const Rep& y) {
  require_same_quiver(x, y);
  const Quiver& q = x.quiver();
  const auto off = block_offsets(x, y);
  RowReducer<Rational> red(off.back());

  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    const Index s = ar.source, t = ar.target;
    const RationalMatrix& ya = y.map(a);  // dim Y_t x dim Y_s
    const RationalMatrix& xa = x.map(a);  // dim X_t x dim X_s
    std::vector<SparseVector<Rational>> yrows, xcols;
    for (Index r = 0; r < ya.rows(); ++r) yrows.push_back(sparse_row(ya, r));
    for (Index c = 0; c < xa.cols(); ++c) xcols.push_back(sparse_column(xa, c));
    // (Y_a phi_s - phi_t X_a)(r, c) = 0
    for (Index r = 0; r < y.dim(t); ++r) {
      for (Index c = 0; c < x.dim(s); ++c) {
        SparseVector<Rational> eq;
        for (const auto& [k, val] : yrows[r]) eq.emplace_back(off[s] + k * x.dim(s) + c, val);
        for (const auto& [k, val] : xcols[c]) eq.emplace_back(off[t] + r * x.dim(t) + k, -val);
        if (eq.empty()) continue;
        std::sort(eq.begin(), eq.end(), [](const auto& l, const auto& rr) { return l.first < rr.first; });
        red.add(eq);
      }
    }
  }
  return kernel_subspace(red);
}

HomSpace hom_space(const Rep& x, const Rep& y) {
  HomSpace out;
  out.space = hom_solutions(x, y);
  for (const auto& v : out.space.basis) out.basis.push_back(unvectorize(v, x, y));
  return out;
}

std::vector<Morphism> hom_basis(const Rep& x, const Rep& y) { return hom_space(x, y).basis; }

Index hom_dim(const Rep& x, const Rep& y) { return hom_solutions(x, y).dim(); }

// ---------------------------------------------------------------------------
// Ext^1

std::int64_t ext1_dim(const Rep& x, const Rep& y) {
  const std::int64_t e = hom_dim(x, y) - euler_form_expansion(x.quiver(), x.dims(), y.dims());
  if (e < 0) throw std::logic_error("negative Ext^1 dimension");
  return e;
}

std::int64_t ext1_dim(const FormsContext& ctx, const Rep& x, const Rep& y) {
  const std::int64_t e = hom_dim(x, y) - euler_form(ctx, x.dims(), y.dims());
  if (e < 0) throw std::logic_error("negative Ext^1 dimension");
  return e;
}

Morphism from_projective_sum(const Quiver& q, const std::vector<int>& summand_vertices,
                             const std::vector<RationalVector>& images, const Rep& y) {
  std::map<int, std::vector<std::vector<Path>>> paths;
  for (int v : summand_vertices)
    if (!paths.count(v)) paths[v] = paths_from(q, v);
  Morphism f;
  for (int w = 0; w < q.vertex_count(); ++w) {
    Index cols = 0;
    for (int v : summand_vertices) cols += static_cast<Index>(paths[v][w].size());
    RationalMatrix m(y.dim(w), cols);
    Index c = 0;
    for (std::size_t k = 0; k < summand_vertices.size(); ++k)
      for (const Path& p : paths[summand_vertices[k]][w]) m.col(c++) = apply_path(y, p, images[k]);
    f.push_back(std::move(m));
  }
  return f;
}

Presentation projective_presentation(const Rep& z) {
  const Quiver& q = z.quiver();
  Presentation out;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (z.dim(v) == 0) continue;
    RowReducer<Rational> rad(z.dim(v));
    for (std::size_t a : q.incoming(v))
      for (Index c = 0; c < z.map(a).cols(); ++c) rad.add(sparse_column(z.map(a), c));
    const Quotient<Rational> top = quotient_by(span_subspace(rad));
    for (Index k = 0; k < top.section.cols(); ++k) {
      out.summand_vertices.push_back(v);
      out.generator_images.push_back(top.section.col(k));
    }
  }
  std::vector<Rep> summands;
  for (int v : out.summand_vertices) summands.push_back(projective_rep(q, v));
  out.projective = direct_sum(q, summands);
  out.epi = from_projective_sum(q, out.summand_vertices, out.generator_images, z);

  std::vector<Subspace<Rational>> ker;
  IntVector kdims(q.vertex_count());
  for (int w = 0; w < q.vertex_count(); ++w) {
    ker.push_back(null_space(out.epi[w]));
    kdims(w) = ker.back().dim();
    out.inclusion.push_back(ker.back().basis_matrix());
  }
  std::vector<RationalMatrix> kmaps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    const RationalMatrix img = out.projective.map(a) * out.inclusion[ar.source];
    RationalMatrix m(kdims(ar.target), kdims(ar.source));
    for (Index k = 0; k < m.rows(); ++k) m.row(k) = img.row(ker[ar.target].coordinate_rows[k]);
    kmaps.push_back(std::move(m));
  }
  out.kernel = Rep(q, kdims, std::move(kmaps));
  return out;
}

Ext1Classes::Ext1Classes(const Rep& x, const Rep& z)
    : presentation_(projective_presentation(z)), coboundaries_(0) {
  require_same_quiver(x, z);
  const Quiver& q = x.quiver();
  const Presentation& p = presentation_;
  const auto off = block_offsets(p.kernel, x);
  coboundaries_ = RowReducer<Rational>(off.back());

  // Restrictions of the maps P0 -> X sending one summand's top to a basis vector.
  const std::size_t m = p.summand_vertices.size();
  for (std::size_t k = 0; k < m; ++k) {
    const int v = p.summand_vertices[k];
    for (Index r = 0; r < x.dim(v); ++r) {
      std::vector<RationalVector> images;
      for (std::size_t j = 0; j < m; ++j) images.push_back(RationalVector::Zero(x.dim(p.summand_vertices[j])));
      images[k](r) = 1;
      const Morphism phi = from_projective_sum(q, p.summand_vertices, images, x);
      coboundaries_.add(vectorize(compose(phi, p.inclusion)));
    }
  }
  RowReducer<Rational> classes = coboundaries_;
  for (Morphism& c : hom_basis(p.kernel, x))
    if (classes.add(vectorize(c))) cocycles_.push_back(std::move(c));
}

bool Ext1Classes::is_coboundary(const Morphism& cocycle) const {
  return coboundaries_.in_span(vectorize(cocycle));
}

Ext1Classes ext1_via_presentation(const Rep& x, const Rep& z) { return Ext1Classes(x, z); }

Extension extension_realize(const Rep& x, const Rep& z, const Ext1Classes& ext, const Morphism& cocycle) {
  require_same_quiver(x, z);
  const Quiver& q = x.quiver();
  const Presentation& p = ext.presentation();
  if (!is_morphism(p.kernel, x, cocycle)) throw std::invalid_argument("cocycle is not a morphism K -> X");

  // E_v = (X_v + P0_v) / {(cocycle k, -incl k)}.
  std::vector<Quotient<Rational>> quot;
  IntVector edims(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) {
    RationalMatrix rel(x.dim(v) + p.projective.dim(v), p.kernel.dim(v));
    rel << cocycle[v], -p.inclusion[v];
    quot.push_back(quotient_by(column_space(rel)));
    edims(v) = quot.back().projection.rows();
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    const Index xs = x.dim(ar.source), xt = x.dim(ar.target);
    RationalMatrix block = RationalMatrix::Zero(xt + p.projective.dim(ar.target), xs + p.projective.dim(ar.source));
    block.topLeftCorner(xt, xs) = x.map(a);
    block.bottomRightCorner(p.projective.dim(ar.target), p.projective.dim(ar.source)) = p.projective.map(a);
    maps.push_back(quot[ar.target].projection * block * quot[ar.source].section);
  }
  Extension out;
  out.middle = Rep(q, edims, std::move(maps));
  for (int v = 0; v < q.vertex_count(); ++v) {
    out.inclusion.push_back(quot[v].projection.leftCols(x.dim(v)));
    RationalMatrix pr(z.dim(v), x.dim(v) + p.projective.dim(v));
    pr << RationalMatrix::Zero(z.dim(v), x.dim(v)), p.epi[v];
    out.projection.push_back(pr * quot[v].section);
  }
  out.split = ext.is_coboundary(cocycle);
  return out;
}

// ---------------------------------------------------------------------------
// Functors

Rep reflect_at_sink(const Rep& x, int v) {
  const Quiver& q = x.quiver();
  if (!q.is_sink(v)) throw std::invalid_argument("reflect_at_sink: vertex is not a sink");
  const auto in = q.incoming(v);
  Index total = 0;
  std::vector<Index> off;
  for (std::size_t a : in) {
    off.push_back(total);
    total += x.dim(q.arrows()[a].source);
  }
  RationalMatrix h(x.dim(v), total);
  for (std::size_t k = 0; k < in.size(); ++k) h.middleCols(off[k], x.map(in[k]).cols()) = x.map(in[k]);
  const RationalMatrix ker = null_space(h).basis_matrix();

  IntVector dims = x.dims();
  dims(v) = ker.cols();
  std::vector<RationalMatrix> maps = x.maps();
  for (std::size_t k = 0; k < in.size(); ++k)
    maps[in[k]] = ker.middleRows(off[k], x.dim(q.arrows()[in[k]].source));
  return Rep(q.reflected_at(v), dims, std::move(maps));
}

Rep reflect_at_source(const Rep& x, int v) {
  const Quiver& q = x.quiver();
  if (!q.is_source(v)) throw std::invalid_argument("reflect_at_source: vertex is not a source");
  const auto out = q.outgoing(v);
  Index total = 0;
  std::vector<Index> off;
  for (std::size_t a : out) {
    off.push_back(total);
    total += x.dim(q.arrows()[a].target);
  }
  RationalMatrix h(total, x.dim(v));
  for (std::size_t k = 0; k < out.size(); ++k) h.middleRows(off[k], x.map(out[k]).rows()) = x.map(out[k]);
  const Quotient<Rational> coker = quotient_by(column_space(h));

  IntVector dims = x.dims();
  dims(v) = coker.projection.rows();
  std::vector<RationalMatrix> maps = x.maps();
  for (std::size_t k = 0; k < out.size(); ++k)
    maps[out[k]] = coker.projection.middleCols(off[k], x.dim(q.arrows()[out[k]].target));
  return Rep(q.reflected_at(v), dims, std::move(maps));
}

Rep reflect(const Rep& x, int v) {
  if (x.quiver().is_sink(v)) return reflect_at_sink(x, v);
  if (x.quiver().is_source(v)) return reflect_at_source(x, v);
  throw std::invalid_argument("reflect: vertex is neither a sink nor a source");
}

Rep dualize(const Rep& x) {
  std::vector<RationalMatrix> maps;
  for (const RationalMatrix& m : x.maps()) maps.push_back(m.transpose());
  return Rep(opposite(x.quiver()), x.dims(), std::move(maps));
}

Rep ar_translate(const Rep& x) {
  auto order = x.quiver().topological_order();
  Rep y = x;
  for (auto it = order.rbegin(); it != order.rend(); ++it) y = reflect_at_sink(y, *it);
  if (!(y.quiver() == x.quiver())) throw std::logic_error("Coxeter functor changed the quiver");
  return y;
}

Rep ar_translate_inverse(const Rep& x) {
  Rep y = x;
  for (int v : x.quiver().topological_order()) y = reflect_at_source(y, v);
  if (!(y.quiver() == x.quiver())) throw std::logic_error("Coxeter functor changed the quiver");
  return y;
}

// ---------------------------------------------------------------------------
// Predicates

IntVector trace_dims(const std::vector<std::vector<Morphism>>& homs_into_x, const Rep& x) {
  const int n = x.quiver().vertex_count();
  IntVector out = IntVector::Zero(n);
  for (int v = 0; v < n; ++v) {
    if (x.dim(v) == 0) continue;
    RowReducer<Rational> red(x.dim(v));
    for (const auto& basis : homs_into_x) {
      for (const Morphism& f : basis) {
        for (Index c = 0; c < f[v].cols() && red.rank() < x.dim(v); ++c) red.add(sparse_column(f[v], c));
        if (red.rank() == x.dim(v)) break;
      }
      if (red.rank() == x.dim(v)) break;
    }
    out(v) = red.rank();
  }
  return out;
}

IntVector trace_dims(const std::vector<Rep>& generators, const Rep& x) {
  const int n = x.quiver().vertex_count();
  std::vector<RowReducer<Rational>> red;
  for (int v = 0; v < n; ++v) red.emplace_back(x.dim(v));
  auto full = [&] {
    for (int v = 0; v < n; ++v)
      if (red[v].rank() < x.dim(v)) return false;
    return true;
  };
  for (const Rep& g : generators) {
    if (full()) break;
    const auto off = block_offsets(g, x);
    const Subspace<Rational> homs = hom_solutions(g, x);
    for (const auto& f : homs.basis) {
      // Column c of f_v collects the entries at off[v] + r * dim g_v + c.
      std::map<std::pair<int, Index>, SparseVector<Rational>> columns;
      int v = 0;
      for (const auto& [i, val] : f) {
        while (i >= off[v + 1]) ++v;
        if (red[v].rank() == x.dim(v)) continue;
        const Index local = i - off[v];
        columns[{v, local % g.dim(v)}].emplace_back(local / g.dim(v), val);
      }
      for (const auto& [key, col] : columns)
        if (red[key.first].rank() < x.dim(key.first)) red[key.first].add(col);
      if (full()) break;
    }
  }
  IntVector out(n);
  for (int v = 0; v < n; ++v) out(v) = red[v].rank();
  return out;
}

bool gen_contains(const Rep& m, const Rep& x) { return gen_contains(std::vector<Rep>{m}, x); }

bool gen_contains(const std::vector<Rep>& generators, const Rep& x) {
  return trace_dims(generators, x) == x.dims();
}

namespace {

constexpr int kRandomTrials = 32;
constexpr int kRandomBound = 7;
constexpr int kGridBound = 2;
constexpr std::int64_t kGridLimit = 390625;  // 5^8 combinations

// Searches combinations of `basis` for one accepted by `ok`.
template <typename Pred>
bool search_combinations(const std::vector<Morphism>& basis, std::uint64_t seed, Pred ok) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-kRandomBound, kRandomBound);
  std::uniform_int_distribution<int> den(1, kRandomBound);
  std::vector<Rational> coeffs(basis.size());
  for (int t = 0; t < kRandomTrials; ++t) {
    for (auto& c : coeffs) c = Rational(num(rng)) / den(rng);
    if (ok(linear_combination(basis, coeffs))) return true;
  }
  std::vector<int> digits(basis.size(), -kGridBound);
  for (std::int64_t count = 0; count < kGridLimit; ++count) {
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] = digits[k];
    if (ok(linear_combination(basis, coeffs))) return true;
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == kGridBound) digits[k++] = -kGridBound;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return false;
}

bool surjective_everywhere(const Morphism& f) {
  for (const RationalMatrix& m : f)
    if (rank(m) != m.rows()) return false;
  return true;
}

}  // namespace

bool exists_surjection(const Rep& x, const Rep& y, std::uint64_t seed) {
  require_same_quiver(x, y);
  if ((x.dims().array() < y.dims().array()).any()) return false;
  if (y.is_zero()) return true;
  const auto basis = hom_basis(x, y);
  if (basis.empty()) return false;
  if (trace_dims({basis}, y) != y.dims()) return false;
  return search_combinations(basis, seed, surjective_everywhere);
}

bool is_isomorphic(const Rep& x, const Rep& y, std::uint64_t seed) {
  require_same_quiver(x, y);
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  const auto basis = hom_basis(x, y);
  if (basis.empty()) return false;
  return search_combinations(basis, seed, surjective_everywhere);
}

bool is_brick(const Rep& x) { return hom_dim(x, x) == 1; }
bool is_rigid(const Rep& x) { return ext1_dim(x, x) == 0; }
bool is_tau_rigid(const Rep& x) { return hom_dim(x, ar_translate(x)) == 0; }

IndecomposableCertificate certify_indecomposable(const Rep& x, bool from_knitting) {
  if (x.is_zero()) return IndecomposableCertificate::Uncertified;
  const HomSpace end = hom_space(x, x);
  const Index m = end.dim();
  if (m == 1) return IndecomposableCertificate::Brick;
  if (from_knitting) return IndecomposableCertificate::Knitting;

  // Left-multiplication matrices in the basis of End(X).
  std::vector<RationalMatrix> left(m, RationalMatrix(m, m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) left[i].col(j) = end.coordinates(compose(end.basis[i], end.basis[j]));
  // In characteristic 0 the radical is the kernel of the trace form.
  RationalMatrix trace_form(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) trace_form(i, j) = (left[i] * left[j]).trace();
  const Index radical = null_space(trace_form).dim();
  return m - radical == 1 ? IndecomposableCertificate::LocalEndomorphisms
                          : IndecomposableCertificate::Uncertified;
}

std::int64_t positive_root_count(const QuiverClass& c) {
  if (c.family != QuiverClass::Family::Dynkin) throw std::invalid_argument("not a Dynkin class");
  const std::int64_t n = c.rank;
  switch (c.series) {
    case 'A': return n * (n + 1) / 2;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  throw std::invalid_argument("unknown Dynkin series");
}

std::vector<Rep> enumerate_indecomposables(const Quiver& q) {
  const QuiverClass c = classify(q);
  if (c.family != QuiverClass::Family::Dynkin)
    throw QuiverError(QuiverError::Kind::Precondition, "indecomposables are enumerated only for Dynkin quivers");
  std::vector<Rep> out;
  for (int v = 0; v < q.vertex_count(); ++v)
    for (Rep x = projective_rep(q, v); !x.is_zero(); x = ar_translate_inverse(x)) {
      if (certify_indecomposable(x) != IndecomposableCertificate::Brick)
        throw std::logic_error("knitted module is not a brick");
      out.push_back(x);
    }
  std::sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return std::lexicographical_compare(a.dims().begin(), a.dims().end(), b.dims().begin(), b.dims().end());
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].dims() == out[i - 1].dims()) throw std::logic_error("two indecomposables share a dimension vector");
  if (static_cast<std::int64_t>(out.size()) != positive_root_count(c))
    throw std::logic_error("indecomposable count differs from the positive root count");
  return out;
}

}  // namespace qtors
