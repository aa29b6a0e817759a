#pragma once

// Exact dense and sparse linear algebra over an arbitrary field scalar.
//
// Everything here is templated on the scalar; the library instantiates it
// with `Rational` (GMP rationals). No routine compares against a tolerance,
// so floating-point scalars are not supported.

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qtors {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntMatrix = Matrix<std::int64_t>;
using IntVector = Vector<std::int64_t>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}
template <class Backend, boost::multiprecision::expression_template_option ET>
inline bool is_zero(const boost::multiprecision::number<Backend, ET>& x) {
  return x.is_zero();
}

// Sparse vector: (index, value) pairs sorted by index, no explicit zeros.
template <typename Scalar>
using SparseVector = std::vector<std::pair<Index, Scalar>>;

template <typename Derived>
SparseVector<typename Derived::Scalar> sparse_row(const Eigen::MatrixBase<Derived>& m, Index r) {
  SparseVector<typename Derived::Scalar> out;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_zero(m(r, c))) out.emplace_back(c, m(r, c));
  return out;
}

template <typename Derived>
SparseVector<typename Derived::Scalar> sparse_column(const Eigen::MatrixBase<Derived>& m, Index c) {
  SparseVector<typename Derived::Scalar> out;
  for (Index r = 0; r < m.rows(); ++r)
    if (!is_zero(m(r, c))) out.emplace_back(r, m(r, c));
  return out;
}

template <typename Scalar>
Vector<Scalar> to_dense(const SparseVector<Scalar>& v, Index size) {
  Vector<Scalar> out = Vector<Scalar>::Zero(size);
  for (const auto& [i, x] : v) out(i) = x;
  return out;
}

/// Incremental Gauss-Jordan elimination on sparse rows.
///
/// The stored rows are kept fully reduced: every pivot column holds a single
/// 1 in its own row and zeros elsewhere. Pivots are chosen to limit fill, so
/// the pivot columns are not necessarily the leftmost ones; `rref` gives the
/// classical form.
template <typename Scalar>
class RowReducer {
 public:
  explicit RowReducer(Index cols)
      : cols_(cols), pivot_row_of_col_(cols, -1), rows_with_col_(cols), acc_(cols),
        mark_(cols, 0) {}

  Index cols() const { return cols_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  const std::vector<SparseVector<Scalar>>& rows() const { return rows_; }
  const std::vector<Index>& pivot_columns() const { return pivot_col_; }
  bool is_pivot_column(Index c) const { return pivot_row_of_col_[c] >= 0; }

  /// Reduces `row` modulo the current row space.
  SparseVector<Scalar> reduce(const SparseVector<Scalar>& row) const {
    std::vector<Index> touched;
    touched.reserve(row.size() * 2);
    for (const auto& [c, v] : row) {
      if (!mark_[c]) {
        mark_[c] = 1;
        touched.push_back(c);
        acc_[c] = v;
      } else {
        acc_[c] += v;
      }
    }
    const std::size_t initial = touched.size();
    for (std::size_t k = 0; k < initial; ++k) {
      const Index c = touched[k];
      const Index pr = pivot_row_of_col_[c];
      if (pr < 0 || is_zero(acc_[c])) continue;
      const Scalar coef = acc_[c];
      for (const auto& [j, w] : rows_[pr]) {
        if (!mark_[j]) {
          mark_[j] = 1;
          touched.push_back(j);
          acc_[j] = -(coef * w);
        } else {
          acc_[j] -= coef * w;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseVector<Scalar> out;
    for (Index c : touched) {
      if (!is_zero(acc_[c])) out.emplace_back(c, acc_[c]);
      acc_[c] = Scalar(0);
      mark_[c] = 0;
    }
    return out;
  }

  bool in_span(const SparseVector<Scalar>& row) const { return reduce(row).empty(); }

  /// Adds a row; returns true when it was independent of the current rows.
  bool add(const SparseVector<Scalar>& row) {
    SparseVector<Scalar> r = reduce(row);
    if (r.empty()) return false;

    // Pivot on the entry whose column meets the fewest stored rows.
    std::size_t best = 0;
    for (std::size_t k = 1; k < r.size(); ++k)
      if (rows_with_col_[r[k].first].size() < rows_with_col_[r[best].first].size()) best = k;
    const Index pc = r[best].first;
    const Scalar inv = Scalar(1) / r[best].second;
    for (auto& e : r) e.second *= inv;

    const Index idx = rank();
    const std::vector<Index> hits = rows_with_col_[pc];
    for (Index q : hits) eliminate(q, pc, r);

    for (const auto& e : r) insert_sorted(rows_with_col_[e.first], idx);
    rows_with_col_[pc] = {idx};
    pivot_row_of_col_[pc] = idx;
    pivot_col_.push_back(pc);
    rows_.push_back(std::move(r));
    return true;
  }

  /// Basis of {x : row . x = 0 for all stored rows}, one vector per free
  /// column in increasing order; each vector is 1 at its free column and 0 at
  /// every other free column.
  std::vector<SparseVector<Scalar>> kernel() const {
    std::vector<SparseVector<Scalar>> out;
    for (Index f = 0; f < cols_; ++f) {
      if (pivot_row_of_col_[f] >= 0) continue;
      SparseVector<Scalar> x;
      x.emplace_back(f, Scalar(1));
      for (Index q : rows_with_col_[f]) {
        const Scalar& v = entry(rows_[q], f);
        x.emplace_back(pivot_col_[q], -v);
      }
      std::sort(x.begin(), x.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(x));
    }
    return out;
  }

  std::vector<Index> free_columns() const {
    std::vector<Index> out;
    for (Index f = 0; f < cols_; ++f)
      if (pivot_row_of_col_[f] < 0) out.push_back(f);
    return out;
  }

 private:
  static void insert_sorted(std::vector<Index>& v, Index x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  }
  static void erase_sorted(std::vector<Index>& v, Index x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
  }
  static const Scalar& entry(const SparseVector<Scalar>& row, Index c) {
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, Index col) { return e.first < col; });
    return it->second;
  }

  // rows_[q] -= rows_[q][pc] * r, keeping the column index in sync.
  void eliminate(Index q, Index pc, const SparseVector<Scalar>& r) {
    SparseVector<Scalar>& row = rows_[q];
    const Scalar coef = entry(row, pc);
    SparseVector<Scalar> merged;
    merged.reserve(row.size() + r.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < r.size()) {
      if (j == r.size() || (i < row.size() && row[i].first < r[j].first)) {
        merged.push_back(std::move(row[i++]));
      } else if (i == row.size() || r[j].first < row[i].first) {
        merged.emplace_back(r[j].first, -(coef * r[j].second));
        insert_sorted(rows_with_col_[r[j].first], q);
        ++j;
      } else {
        Scalar v = row[i].second - coef * r[j].second;
        if (is_zero(v)) {
          erase_sorted(rows_with_col_[r[j].first], q);
        } else {
          merged.emplace_back(r[j].first, std::move(v));
        }
        ++i;
        ++j;
      }
    }
    row = std::move(merged);
  }

  Index cols_;
  std::vector<SparseVector<Scalar>> rows_;
  std::vector<Index> pivot_col_;
  std::vector<Index> pivot_row_of_col_;
  std::vector<std::vector<Index>> rows_with_col_;
  mutable std::vector<Scalar> acc_;
  mutable std::vector<char> mark_;
};

/// A subspace of Scalar^ambient with a basis in reduced form: restricted to
/// `coordinate_rows` the basis is the identity, so the coordinates of a
/// member vector are simply its entries at those rows.
template <typename Scalar>
struct Subspace {
  Index ambient = 0;
  std::vector<SparseVector<Scalar>> basis;
  std::vector<Index> coordinate_rows;

  Index dim() const { return static_cast<Index>(basis.size()); }

  Matrix<Scalar> basis_matrix() const {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(ambient, dim());
    for (Index k = 0; k < dim(); ++k)
      for (const auto& [i, x] : basis[k]) out(i, k) = x;
    return out;
  }

  template <typename Derived>
  Vector<Scalar> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    Vector<Scalar> c(dim());
    for (Index k = 0; k < dim(); ++k) c(k) = v(coordinate_rows[k]);
    return c;
  }
};

template <typename Scalar>
Subspace<Scalar> kernel_subspace(const RowReducer<Scalar>& reducer) {
  Subspace<Scalar> s;
  s.ambient = reducer.cols();
  s.basis = reducer.kernel();
  s.coordinate_rows = reducer.free_columns();
  return s;
}

template <typename Scalar>
Subspace<Scalar> span_subspace(const RowReducer<Scalar>& reducer) {
  Subspace<Scalar> s;
  s.ambient = reducer.cols();
  s.basis = reducer.rows();
  s.coordinate_rows = reducer.pivot_columns();
  return s;
}

/// Null space of m.
template <typename Derived>
Subspace<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& m) {
  RowReducer<typename Derived::Scalar> red(m.cols());
  for (Index r = 0; r < m.rows(); ++r) red.add(sparse_row(m, r));
  return kernel_subspace(red);
}

/// Column space of m.
template <typename Derived>
Subspace<typename Derived::Scalar> column_space(const Eigen::MatrixBase<Derived>& m) {
  RowReducer<typename Derived::Scalar> red(m.rows());
  for (Index c = 0; c < m.cols(); ++c) red.add(sparse_column(m, c));
  return span_subspace(red);
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  RowReducer<typename Derived::Scalar> red(m.cols());
  for (Index r = 0; r < m.rows(); ++r) red.add(sparse_row(m, r));
  return red.rank();
}

/// Projection onto the quotient ambient / W, together with a section.
///
/// The complement is spanned by the standard vectors outside W's coordinate
/// rows, so `projection * section` is the identity.
template <typename Scalar>
struct Quotient {
  Matrix<Scalar> projection;  // (ambient - dim W) x ambient
  Matrix<Scalar> section;     // ambient x (ambient - dim W)
};

template <typename Scalar>
Quotient<Scalar> quotient_by(const Subspace<Scalar>& w) {
  std::vector<char> is_coord(w.ambient, 0);
  for (Index r : w.coordinate_rows) is_coord[r] = 1;
  std::vector<Index> rest;
  for (Index r = 0; r < w.ambient; ++r)
    if (!is_coord[r]) rest.push_back(r);
  std::vector<Index> slot(w.ambient, -1);
  for (Index k = 0; k < static_cast<Index>(rest.size()); ++k) slot[rest[k]] = k;

  const Index q = static_cast<Index>(rest.size());
  Quotient<Scalar> out;
  out.projection = Matrix<Scalar>::Zero(q, w.ambient);
  out.section = Matrix<Scalar>::Zero(w.ambient, q);
  for (Index k = 0; k < q; ++k) {
    out.projection(k, rest[k]) = Scalar(1);
    out.section(rest[k], k) = Scalar(1);
  }
  for (Index i = 0; i < w.dim(); ++i)
    for (const auto& [r, x] : w.basis[i])
      if (slot[r] >= 0) out.projection(slot[r], w.coordinate_rows[i]) = -x;
  return out;
}

/// Reduced row echelon form with leftmost pivots.
template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = m;
  Matrix<Scalar>& a = out.reduced;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const Scalar f = a(i, col);
      for (Index j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

/// Null-space basis as the columns of a matrix (cols - rank columns).
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return null_space(m).basis_matrix();
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& m,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (b.cols() != 1 || b.rows() != m.rows())
    throw std::invalid_argument("solve: right-hand side has the wrong shape");
  Matrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
  for (Index i = 0; i < e.rank(); ++i) x(e.pivots[i]) = e.reduced(i, m.cols());
  return x;
}

template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug << m, Matrix<Scalar>::Identity(n, n);
  const auto e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::domain_error("inverse: matrix is singular");
  return e.reduced.rightCols(n);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Exact conversion of an integral rational matrix; throws if an entry is
/// not an integer that fits in 64 bits.
IntMatrix to_int_matrix(const RationalMatrix& m);
RationalMatrix to_rational_matrix(const IntMatrix& m);
IntVector to_int_vector(const RationalVector& v);
RationalVector to_rational_vector(const IntVector& v);

}  // namespace qtors
