#pragma once

// Cartan and Coxeter matrices of a path algebra kQ and the bilinear forms
// they carry. Matrices are indexed by vertex label; they are unitriangular
// after permuting to `topological_order`.

#include <cstdint>

#include "qtors/linalg.hpp"
#include "qtors/quiver.hpp"

namespace qtors {

using DimVector = IntVector;

class FormsContext {
 public:
  explicit FormsContext(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<int>& topological_order() const { return order_; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& cartan_inverse() const { return cartan_inv_; }
  const IntMatrix& coxeter() const { return coxeter_; }
  const IntMatrix& coxeter_inverse() const { return coxeter_inv_; }

 private:
  Quiver quiver_;
  std::vector<int> order_;
  IntMatrix cartan_, cartan_inv_, coxeter_, coxeter_inv_;
};

/// Entry (i, j) counts the directed paths from j to i (trivial paths included).
IntMatrix cartan_matrix(const Quiver& q);
/// Phi = -C^t C^{-1}, computed exactly over the rationals.
IntMatrix coxeter_matrix(const Quiver& q);

/// <x, y> = x^t (C^{-1})^t y.
std::int64_t euler_form(const FormsContext& ctx, const IntVector& x, const IntVector& y);
/// The same form through sum x_i y_i - sum over arrows s->t of x_s y_t.
std::int64_t euler_form_expansion(const Quiver& q, const IntVector& x, const IntVector& y);

/// Phi d; may have negative entries (d the dimension vector of a projective).
IntVector tau_dimvec(const FormsContext& ctx, const IntVector& d);
IntVector tau_inverse_dimvec(const FormsContext& ctx, const IntVector& d);

/// -1 - a^2(a^2 b^2 - 2 b^2 - 1) - abc(2a^2 - 3) - c^2(a^2 - 1): the Euler form
/// <dim tau M, dim M> on the three-vertex quiver with a arrows 1->2, b arrows
/// 2->3 and c arrows 1->3, where M is the projective of the full subquiver
/// on {1, 2} at vertex 1.
std::int64_t witness_euler_closed_form(std::int64_t a, std::int64_t b, std::int64_t c);

/// Quiver with a arrows 1->2, b arrows 2->3, c arrows 1->3 (in that order).
Quiver three_vertex_quiver(int a, int b, int c);

}  // namespace qtors
