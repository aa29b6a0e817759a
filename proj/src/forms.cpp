#include "qtors/forms.hpp"

namespace qtors {

IntMatrix cartan_matrix(const Quiver& q) {
  const auto order = q.topological_order();
  const int n = q.vertex_count();
  // paths(j, i): number of paths j -> i, filled in topological order of i.
  IntMatrix c = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) c(j, j) = 1;
  for (int i : order)
    for (const Arrow& a : q.arrows())
      if (a.source == i)
        for (int j = 0; j < n; ++j) c(a.target, j) += c(i, j);
  return c;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  const RationalMatrix c = to_rational_matrix(cartan_matrix(q));
  const RationalMatrix phi = -(c.transpose() * inverse(c));
  return to_int_matrix(phi);
}

FormsContext::FormsContext(Quiver q) : quiver_(std::move(q)) {
  order_ = quiver_.topological_order();
  cartan_ = cartan_matrix(quiver_);
  const RationalMatrix c = to_rational_matrix(cartan_);
  const RationalMatrix cinv = inverse(c);
  const RationalMatrix phi = -(c.transpose() * cinv);
  cartan_inv_ = to_int_matrix(cinv);
  coxeter_ = to_int_matrix(phi);
  coxeter_inv_ = to_int_matrix(inverse(phi));
}

namespace {

void check_length(const Quiver& q, const IntVector& x) {
  if (x.size() != q.vertex_count())
    throw std::invalid_argument("dimension vector length does not match the vertex count");
}

}  // namespace

std::int64_t euler_form(const FormsContext& ctx, const IntVector& x, const IntVector& y) {
  check_length(ctx.quiver(), x);
  check_length(ctx.quiver(), y);
  return x.dot(ctx.cartan_inverse().transpose() * y);
}

std::int64_t euler_form_expansion(const Quiver& q, const IntVector& x, const IntVector& y) {
  check_length(q, x);
  check_length(q, y);
  std::int64_t s = x.dot(y);
  for (const Arrow& a : q.arrows()) s -= x(a.source) * y(a.target);
  return s;
}

IntVector tau_dimvec(const FormsContext& ctx, const IntVector& d) {
  check_length(ctx.quiver(), d);
  return ctx.coxeter() * d;
}

IntVector tau_inverse_dimvec(const FormsContext& ctx, const IntVector& d) {
  check_length(ctx.quiver(), d);
  return ctx.coxeter_inverse() * d;
}

std::int64_t witness_euler_closed_form(std::int64_t a, std::int64_t b, std::int64_t c) {
  return -1 - a * a * (a * a * b * b - 2 * b * b - 1) - a * b * c * (2 * a * a - 3) -
         c * c * (a * a - 1);
}

Quiver three_vertex_quiver(int a, int b, int c) {
  std::vector<Arrow> arrows;
  for (int k = 0; k < a; ++k) arrows.push_back({0, 1});
  for (int k = 0; k < b; ++k) arrows.push_back({1, 2});
  for (int k = 0; k < c; ++k) arrows.push_back({0, 2});
  return Quiver(3, std::move(arrows));
}

}  // namespace qtors
