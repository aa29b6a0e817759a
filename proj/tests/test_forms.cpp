#include <doctest.h>

#include "oracles.hpp"
#include "qtors/forms.hpp"

using namespace qtors;
using oracle::dv;

TEST_CASE("Cartan matrix counts paths") {
  const Quiver a2(2, {{0, 1}});
  const IntMatrix c = cartan_matrix(a2);
  CHECK(c(0, 0) == 1);
  CHECK(c(1, 0) == 1);
  CHECK(c(0, 1) == 0);
  const Quiver k3(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(cartan_matrix(k3)(1, 0) == 3);
  // 1 -> 2 -> 3 and 1 -> 3: two paths from 1 to 3.
  CHECK(cartan_matrix(Quiver(3, {{0, 1}, {1, 2}, {0, 2}}))(2, 0) == 2);
}

TEST_CASE("Coxeter matrices") {
  IntMatrix a2(2, 2);
  a2 << 0, -1, 1, -1;
  CHECK(coxeter_matrix(Quiver(2, {{0, 1}})) == a2);
  IntMatrix k2(2, 2);
  k2 << 3, -2, 2, -1;
  const FormsContext ctx(Quiver(2, {{0, 1}, {0, 1}}));
  CHECK(ctx.coxeter() == k2);
  IntMatrix k2inv(2, 2);
  k2inv << -1, 2, -2, 3;
  CHECK(ctx.coxeter_inverse() == k2inv);
}

TEST_CASE("Euler form: matrix and expansion agree") {
  for (const Quiver& q : {Quiver(3, {{0, 1}, {1, 2}}), Quiver(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}),
                          Quiver(4, {{0, 3}, {1, 3}, {2, 3}})}) {
    const FormsContext ctx(q);
    const int n = q.vertex_count();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        IntVector x = IntVector::Zero(n), y = IntVector::Zero(n);
        x(i) = 1 + j;
        y(j) = 2;
        y((i + 1) % n) += 1;
        CHECK(euler_form(ctx, x, y) == euler_form_expansion(q, x, y));
      }
  }
  const FormsContext a2(Quiver(2, {{0, 1}}));
  CHECK(euler_form(a2, dv({1, 0}), dv({0, 1})) == -1);
  CHECK(euler_form(a2, dv({0, 1}), dv({1, 0})) == 0);
  CHECK_THROWS_AS(euler_form(a2, dv({1}), dv({1, 0})), std::invalid_argument);
}

TEST_CASE("Coxeter action on dimension vectors") {
  const FormsContext a2(Quiver(2, {{0, 1}}));
  CHECK(tau_dimvec(a2, dv({1, 0})) == dv({0, 1}));
  const FormsContext k3(Quiver(2, {{0, 1}, {0, 1}, {0, 1}}));
  CHECK(tau_inverse_dimvec(k3, dv({0, 1})) == dv({3, 8}));
  CHECK(tau_dimvec(k3, tau_inverse_dimvec(k3, dv({8, 21}))) == dv({8, 21}));
}

TEST_CASE("closed form of the witness Euler form") {
  CHECK(witness_euler_closed_form(2, 1, 0) == -5);
  CHECK(witness_euler_closed_form(3, 1, 0) == -55);
  CHECK(witness_euler_closed_form(2, 1, 1) == -18);
  for (int a = 2; a <= 4; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const FormsContext ctx(three_vertex_quiver(a, b, c));
        const IntVector m = dv({1, a, 0});
        const IntVector n = tau_dimvec(ctx, m);
        CHECK(n == dv({a * a * b * b + 2 * a * b * c + c * c - 1, a * b * b + b * c, a * b + c}));
        CHECK(euler_form(ctx, n, m) == witness_euler_closed_form(a, b, c));
      }
}
