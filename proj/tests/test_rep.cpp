#include <doctest.h>

#include "oracles.hpp"
#include "qtors/forms.hpp"
#include "qtors/io.hpp"

using namespace qtors;
using oracle::dv;

namespace {

const Quiver kA2(2, {{0, 1}});
const Quiver kA3(3, {{0, 1}, {1, 2}});
const Quiver kD4(4, {{0, 3}, {1, 3}, {2, 3}});

Rep regular_kronecker(const Rational& lambda) {
  const Quiver k(2, {{0, 1}, {0, 1}});
  RationalMatrix m1(1, 1), m2(1, 1);
  m1 << 1;
  m2 << lambda;
  return Rep(k, dv({1, 1}), {m1, m2});
}

}  // namespace

TEST_CASE("standard representations") {
  CHECK(projective_rep(kA3, 0).dims() == dv({1, 1, 1}));
  CHECK(projective_rep(kA3, 2).dims() == dv({0, 0, 1}));
  CHECK(injective_rep(kA3, 2).dims() == dv({1, 1, 1}));
  CHECK(injective_rep(kA3, 0).dims() == dv({1, 0, 0}));
  const Quiver k3(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(projective_rep(k3, 0).dims() == dv({1, 3}));
  CHECK(dualize(projective_rep(opposite(kD4), 3)) == injective_rep(kD4, 3));
  CHECK_THROWS(Rep(kA2, dv({1, 1}), {}));
}

TEST_CASE("Hom dimensions against the dense oracle") {
  const Rep s1 = simple_rep(kA2, 0), s2 = simple_rep(kA2, 1), p1 = projective_rep(kA2, 0);
  CHECK(hom_dim(s1, p1) == 0);
  CHECK(hom_dim(s2, p1) == 1);
  CHECK(hom_dim(p1, s1) == 1);
  const Quiver k3(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(hom_dim(projective_rep(k3, 0), simple_rep(k3, 1)) == 0);

  std::mt19937 rng(5);
  const Quiver wild(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
  for (int t = 0; t < 30; ++t) {
    const Quiver& q = t % 2 ? wild : kD4;
    IntVector dx(q.vertex_count()), dy(q.vertex_count());
    for (Index i = 0; i < dx.size(); ++i) {
      dx(i) = (t + i) % 3;
      dy(i) = (2 * t + i) % 3;
    }
    const Rep x = oracle::random_rep(q, dx, rng, t % 3 == 0 ? 0 : 1);
    const Rep y = oracle::random_rep(q, dy, rng);
    CHECK(hom_dim(x, y) == oracle::hom_dim(x, y));
    for (const Morphism& f : hom_basis(x, y)) CHECK(is_morphism(x, y, f));
  }
}

TEST_CASE("Ext by the Euler form and by presentations") {
  const Rep s1 = simple_rep(kA2, 0), s2 = simple_rep(kA2, 1);
  CHECK(ext1_dim(s1, s2) == 1);
  CHECK(ext1_dim(s2, s1) == 0);
  const Ext1Classes e(s2, s1);
  CHECK(e.dim() == 1);
  for (const Quiver& q : {kA3, kD4}) {
    const FormsContext ctx(q);
    const auto ind = enumerate_indecomposables(q);
    for (const Rep& x : ind)
      for (const Rep& z : ind) CHECK(ext1_dim(ctx, z, x) == Ext1Classes(x, z).dim());
  }
}

TEST_CASE("projective presentations") {
  const auto pres = projective_presentation(projective_rep(kA3, 1));
  CHECK(pres.kernel.is_zero());
  const auto s1 = projective_presentation(simple_rep(kA2, 0));
  CHECK(s1.projective.dims() == dv({1, 1}));
  CHECK(s1.kernel.dims() == dv({0, 1}));
  const auto reg = projective_presentation(regular_kronecker(3));
  CHECK(reg.projective.dims() == dv({1, 2}));
  CHECK(reg.kernel.dims() == dv({0, 1}));
  CHECK(is_morphism(reg.kernel, reg.projective, reg.inclusion));
  CHECK(is_morphism(reg.projective, regular_kronecker(3), reg.epi));
}

TEST_CASE("realized extensions") {
  const Rep s1 = simple_rep(kA2, 0), s2 = simple_rep(kA2, 1);
  const Ext1Classes e(s2, s1);
  const Extension x = extension_realize(s2, s1, e, e.cocycles()[0]);
  CHECK_FALSE(x.split);
  CHECK(is_isomorphic(x.middle, projective_rep(kA2, 0)));
  const Extension z = extension_realize(s2, s1, e, zero_morphism(e.presentation().kernel, s2));
  CHECK(z.split);
  CHECK(is_isomorphic(z.middle, direct_sum(s2, s1)));
  CHECK_FALSE(is_isomorphic(direct_sum(s1, s2), projective_rep(kA2, 0)));
  CHECK(is_morphism(s2, x.middle, x.inclusion));
  CHECK(is_morphism(x.middle, s1, x.projection));
  CHECK(is_zero_matrix(x.projection[1] * x.inclusion[1]));
}

TEST_CASE("reflections and the Coxeter functors") {
  const Rep p1 = projective_rep(kA2, 0);
  const Rep r = reflect_at_sink(p1, 1);
  CHECK(r.quiver() == kA2.reflected_at(1));
  CHECK(r.dims() == dv({1, 0}));
  CHECK(reflect_at_sink(simple_rep(kA2, 1), 1).is_zero());
  CHECK_THROWS(reflect_at_sink(p1, 0));
  CHECK(ar_translate(simple_rep(kA2, 0)).dims() == dv({0, 1}));
  for (const Quiver& q : {kA3, kD4}) {
    const FormsContext ctx(q);
    for (const Rep& x : enumerate_indecomposables(q)) {
      const Rep t = ar_translate(x);
      bool projective = false;
      for (int v = 0; v < q.vertex_count(); ++v) projective = projective || x.dims() == projective_rep(q, v).dims();
      if (projective) {
        CHECK(t.is_zero());
        continue;
      }
      CHECK(t.dims() == tau_dimvec(ctx, x.dims()));
      CHECK(is_isomorphic(ar_translate_inverse(t), x));
    }
  }
}

TEST_CASE("duality") {
  const auto ind = enumerate_indecomposables(kD4);
  for (const Rep& x : ind) {
    CHECK(dualize(dualize(x)) == x);
    for (const Rep& y : ind) CHECK(hom_dim(x, y) == hom_dim(dualize(y), dualize(x)));
  }
}

TEST_CASE("generation and surjections") {
  const Rep s1 = simple_rep(kA2, 0), s2 = simple_rep(kA2, 1), p1 = projective_rep(kA2, 0);
  CHECK(gen_contains(p1, s1));
  CHECK_FALSE(gen_contains(s2, s1));
  CHECK(gen_contains(p1, direct_sum(p1, p1)));
  CHECK(exists_surjection(p1, s1));
  CHECK_FALSE(exists_surjection(s1, p1));
  const Quiver k3(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK_FALSE(exists_surjection(projective_rep(k3, 0), simple_rep(k3, 1)));
  // Needs two copies: not a quotient of one P_1, but in Fac P_1.
  const Quiver k2(2, {{0, 1}, {0, 1}});
  const Rep p = projective_rep(k2, 0);
  const Rep two = direct_sum(regular_kronecker(1), regular_kronecker(2));
  CHECK(gen_contains(p, two));
  CHECK_FALSE(exists_surjection(p, two));
  CHECK(exists_surjection(direct_sum(p, p), two, 9));
}

TEST_CASE("bricks, rigidity, certificates") {
  const Rep reg = regular_kronecker(Rational(1, 2));
  CHECK(is_brick(reg));
  CHECK_FALSE(is_rigid(reg));
  for (const Quiver& q : {kA3, kD4})
    for (const Rep& x : enumerate_indecomposables(q)) {
      CHECK(is_rigid(x));
      CHECK(is_tau_rigid(x));
      CHECK(certify_indecomposable(x) == IndecomposableCertificate::Brick);
    }
  const Quiver t(2, {{0, 1}, {0, 1}});
  const Rep p1 = projective_rep(t, 0);
  CHECK(certify_indecomposable(direct_sum(p1, p1)) == IndecomposableCertificate::Uncertified);
  CHECK(certify_indecomposable(direct_sum(p1, p1), true) == IndecomposableCertificate::Knitting);
  // Regular Kronecker module with a nilpotent Jordan block: End = k[x]/x^2.
  RationalMatrix id = RationalMatrix::Identity(2, 2), nil = RationalMatrix::Zero(2, 2);
  nil(0, 1) = 1;
  const Rep jordan(t, dv({2, 2}), {id, nil});
  CHECK(hom_dim(jordan, jordan) == 2);
  CHECK(certify_indecomposable(jordan) == IndecomposableCertificate::LocalEndomorphisms);
  const Quiver d(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(certify_indecomposable(direct_sum(projective_rep(d, 0), projective_rep(d, 2))) ==
        IndecomposableCertificate::Uncertified);
}

TEST_CASE("indecomposable enumeration") {
  CHECK(enumerate_indecomposables(kA2).size() == 3);
  CHECK(enumerate_indecomposables(kA3).size() == 6);
  CHECK(enumerate_indecomposables(kD4).size() == 12);
  const Quiver e6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  CHECK(enumerate_indecomposables(e6).size() == 36);
  CHECK_THROWS_AS(enumerate_indecomposables(Quiver(2, {{0, 1}, {0, 1}})), QuiverError);
  const auto a2 = enumerate_indecomposables(kA2);
  CHECK(a2[0].dims() == dv({0, 1}));
  CHECK(a2[1].dims() == dv({1, 0}));
  CHECK(a2[2].dims() == dv({1, 1}));
}

TEST_CASE("transport along a relabelling") {
  const Quiver q(3, {{0, 1}, {1, 2}});
  const Quiver r(3, {{2, 1}, {1, 0}});
  const Rep p = projective_rep(q, 0);
  const Rep t = transport(p, r, {2, 1, 0});
  CHECK(t.quiver() == r);
  CHECK(is_isomorphic(t, projective_rep(r, 2)));
}

TEST_CASE("JSON round trip") {
  const Rep x = regular_kronecker(Rational(-3, 7));
  const auto j = rep_to_json(x);
  CHECK(j["arrows"][1][0][0] == "-3/7");
  CHECK(rep_from_json(x.quiver(), j) == x);
  CHECK(quiver_from_json(quiver_to_json(kD4)) == kD4);
  CHECK_THROWS(rep_from_json(kA2, nlohmann::json::parse(R"({"dims":[1,1],"arrows":[[["x"]]]})")));
}
