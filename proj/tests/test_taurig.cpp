#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qtors/taurig.hpp"

using namespace qtors;
using oracle::dv;

namespace {

const Quiver kA1(1, {});
const Quiver kA2(2, {{0, 1}});
const Quiver kA3(3, {{0, 1}, {1, 2}});
const Quiver kA4(4, {{0, 1}, {1, 2}, {2, 3}});
const Quiver kD4(4, {{0, 3}, {1, 3}, {2, 3}});

// A2 catalog order: S2 = (0,1), S1 = (1,0), P1 = (1,1).
constexpr int S2 = 0, S1 = 1, P1 = 2;

Bitset bits(int n, std::initializer_list<int> members) {
  Bitset b(n);
  for (int m : members) b.set(m);
  return b;
}

}  // namespace

TEST_CASE("catalog of A2") {
  const Catalog cat(kA2);
  REQUIRE(cat.size() == 3);
  CHECK(cat.module(S2).dims() == dv({0, 1}));
  CHECK(cat.module(S1).dims() == dv({1, 0}));
  CHECK(cat.projective_index(0) == P1);
  CHECK(cat.projective_index(1) == S2);
}

TEST_CASE("compatibility") {
  const Catalog cat(kA2);
  using D = DecoratedSummand;
  CHECK(is_compatible(cat, D::module(S1), D::module(S1)));
  CHECK_FALSE(is_compatible(cat, D::module(S1), D::module(S2)));
  CHECK_FALSE(is_compatible(cat, D::shifted(0), D::module(S1)));
  CHECK(is_compatible(cat, D::shifted(0), D::module(S2)));
  CHECK(is_compatible(cat, D::shifted(0), D::shifted(1)));
}

TEST_CASE("support tau-tilting counts") {
  const std::vector<std::pair<Quiver, std::size_t>> cases{{kA1, 2}, {kA2, 5}, {kA3, 14}, {kA4, 42}, {kD4, 50}};
  for (const auto& [q, count] : cases) {
    const Catalog cat(q);
    const auto pairs = enumerate_stt(cat);
    CHECK(pairs.size() == count);
    CHECK(oracle::stt_count(cat) == count);
    CHECK(enumerate_stt(cat, SttStrategy::MutationWalk) == enumerate_stt(cat, SttStrategy::CliqueSearch));
  }
  const Catalog a1(kA1);
  const auto pairs = enumerate_stt(a1);
  CHECK(pairs[0] == SttPair{DecoratedSummand::module(0)});
  CHECK(pairs[1] == SttPair{DecoratedSummand::shifted(0)});
  CHECK_THROWS_AS(Catalog(Quiver(3, {{0, 1}, {1, 2}, {0, 2}})), QuiverError);
}

TEST_CASE("counts do not depend on orientation") {
  for (const Quiver& q : {Quiver(3, {{0, 1}, {1, 2}}), Quiver(3, {{1, 0}, {1, 2}}), Quiver(3, {{0, 1}, {2, 1}}),
                          Quiver(3, {{1, 0}, {2, 1}})})
    CHECK(enumerate_stt(Catalog(q)).size() == 14);
  CHECK(enumerate_stt(Catalog(Quiver(4, {{3, 0}, {1, 3}, {3, 2}}))).size() == 50);
}

TEST_CASE("mutations") {
  const Catalog a2(kA2);
  CHECK(mutations(all_projectives_pair(a2), a2).size() == 2);
  CHECK(mutations(all_shifted_pair(a2), a2).size() == 2);
  const Catalog a3(kA3);
  for (const SttPair& p : enumerate_stt(a3)) {
    const auto ns = mutations(p, a3);
    CHECK(ns.size() == 3);
    std::set<SttPair> distinct(ns.begin(), ns.end());
    CHECK(distinct.size() == 3);
    for (const SttPair& n : ns) {
      const auto back = mutations(n, a3);
      CHECK(std::find(back.begin(), back.end(), p) != back.end());
    }
  }
}

TEST_CASE("Fac classes") {
  const Catalog cat(kA2);
  CHECK(fac_class(all_projectives_pair(cat), cat).members.count() == 3);
  CHECK(fac_class(all_shifted_pair(cat), cat).members.none());
  SttPair p{DecoratedSummand::module(S1), DecoratedSummand::module(P1)};
  CHECK(fac_class(p, cat).members == bits(3, {S1, P1}));
  for (const Quiver& q : {kA3, kD4}) {
    const Catalog c(q);
    std::set<std::vector<bool>> seen;
    for (const SttPair& s : enumerate_stt(c)) {
      const Bitset m = fac_class(s, c).members;
      std::vector<bool> key;
      for (std::size_t i = 0; i < m.size(); ++i) key.push_back(m.test(i));
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("perpendicular categories") {
  const Catalog cat(kA2);
  TorsionClassModel all{bits(3, {0, 1, 2})}, none{bits(3, {})};
  CHECK(tc_perp(all, cat).none());
  CHECK(tc_perp(none, cat).count() == 3);
  CHECK(tc_perp(TorsionClassModel{bits(3, {S1, P1})}, cat) == bits(3, {S2}));
  CHECK(tc_left_perp(bits(3, {S2}), cat).members == bits(3, {S1, P1}));
}

TEST_CASE("meet and join of torsion classes") {
  const Catalog cat(kA2);
  const TorsionClassModel all{bits(3, {0, 1, 2})}, none{bits(3, {})};
  const TorsionClassModel fs1 = fac_generated({S1}, cat), fs2 = fac_generated({S2}, cat);
  CHECK(tc_meet({fs1, all}, cat) == fs1);
  CHECK(tc_join({none, fs1}, cat) == fs1);
  CHECK(tc_join({fs1, fs2}, cat) == all);
  CHECK(tc_meet({fs1, fs2}, cat) == none);
}

TEST_CASE("double perpendicular and closure of meets and joins") {
  for (const Quiver& q : {kA3, kD4}) {
    const Catalog cat(q);
    const TorsionLattice l = torsion_lattice(cat);
    for (const auto& t : l.classes) CHECK(tc_left_perp(tc_perp(t, cat), cat) == t);
    for (std::size_t i = 0; i < l.classes.size(); ++i)
      for (std::size_t j = 0; j < l.classes.size(); ++j) {
        const auto m = tc_meet({l.classes[i], l.classes[j]}, cat);
        const auto jn = tc_join({l.classes[i], l.classes[j]}, cat);
        CHECK(std::find(l.classes.begin(), l.classes.end(), m) != l.classes.end());
        CHECK(std::find(l.classes.begin(), l.classes.end(), jn) != l.classes.end());
      }
  }
}

TEST_CASE("torsion axioms") {
  const Catalog a3(kA3);
  const TorsionLattice l = torsion_lattice(a3);
  for (std::size_t i = 0; i < l.pairs.size(); ++i)
    CHECK(torsion_axiom_spotcheck(l.classes[i], module_summands(l.pairs[i]), a3).empty());
  const Catalog a2(kA2);
  const auto v = torsion_axiom_spotcheck(TorsionClassModel{bits(3, {P1})}, {P1}, a2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == AxiomViolation::Kind::Quotient);
  CHECK(v[0].second == S1);
  // {S1, S2} is closed under quotients but not under extensions.
  const auto e = torsion_axiom_spotcheck(TorsionClassModel{bits(3, {S1, S2})}, {S1, S2}, a2);
  REQUIRE(e.size() == 1);
  CHECK(e[0].kind == AxiomViolation::Kind::Extension);
}

TEST_CASE("torsion lattice of A2 is the pentagon") {
  const Catalog cat(kA2);
  const TorsionLattice l = torsion_lattice(cat);
  CHECK(l.poset.size() == 5);
  CHECK(l.poset.hasse_edges().size() == 5);
  CHECK(l.poset.label(0) == "0");
  CHECK(l.classes.front().members.none());
  CHECK(l.classes.back().members.count() == 3);
  const auto j = stt_to_json(all_shifted_pair(cat), cat);
  CHECK(j["shifted_projectives"] == nlohmann::json::array({1, 2}));
}
