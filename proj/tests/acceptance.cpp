// One line per acceptance criterion: PASS/FAIL, what was measured, time and limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "qtors/families.hpp"
#include "qtors/forms.hpp"
#include "qtors/taurig.hpp"

using namespace qtors;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Quiver linear(int n) {
  std::vector<Arrow> a;
  for (int i = 0; i + 1 < n; ++i) a.push_back({i, i + 1});
  return Quiver(n, a);
}

const Quiver kD4(4, {{0, 3}, {1, 3}, {2, 3}});

std::vector<Quiver> a3_orientations() {
  return {Quiver(3, {{0, 1}, {1, 2}}), Quiver(3, {{1, 0}, {1, 2}}), Quiver(3, {{0, 1}, {2, 1}}),
          Quiver(3, {{1, 0}, {2, 1}})};
}

std::vector<Quiver> d4_orientations() {
  return {kD4, Quiver(4, {{3, 0}, {3, 1}, {3, 2}}), Quiver(4, {{0, 3}, {3, 1}, {2, 3}})};
}

Outcome stt_counts() {
  const std::vector<std::pair<std::string, Quiver>> cases{
      {"A1", Quiver(1, {})}, {"A2", linear(2)}, {"A3", linear(3)}, {"A4", linear(4)}, {"D4", kD4}};
  const std::size_t expected[] = {2, 5, 14, 42, 50};
  bool ok = true;
  std::string detail;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const Catalog cat(cases[k].second);
    const auto cliques = enumerate_stt(cat, SttStrategy::CliqueSearch);
    const auto walk = enumerate_stt(cat, SttStrategy::MutationWalk);
    ok = ok && cliques == walk && cliques.size() == expected[k];
    detail += cases[k].first + "=" + std::to_string(cliques.size()) + (cliques == walk ? "" : "(disagree)") + " ";
  }
  return {ok, detail + "both strategies"};
}

Outcome lattices() {
  std::vector<Quiver> qs{linear(2)};
  for (const Quiver& q : a3_orientations()) qs.push_back(q);
  qs.push_back(linear(4));
  qs.push_back(kD4);
  bool ok = true;
  std::string detail;
  for (const Quiver& q : qs) {
    const LatticeReport r = lattice_report(torsion_lattice(Catalog(q)).poset);
    ok = ok && r.lattice && r.complete;
    detail += std::to_string(torsion_lattice(Catalog(q)).poset.size()) + (r.complete ? "" : "!") + " ";
  }
  return {ok, "complete lattices of sizes " + detail};
}

Outcome euler_grid() {
  const EulerScan s = euler_scan(6, 6, 6);
  return {s.points == 210 && s.agree == s.points && s.negative == s.points,
          std::to_string(s.agree) + "/" + std::to_string(s.points) + " agree, " + std::to_string(s.negative) +
              " negative"};
}

Outcome witnesses() {
  const std::array<int, 3> params[] = {{2, 1, 0}, {2, 1, 1}, {2, 2, 0}, {3, 1, 0}};
  const WitnessCase cases[] = {WitnessCase::I,  WitnessCase::II, WitnessCase::III,
                               WitnessCase::IV, WitnessCase::V,  WitnessCase::VI};
  int passed = 0, total = 0;
  for (const auto& [a, b, c] : params)
    for (WitnessCase k : cases) {
      ++total;
      try {
        const WildWitness direct = build_wild_witness(k, a, b, c);
        const WildWitness detected = build_wild_witness(case_quiver(k, a, b, c));
        passed += verify_witness(direct).all_pass() && verify_witness(detected).all_pass();
      } catch (const std::exception&) {
      }
    }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " witnesses verified"};
}

Outcome tau_formula() {
  int checked = 0;
  bool ok = true;
  for (const Quiver& q : {linear(3), kD4}) {
    const FormsContext ctx(q);
    for (int v = 0; v < q.vertex_count(); ++v) ok = ok && ar_translate(projective_rep(q, v)).is_zero();
    for (const Rep& x : enumerate_indecomposables(q)) {
      bool projective = false;
      for (int v = 0; v < q.vertex_count(); ++v) projective = projective || x.dims() == projective_rep(q, v).dims();
      if (projective) continue;
      ok = ok && ar_translate(x).dims() == tau_dimvec(ctx, x.dims());
      ++checked;
    }
  }
  return {ok && checked == 3 + 8, std::to_string(checked) + " non-projectives, projectives killed"};
}

Outcome spotcheck() {
  std::string detail;
  bool ok = true;
  for (const Quiver& q : {linear(3), kD4}) {
    const Catalog cat(q);
    const TorsionLattice l = torsion_lattice(cat);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < l.pairs.size(); ++i)
      violations += torsion_axiom_spotcheck(l.classes[i], module_summands(l.pairs[i]), cat).size();
    ok = ok && violations == 0;
    detail += std::to_string(l.classes.size()) + " classes/" + std::to_string(violations) + " violations ";
  }
  return {ok, detail};
}

Outcome duality() {
  std::vector<Quiver> qs{linear(2), Quiver(2, {{1, 0}})};
  for (const Quiver& q : a3_orientations()) qs.push_back(q);
  for (const Quiver& q : d4_orientations()) qs.push_back(q);
  int ok = 0;
  for (const Quiver& q : qs)
    ok += is_dual_isomorphic(torsion_lattice(Catalog(q)).poset, torsion_lattice(Catalog(opposite(q))).poset);
  return {ok == static_cast<int>(qs.size()), std::to_string(ok) + "/" + std::to_string(qs.size()) + " orientations"};
}

Outcome interval_check() {
  const Catalog cat(linear(3));
  const TorsionLattice l = torsion_lattice(cat);
  Bitset away(cat.size());
  for (int i = 0; i < cat.size(); ++i)
    if (cat.module(i).dim(2) == 0) away.set(i);
  std::optional<std::size_t> hi;
  for (std::size_t k = 0; k < l.classes.size(); ++k)
    if (l.classes[k].members == away) hi = k;
  if (!hi) return {false, "class of modules away from vertex 3 not found"};
  const FinitePoset iv = interval(l.poset, *bottom_element(l.poset), *hi);
  const FinitePoset a2 = torsion_lattice(Catalog(linear(2))).poset;
  const bool ok = iv.size() == 5 && is_isomorphic(iv, a2);
  return {ok, "interval of size " + std::to_string(iv.size()) + (ok ? " isomorphic to ftors(A2)" : "")};
}

Outcome perps() {
  std::size_t classes = 0, pairs = 0;
  bool ok = true;
  for (const Quiver& q : {linear(2), linear(3), linear(4), kD4}) {
    const Catalog cat(q);
    const TorsionLattice l = torsion_lattice(cat);
    for (const auto& t : l.classes) {
      ok = ok && tc_left_perp(tc_perp(t, cat), cat) == t;
      ++classes;
    }
    for (std::size_t i = 0; i < l.classes.size(); ++i)
      for (std::size_t j = 0; j < l.classes.size(); ++j) {
        const auto m = meet(l.poset, {i, j});
        const auto jn = join(l.poset, {i, j});
        ok = ok && m && jn && l.classes[*m] == tc_meet({l.classes[i], l.classes[j]}, cat) &&
             l.classes[*jn] == tc_join({l.classes[i], l.classes[j]}, cat);
        ++pairs;
      }
  }
  return {ok, std::to_string(classes) + " classes, " + std::to_string(pairs) + " pairs"};
}

Outcome kronecker() {
  std::string detail;
  bool ok = true;
  for (int n : {2, 3}) {
    const Report r = kronecker_chain_check(kronecker_window(n, 6));
    ok = ok && r.all_pass();
    detail += "n=" + std::to_string(n) + ": " + std::to_string(r.checks.size() - r.failures()) + "/" +
              std::to_string(r.checks.size()) + " ";
  }
  return {ok, detail + "checks"};
}

Outcome tower() {
  const WildWitness w = build_wild_witness(WitnessCase::I, 2, 1, 0);
  const auto t = uniserial_tower(w, 4);
  const Report steps = tower_report(w, t);
  const Report evidence = nonff_evidence(w, t);
  const IntVector& top = t.back().module.dims();
  const bool ok = t.size() == 4 && steps.all_pass() && evidence.all_pass() && top(0) == 8 && top(1) == 8 && top(2) == 4;
  return {ok, "dims X_4 = (" + std::to_string(top(0)) + "," + std::to_string(top(1)) + "," + std::to_string(top(2)) +
                  "), " + std::to_string(evidence.checks.size()) + " levels outside Fac"};
}

Outcome decision() {
  std::vector<Quiver> yes{Quiver(1, {}), linear(2), linear(3), linear(4), linear(5), kD4,
                          Quiver(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}})};
  for (int n = 2; n <= 5; ++n) yes.push_back(Quiver(2, std::vector<Arrow>(n, Arrow{0, 1})));
  const std::vector<Quiver> no{Quiver(3, {{0, 1}, {1, 2}, {0, 2}}), Quiver(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                               Quiver(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}), three_vertex_quiver(2, 1, 0),
                               Quiver(4, {{0, 3}, {0, 3}, {0, 3}, {1, 3}, {2, 3}})};
  int right = 0;
  for (const Quiver& q : yes) right += decide_lattice_property(q).lattice;
  for (const Quiver& q : no) {
    const LatticeDecision d = decide_lattice_property(q);
    right += !d.lattice && d.witness.has_value();
  }
  const int total = static_cast<int>(yes.size() + no.size());
  return {right == total, std::to_string(right) + "/" + std::to_string(total) + " fixtures"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "support tau-tilting counts", 60, stt_counts},
      {2, "torsion classes form complete lattices", 60, lattices},
      {3, "Euler form closed form on the grid", 5, euler_grid},
      {4, "wild witnesses in all orientations", 30, witnesses},
      {5, "tau acts by the Coxeter matrix", 10, tau_formula},
      {6, "torsion axioms on every class", 300, spotcheck},
      {7, "duality with the opposite quiver", 30, duality},
      {8, "interval of classes away from a vertex", 10, interval_check},
      {9, "perpendicular categories, meets and joins", 60, perps},
      {10, "Kronecker window", 30, kronecker},
      {11, "extension tower", 30, tower},
      {12, "lattice decision on fixtures", 5, decision},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit;
    failures += !pass;
    std::printf("%s %2d %s: %s [%.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                c.limit);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
