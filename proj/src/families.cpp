#include "qtors/families.hpp"

#include <algorithm>

#include "qtors/forms.hpp"
#include "qtors/io.hpp"

namespace qtors {

using nlohmann::json;

Quiver kronecker_quiver(int n) { return Quiver(2, std::vector<Arrow>(static_cast<std::size_t>(n), Arrow{0, 1})); }

KroneckerWindow kronecker_window(int n, int depth) {
  if (n < 2) throw std::invalid_argument("the Kronecker quiver needs at least 2 arrows");
  if (depth < 2) throw std::invalid_argument("window depth must be at least 2");
  KroneckerWindow w;
  w.n = n;
  w.depth = depth;
  w.quiver = kronecker_quiver(n);
  w.a = {projective_rep(w.quiver, 1), projective_rep(w.quiver, 0)};
  w.b = {injective_rep(w.quiver, 0), injective_rep(w.quiver, 1)};
  for (int i = 2; i < depth; ++i) {
    w.a.push_back(ar_translate_inverse(w.a[i - 2]));
    w.b.push_back(ar_translate(w.b[i - 2]));
  }
  return w;
}

namespace {

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

json members_json(const std::vector<bool>& in, const std::vector<std::string>& names) {
  json out = json::array();
  for (std::size_t k = 0; k < in.size(); ++k)
    if (in[k]) out.push_back(names[k]);
  return out;
}

bool subset(const std::vector<bool>& x, const std::vector<bool>& y) {
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] && !y[k]) return false;
  return true;
}

}  // namespace

Report kronecker_chain_check(const KroneckerWindow& w) {
  Report r;
  r.title = "Kronecker n=" + std::to_string(w.n) + " depth " + std::to_string(w.depth);
  const FormsContext ctx(w.quiver);
  const int d = w.depth;

  for (int i = 2; i < d; ++i) {
    r.expect("dim " + idx("A", i + 1) + " = Phi^-1 dim " + idx("A", i - 1),
             dimvec_to_json(tau_inverse_dimvec(ctx, w.a[i - 2].dims())), dimvec_to_json(w.a[i].dims()));
    r.expect("dim " + idx("B", i + 1) + " = Phi dim " + idx("B", i - 1),
             dimvec_to_json(tau_dimvec(ctx, w.b[i - 2].dims())), dimvec_to_json(w.b[i].dims()));
  }

  std::vector<Rep> window;
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) {
    window.push_back(w.a[i]);
    names.push_back(idx("A", i + 1));
  }
  for (int i = 0; i < d; ++i) {
    window.push_back(w.b[i]);
    names.push_back(idx("B", i + 1));
  }
  for (std::size_t k = 0; k < window.size(); ++k) {
    r.expect("brick " + names[k], 1, hom_dim(window[k], window[k]));
    r.expect("rigid " + names[k], 0, ext1_dim(ctx, window[k], window[k]));
  }
  for (int i = 1; i < d; ++i) {
    r.expect("rigid " + idx("A", i) + "+" + idx("A", i + 1), 0,
             ext1_dim(ctx, direct_sum(w.a[i - 1], w.a[i]), direct_sum(w.a[i - 1], w.a[i])));
    r.expect("rigid " + idx("B", i + 1) + "+" + idx("B", i), 0,
             ext1_dim(ctx, direct_sum(w.b[i], w.b[i - 1]), direct_sum(w.b[i], w.b[i - 1])));
  }

  const std::size_t m = window.size();
  auto fac = [&](std::vector<std::size_t> gens) {
    std::vector<Rep> g;
    for (std::size_t k : gens) g.push_back(window[k]);
    std::vector<bool> in(m);
    for (std::size_t x = 0; x < m; ++x) in[x] = gen_contains(g, window[x]);
    return in;
  };
  const auto a_at = [](int i) { return static_cast<std::size_t>(i - 1); };
  const auto b_at = [d](int i) { return static_cast<std::size_t>(d + i - 1); };

  // T_1 = Fac A_1, T_i = Fac(A_{i-1} + A_i).
  std::vector<std::vector<bool>> t(d + 1), tb(d + 1);
  t[1] = fac({a_at(1)});
  for (int i = 2; i <= d; ++i) t[i] = fac({a_at(i - 1), a_at(i)});
  std::vector<bool> only_a1(m, false);
  only_a1[a_at(1)] = true;
  r.expect("T_1 = Fac A_1 meets the window in A_1", members_json(only_a1, names), members_json(t[1], names));
  r.expect("T_2 contains the whole window", members_json(std::vector<bool>(m, true), names), members_json(t[2], names));
  for (int i = 3; i <= d; ++i)
    r.expect("T_" + std::to_string(i) + " = Fac " + idx("A", i - 1), members_json(t[i], names),
             members_json(fac({a_at(i - 1)}), names));
  for (int i = 2; i < d; ++i) {
    const bool inc = subset(t[i + 1], t[i]);
    const bool strict = t[i][a_at(i - 1)] && !t[i + 1][a_at(i - 1)];
    r.add("T_" + std::to_string(i + 1) + " strictly inside T_" + std::to_string(i), true, inc && strict, inc && strict);
  }

  // T'_i = Fac(B_i + B_{i-1}) increases with i and lies below every T_j.
  for (int i = 2; i <= d; ++i) tb[i] = fac({b_at(i), b_at(i - 1)});
  for (int i = 2; i < d; ++i) {
    const bool inc = subset(tb[i], tb[i + 1]);
    const bool strict = tb[i + 1][b_at(i + 1)] && !tb[i][b_at(i + 1)];
    r.add("T'_" + std::to_string(i) + " strictly inside T'_" + std::to_string(i + 1), true, inc && strict,
          inc && strict);
  }
  bool below = true;
  for (int i = 2; i <= d; ++i)
    for (int j = 2; j <= d; ++j) below = below && subset(tb[i], t[j]);
  r.add("every T'_i inside every T_j", true, below, below);
  return r;
}

std::string case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::I: return "(i)";
    case WitnessCase::II: return "(ii)";
    case WitnessCase::III: return "(iii)";
    case WitnessCase::IV: return "(iv)";
    case WitnessCase::V: return "(v)";
    case WitnessCase::VI: return "(vi)";
    case WitnessCase::Simple: return "simple";
  }
  return "?";
}

std::array<int, 3> case_multiplicities(WitnessCase kind, int a, int b, int c) {
  switch (kind) {
    case WitnessCase::I: return {a, b, c};
    case WitnessCase::II: return {b, c, a};
    case WitnessCase::III: return {c, a, b};
    case WitnessCase::IV: return {b, a, c};
    case WitnessCase::V: return {c, b, a};
    case WitnessCase::VI: return {a, c, b};
    case WitnessCase::Simple: return {a, b, c};
  }
  throw std::invalid_argument("unknown case");
}

Quiver case_quiver(WitnessCase kind, int a, int b, int c) {
  const auto [x, y, z] = case_multiplicities(kind, a, b, c);
  return three_vertex_quiver(x, y, z);
}

namespace {

constexpr WitnessCase kCases[] = {WitnessCase::I, WitnessCase::II, WitnessCase::III,
                                  WitnessCase::IV, WitnessCase::V, WitnessCase::VI};

// Inverts case_multiplicities.
std::array<int, 3> case_parameters(WitnessCase kind, int x, int y, int z) {
  switch (kind) {
    case WitnessCase::I: return {x, y, z};
    case WitnessCase::II: return {z, x, y};
    case WitnessCase::III: return {y, z, x};
    case WitnessCase::IV: return {y, x, z};
    case WitnessCase::V: return {z, y, x};
    case WitnessCase::VI: return {x, z, y};
    default: break;
  }
  throw std::invalid_argument("unknown case");
}

void check_parameters(int a, int b, int c) {
  if (a < 2 || b < 1 || c < 0)
    throw std::invalid_argument("witness parameters need a >= 2, b >= 1, c >= 0");
}

Rep base_m(const Quiver& q0, int a) {
  IntVector d(3);
  d << 1, a, 0;
  std::vector<RationalMatrix> maps;
  int k = 0;
  for (const Arrow& ar : q0.arrows()) {
    RationalMatrix m = RationalMatrix::Zero(d(ar.target), d(ar.source));
    if (ar.source == 0 && ar.target == 1) m(k++, 0) = 1;
    maps.push_back(std::move(m));
  }
  return Rep(q0, d, std::move(maps));
}

WildWitness relabel(const WildWitness& w, const Quiver& target, const std::vector<int>& vertex_map) {
  WildWitness out = w;
  out.quiver = target;
  out.m = transport(w.m, target, vertex_map);
  out.n = transport(w.n, target, vertex_map);
  return out;
}

void require_valid(const WildWitness& w) {
  const Report r = verify_witness(w);
  if (!r.all_pass()) throw std::logic_error("witness failed verification:\n" + r.to_text());
}

}  // namespace

std::optional<CaseMatch> detect_case(const Quiver& q) {
  if (q.vertex_count() != 3) return std::nullopt;
  std::vector<std::vector<int>> orders;
  std::vector<int> perm{0, 1, 2};
  do {
    bool ok = true;
    for (const Arrow& ar : q.arrows()) {
      const auto ps = std::find(perm.begin(), perm.end(), ar.source) - perm.begin();
      const auto pt = std::find(perm.begin(), perm.end(), ar.target) - perm.begin();
      ok = ok && ps < pt;
    }
    if (ok) orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (WitnessCase kind : kCases)
    for (const auto& o : orders) {
      const int x = q.multiplicity(o[0], o[1]), y = q.multiplicity(o[1], o[2]), z = q.multiplicity(o[0], o[2]);
      const auto [a, b, c] = case_parameters(kind, x, y, z);
      if (a >= 2 && b >= 1 && c >= 0) return CaseMatch{kind, a, b, c, o};
    }
  return std::nullopt;
}

WildWitness build_wild_witness(WitnessCase kind, int a, int b, int c) {
  if (kind == WitnessCase::Simple) return simple_witness(a, b, c);
  check_parameters(a, b, c);
  const Quiver q0 = three_vertex_quiver(a, b, c);
  WildWitness w;
  w.quiver = q0;
  w.a = a;
  w.b = b;
  w.c = c;
  w.base_m = base_m(q0, a);
  w.base_n = ar_translate(w.base_m);
  w.m = w.base_m;
  w.n = w.base_n;

  const bool dual = kind == WitnessCase::IV || kind == WitnessCase::V || kind == WitnessCase::VI;
  const WitnessCase primal = kind == WitnessCase::IV ? WitnessCase::I
                             : kind == WitnessCase::V ? WitnessCase::II
                             : kind == WitnessCase::VI ? WitnessCase::III
                                                       : kind;
  if (primal == WitnessCase::II) {
    w.m = reflect_at_source(w.m, 0);
    w.n = reflect_at_source(w.n, 0);
    w = relabel(w, case_quiver(WitnessCase::II, a, b, c), {2, 0, 1});
  } else if (primal == WitnessCase::III) {
    w.m = reflect_at_sink(w.m, 2);
    w.n = reflect_at_sink(w.n, 2);
    w = relabel(w, case_quiver(WitnessCase::III, a, b, c), {1, 2, 0});
  }
  if (dual) {
    w.m = dualize(w.m);
    w.n = dualize(w.n);
    w = relabel(w, case_quiver(kind, a, b, c), {2, 1, 0});
  }
  w.kind = kind;
  require_valid(w);
  return w;
}

WildWitness build_wild_witness(const Quiver& q) {
  if (q.vertex_count() != 3) throw QuiverError(QuiverError::Kind::Precondition, "witnesses need exactly 3 vertices");
  if (!q.is_connected()) throw QuiverError(QuiverError::Kind::Disconnected, "quiver is not connected");
  if (classify(q).family != QuiverClass::Family::Wild)
    throw QuiverError(QuiverError::Kind::Precondition, "quiver is not wild");
  const auto match = detect_case(q);
  if (!match) throw std::logic_error("wild three-vertex quiver outside the six cases");
  WildWitness w = build_wild_witness(match->kind, match->a, match->b, match->c);
  w = relabel(w, q, match->order);
  require_valid(w);
  return w;
}

WildWitness simple_witness(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("simple witness needs a, b, c >= 1");
  const Quiver q0 = three_vertex_quiver(a, b, c);
  IntVector d(3);
  d << 1, 0, c;
  std::vector<RationalMatrix> maps;
  int k = 0;
  for (const Arrow& ar : q0.arrows()) {
    RationalMatrix m = RationalMatrix::Zero(d(ar.target), d(ar.source));
    if (ar.source == 0 && ar.target == 2) m(k++, 0) = 1;
    maps.push_back(std::move(m));
  }
  WildWitness w;
  w.quiver = q0;
  w.kind = WitnessCase::Simple;
  w.a = a;
  w.b = b;
  w.c = c;
  w.m = w.base_m = simple_rep(q0, 1);
  w.n = w.base_n = Rep(q0, d, std::move(maps));
  require_valid(w);
  return w;
}

Report verify_witness(const WildWitness& w) {
  Report r;
  r.title = "witness " + case_name(w.kind) + " (a,b,c)=(" + std::to_string(w.a) + "," + std::to_string(w.b) + "," +
            std::to_string(w.c) + ")";
  const FormsContext ctx(w.quiver);
  const Rep& m = w.m;
  const Rep& n = w.n;

  IntVector expected_n(3);
  const std::int64_t a = w.a, b = w.b, c = w.c;
  if (w.kind == WitnessCase::Simple)
    expected_n << 1, 0, c;
  else
    expected_n << a * a * b * b + 2 * a * b * c + c * c - 1, a * b * b + b * c, a * b + c;
  r.expect("dim N of the underlying pair", dimvec_to_json(expected_n), dimvec_to_json(w.base_n.dims()));
  r.add("dim M, dim N", nullptr, {dimvec_to_json(m.dims()), dimvec_to_json(n.dims())}, true);

  r.expect("Hom(M,N)", 0, hom_dim(m, n));
  r.expect("Hom(N,M)", 0, hom_dim(n, m));
  for (const auto& [name, x, z] : {std::tuple{"Ext1(M,N)", &m, &n}, std::tuple{"Ext1(N,M)", &n, &m}}) {
    const std::int64_t euler = ext1_dim(ctx, *x, *z);
    const Index pres = Ext1Classes(*z, *x).dim();
    r.add(name, "equal routes, at least 1", json{{"euler", euler}, {"presentation", pres}},
          euler == pres && euler >= 1);
  }
  r.expect("End(M)", 1, hom_dim(m, m));
  r.expect("End(N)", 1, hom_dim(n, n));
  r.expect("Ext1(M,M)", 0, ext1_dim(ctx, m, m));
  r.expect("Ext1(N,N)", 0, ext1_dim(ctx, n, n));
  r.expect("Hom(M,tau M)", 0, hom_dim(m, ar_translate(m)));
  r.expect("Hom(N,tau N)", 0, hom_dim(n, ar_translate(n)));
  const std::int64_t form = euler_form(ctx, n.dims(), m.dims());
  r.add("<dim N, dim M> < 0", "negative", form, form < 0);
  if (w.kind != WitnessCase::Simple) {
    const FormsContext base(w.base_m.quiver());
    r.expect("<dim N, dim M> of the underlying pair = closed form", witness_euler_closed_form(a, b, c),
             euler_form(base, w.base_n.dims(), w.base_m.dims()));
  }
  return r;
}

std::vector<TowerStep> uniserial_tower(const WildWitness& w, int length) {
  if (length < 1) throw std::invalid_argument("tower length must be positive");
  std::vector<TowerStep> tower;
  tower.push_back({w.m, identity_morphism(w.m), true, false, true});
  while (static_cast<int>(tower.size()) < length) {
    const TowerStep& cur = tower.back();
    const Rep& top = cur.top_is_m ? w.m : w.n;
    const Rep& other = cur.top_is_m ? w.n : w.m;
    const Ext1Classes ext(cur.module, other);
    const Ext1Classes ext_top(top, other);
    bool found = false;
    for (const Morphism& cocycle : ext.cocycles()) {
      if (ext_top.is_coboundary(compose(cur.to_top, cocycle))) continue;
      const Extension e = extension_realize(cur.module, other, ext, cocycle);
      tower.push_back({e.middle, e.projection, !cur.top_is_m, e.split, true});
      found = true;
      break;
    }
    if (!found) throw std::logic_error("no extension class with nonzero pushforward");
  }
  return tower;
}

Report tower_report(const WildWitness& w, const std::vector<TowerStep>& tower) {
  Report r;
  r.title = "tower of length " + std::to_string(tower.size());
  for (std::size_t l = 0; l < tower.size(); ++l) {
    const std::string x = "X_" + std::to_string(l + 1);
    if (l == 0) {
      r.expect("dim " + x + " = dim M", dimvec_to_json(w.m.dims()), dimvec_to_json(tower[0].module.dims()));
      continue;
    }
    const Rep& added = tower[l].top_is_m ? w.m : w.n;
    r.expect("dim " + x, dimvec_to_json(tower[l - 1].module.dims() + added.dims()),
             dimvec_to_json(tower[l].module.dims()));
    r.expect(x + " non-split", false, tower[l].split);
    r.expect(x + " pushforward nonzero", true, tower[l].pushforward_nonzero);
    r.expect(x + " maps onto " + (tower[l].top_is_m ? "M" : "N"), true, is_morphism(tower[l].module, added, tower[l].to_top));
  }
  return r;
}

Report nonff_evidence(const WildWitness&, const std::vector<TowerStep>& tower) {
  Report r;
  r.title = "finite stages miss the next level";
  std::vector<Rep> gens;
  for (std::size_t l = 0; l + 1 < tower.size(); ++l) {
    gens.push_back(tower[l].module);
    const Rep& next = tower[l + 1].module;
    std::vector<std::vector<Morphism>> homs;
    json hom_dims = json::array();
    for (const Rep& g : gens) {
      homs.push_back(hom_basis(g, next));
      hom_dims.push_back(homs.back().size());
    }
    const IntVector trace = trace_dims(homs, next);
    const bool contained = trace == next.dims();
    r.add("X_" + std::to_string(l + 2) + " in Fac(X_1..X_" + std::to_string(l + 1) + ")", json{{"contained", false}},
          json{{"contained", contained}, {"hom_dims", hom_dims}, {"trace", dimvec_to_json(trace)},
               {"dims", dimvec_to_json(next.dims())}},
          !contained);
  }
  return r;
}

EulerScan euler_scan(int amax, int bmax, int cmax) {
  EulerScan s;
  for (int a = 2; a <= amax; ++a)
    for (int b = 1; b <= bmax; ++b)
      for (int c = 0; c <= cmax; ++c) {
        const FormsContext ctx(three_vertex_quiver(a, b, c));
        IntVector m(3);
        m << 1, a, 0;
        const IntVector n = tau_dimvec(ctx, m);
        const std::int64_t matrix = euler_form(ctx, n, m);
        const std::int64_t closed = witness_euler_closed_form(a, b, c);
        ++s.points;
        s.agree += matrix == closed;
        s.negative += matrix < 0;
        if (matrix != closed || matrix >= 0) s.failures.push_back({a, b, c});
      }
  return s;
}

}  // namespace qtors
