#include "qtors/taurig.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qtors/io.hpp"

namespace qtors {

using nlohmann::json;

Catalog::Catalog(const Quiver& q, std::uint64_t seed) : quiver_(q), seed_(seed) {
  modules_ = enumerate_indecomposables(q);
  const int m = size();
  for (const Rep& x : modules_) tau_.push_back(ar_translate(x));
  homs_.assign(m, std::vector<std::vector<Morphism>>(m));
  hom_tau_.assign(m, std::vector<Index>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      homs_[i][j] = qtors::hom_basis(modules_[i], modules_[j]);
      hom_tau_[i][j] = tau_[j].is_zero() ? 0 : qtors::hom_dim(modules_[i], tau_[j]);
    }
  for (int v = 0; v < q.vertex_count(); ++v) {
    const auto k = find(projective_rep(q, v));
    if (!k) throw std::logic_error("projective missing from the catalog");
    projective_.push_back(*k);
  }
}

std::optional<int> Catalog::find(const Rep& x) const {
  for (int i = 0; i < size(); ++i)
    if (modules_[i].dims() == x.dims()) return i;
  return std::nullopt;
}

bool Catalog::surjects(int i, int j) const {
  auto it = surjects_.find({i, j});
  if (it != surjects_.end()) return it->second;
  const bool s = exists_surjection(modules_[i], modules_[j], seed_);
  surjects_[{i, j}] = s;
  return s;
}

const std::vector<Rep>& Catalog::extension_middles(int x, int z) const {
  auto it = middles_.find({x, z});
  if (it != middles_.end()) return it->second;
  std::vector<Rep> out;
  const Ext1Classes ext(modules_[x], modules_[z]);
  for (const Morphism& c : ext.cocycles()) out.push_back(extension_realize(modules_[x], modules_[z], ext, c).middle);
  return middles_[{x, z}] = std::move(out);
}

namespace {

std::string dims_string(const IntVector& d) {
  std::ostringstream os;
  os << '(';
  for (Index i = 0; i < d.size(); ++i) os << (i ? "," : "") << d(i);
  os << ')';
  return os.str();
}

}  // namespace

std::string Catalog::describe(const DecoratedSummand& s) const {
  if (s.kind == DecoratedSummand::Kind::Module) return dims_string(modules_[s.index].dims());
  return "P" + std::to_string(s.index + 1) + "[1]";
}

bool is_compatible(const Catalog& cat, const DecoratedSummand& u, const DecoratedSummand& v) {
  using K = DecoratedSummand::Kind;
  if (u.kind == K::ShiftedProjective && v.kind == K::ShiftedProjective) return true;
  if (u.kind == K::ShiftedProjective) return cat.module(v.index).dim(u.index) == 0;
  if (v.kind == K::ShiftedProjective) return cat.module(u.index).dim(v.index) == 0;
  return cat.hom_to_tau(u.index, v.index) == 0 && cat.hom_to_tau(v.index, u.index) == 0;
}

std::vector<DecoratedSummand> decorated_items(const Catalog& cat) {
  std::vector<DecoratedSummand> out;
  for (int i = 0; i < cat.size(); ++i) out.push_back(DecoratedSummand::module(i));
  for (int v = 0; v < cat.vertex_count(); ++v) out.push_back(DecoratedSummand::shifted(v));
  return out;
}

SttPair all_projectives_pair(const Catalog& cat) {
  SttPair p;
  for (int v = 0; v < cat.vertex_count(); ++v) p.push_back(DecoratedSummand::module(cat.projective_index(v)));
  std::sort(p.begin(), p.end());
  return p;
}

SttPair all_shifted_pair(const Catalog& cat) {
  SttPair p;
  for (int v = 0; v < cat.vertex_count(); ++v) p.push_back(DecoratedSummand::shifted(v));
  return p;
}

namespace {

void check_size(const SttPair& p, const Catalog& cat) {
  if (static_cast<int>(p.size()) != cat.vertex_count())
    throw std::logic_error("support tau-tilting pair of the wrong size");
}

// Bron-Kerbosch with pivoting over the compatibility graph.
void maximal_cliques(const std::vector<Bitset>& adj, Bitset r, Bitset p, Bitset x, std::vector<Bitset>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  const Bitset px = p | x;
  std::size_t pivot = px.find_first();
  std::size_t best = 0;
  for (std::size_t u = px.find_first(); u != Bitset::npos; u = px.find_next(u)) {
    const std::size_t c = (p & adj[u]).count();
    if (c >= best) {
      best = c;
      pivot = u;
    }
  }
  const Bitset todo = p - adj[pivot];
  for (std::size_t v = todo.find_first(); v != Bitset::npos; v = todo.find_next(v)) {
    Bitset r2 = r;
    r2.set(v);
    maximal_cliques(adj, r2, p & adj[v], x & adj[v], out);
    p.reset(v);
    x.set(v);
  }
}

std::vector<SttPair> by_cliques(const Catalog& cat) {
  const auto items = decorated_items(cat);
  const std::size_t k = items.size();
  std::vector<Bitset> adj(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && is_compatible(cat, items[i], items[j])) adj[i].set(j);
  std::vector<Bitset> cliques;
  Bitset all(k);
  all.set();
  maximal_cliques(adj, Bitset(k), all, Bitset(k), cliques);
  std::vector<SttPair> out;
  for (const Bitset& c : cliques) {
    SttPair p;
    for (std::size_t i = c.find_first(); i != Bitset::npos; i = c.find_next(i)) p.push_back(items[i]);
    std::sort(p.begin(), p.end());
    check_size(p, cat);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SttPair> by_mutation(const Catalog& cat) {
  std::set<SttPair> seen;
  std::deque<SttPair> queue{all_projectives_pair(cat)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    const SttPair p = queue.front();
    queue.pop_front();
    for (SttPair& n : mutations(p, cat))
      if (seen.insert(n).second) queue.push_back(std::move(n));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<SttPair> enumerate_stt(const Catalog& cat, SttStrategy strategy) {
  return strategy == SttStrategy::CliqueSearch ? by_cliques(cat) : by_mutation(cat);
}

std::vector<SttPair> enumerate_stt(const Catalog& cat) {
  auto a = by_cliques(cat);
  if (a != by_mutation(cat)) throw std::logic_error("clique search and mutation walk disagree");
  return a;
}

std::vector<SttPair> mutations(const SttPair& p, const Catalog& cat) {
  check_size(p, cat);
  const auto items = decorated_items(cat);
  std::vector<SttPair> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    SttPair rest = p;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    std::optional<DecoratedSummand> other;
    for (const DecoratedSummand& c : items) {
      if (c == p[k] || std::find(rest.begin(), rest.end(), c) != rest.end()) continue;
      if (!std::all_of(rest.begin(), rest.end(), [&](const auto& r) { return is_compatible(cat, c, r); })) continue;
      if (other) throw std::logic_error("almost complete pair with more than two completions");
      other = c;
    }
    if (!other) throw std::logic_error("almost complete pair with a single completion");
    rest.push_back(*other);
    std::sort(rest.begin(), rest.end());
    out.push_back(std::move(rest));
  }
  return out;
}

std::vector<int> module_summands(const SttPair& p) {
  std::vector<int> out;
  for (const auto& s : p)
    if (s.kind == DecoratedSummand::Kind::Module) out.push_back(s.index);
  return out;
}

TorsionClassModel fac_generated(const std::vector<int>& generators, const Catalog& cat) {
  TorsionClassModel t{Bitset(cat.size())};
  if (generators.empty()) return t;
  for (int j = 0; j < cat.size(); ++j) {
    std::vector<std::vector<Morphism>> homs;
    for (int g : generators) homs.push_back(cat.hom_basis(g, j));
    if (trace_dims(homs, cat.module(j)) == cat.module(j).dims()) t.members.set(j);
  }
  return t;
}

TorsionClassModel fac_class(const SttPair& p, const Catalog& cat) { return fac_generated(module_summands(p), cat); }

Bitset tc_perp(const TorsionClassModel& t, const Catalog& cat) {
  Bitset out(cat.size());
  for (int x = 0; x < cat.size(); ++x) {
    bool zero = true;
    for (std::size_t i = t.members.find_first(); zero && i != Bitset::npos; i = t.members.find_next(i))
      zero = cat.hom_dim(static_cast<int>(i), x) == 0;
    if (zero) out.set(x);
  }
  return out;
}

TorsionClassModel tc_left_perp(const Bitset& f, const Catalog& cat) {
  TorsionClassModel out{Bitset(cat.size())};
  for (int x = 0; x < cat.size(); ++x) {
    bool zero = true;
    for (std::size_t i = f.find_first(); zero && i != Bitset::npos; i = f.find_next(i))
      zero = cat.hom_dim(x, static_cast<int>(i)) == 0;
    if (zero) out.members.set(x);
  }
  return out;
}

TorsionClassModel tc_meet(const std::vector<TorsionClassModel>& ts, const Catalog& cat) {
  TorsionClassModel out{Bitset(cat.size())};
  out.members.set();
  for (const auto& t : ts) out.members &= t.members;
  return out;
}

TorsionClassModel tc_join(const std::vector<TorsionClassModel>& ts, const Catalog& cat) {
  Bitset f(cat.size());
  f.set();
  for (const auto& t : ts) f &= tc_perp(t, cat);
  return tc_left_perp(f, cat);
}

std::vector<AxiomViolation> torsion_axiom_spotcheck(const TorsionClassModel& t, const std::vector<int>& generators,
                                                    const Catalog& cat) {
  std::vector<AxiomViolation> out;
  const Bitset& m = t.members;
  for (std::size_t x = m.find_first(); x != Bitset::npos; x = m.find_next(x))
    for (int y = 0; y < cat.size(); ++y)
      if (!m.test(y) && cat.surjects(static_cast<int>(x), y))
        out.push_back({AxiomViolation::Kind::Quotient, static_cast<int>(x), y});

  std::vector<Rep> gens;
  for (int g : generators) gens.push_back(cat.module(g));
  for (std::size_t x = m.find_first(); x != Bitset::npos; x = m.find_next(x))
    for (std::size_t z = m.find_first(); z != Bitset::npos; z = m.find_next(z))
      for (const Rep& e : cat.extension_middles(static_cast<int>(x), static_cast<int>(z)))
        if (gens.empty() || !gen_contains(gens, e))
          out.push_back({AxiomViolation::Kind::Extension, static_cast<int>(x), static_cast<int>(z)});
  return out;
}

namespace {

std::vector<std::size_t> member_list(const Bitset& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

std::string class_label(const TorsionClassModel& t, const Catalog& cat) {
  const auto members = member_list(t.members);
  if (members.empty()) return "0";
  std::string out;
  for (std::size_t i : members) out += (out.empty() ? "" : " ") + dims_string(cat.module(static_cast<int>(i)).dims());
  return out;
}

TorsionLattice torsion_lattice(const Catalog& cat) {
  const auto pairs = enumerate_stt(cat);
  std::vector<std::size_t> order(pairs.size());
  std::vector<TorsionClassModel> classes;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    order[i] = i;
    classes.push_back(fac_class(pairs[i], cat));
  }
  auto key = [&](std::size_t i) {
    return std::make_pair(classes[i].members.count(), member_list(classes[i].members));
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (classes[order[i]] == classes[order[i - 1]]) throw std::logic_error("two pairs generate the same torsion class");

  TorsionLattice out;
  std::vector<std::string> labels;
  std::vector<json> payloads;
  for (std::size_t i : order) {
    out.pairs.push_back(pairs[i]);
    out.classes.push_back(classes[i]);
    labels.push_back(class_label(classes[i], cat));
    json members = json::array();
    for (std::size_t k : member_list(classes[i].members)) members.push_back(dimvec_to_json(cat.module(static_cast<int>(k)).dims()));
    payloads.push_back({{"pair", stt_to_json(pairs[i], cat)}, {"members", members}});
  }
  const auto& cls = out.classes;
  out.poset = build_poset(std::move(labels), std::move(payloads),
                          [&](std::size_t i, std::size_t j) { return cls[i].members.is_subset_of(cls[j].members); });
  return out;
}

json stt_to_json(const SttPair& p, const Catalog& cat) {
  json modules = json::array(), shifted = json::array();
  for (const auto& s : p) {
    if (s.kind == DecoratedSummand::Kind::Module)
      modules.push_back(dimvec_to_json(cat.module(s.index).dims()));
    else
      shifted.push_back(s.index + 1);
  }
  return {{"modules", modules}, {"shifted_projectives", shifted}};
}

json stt_list_to_json(const std::vector<SttPair>& pairs, const Catalog& cat) {
  json list = json::array();
  for (const auto& p : pairs) list.push_back(stt_to_json(p, cat));
  return {{"count", pairs.size()}, {"pairs", list}};
}

}  // namespace qtors
