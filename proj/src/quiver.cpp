#include "qtors/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qtors/linalg.hpp"

namespace qtors {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
  if (vertex_count_ < 0) throw QuiverError(QuiverError::Kind::VertexRange, "negative vertex count");
  for (const Arrow& a : arrows_) {
    if (a.source < 0 || a.source >= vertex_count_ || a.target < 0 || a.target >= vertex_count_)
      throw QuiverError(QuiverError::Kind::VertexRange, "arrow endpoint out of range");
    if (a.source == a.target) throw QuiverError(QuiverError::Kind::Loop, "loop arrow");
  }
}

int Quiver::multiplicity(int source, int target) const {
  return static_cast<int>(std::count(arrows_.begin(), arrows_.end(), Arrow{source, target}));
}

std::vector<std::size_t> Quiver::incoming(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].target == v) out.push_back(a);
  return out;
}

std::vector<std::size_t> Quiver::outgoing(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].source == v) out.push_back(a);
  return out;
}

bool Quiver::is_sink(int v) const { return outgoing(v).empty(); }
bool Quiver::is_source(int v) const { return incoming(v).empty(); }

namespace {

// Kahn's algorithm, smallest available vertex first so the order is canonical.
std::optional<std::vector<int>> kahn(const Quiver& q) {
  std::vector<int> indeg(q.vertex_count(), 0);
  for (const Arrow& a : q.arrows()) ++indeg[a.target];
  std::vector<int> order;
  std::vector<char> done(q.vertex_count(), 0);
  for (int step = 0; step < q.vertex_count(); ++step) {
    int pick = -1;
    for (int v = 0; v < q.vertex_count(); ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) return std::nullopt;
    done[pick] = 1;
    order.push_back(pick);
    for (const Arrow& a : q.arrows())
      if (a.source == pick) --indeg[a.target];
  }
  return order;
}

}  // namespace

bool Quiver::is_acyclic() const { return kahn(*this).has_value(); }

std::vector<int> Quiver::topological_order() const {
  auto order = kahn(*this);
  if (!order) throw QuiverError(QuiverError::Kind::Cyclic, "quiver has an oriented cycle");
  return *order;
}

bool Quiver::is_connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<int> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arrow& a : arrows_) parent[find(a.source)] = find(a.target);
  const int root = find(0);
  for (int v = 1; v < vertex_count_; ++v)
    if (find(v) != root) return false;
  return true;
}

Quiver Quiver::reflected_at(int v) const {
  std::vector<Arrow> out = arrows_;
  for (Arrow& a : out)
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  return Quiver(vertex_count_, std::move(out));
}

Quiver opposite(const Quiver& q) {
  std::vector<Arrow> out;
  out.reserve(q.arrow_count());
  for (const Arrow& a : q.arrows()) out.push_back({a.target, a.source});
  return Quiver(q.vertex_count(), std::move(out));
}

Subquiver full_subquiver(const Quiver& q, const std::vector<int>& vertices) {
  if (vertices.empty())
    throw QuiverError(QuiverError::Kind::Precondition, "full subquiver of an empty vertex set");
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<int> slot(q.vertex_count(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= q.vertex_count())
      throw QuiverError(QuiverError::Kind::VertexRange, "subquiver vertex out of range");
    slot[vs[i]] = static_cast<int>(i);
  }
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows())
    if (slot[a.source] >= 0 && slot[a.target] >= 0) arrows.push_back({slot[a.source], slot[a.target]});
  return {Quiver(static_cast<int>(vs.size()), std::move(arrows)), vs};
}

// ---------------------------------------------------------------------------
// Text format

Quiver parse_quiver(const std::string& text, bool require_acyclic) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<Arrow> arrows;

  auto parse_int = [&](const std::string& tok, int& out) {
    std::size_t used = 0;
    try {
      out = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw QuiverError(QuiverError::Kind::Syntax, "expected an integer, got '" + tok + "'", lineno);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);

    if (!n) {
      if (tok.size() != 2 || tok[0] != "vertices")
        throw QuiverError(QuiverError::Kind::Syntax, "expected 'vertices <n>'", lineno);
      int count = 0;
      parse_int(tok[1], count);
      if (count < 1) throw QuiverError(QuiverError::Kind::VertexRange, "vertex count must be >= 1", lineno);
      n = count;
      continue;
    }
    if (tok[0] != "arrow" || (tok.size() != 3 && tok.size() != 4))
      throw QuiverError(QuiverError::Kind::Syntax, "expected 'arrow <src> <dst> [*<mult>]'", lineno);
    int s = 0, t = 0, mult = 1;
    parse_int(tok[1], s);
    parse_int(tok[2], t);
    if (tok.size() == 4) {
      if (tok[3].size() < 2 || tok[3][0] != '*')
        throw QuiverError(QuiverError::Kind::Syntax, "multiplicity must be written '*<m>'", lineno);
      parse_int(tok[3].substr(1), mult);
      if (mult < 1) throw QuiverError(QuiverError::Kind::Syntax, "multiplicity must be >= 1", lineno);
    }
    if (s < 1 || s > *n || t < 1 || t > *n)
      throw QuiverError(QuiverError::Kind::VertexRange, "vertex index out of range", lineno);
    if (s == t) throw QuiverError(QuiverError::Kind::Loop, "loop at vertex " + std::to_string(s), lineno);
    for (int k = 0; k < mult; ++k) arrows.push_back({s - 1, t - 1});
  }
  if (!n) throw QuiverError(QuiverError::Kind::Syntax, "missing 'vertices <n>' line", lineno);
  Quiver q(*n, std::move(arrows));
  if (require_acyclic && !q.is_acyclic())
    throw QuiverError(QuiverError::Kind::Cyclic, "quiver has an oriented cycle");
  return q;
}

std::string to_dsl(const Quiver& q) {
  std::ostringstream out;
  out << "vertices " << q.vertex_count() << "\n";
  std::size_t i = 0;
  const auto& arrows = q.arrows();
  while (i < arrows.size()) {
    std::size_t j = i;
    while (j < arrows.size() && arrows[j] == arrows[i]) ++j;
    out << "arrow " << arrows[i].source + 1 << " " << arrows[i].target + 1;
    if (j - i > 1) out << " *" << j - i;
    out << "\n";
    i = j;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Classification

std::string family_name(QuiverClass::Family f) {
  switch (f) {
    case QuiverClass::Family::Dynkin: return "Dynkin";
    case QuiverClass::Family::ExtendedDynkin: return "extended Dynkin";
    case QuiverClass::Family::Wild: return "wild";
  }
  return "?";
}

std::string QuiverClass::name() const {
  if (family == Family::Wild) return "wild";
  std::string s = family == Family::ExtendedDynkin ? "~" : "";
  return s + series + std::to_string(rank);
}

namespace {

RationalMatrix symmetrized_tits_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  RationalMatrix b = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) b(i, i) = 2;
  for (const Arrow& a : q.arrows()) {
    b(a.source, a.target) -= 1;
    b(a.target, a.source) -= 1;
  }
  return b;
}

enum class Definiteness { Positive, Semidefinite, Indefinite };

// Symmetric elimination on diagonal pivots. A zero pivot with a nonzero row
// rules out semidefiniteness.
Definiteness definiteness(RationalMatrix b) {
  const Index n = b.rows();
  bool strict = true;
  for (Index k = 0; k < n; ++k) {
    if (b(k, k) < 0) return Definiteness::Indefinite;
    if (is_zero(b(k, k))) {
      for (Index j = k + 1; j < n; ++j)
        if (!is_zero(b(k, j))) return Definiteness::Indefinite;
      strict = false;
      continue;
    }
    for (Index i = k + 1; i < n; ++i) {
      if (is_zero(b(i, k))) continue;
      const Rational f = b(i, k) / b(k, k);
      for (Index j = k; j < n; ++j) b(i, j) -= f * b(k, j);
    }
  }
  return strict ? Definiteness::Positive : Definiteness::Semidefinite;
}

void require_connected(const Quiver& q) {
  if (!q.is_connected()) throw QuiverError(QuiverError::Kind::Disconnected, "quiver is not connected");
}

}  // namespace

QuiverClass::Family classify_by_tits_form(const Quiver& q) {
  require_connected(q);
  const RationalMatrix b = symmetrized_tits_matrix(q);
  switch (definiteness(b)) {
    case Definiteness::Positive: return QuiverClass::Family::Dynkin;
    case Definiteness::Semidefinite: {
      // Affine case: the radical is spanned by one sincere positive vector.
      const auto rad = null_space(b).basis_matrix();
      if (rad.cols() != 1) throw std::logic_error("semidefinite Tits form with radical of rank != 1");
      const bool pos = (rad.array() > 0).all();
      const bool neg = (rad.array() < 0).all();
      if (!pos && !neg) throw std::logic_error("radical vector of the Tits form is not sincere");
      return QuiverClass::Family::ExtendedDynkin;
    }
    case Definiteness::Indefinite: return QuiverClass::Family::Wild;
  }
  return QuiverClass::Family::Wild;
}

QuiverClass classify_by_graph(const Quiver& q) {
  require_connected(q);
  using F = QuiverClass::Family;
  const QuiverClass wild{F::Wild, 0, 0};
  const int n = q.vertex_count();
  if (n == 1) return {F::Dynkin, 'A', 1};

  std::map<std::pair<int, int>, int> edge;
  for (const Arrow& a : q.arrows()) ++edge[{std::min(a.source, a.target), std::max(a.source, a.target)}];
  for (const auto& [e, m] : edge) {
    if (m >= 3) return wild;
    if (m == 2) return n == 2 ? QuiverClass{F::ExtendedDynkin, 'A', 1} : wild;
  }

  std::vector<std::vector<int>> adj(n);
  for (const auto& [e, m] : edge) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  const int edges = static_cast<int>(edge.size());
  if (edges > n) return wild;
  if (edges == n) {
    for (const auto& nb : adj)
      if (nb.size() != 2) return wild;
    return {F::ExtendedDynkin, 'A', n - 1};
  }

  // Tree.
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() >= 5) return wild;
    if (adj[v].size() >= 3) branch.push_back(v);
  }
  if (branch.empty()) return {F::Dynkin, 'A', n};

  // Arm length from `from` through its neighbour `next`, stopping at a leaf;
  // returns -1 when another branch vertex is met.
  auto arm = [&](int from, int next) {
    int len = 1, prev = from, cur = next;
    while (adj[cur].size() == 2) {
      const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    return adj[cur].size() == 1 ? len : -1;
  };

  if (branch.size() == 1) {
    const int c = branch[0];
    std::vector<int> arms;
    for (int nb : adj[c]) arms.push_back(arm(c, nb));
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4) {
      if (arms == std::vector<int>{1, 1, 1, 1}) return {F::ExtendedDynkin, 'D', 4};
      return wild;
    }
    const int p = arms[0], r2 = arms[1], r3 = arms[2];
    if (p == 1 && r2 == 1) return {F::Dynkin, 'D', n};
    if (p == 1 && r2 == 2 && r3 == 2) return {F::Dynkin, 'E', 6};
    if (p == 1 && r2 == 2 && r3 == 3) return {F::Dynkin, 'E', 7};
    if (p == 1 && r2 == 2 && r3 == 4) return {F::Dynkin, 'E', 8};
    if (p == 2 && r2 == 2 && r3 == 2) return {F::ExtendedDynkin, 'E', 6};
    if (p == 1 && r2 == 3 && r3 == 3) return {F::ExtendedDynkin, 'E', 7};
    if (p == 1 && r2 == 2 && r3 == 5) return {F::ExtendedDynkin, 'E', 8};
    return wild;
  }
  if (branch.size() == 2) {
    for (int c : branch) {
      if (adj[c].size() != 3) return wild;
      int leaves = 0;
      for (int nb : adj[c])
        if (adj[nb].size() == 1) ++leaves;
      if (leaves != 2) return wild;
    }
    return {F::ExtendedDynkin, 'D', n - 1};
  }
  return wild;
}

QuiverClass classify(const Quiver& q) {
  const QuiverClass by_graph = classify_by_graph(q);
  const QuiverClass::Family by_form = classify_by_tits_form(q);
  if (by_form != by_graph.family)
    throw std::logic_error("Tits form and graph recognition disagree on " + to_dsl(q));
  return by_graph;
}

std::optional<WitnessSubquiver> find_witness_subquiver(const Quiver& q) {
  const int n = q.vertex_count();
  if (n <= 2) return std::nullopt;
  if (classify(q).family == QuiverClass::Family::Dynkin) return std::nullopt;

  for (int size = 3; size <= n; ++size) {
    // Lexicographic enumeration of size-subsets.
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      const Subquiver sub = full_subquiver(q, pick);
      if (sub.quiver.is_connected()) {
        const QuiverClass c = classify(sub.quiver);
        const bool ext = c.family == QuiverClass::Family::ExtendedDynkin;
        const bool wild3 = c.family == QuiverClass::Family::Wild && size == 3;
        if (ext || wild3) return WitnessSubquiver{pick, c};
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("no witness subquiver found in a non-Dynkin quiver");
}

LatticeDecision decide_lattice_property(const Quiver& q) {
  if (!q.is_acyclic()) throw QuiverError(QuiverError::Kind::Cyclic, "quiver has an oriented cycle");
  LatticeDecision d;
  d.vertex_count = q.vertex_count();
  d.quiver_class = classify(q);
  if (d.quiver_class.family == QuiverClass::Family::Dynkin) {
    d.lattice = true;
    d.certificate = "Dynkin " + d.quiver_class.name();
    return d;
  }
  if (q.vertex_count() <= 2) {
    d.lattice = true;
    d.certificate = std::to_string(q.vertex_count()) + " vertices";
    return d;
  }
  d.witness = find_witness_subquiver(q);
  std::ostringstream c;
  c << "witness: " << family_name(d.witness->kind.family) << " subquiver {";
  for (std::size_t i = 0; i < d.witness->vertices.size(); ++i)
    c << (i ? "," : "") << d.witness->vertices[i] + 1;
  c << "}";
  if (d.witness->kind.family != QuiverClass::Family::Wild) c << " (" << d.witness->kind.name() << ")";
  d.certificate = c.str();
  return d;
}

}  // namespace qtors
