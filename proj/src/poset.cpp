#include "qtors/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qtors {

using nlohmann::json;

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<json> payloads,
                         std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), payloads_(std::move(payloads)) {
  const std::size_t n = labels_.size();
  if (payloads_.size() != n || leq.size() != n) throw std::invalid_argument("poset: size mismatch");
  for (const auto& row : leq)
    if (row.size() != n) throw std::invalid_argument("poset: relation is not square");
  for (std::size_t i = 0; i < n; ++i)
    if (!leq[i][i]) throw PosetError("not reflexive", {i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i]) throw PosetError("not antisymmetric", {i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) throw PosetError("not transitive", {i, j, k});

  down_.assign(n, Bitset(n));
  up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i][j]) {
        down_[j].set(i);
        up_[i].set(j);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      // i < j is a cover when nothing lies strictly between.
      Bitset between = up_[i] & down_[j];
      if (between.count() == 2) hasse_.emplace_back(i, j);
    }
}

namespace {

std::optional<std::size_t> greatest_of(const FinitePoset& p, const Bitset& s, bool dual) {
  for (std::size_t g = s.find_first(); g != Bitset::npos; g = s.find_next(g)) {
    const Bitset& below = dual ? p.up_set(g) : p.down_set(g);
    if (s.is_subset_of(below)) return g;
  }
  return std::nullopt;
}

std::optional<std::size_t> bound(const FinitePoset& p, const std::vector<std::size_t>& subset, bool dual) {
  if (subset.empty()) throw std::invalid_argument("meet/join of an empty subset");
  Bitset common = dual ? p.up_set(subset[0]) : p.down_set(subset[0]);
  for (std::size_t s : subset) common &= dual ? p.up_set(s) : p.down_set(s);
  return greatest_of(p, common, dual);
}

SemilatticeCheck check_pairs(const FinitePoset& p, bool dual) {
  SemilatticeCheck out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!bound(p, {i, j}, dual)) {
        out.holds = false;
        out.counterexample = std::make_pair(i, j);
        return out;
      }
  return out;
}

}  // namespace

std::optional<std::size_t> meet(const FinitePoset& p, const std::vector<std::size_t>& subset) {
  return bound(p, subset, false);
}

std::optional<std::size_t> join(const FinitePoset& p, const std::vector<std::size_t>& subset) {
  return bound(p, subset, true);
}

SemilatticeCheck check_meet_semilattice(const FinitePoset& p) { return check_pairs(p, false); }
SemilatticeCheck check_join_semilattice(const FinitePoset& p) { return check_pairs(p, true); }
bool is_meet_semilattice(const FinitePoset& p) { return check_meet_semilattice(p).holds; }
bool is_join_semilattice(const FinitePoset& p) { return check_join_semilattice(p).holds; }

std::optional<std::size_t> bottom_element(const FinitePoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.up_set(i).count() == p.size()) return i;
  return std::nullopt;
}

std::optional<std::size_t> top_element(const FinitePoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.down_set(i).count() == p.size()) return i;
  return std::nullopt;
}

LatticeReport lattice_report(const FinitePoset& p) {
  LatticeReport r;
  const SemilatticeCheck m = check_meet_semilattice(p);
  const SemilatticeCheck j = check_join_semilattice(p);
  r.meet_semilattice = m.holds;
  r.join_semilattice = j.holds;
  r.lattice = m.holds && j.holds;
  r.counterexample = m.holds ? j.counterexample : m.counterexample;
  r.bottom = bottom_element(p);
  r.top = top_element(p);
  r.complete = r.lattice && r.bottom && r.top;
  return r;
}

bool is_lattice(const FinitePoset& p) { return lattice_report(p).lattice; }

FinitePoset dual_poset(const FinitePoset& p) {
  std::vector<std::string> labels;
  std::vector<json> payloads;
  for (std::size_t i = 0; i < p.size(); ++i) {
    labels.push_back(p.label(i));
    payloads.push_back(p.payload(i));
  }
  return build_poset(std::move(labels), std::move(payloads), [&](std::size_t i, std::size_t j) { return p.leq(j, i); });
}

namespace {

struct Profile {
  std::size_t down, up, covers_below, covers_above;
  friend bool operator==(const Profile&, const Profile&) = default;
};

std::vector<Profile> profiles(const FinitePoset& p) {
  std::vector<Profile> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = {p.down_set(i).count(), p.up_set(i).count(), 0, 0};
  for (const auto& [lo, hi] : p.hasse_edges()) {
    ++out[lo].covers_above;
    ++out[hi].covers_below;
  }
  return out;
}

bool extend(const FinitePoset& p, const FinitePoset& q, const std::vector<Profile>& pp,
            const std::vector<Profile>& qp, const std::vector<std::size_t>& order, std::size_t depth,
            std::vector<std::size_t>& image, std::vector<char>& used) {
  if (depth == order.size()) return true;
  const std::size_t x = order[depth];
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (used[y] || !(pp[x] == qp[y])) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const std::size_t w = order[k];
      ok = p.leq(x, w) == q.leq(y, image[w]) && p.leq(w, x) == q.leq(image[w], y);
    }
    if (!ok) continue;
    image[x] = y;
    used[y] = 1;
    if (extend(p, q, pp, qp, order, depth + 1, image, used)) return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size() || p.hasse_edges().size() != q.hasse_edges().size()) return std::nullopt;
  const auto pp = profiles(p), qp = profiles(q);
  // Linear extension of p so each new element is constrained by earlier ones.
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pp[a].down < pp[b].down; });
  std::vector<std::size_t> image(p.size());
  std::vector<char> used(q.size(), 0);
  if (!extend(p, q, pp, qp, order, 0, image, used)) return std::nullopt;
  return image;
}

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) { return find_isomorphism(p, q).has_value(); }

bool is_dual_isomorphic(const FinitePoset& p, const FinitePoset& q) { return is_isomorphic(p, dual_poset(q)); }

FinitePoset interval(const FinitePoset& p, std::size_t lo, std::size_t hi) {
  if (lo >= p.size() || hi >= p.size()) throw std::out_of_range("interval bound out of range");
  if (!p.leq(lo, hi)) throw PosetError("interval bounds are not comparable", {lo, hi});
  const Bitset members = p.up_set(lo) & p.down_set(hi);
  std::vector<std::size_t> keep;
  for (std::size_t i = members.find_first(); i != Bitset::npos; i = members.find_next(i)) keep.push_back(i);
  std::vector<std::string> labels;
  std::vector<json> payloads;
  for (std::size_t i : keep) {
    labels.push_back(p.label(i));
    payloads.push_back(p.payload(i));
  }
  return build_poset(std::move(labels), std::move(payloads),
                     [&](std::size_t i, std::size_t j) { return p.leq(keep[i], keep[j]); });
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=\"" << dot_escape(p.label(i)) << "\"];\n";
  for (const auto& [lo, hi] : p.hasse_edges()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

json export_json(const FinitePoset& p) {
  json elements = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    elements.push_back({{"id", i}, {"label", p.label(i)}, {"payload", p.payload(i)}});
  json hasse = json::array();
  for (const auto& [lo, hi] : p.hasse_edges()) hasse.push_back({lo, hi});
  return {{"elements", elements}, {"hasse", hasse}};
}

FinitePoset poset_from_json(const json& j) {
  const auto& elements = j.at("elements");
  const std::size_t n = elements.size();
  std::vector<std::string> labels(n);
  std::vector<json> payloads(n);
  for (const auto& e : elements) {
    const std::size_t id = e.at("id").get<std::size_t>();
    if (id >= n) throw std::invalid_argument("poset JSON: element id out of range");
    labels[id] = e.at("label").get<std::string>();
    payloads[id] = e.value("payload", json());
  }
  // Reflexive transitive closure of the Hasse edges.
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& e : j.at("hasse")) {
    const std::size_t lo = e.at(0).get<std::size_t>(), hi = e.at(1).get<std::size_t>();
    if (lo >= n || hi >= n) throw std::invalid_argument("poset JSON: edge endpoint out of range");
    leq[lo][hi] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t jj = 0; jj < n; ++jj)
          if (leq[k][jj]) leq[i][jj] = true;
  return FinitePoset(std::move(labels), std::move(payloads), std::move(leq));
}

}  // namespace qtors
