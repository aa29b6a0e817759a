#pragma once

// Finite posets given by their order relation.

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtors {

using Bitset = boost::dynamic_bitset<>;

class PosetError : public std::invalid_argument {
 public:
  /// `witness` names the elements violating an axiom (one, two or three of them).
  PosetError(const std::string& what, std::vector<std::size_t> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class FinitePoset {
 public:
  FinitePoset() = default;
  /// `leq[i][j]` means element i is below element j. Throws PosetError.
  FinitePoset(std::vector<std::string> labels, std::vector<nlohmann::json> payloads,
              std::vector<std::vector<bool>> leq);

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return down_[j][i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const nlohmann::json& payload(std::size_t i) const { return payloads_[i]; }
  const Bitset& down_set(std::size_t i) const { return down_[i]; }
  const Bitset& up_set(std::size_t i) const { return up_[i]; }
  /// Covering pairs (lo, hi), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const { return hasse_; }

 private:
  std::vector<std::string> labels_;
  std::vector<nlohmann::json> payloads_;
  std::vector<Bitset> down_, up_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

template <typename Leq>
FinitePoset build_poset(std::vector<std::string> labels, std::vector<nlohmann::json> payloads, Leq leq) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = leq(i, j);
  return FinitePoset(std::move(labels), std::move(payloads), std::move(rel));
}

/// Greatest lower bound of a nonempty subset, if any.
std::optional<std::size_t> meet(const FinitePoset& p, const std::vector<std::size_t>& subset);
std::optional<std::size_t> join(const FinitePoset& p, const std::vector<std::size_t>& subset);

struct SemilatticeCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

SemilatticeCheck check_meet_semilattice(const FinitePoset& p);
SemilatticeCheck check_join_semilattice(const FinitePoset& p);
bool is_meet_semilattice(const FinitePoset& p);
bool is_join_semilattice(const FinitePoset& p);

struct LatticeReport {
  bool meet_semilattice = false;
  bool join_semilattice = false;
  bool lattice = false;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  std::optional<std::size_t> bottom, top;
  /// A finite lattice with top and bottom is complete.
  bool complete = false;
};

LatticeReport lattice_report(const FinitePoset& p);
bool is_lattice(const FinitePoset& p);

std::optional<std::size_t> bottom_element(const FinitePoset& p);
std::optional<std::size_t> top_element(const FinitePoset& p);

FinitePoset dual_poset(const FinitePoset& p);

/// An order isomorphism p -> q as the image of each element of p.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);
bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);
bool is_dual_isomorphic(const FinitePoset& p, const FinitePoset& q);

/// Induced subposet on {x : lo <= x <= hi}. Throws PosetError if lo is not below hi.
FinitePoset interval(const FinitePoset& p, std::size_t lo, std::size_t hi);

/// Hasse edges oriented from lower to higher element.
std::string export_dot(const FinitePoset& p, const std::string& name = "poset");
/// {"elements": [{"id", "label", "payload"}], "hasse": [[lo, hi], ...]}.
nlohmann::json export_json(const FinitePoset& p);
FinitePoset poset_from_json(const nlohmann::json& j);

}  // namespace qtors
