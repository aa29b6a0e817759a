#pragma once

// Support tau-tilting pairs over a Dynkin quiver, their mutation graph, and
// torsion classes modelled as sets of indecomposables.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtors/poset.hpp"
#include "qtors/rep.hpp"

namespace qtors {

struct DecoratedSummand {
  enum class Kind { Module, ShiftedProjective };
  Kind kind = Kind::Module;
  int index = 0;  // catalog index for a module, vertex for a shifted projective

  static DecoratedSummand module(int i) { return {Kind::Module, i}; }
  static DecoratedSummand shifted(int v) { return {Kind::ShiftedProjective, v}; }
  friend bool operator==(const DecoratedSummand&, const DecoratedSummand&) = default;
  friend auto operator<=>(const DecoratedSummand&, const DecoratedSummand&) = default;
};

/// Sorted, duplicate free.
using SttPair = std::vector<DecoratedSummand>;

/// The indecomposables of a Dynkin quiver with cached Hom data.
class Catalog {
 public:
  explicit Catalog(const Quiver& q, std::uint64_t seed = 0);

  const Quiver& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_.vertex_count(); }
  int size() const { return static_cast<int>(modules_.size()); }
  const std::vector<Rep>& modules() const { return modules_; }
  const Rep& module(int i) const { return modules_[i]; }
  const Rep& tau(int i) const { return tau_[i]; }
  std::uint64_t seed() const { return seed_; }

  const std::vector<Morphism>& hom_basis(int i, int j) const { return homs_[i][j]; }
  Index hom_dim(int i, int j) const { return static_cast<Index>(homs_[i][j].size()); }
  /// dim Hom(X_i, tau X_j).
  Index hom_to_tau(int i, int j) const { return hom_tau_[i][j]; }
  int projective_index(int v) const { return projective_[v]; }
  /// Index of the module isomorphic to x, found by dimension vector.
  std::optional<int> find(const Rep& x) const;

  bool surjects(int i, int j) const;
  /// Middle terms of a basis of Ext^1(X_z, X_x).
  const std::vector<Rep>& extension_middles(int x, int z) const;

  std::string describe(const DecoratedSummand& s) const;

 private:
  Quiver quiver_;
  std::uint64_t seed_;
  std::vector<Rep> modules_, tau_;
  std::vector<std::vector<std::vector<Morphism>>> homs_;
  std::vector<std::vector<Index>> hom_tau_;
  std::vector<int> projective_;
  mutable std::map<std::pair<int, int>, bool> surjects_;
  mutable std::map<std::pair<int, int>, std::vector<Rep>> middles_;
};

bool is_compatible(const Catalog& cat, const DecoratedSummand& u, const DecoratedSummand& v);

/// Every module and every shifted projective, in that order.
std::vector<DecoratedSummand> decorated_items(const Catalog& cat);

enum class SttStrategy { CliqueSearch, MutationWalk };

/// All support tau-tilting pairs in canonical order. Both strategies are run
/// and compared unless one is named.
std::vector<SttPair> enumerate_stt(const Catalog& cat);
std::vector<SttPair> enumerate_stt(const Catalog& cat, SttStrategy strategy);

SttPair all_projectives_pair(const Catalog& cat);
SttPair all_shifted_pair(const Catalog& cat);

/// One neighbour per summand, in summand order.
std::vector<SttPair> mutations(const SttPair& p, const Catalog& cat);

/// A torsion class as the set of catalog indecomposables it contains.
struct TorsionClassModel {
  Bitset members;
  friend bool operator==(const TorsionClassModel&, const TorsionClassModel&) = default;
};

std::vector<int> module_summands(const SttPair& p);
TorsionClassModel fac_class(const SttPair& p, const Catalog& cat);
TorsionClassModel fac_generated(const std::vector<int>& generators, const Catalog& cat);

/// {X : Hom(T, X) = 0}.
Bitset tc_perp(const TorsionClassModel& t, const Catalog& cat);
/// {X : Hom(X, F) = 0}.
TorsionClassModel tc_left_perp(const Bitset& f, const Catalog& cat);
TorsionClassModel tc_meet(const std::vector<TorsionClassModel>& ts, const Catalog& cat);
TorsionClassModel tc_join(const std::vector<TorsionClassModel>& ts, const Catalog& cat);

struct AxiomViolation {
  enum class Kind { Quotient, Extension };
  Kind kind;
  int first;   // source of the surjection, or the kernel end of the extension
  int second;  // target of the surjection, or the cokernel end
};

/// Quotient closure inside the catalog, and membership in Fac of the generators
/// for the middle terms of extensions between members.
std::vector<AxiomViolation> torsion_axiom_spotcheck(const TorsionClassModel& t, const std::vector<int>& generators,
                                                    const Catalog& cat);

struct TorsionLattice {
  std::vector<SttPair> pairs;
  std::vector<TorsionClassModel> classes;  // classes[i] = fac_class(pairs[i])
  FinitePoset poset;
};

/// Elements ordered by (class size, member bitmask), ordered by inclusion.
TorsionLattice torsion_lattice(const Catalog& cat);

nlohmann::json stt_to_json(const SttPair& p, const Catalog& cat);
nlohmann::json stt_list_to_json(const std::vector<SttPair>& pairs, const Catalog& cat);
std::string class_label(const TorsionClassModel& t, const Catalog& cat);

}  // namespace qtors
