#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtors {

/// Arrow between 0-based vertices. The text and JSON formats use 1-based labels.
struct Arrow {
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

class QuiverError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Loop, VertexRange, Cyclic, Disconnected, Precondition };

  QuiverError(Kind kind, const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Finite directed multigraph without loops. Parallel arrows are repeated
/// entries of `arrows()`; the arrow order is significant for representations.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrow_count() const { return arrows_.size(); }

  int multiplicity(int source, int target) const;
  std::vector<std::size_t> incoming(int v) const;
  std::vector<std::size_t> outgoing(int v) const;
  bool is_sink(int v) const;
  bool is_source(int v) const;

  bool is_acyclic() const;
  bool is_connected() const;
  /// Sources first. Throws QuiverError(Cyclic) on a cyclic quiver.
  std::vector<int> topological_order() const;

  /// Same arrows, incident arrows of `v` reversed in place.
  Quiver reflected_at(int v) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
};

Quiver opposite(const Quiver& q);

struct Subquiver {
  Quiver quiver;
  std::vector<int> vertices;  // new vertex i is old vertex vertices[i]
};

/// Full subquiver on a vertex set, relabelled in increasing order.
Subquiver full_subquiver(const Quiver& q, const std::vector<int>& vertices);

/// Parses the line-oriented quiver format:
///
///     # comment
///     vertices 3
///     arrow 1 2 *2
///     arrow 2 3
///
/// A cyclic result raises QuiverError(Cyclic) unless `require_acyclic` is false.
Quiver parse_quiver(const std::string& text, bool require_acyclic = true);
std::string to_dsl(const Quiver& q);

/// Representation class of the underlying graph.
struct QuiverClass {
  enum class Family { Dynkin, ExtendedDynkin, Wild };
  Family family = Family::Wild;
  char series = 0;  // 'A', 'D', 'E'; 0 for wild
  int rank = 0;     // subscript, e.g. 3 for A3 or ~A3

  std::string name() const;
  friend bool operator==(const QuiverClass&, const QuiverClass&) = default;
};

std::string family_name(QuiverClass::Family f);

/// Classification through the Tits form, cross-checked against graph shape.
QuiverClass classify(const Quiver& q);
/// Definiteness of the symmetrized Tits form only.
QuiverClass::Family classify_by_tits_form(const Quiver& q);
/// Recognition of the ADE and affine ADE graphs only.
QuiverClass classify_by_graph(const Quiver& q);

struct WitnessSubquiver {
  std::vector<int> vertices;  // 0-based, increasing
  QuiverClass kind;
};

/// Smallest full subquiver that is extended Dynkin with at least 3 vertices or
/// wild with exactly 3 vertices; ties go to the lexicographically first vertex
/// set. Empty exactly when q is Dynkin or has at most 2 vertices.
std::optional<WitnessSubquiver> find_witness_subquiver(const Quiver& q);

struct LatticeDecision {
  bool lattice = false;
  int vertex_count = 0;
  QuiverClass quiver_class;
  std::optional<WitnessSubquiver> witness;
  std::string certificate;
};

/// ftors(kQ) is a lattice iff Q is Dynkin or has at most two vertices.
LatticeDecision decide_lattice_property(const Quiver& q);

}  // namespace qtors
