#pragma once

// Representations of acyclic quivers over the rationals, and the module
// theory of kQ built on them.

#include <cstdint>
#include <optional>
#include <vector>

#include "qtors/forms.hpp"
#include "qtors/linalg.hpp"
#include "qtors/quiver.hpp"

namespace qtors {

/// One matrix per vertex; entry v has shape dim Y_v x dim X_v for f : X -> Y.
using Morphism = std::vector<RationalMatrix>;

/// A representation: a vector space Q^{dims[v]} per vertex and a matrix of
/// shape dims[target] x dims[source] per arrow, in arrow order.
class Rep {
 public:
  Rep() = default;
  Rep(Quiver quiver, IntVector dims, std::vector<RationalMatrix> maps);

  static Rep zero(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  const IntVector& dims() const { return dims_; }
  Index dim(int v) const { return static_cast<Index>(dims_(v)); }
  std::int64_t total_dim() const { return dims_.sum(); }
  bool is_zero() const { return total_dim() == 0; }

  const std::vector<RationalMatrix>& maps() const { return maps_; }
  const RationalMatrix& map(std::size_t arrow) const { return maps_[arrow]; }

  friend bool operator==(const Rep& a, const Rep& b);

 private:
  Quiver quiver_;
  IntVector dims_;
  std::vector<RationalMatrix> maps_;
};

enum class StandardKind { Simple, Projective, Injective };

Rep simple_rep(const Quiver& q, int v);
/// Path basis: at w the paths v -> w ordered by length, then arrow sequence.
Rep projective_rep(const Quiver& q, int v);
Rep injective_rep(const Quiver& q, int v);
Rep standard_rep(const Quiver& q, StandardKind kind, int v);

Rep direct_sum(const Rep& a, const Rep& b);
Rep direct_sum(const Quiver& q, const std::vector<Rep>& summands);

/// Moves X along a vertex bijection (`vertex_map[old] = new`) onto `target`,
/// pairing parallel arrows in order.
Rep transport(const Rep& x, const Quiver& target, const std::vector<int>& vertex_map);

// ---------------------------------------------------------------------------
// Morphisms

bool is_morphism(const Rep& x, const Rep& y, const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism identity_morphism(const Rep& x);
Morphism zero_morphism(const Rep& x, const Rep& y);
Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs);

/// Hom(X, Y) as the solution space of the intertwining equations
/// Y_a phi_s = phi_t X_a. Morphisms are vectorised vertex by vertex, row-major.
struct HomSpace {
  std::vector<Morphism> basis;
  Subspace<Rational> space;
  Index dim() const { return static_cast<Index>(basis.size()); }
  RationalVector coordinates(const Morphism& f) const;
};

/// The solution space alone, without unpacking it into morphisms.
Subspace<Rational> hom_solutions(const Rep& x, const Rep& y);
HomSpace hom_space(const Rep& x, const Rep& y);
std::vector<Morphism> hom_basis(const Rep& x, const Rep& y);
Index hom_dim(const Rep& x, const Rep& y);

SparseVector<Rational> vectorize(const Morphism& f);

// ---------------------------------------------------------------------------
// Ext^1

/// dim Ext^1(X, Y) = dim Hom(X, Y) - <dim X, dim Y>.
std::int64_t ext1_dim(const Rep& x, const Rep& y);
std::int64_t ext1_dim(const FormsContext& ctx, const Rep& x, const Rep& y);

/// Minimal projective presentation 0 -> K -> P0 -> Z -> 0.
struct Presentation {
  Rep projective;                  // P0 = sum of P_{v} over `summand_vertices`
  std::vector<int> summand_vertices;
  std::vector<RationalVector> generator_images;  // image in Z of each summand's top
  Morphism epi;                    // P0 -> Z
  Rep kernel;                      // K, projective since kQ is hereditary
  Morphism inclusion;              // K -> P0
};

Presentation projective_presentation(const Rep& z);

/// The morphism sum_k P_{v_k} -> Y sending the top of summand k to images[k].
Morphism from_projective_sum(const Quiver& q, const std::vector<int>& summand_vertices,
                             const std::vector<RationalVector>& images, const Rep& y);

/// Ext^1(Z, X) as Hom(K, X) modulo the restrictions of Hom(P0, X).
class Ext1Classes {
 public:
  Ext1Classes(const Rep& x, const Rep& z);

  const Presentation& presentation() const { return presentation_; }
  /// Cocycles K -> X representing a basis of Ext^1(Z, X), taken greedily from
  /// the basis of Hom(K, X).
  const std::vector<Morphism>& cocycles() const { return cocycles_; }
  Index dim() const { return static_cast<Index>(cocycles_.size()); }
  /// True when `cocycle` : K -> X is the restriction of some P0 -> X.
  bool is_coboundary(const Morphism& cocycle) const;

 private:
  Presentation presentation_;
  std::vector<Morphism> cocycles_;
  RowReducer<Rational> coboundaries_;
};

Ext1Classes ext1_via_presentation(const Rep& x, const Rep& z);

/// Middle term of 0 -> X -> E -> Z -> 0 obtained by pushing the presentation
/// of Z out along `cocycle`.
struct Extension {
  Rep middle;
  Morphism inclusion;   // X -> E
  Morphism projection;  // E -> Z
  bool split = false;
};

Extension extension_realize(const Rep& x, const Rep& z, const Ext1Classes& ext, const Morphism& cocycle);

// ---------------------------------------------------------------------------
// Functors

/// BGP reflection C+ at a sink (kernel) or C- at a source (cokernel).
Rep reflect_at_sink(const Rep& x, int v);
Rep reflect_at_source(const Rep& x, int v);
/// Dispatches to the sink reflection when v is a sink, else to the source one.
Rep reflect(const Rep& x, int v);

/// The k-dual, a representation of the opposite quiver.
Rep dualize(const Rep& x);

/// Coxeter functor C+ (sink reflections, sinks first); kills projectives.
Rep ar_translate(const Rep& x);
/// Coxeter functor C- (source reflections, sources first); kills injectives.
Rep ar_translate_inverse(const Rep& x);

// ---------------------------------------------------------------------------
// Predicates

/// Vertex dimensions of the trace of the generators in X.
IntVector trace_dims(const std::vector<std::vector<Morphism>>& homs_into_x, const Rep& x);
IntVector trace_dims(const std::vector<Rep>& generators, const Rep& x);
/// X in Fac M: the images of all maps M -> X span X.
bool gen_contains(const Rep& m, const Rep& x);
bool gen_contains(const std::vector<Rep>& generators, const Rep& x);

/// Some map X -> Y is surjective at every vertex. Random combinations of the
/// Hom basis first, then integer combinations with coefficients in [-2, 2].
bool exists_surjection(const Rep& x, const Rep& y, std::uint64_t seed = 0);
bool is_isomorphic(const Rep& x, const Rep& y, std::uint64_t seed = 0);

bool is_brick(const Rep& x);
bool is_rigid(const Rep& x);
bool is_tau_rigid(const Rep& x);

enum class IndecomposableCertificate { Brick, Knitting, LocalEndomorphisms, Uncertified };

/// Brick if dim End = 1; Knitting when the caller vouches for provenance;
/// LocalEndomorphisms when End modulo its trace-form radical is 1-dimensional.
IndecomposableCertificate certify_indecomposable(const Rep& x, bool from_knitting = false);

/// One representative per isoclass for a Dynkin quiver, sorted by total
/// dimension and then dimension vector. Built by applying C- to projectives.
std::vector<Rep> enumerate_indecomposables(const Quiver& q);

std::int64_t positive_root_count(const QuiverClass& c);

}  // namespace qtors
