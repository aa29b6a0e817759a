#pragma once

// The Kronecker quivers near their preprojective and preinjective ends, and
// pairs of bricks on wild three-vertex quivers with the towers they generate.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qtors/report.hpp"
#include "qtors/rep.hpp"

namespace qtors {

Quiver kronecker_quiver(int n);

struct KroneckerWindow {
  int n = 0;
  int depth = 0;
  Quiver quiver;
  std::vector<Rep> a;  // a[0] = A_1 = S_2, a[1] = A_2 = P_1, a[i+2] = C- a[i]
  std::vector<Rep> b;  // b[0] = B_1 = S_1, b[1] = B_2 = I_2, b[i+2] = C+ b[i]
};

KroneckerWindow kronecker_window(int n, int depth = 6);
/// Dimension vectors, bricks, rigidity of consecutive pairs, and the chain
/// Fac(A_{i-1} + A_i) restricted to the window.
Report kronecker_chain_check(const KroneckerWindow& w);

enum class WitnessCase { I, II, III, IV, V, VI, Simple };

std::string case_name(WitnessCase c);

struct WildWitness {
  Quiver quiver;
  Rep m, n;
  WitnessCase kind = WitnessCase::I;
  int a = 0, b = 0, c = 0;
  /// The case (i) pair on three_vertex_quiver(a, b, c) that m and n come from.
  Rep base_m, base_n;
};

/// Multiplicities (x, y, z) of 1->2, 2->3, 1->3 for the given case.
std::array<int, 3> case_multiplicities(WitnessCase kind, int a, int b, int c);
Quiver case_quiver(WitnessCase kind, int a, int b, int c);

struct CaseMatch {
  WitnessCase kind;
  int a, b, c;
  std::vector<int> order;  // order[k] = vertex of q placed at position k
};

/// First case (in order (i)..(vi)) fitting q under some topological labelling.
std::optional<CaseMatch> detect_case(const Quiver& q);

/// Requires a connected wild quiver on three vertices. Throws QuiverError on
/// bad input and std::logic_error when the pair fails verification.
WildWitness build_wild_witness(const Quiver& q);
WildWitness build_wild_witness(WitnessCase kind, int a, int b, int c);
/// M = S_2 and N of dimension (1, 0, c) on three_vertex_quiver(a, b, c).
WildWitness simple_witness(int a, int b, int c);

Report verify_witness(const WildWitness& w);

struct TowerStep {
  Rep module;
  Morphism to_top;      // X_l -> top
  bool top_is_m = true;
  bool split = false;   // of the extension producing this step
  bool pushforward_nonzero = true;
};

/// X_1 = M, then X_{l+1} a non-split extension of the module not on top by X_l.
std::vector<TowerStep> uniserial_tower(const WildWitness& w, int length);
Report tower_report(const WildWitness& w, const std::vector<TowerStep>& tower);
/// X_{l+1} lies outside Fac(X_1 + ... + X_l).
Report nonff_evidence(const WildWitness& w, const std::vector<TowerStep>& tower);

struct EulerScan {
  std::int64_t points = 0;
  std::int64_t agree = 0;
  std::int64_t negative = 0;
  std::vector<std::array<std::int64_t, 3>> failures;
};

/// (a, b, c) over [2, amax] x [1, bmax] x [0, cmax].
EulerScan euler_scan(int amax, int bmax, int cmax);

}  // namespace qtors
