#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "dw/bundles.hpp"
#include "dw/chars.hpp"
#include "dw/group.hpp"
#include "dw/rational.hpp"

namespace dw {

inline constexpr double kModularTol = 1e-8;

// Torus modular data: the mapping-class-group action on the space of
// invariant functions on commuting pairs, in both the orbit basis and
// the irreducible-label basis.
//
// Conventions fixed here: T pulls back the field map (x,y) -> (x, yx);
// S pulls back (x,y) -> (y, x^{-1}). T_irrep carries the conformal
// weights theta = chi_lambda(x)/chi_lambda(e) without conjugation.
struct ModularData {
  std::vector<std::pair<int, int>> orbit_reps;  // lex-least member
  std::vector<int> orbit_sizes;
  Eigen::MatrixXcd s_orbit, t_orbit;        // 0/1 permutation matrices
  Eigen::MatrixXcd change_of_basis;         // orbits x labels, chi_W values
  Eigen::MatrixXcd s_irrep, t_irrep;
  std::vector<Complex> weights;
  std::vector<IrrepLabel> labels;
  int vacuum = 0;
  std::vector<int> dual_of;  // charge conjugation permutation
  int t_orbit_order = 0;

  int num_labels() const { return static_cast<int>(labels.size()); }
};

// Z_X = #Hom(pi_1(X), G) / #G as an exact rational.
Rational partition_presented(const FiniteGroup& g, const GroupPresentation& p,
                             std::uint64_t cap = kDefaultEnumerationCap);

// dim E(Sigma_genus) = number of conjugation orbits on Hom(pi_1, G);
// the 1/#G metric factor is metadata, not folded in.
long long surface_hilbert_dim(const FiniteGroup& g, int genus,
                              std::uint64_t cap = kDefaultEnumerationCap);

// Builds the orbit basis, the S/T permutation actions, the change of
// basis through double characters, and verifies every ModularData
// invariant (T diagonal = weights, S unitary symmetric, S^4 = 1,
// (ST)^3 = S^2, S^2 = duality permutation, positive vacuum row).
// Throws CheckError on any violation.
ModularData torus_modular_data(const FiniteGroup& g,
                               std::uint64_t seed = kDefaultSeed,
                               double tol = kModularTol);

struct VerlindeReport {
  bool pass = false;
  double max_deviation = 0.0;
  int bad_a = -1, bad_b = -1, bad_c = -1;
};

// Compares the fusion tensor from tensor-decomposition pairing with the
// S-matrix formula. Deviation must stay below tol before rounding.
VerlindeReport verlinde_check(const FiniteGroup& g,
                              std::uint64_t seed = kDefaultSeed,
                              double tol = kIntRoundTol);

struct ThreeTorusReport {
  Rational z_three_torus{0};
  long long torus_hilbert_dim = 0;
  bool pass = false;
};

// Z(T^3) = #Hom(Z^3, G)/#G must equal dim E(T^2) exactly.
ThreeTorusReport three_torus_check(const FiniteGroup& g);

// Commuting pairs (x,y), lexicographic.
std::vector<std::pair<int, int>> commuting_pairs(const FiniteGroup& g);

}  // namespace dw
