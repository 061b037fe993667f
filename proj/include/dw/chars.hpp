#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "dw/group.hpp"
#include "dw/rational.hpp"

namespace dw {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;
inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kIntRoundTol = 1e-6;

// A central (class) function, one value per conjugacy class.
struct ClassFunction {
  std::vector<Complex> values;
};

// Complex character table. Rows are irreducible characters sorted by
// (degree, then lexicographic value order); columns follow the class
// order of ConjClassData (ascending least representative).
struct CharacterTable {
  FiniteGroup group;
  ConjClassData classes;
  std::vector<int> class_sizes;
  Eigen::MatrixXcd chars;     // k x k, chars(i, j) = chi_i on class j
  std::vector<int> degrees;   // chi_i(1), exact integers
  int identity_class = 0;

  int num_classes() const { return static_cast<int>(degrees.size()); }
  // Index of the trivial (all-ones) character row.
  int trivial_row() const;
  Complex value(int row, int element) const {
    return chars(row, classes.class_of[element]);
  }
};

// Burnside method: simultaneously diagonalizes the class multiplication
// matrices via a seeded random integer combination, recovers degrees
// from the central characters, and rescales to characters. Retries with
// fresh combinations on degenerate splits; throws CheckError if the
// orthogonality residual never meets the tolerance.
CharacterTable character_table(const FiniteGroup& g,
                               std::uint64_t seed = kDefaultSeed,
                               double tol = kDefaultTolerance);

// A subgroup re-indexed as a standalone group, with the embedding.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> elements;  // subgroup index -> parent element
  std::vector<int> index_of;  // parent element -> subgroup index or -1
};

Subgroup centralizer_subgroup(const FiniteGroup& g, int x);

CharacterTable centralizer_character_table(const FiniteGroup& g, int x,
                                           std::uint64_t seed = kDefaultSeed,
                                           double tol = kDefaultTolerance);

// Pair-of-pants product on central functions, with the 1/|G| counting
// measure inside: (f1*f2)(z) = (1/|G|) sum_{x y = z} f1([x]) f2([y]).
// The unit for this normalization is |G| * delta_e.
ClassFunction class_convolution(const ClassFunction& f1,
                                const ClassFunction& f2, const FiniteGroup& g,
                                const ConjClassData& classes);

// The primitive idempotents of the convolution above: e_chi = chi(1)*chi.
// Each is verified idempotent and pairwise annihilating within tol.
std::vector<ClassFunction> convolution_idempotents(const CharacterTable& ct,
                                                   double tol = 1e-8);

// Genus-g partition function of the 2d theory as an exact rational:
// Z(Sigma_g) = sum_chi (|G| / chi(1))^{2g-2}.
Rational surface_partition_characters(const CharacterTable& ct, int genus);
Rational surface_partition_characters(const FiniteGroup& g, int genus,
                                      std::uint64_t seed = kDefaultSeed);

// Explicit unitary matrices for irreducible representation `row` of the
// table, indexed by group element. Built by projecting the regular
// representation with the character projector and splitting copies with
// a seeded random equivariant hermitian operator. Deterministic for a
// fixed seed; gauge (basis) choices do not affect any reported
// quantity downstream.
std::vector<Eigen::MatrixXcd> irrep_matrices(const CharacterTable& ct, int row,
                                             std::uint64_t seed = kDefaultSeed);

}  // namespace dw
