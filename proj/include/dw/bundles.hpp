#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "dw/chars.hpp"
#include "dw/group.hpp"

namespace dw {

// G-equivariant hermitian vector bundle over G: a fiber dimension per
// element and unitary lifts A_g(x): W_x -> W_{g x g^{-1}} composing as
// A_{g'}(g x g^{-1}) A_g(x) = A_{g'g}(x). Owns its copy of the group,
// so bundles stay valid independently of the caller's group object.
struct EquivariantBundle {
  FiniteGroup group;
  std::vector<int> fiber_dim;
  std::vector<int> offset;  // basis offset of W_x in the total space, -1 if 0
  int total_dim = 0;
  std::vector<std::vector<Eigen::MatrixXcd>> maps;  // [g][x], empty if dim 0

  const Eigen::MatrixXcd& map_at(int g, int x) const { return maps[g][x]; }
  void compute_offsets();
};

// A fiber-preserving linear map between bundles over the same group,
// one block per base point.
struct BundleMap {
  std::vector<Eigen::MatrixXcd> block;  // [x]: target_dim(x) x source_dim(x)
};

struct IrrepLabel {
  int class_rep = 0;         // canonical conjugacy class representative
  int centralizer_irrep = 0;  // row of the centralizer character table
};

struct Irrep {
  IrrepLabel label;
  EquivariantBundle bundle;
  Complex weight;  // conformal weight chi_lambda(x)/chi_lambda(e)
};

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Checks A_e = 1, the composition law, unitarity and class-constant
// fiber dimensions. Throws CheckError.
void validate_bundle(const EquivariantBundle& w, double tol = 1e-9);

// Fiber C at the identity with trivial action; the monoidal unit.
EquivariantBundle vacuum_bundle(const FiniteGroup& g);
// One-dimensional fibers everywhere, all maps 1; the standard coloring.
EquivariantBundle regular_bundle(const FiniteGroup& g);

// One bundle per (conjugacy class, centralizer irrep) pair. Fibers away
// from the canonical representative are populated by transporting along
// fixed coset representatives (least conjugator; a seeded scramble is
// available to exercise gauge invariance). All reported quantities are
// gauge invariant.
std::vector<Irrep> irreducible_bundles(const FiniteGroup& g,
                                       std::uint64_t seed = kDefaultSeed,
                                       bool scramble_transport = false);

// Summand bookkeeping for (W1 . W2)_z = sum over x1 x2 = z of
// (W1)_{x1} (x) (W2)_{x2}, ordered lexicographically in x1.
struct TensorSummand {
  int x1, x2;
  int offset;  // within the fiber at z
  int d1, d2;
};
std::vector<TensorSummand> tensor_summands(const EquivariantBundle& w1,
                                           const EquivariantBundle& w2, int z);

EquivariantBundle tensor(const EquivariantBundle& w1,
                         const EquivariantBundle& w2);

// Rigid dual: (W*)_x = conj((W)_{x^{-1}}), A*_g(x) = conj(A_g(x^{-1})).
// Matches the charge-conjugation permutation S^2 of the modular data.
EquivariantBundle dual(const EquivariantBundle& w);

// Braiding W1 . W2 -> W2 . W1: w1 (x) w2 |-> A^{W2}_{x1}(w2) (x) w1,
// landing in the (x1 x2 x1^{-1}, x1) summand. A block permutation in
// the deterministic summand order; intertwines the two actions.
BundleMap braiding(const EquivariantBundle& w1, const EquivariantBundle& w2);

// Twist: acts on W_x as A_x(x). On an irreducible this is the scalar
// conformal weight.
BundleMap twist(const EquivariantBundle& w);

// The induced map m1 (x) m2 on tensor bundles, for fiber-preserving
// m1: W1 -> W1 and m2: W2 -> W2.
BundleMap tensor_map(const BundleMap& m1, const BundleMap& m2,
                     const EquivariantBundle& w1, const EquivariantBundle& w2);

BundleMap compose(const BundleMap& after, const BundleMap& before);

bool maps_close(const BundleMap& a, const BundleMap& b, double tol);

// True when F is an intertwiner: F_{gxg^{-1}} A^V_g(x) = A^W_g(x) F_x.
bool is_equivariant(const BundleMap& f, const EquivariantBundle& source,
                    const EquivariantBundle& target, double tol = 1e-9);

// dim of the G-invariant part of sum_x (W1)_x (x) conj((W2)_x), the
// integer part of the 2-Hilbert inner product (the 1/#G measure factor
// is metadata, not folded in). Computed as the trace of the averaging
// projector, block by block:
//   (1/|G|) sum over commuting (x,g) of tr A^1_g(x) conj(tr A^2_g(x)).
// Throws CheckError when the trace is not within tol of an integer.
int pairing_dim(const EquivariantBundle& w1, const EquivariantBundle& w2,
                double tol = kIntRoundTol);

// chi_W(x,g) = tr A_g(x) on W_x for commuting (x,g), zero elsewhere.
Eigen::MatrixXcd double_character(const EquivariantBundle& w);

// N[a][b][c] = pairing_dim(tensor(W_a, W_b), W_c). Symmetry in (a,b)
// and the unit row N[a][vac][c] = delta_{ac} are verified.
std::vector<std::vector<std::vector<int>>> fusion_coefficients(
    const std::vector<Irrep>& irreps, int vacuum_index,
    double tol = kIntRoundTol);

// Index of the vacuum label (identity class, trivial centralizer irrep).
int vacuum_index(const std::vector<Irrep>& irreps, const FiniteGroup& g);

}  // namespace dw
