#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "dw/group.hpp"

namespace dw {

using Complex = std::complex<double>;

// Sparse element of H, H (x) H or H (x) H (x) H. Keys pack one flat
// basis index <x,g> per leg, leg 0 most significant. The exact flag
// means every stored coefficient is integer valued; the axiom suites
// require it and compare with zero tolerance. group_tag identifies the
// algebra the element belongs to (0 = untagged); operations reject
// elements from different algebras.
struct SparseTensor {
  int legs = 1;
  bool exact = true;
  std::uint64_t group_tag = 0;
  std::unordered_map<std::uint64_t, Complex> coeff;

  bool is_zero() const { return coeff.empty(); }
  std::size_t size() const { return coeff.size(); }
  void add(std::uint64_t key, Complex c);
  // Drops exact zeros and recomputes the exactness flag.
  void normalize();
  bool operator==(const SparseTensor& other) const;
};

using HopfElement = SparseTensor;    // legs == 1
using TensorElement = SparseTensor;  // legs == 2

struct AxiomResult {
  std::string axiom;
  bool pass = false;
  std::string witness;  // empty when passing
};

struct VerifyReport {
  std::vector<AxiomResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

// The groupoid algebra of G acting on itself by conjugation, with its
// full quasitriangular ribbon Hopf structure. All structure constants
// live in {0,1}; every operation preserves exactness.
//
// The composition-order convention <x2,g2>.<x1,g1> = <x1, g2 g1> when
// x2 = g1 x1 g1^{-1} is encoded once in basis_product; every other
// operation and every downstream module goes through it.
class QuantumDouble {
 public:
  explicit QuantumDouble(const FiniteGroup& g)
      : g_(g), n_(g.order()), dim_(g.order() * g.order()) {}
  virtual ~QuantumDouble() = default;

  const FiniteGroup& group() const { return g_; }
  int dim() const { return dim_; }
  int flat(int x, int g) const { return x * n_ + g; }
  int flat_x(int i) const { return i / n_; }
  int flat_g(int i) const { return i % n_; }

  // Product of two basis symbols; -1 encodes zero. Virtual so tests can
  // corrupt a single structure constant.
  virtual int basis_product(int left, int right) const {
    int x2 = flat_x(left), g2 = flat_g(left);
    int x1 = flat_x(right), g1 = flat_g(right);
    if (x2 != g_.conjugate(g1, x1)) return -1;
    return flat(x1, g_.mul(g2, g1));
  }

  HopfElement basis(int x, int g, Complex c = 1.0) const;
  HopfElement unit() const;               // sum_x <x,e>
  TensorElement unit_tensor(int legs) const;
  HopfElement multiply(const HopfElement& a, const HopfElement& b) const;
  TensorElement comultiply(const HopfElement& a) const;
  Complex counit(const HopfElement& a) const;
  HopfElement antipode(const HopfElement& a) const;
  TensorElement r_element() const;         // sum <x1,e> (x) <x2,x1>
  // Inverse of R. Left multiplication by R permutes the basis of
  // H (x) H, so the sparse linear system R X = 1 (x) 1 is solved by
  // inverting that permutation; the result is verified on both sides.
  TensorElement r_inverse() const;
  HopfElement ribbon_element() const;          // v = sum <x,x> (Dehn twist)
  HopfElement ribbon_element_inverse() const;  // v^{-1} = sum <x,x^{-1}>

  // Generic leg-wise operations.
  SparseTensor product(const SparseTensor& a, const SparseTensor& b) const;
  SparseTensor outer(const SparseTensor& a, const SparseTensor& b) const;
  SparseTensor apply_delta(const SparseTensor& t, int leg) const;
  SparseTensor apply_counit(const SparseTensor& t, int leg) const;
  SparseTensor apply_antipode(const SparseTensor& t, int leg) const;
  // Multiplies legs l and l+1 into one leg (in that product order).
  SparseTensor contract_adjacent(const SparseTensor& t, int l) const;
  SparseTensor swap_legs(const SparseTensor& t) const;  // 2-leg flip
  // Embeds a 2-leg tensor into `total` legs at positions p1 < p2 with
  // the unit on the remaining legs (R_13 style).
  SparseTensor embed(const SparseTensor& t, int p1, int p2, int total) const;

  // Exact verification of the Hopf axioms on every basis element/pair/
  // triple. Witnesses are the least failing indices.
  VerifyReport verify_hopf() const;
  // Exact verification of quasitriangularity, the Yang-Baxter equation
  // and the ribbon relations.
  VerifyReport verify_quasitriangular() const;

  std::string describe(std::uint64_t key, int legs) const;

 private:
  FiniteGroup g_;
  int n_;
  int dim_;

  std::uint64_t leg_stride(int legs) const;
};

}  // namespace dw
