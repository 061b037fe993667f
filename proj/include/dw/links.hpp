#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "dw/bundles.hpp"
#include "dw/group.hpp"
#include "dw/rational.hpp"

namespace dw {

inline constexpr std::uint64_t kDefaultTupleCap = 1u << 24;
inline constexpr int kDefaultRepDimCap = 2048;

// A braid word on `strands` strands: letters are nonzero signed
// integers with |k| < strands, +k for sigma_k and -k for its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;

  void validate() const;
  int writhe() const;
};

struct LinkInvariantResult {
  std::uint64_t raw_count = 0;  // tuples fixed by the braid action
  Rational normalized{0};      // raw_count / |G|
  int components = 0;          // cycles of the strand permutation
  int writhe = 0;
};

// Underlying strand permutation of the closure (signs ignored) and its
// cycle count.
std::vector<int> strand_permutation(const BraidWord& b);
int closure_components(const BraidWord& b);

// Applies the braid word to a tuple in place, letter by letter, left to
// right: sigma_k maps (.., x_k, x_{k+1}, ..) to (.., x_k x_{k+1} x_k^{-1},
// x_k, ..); sigma_k^{-1} is the exact inverse.
void apply_braid_word(const BraidWord& b, const FiniteGroup& g,
                      std::vector<int>& tuple);

// The full permutation of G^n induced by the braid, as a table indexed
// by the mixed-radix encoding of tuples (first strand most significant).
// Throws ValidationError when |G|^n exceeds the cap.
std::vector<std::uint32_t> braid_tuple_action(
    const BraidWord& b, const FiniteGroup& g,
    std::uint64_t cap = kDefaultTupleCap);

// Counts tuples fixed by the braid action; the closed-braid invariant.
LinkInvariantResult closure_count(const BraidWord& b, const FiniteGroup& g,
                                  std::uint64_t cap = kDefaultTupleCap);
LinkInvariantResult closure_count_serial(const BraidWord& b,
                                         const FiniteGroup& g,
                                         std::uint64_t cap = kDefaultTupleCap);

// Braid-group representation on W^{(x) n}: composes the bundle
// braiding blocks at adjacent slots. Throws ValidationError when
// (total dim W)^n exceeds dim_cap.
Eigen::MatrixXcd braid_rep_matrix(const BraidWord& b,
                                  const EquivariantBundle& w,
                                  int dim_cap = kDefaultRepDimCap);

struct MarkovReport {
  int trials = 0;
  bool pass = true;
  std::string witness;
};

// Verifies exact invariance of closure_count under random conjugations
// (Markov I) and both stabilizations (Markov II). Deterministic for a
// fixed seed.
MarkovReport markov_test(const BraidWord& b, const FiniteGroup& g, int trials,
                         std::uint64_t seed = 0xb7a1d,
                         std::uint64_t cap = kDefaultTupleCap);

// Independent oracle: builds the link-group presentation of the braid
// closure by pushing meridian words through the braid symbolically and
// counts homomorphisms with enumerate_homs. Must equal
// closure_count().raw_count.
std::uint64_t wirtinger_oracle(const BraidWord& b, const FiniteGroup& g,
                               std::uint64_t cap = kDefaultEnumerationCap);

// The presentation used by the oracle (exposed for inspection/tests).
GroupPresentation wirtinger_presentation(const BraidWord& b);

}  // namespace dw
