#include <doctest.h>

#include <cmath>
#include <random>

#include "dw/links.hpp"

using dw::BraidWord;
using dw::Complex;
using dw::FiniteGroup;
using dw::Rational;

namespace {

BraidWord make_braid(int strands, std::vector<int> word) {
  BraidWord b;
  b.strands = strands;
  b.word = std::move(word);
  return b;
}

BraidWord random_braid(int strands, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  BraidWord b;
  b.strands = strands;
  for (int i = 0; i < length; ++i)
    b.word.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return b;
}

}  // namespace

TEST_CASE("tuple action basics") {
  auto s3 = FiniteGroup::symmetric(3);

  auto id2 = make_braid(2, {});
  auto perm = dw::braid_tuple_action(id2, s3);
  for (std::size_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == i);

  // sigma then its inverse is the identity.
  for (const auto& g : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
    auto cancel = dw::braid_tuple_action(make_braid(3, {2, -2, 1, -1}), g);
    for (std::size_t i = 0; i < cancel.size(); ++i) CHECK(cancel[i] == i);
  }

  // Abelian: sigma_1 is the coordinate swap.
  auto z4 = FiniteGroup::cyclic(4);
  auto swap = dw::braid_tuple_action(make_braid(2, {1}), z4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(swap[a * 4 + b] == static_cast<std::uint32_t>(b * 4 + a));

  CHECK_THROWS_AS(dw::braid_tuple_action(make_braid(9, {1}),
                                         FiniteGroup::symmetric(4), 1000),
                  dw::ValidationError);
  CHECK_THROWS_AS(make_braid(2, {5}).validate(), dw::ValidationError);
}

TEST_CASE("braid relations hold as permutations") {
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                        FiniteGroup::alternating(4)}) {
    CHECK(dw::braid_tuple_action(make_braid(3, {1, 2, 1}), g) ==
          dw::braid_tuple_action(make_braid(3, {2, 1, 2}), g));
    // far commutation on 4 strands
    CHECK(dw::braid_tuple_action(make_braid(4, {1, 3}), g) ==
          dw::braid_tuple_action(make_braid(4, {3, 1}), g));
  }
}

TEST_CASE("closure counts for the standard links") {
  auto s3 = FiniteGroup::symmetric(3);

  // Unknot: every 1-tuple is fixed.
  auto unknot = dw::closure_count(make_braid(1, {}), s3);
  CHECK(unknot.raw_count == 6);
  CHECK(unknot.normalized == Rational(1));
  CHECK(unknot.components == 1);

  // Hopf link: commuting pairs.
  auto hopf = dw::closure_count(make_braid(2, {1, 1}), s3);
  CHECK(hopf.raw_count == 18);
  CHECK(hopf.components == 2);
  CHECK(hopf.writhe == 2);

  // Trefoil: sigma_1^3 on two strands.
  auto trefoil = dw::closure_count(make_braid(2, {1, 1, 1}), s3);
  CHECK(trefoil.raw_count == 12);
  CHECK(trefoil.components == 1);

  // Same knot as (sigma_1 sigma_2)^2 on three strands.
  auto trefoil3 = dw::closure_count(make_braid(3, {1, 2, 1, 2}), s3);
  CHECK(trefoil3.raw_count == 12);

  // Brute-force oracle for the trefoil: pairs with xyx = yxy.
  long long brute = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      if (s3.mul(s3.mul(x, y), x) == s3.mul(s3.mul(y, x), y)) ++brute;
  CHECK(trefoil.raw_count == static_cast<std::uint64_t>(brute));
}

TEST_CASE("wirtinger oracle matches the fixed-point count") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(dw::wirtinger_oracle(make_braid(1, {}), s3) == 6);
  CHECK(dw::wirtinger_oracle(make_braid(2, {1, 1}), s3) == 18);
  CHECK(dw::wirtinger_oracle(make_braid(2, {1, 1, 1}), s3) == 12);

  for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3),
                        FiniteGroup::dihedral(4)}) {
    for (int trial = 0; trial < 12; ++trial) {
      auto b = random_braid(3, 6, 97 * trial + 5);
      CHECK(dw::wirtinger_oracle(b, g) ==
            dw::closure_count(b, g).raw_count);
    }
  }
}

TEST_CASE("markov moves preserve the invariant") {
  auto s3 = FiniteGroup::symmetric(3);
  auto rep = dw::markov_test(make_braid(2, {1, 1, 1}), s3, 10);
  CHECK(rep.pass);

  // Unknot stabilization: empty 1-strand braid vs sigma_1 on 2 strands.
  auto a = dw::closure_count(make_braid(1, {}), s3);
  auto b = dw::closure_count(make_braid(2, {1}), s3);
  CHECK(a.raw_count == b.raw_count);
  CHECK(b.normalized == Rational(1));

  for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::dihedral(4)}) {
    auto r = dw::markov_test(random_braid(3, 5, 1234), g, 20);
    CHECK(r.pass);
  }
}

TEST_CASE("braid representation matrices") {
  auto s3 = FiniteGroup::symmetric(3);
  auto reg = dw::regular_bundle(s3);

  // Empty word: identity.
  auto id = dw::braid_rep_matrix(make_braid(2, {}), reg);
  CHECK((id - Eigen::MatrixXcd::Identity(36, 36)).cwiseAbs().maxCoeff() <
        1e-12);

  // On the regular bundle the representation is the permutation matrix
  // of the tuple action, so its trace is the closure count.
  for (auto word : {std::vector<int>{1}, {1, 1}, {1, 1, 1}, {1, -1}}) {
    auto b = make_braid(2, word);
    auto m = dw::braid_rep_matrix(b, reg);
    auto perm = dw::braid_tuple_action(b, s3);
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = 0; j < perm.size(); ++j)
        CHECK(std::abs(m(i, j) - Complex(perm[j] == i ? 1.0 : 0.0)) < 1e-12);
    CHECK(std::abs(m.trace() -
                   Complex(double(dw::closure_count(b, s3).raw_count))) <
          1e-9);
  }

  // Braid relation as matrices on W^{(x)3} for every irreducible.
  for (const auto& ir : dw::irreducible_bundles(s3)) {
    auto lhs = dw::braid_rep_matrix(make_braid(3, {1, 2, 1}), ir.bundle);
    auto rhs = dw::braid_rep_matrix(make_braid(3, {2, 1, 2}), ir.bundle);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
  }

  CHECK_THROWS_AS(dw::braid_rep_matrix(make_braid(6, {1}), reg, 100),
                  dw::ValidationError);
}

TEST_CASE("stabilization scales the trace by the conformal weight") {
  auto s3 = FiniteGroup::symmetric(3);
  for (const auto& ir : dw::irreducible_bundles(s3)) {
    // Base cases with nonzero trace: the empty 1-strand braid and the
    // double twist on 2 strands.
    for (auto& [strands, word] :
         std::vector<std::pair<int, std::vector<int>>>{{1, {}},
                                                       {2, {1, 1}}}) {
      auto base = make_braid(strands, word);
      Complex tr_before = dw::braid_rep_matrix(base, ir.bundle).trace();
      if (std::abs(tr_before) < 0.5) continue;
      auto stab_pos = make_braid(strands + 1, word);
      stab_pos.word.push_back(strands);
      auto stab_neg = make_braid(strands + 1, word);
      stab_neg.word.push_back(-strands);
      Complex tr_pos = dw::braid_rep_matrix(stab_pos, ir.bundle).trace();
      Complex tr_neg = dw::braid_rep_matrix(stab_neg, ir.bundle).trace();
      CHECK(std::abs(tr_pos / tr_before - ir.weight) < 1e-8);
      CHECK(std::abs(tr_neg / tr_before - std::conj(ir.weight)) < 1e-8);
    }
  }
}

TEST_CASE("components and writhe metadata") {
  CHECK(dw::closure_components(make_braid(1, {})) == 1);
  CHECK(dw::closure_components(make_braid(2, {1, 1})) == 2);
  CHECK(dw::closure_components(make_braid(2, {1, 1, 1})) == 1);
  CHECK(dw::closure_components(make_braid(3, {})) == 3);
  CHECK(make_braid(2, {1, 1, -1, 1, 1}).writhe() == 3);
}
