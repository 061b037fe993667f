#include <doctest.h>

#include <random>

#include "dw/hopf.hpp"

using dw::Complex;
using dw::FiniteGroup;
using dw::HopfElement;
using dw::QuantumDouble;
using dw::TensorElement;

namespace {

// S3 element indices in lexicographic-permutation order.
constexpr int kT23 = 1, kT12 = 2, kC123 = 3, kC132 = 4, kT13 = 5;

HopfElement random_exact_element(const QuantumDouble& qd, std::uint64_t seed,
                                 int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(0, qd.dim() - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  HopfElement h;
  h.legs = 1;
  for (int i = 0; i < terms; ++i) h.add(idx(rng), double(coeff(rng)));
  h.normalize();
  return h;
}

// One structure constant flipped: the product of two chosen basis
// elements is rerouted to a wrong basis element.
class CorruptedDouble : public QuantumDouble {
 public:
  CorruptedDouble(const FiniteGroup& g, int a, int b, int wrong)
      : QuantumDouble(g), a_(a), b_(b), wrong_(wrong) {}
  int basis_product(int left, int right) const override {
    if (left == a_ && right == b_) return wrong_;
    return QuantumDouble::basis_product(left, right);
  }

 private:
  int a_, b_, wrong_;
};

}  // namespace

TEST_CASE("multiplication on basis symbols") {
  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);

  // <a,a> . <a,e> = <a,a> (support condition a = e a e holds).
  CHECK(qd.multiply(qd.basis(1, 1), qd.basis(1, 0)) == qd.basis(1, 1));
  // <e,g> . <a,h> = 0: support condition e = h a h^{-1} = a fails.
  for (int g = 0; g < 2; ++g)
    for (int h = 0; h < 2; ++h)
      CHECK(qd.multiply(qd.basis(0, g), qd.basis(1, h)).is_zero());

  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  // <(23),(12)> . <(12),(13)> = <(12),(132)>
  CHECK(qs.multiply(qs.basis(kT23, kT12), qs.basis(kT12, kT13)) ==
        qs.basis(kT12, kC132));
}

TEST_CASE("unit element") {
  auto trivial = FiniteGroup::cyclic(1);
  QuantumDouble qt(trivial);
  CHECK(qt.unit() == qt.basis(0, 0));

  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);
  HopfElement want;
  want.legs = 1;
  want.add(qd.flat(0, 0), 1.0);
  want.add(qd.flat(1, 0), 1.0);
  CHECK(qd.unit() == want);

  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  auto one = qs.unit();
  for (int i = 0; i < 100; ++i) {
    auto h = random_exact_element(qs, 1000 + i, 5);
    CHECK(qs.multiply(one, h) == h);
    CHECK(qs.multiply(h, one) == h);
  }
}

TEST_CASE("comultiplication") {
  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);
  TensorElement want;
  want.legs = 2;
  want.add(std::uint64_t(qd.flat(0, 0)) * qd.dim() + qd.flat(1, 0), 1.0);
  want.add(std::uint64_t(qd.flat(1, 0)) * qd.dim() + qd.flat(0, 0), 1.0);
  CHECK(qd.comultiply(qd.basis(1, 0)) == want);

  CHECK(qd.comultiply(qd.unit()) == qd.outer(qd.unit(), qd.unit()));

  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  for (int i = 0; i < qs.dim(); ++i) {
    auto e = qs.basis(i / 6, i % 6);
    auto delta = qs.comultiply(e);
    CHECK(qs.apply_counit(delta, 0) == e);
    CHECK(qs.apply_counit(delta, 1) == e);
  }
}

TEST_CASE("counit") {
  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  for (int g = 0; g < 6; ++g) {
    CHECK(qs.counit(qs.basis(0, g)) == Complex(1.0));
    CHECK(qs.counit(qs.basis(kC123, g)) == Complex(0.0));
  }
  CHECK(qs.counit(qs.unit()) == Complex(1.0));
}

TEST_CASE("antipode") {
  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);
  CHECK(qd.antipode(qd.basis(0, 0)) == qd.basis(0, 0));
  CHECK(qd.antipode(qd.basis(1, 1)) == qd.basis(1, 1));

  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  // S<(12),(123)> = <(23),(132)>
  CHECK(qs.antipode(qs.basis(kT12, kC123)) == qs.basis(kT23, kC132));

  // S^2 = id on all of H, exactly (untwisted double).
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::quaternion(8)}) {
    QuantumDouble q(g);
    for (int i = 0; i < q.dim(); ++i) {
      auto e = q.basis(q.flat_x(i), q.flat_g(i));
      CHECK(q.antipode(q.antipode(e)) == e);
    }
  }
}

TEST_CASE("R matrix") {
  auto trivial = FiniteGroup::cyclic(1);
  QuantumDouble qt(trivial);
  CHECK(qt.r_element() == qt.outer(qt.basis(0, 0), qt.basis(0, 0)));

  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);
  TensorElement want;
  want.legs = 2;
  auto term = [&](int x1, int g1, int x2, int g2) {
    want.add(std::uint64_t(qd.flat(x1, g1)) * qd.dim() + qd.flat(x2, g2), 1.0);
  };
  term(0, 0, 0, 0);
  term(0, 0, 1, 0);
  term(1, 0, 0, 1);
  term(1, 0, 1, 1);
  CHECK(qd.r_element() == want);

  // Inverse exists and is verified on both sides inside r_inverse.
  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  auto rinv = qs.r_inverse();
  CHECK(qs.product(qs.r_element(), rinv) == qs.unit_tensor(2));
  CHECK(qs.product(rinv, qs.r_element()) == qs.unit_tensor(2));
}

TEST_CASE("ribbon element") {
  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);
  HopfElement want;
  want.legs = 1;
  want.add(qd.flat(0, 0), 1.0);
  want.add(qd.flat(1, 1), 1.0);
  CHECK(qd.ribbon_element() == want);

  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  auto v = qs.ribbon_element();
  for (int i = 0; i < qs.dim(); ++i) {
    auto e = qs.basis(i / 6, i % 6);
    CHECK(qs.multiply(v, e) == qs.multiply(e, v));
  }
  CHECK(qs.counit(v) == Complex(1.0));
  CHECK(qs.multiply(v, qs.ribbon_element_inverse()) == qs.unit());
}

TEST_CASE("structure constant count is |G|^3") {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(6),
                        FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
                        FiniteGroup::alternating(4)}) {
    QuantumDouble qd(g);
    long long nonzero = 0;
    for (int i = 0; i < qd.dim(); ++i)
      for (int j = 0; j < qd.dim(); ++j)
        if (qd.basis_product(i, j) >= 0) ++nonzero;
    long long n = g.order();
    CHECK(nonzero == n * n * n);
  }
}

TEST_CASE("coproduct is opposite exactly when abelian") {
  auto z6 = FiniteGroup::cyclic(6);
  QuantumDouble qa(z6);
  for (int i = 0; i < qa.dim(); ++i) {
    auto delta = qa.comultiply(qa.basis(qa.flat_x(i), qa.flat_g(i)));
    CHECK(qa.swap_legs(delta) == delta);
  }

  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  bool some_noncommuting = false;
  for (int i = 0; i < qs.dim() && !some_noncommuting; ++i) {
    auto delta = qs.comultiply(qs.basis(qs.flat_x(i), qs.flat_g(i)));
    some_noncommuting = !(qs.swap_legs(delta) == delta);
  }
  CHECK(some_noncommuting);
}

TEST_CASE("axiom suites pass exactly") {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    QuantumDouble qd(g);
    auto hopf = qd.verify_hopf();
    CHECK(hopf.all_pass());
    for (const auto& r : hopf.results) {
      CAPTURE(r.axiom);
      CHECK(r.pass);
    }
  }
  for (const auto& g : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
    QuantumDouble qd(g);
    auto quasi = qd.verify_quasitriangular();
    CHECK(quasi.all_pass());
    for (const auto& r : quasi.results) {
      CAPTURE(r.axiom);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("corrupted multiplication fails associativity with a witness") {
  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble honest(s3);
  // Pick a pair whose product is a basis element and reroute it.
  int a = -1, b = -1, wrong = -1;
  for (int i = 0; i < honest.dim() && a < 0; ++i)
    for (int j = 0; j < honest.dim() && a < 0; ++j) {
      int p = honest.basis_product(i, j);
      if (p >= 0) {
        a = i;
        b = j;
        wrong = (p + 1) % honest.dim();
      }
    }
  REQUIRE(a >= 0);
  CorruptedDouble corrupted(s3, a, b, wrong);
  auto report = corrupted.verify_hopf();
  CHECK_FALSE(report.all_pass());
  bool assoc_failed = false;
  for (const auto& r : report.results)
    if (r.axiom == "associativity" && !r.pass) {
      assoc_failed = true;
      CHECK(!r.witness.empty());
    }
  CHECK(assoc_failed);
}

TEST_CASE("replacing R by the unit tensor breaks intertwining for S3") {
  auto s3 = FiniteGroup::symmetric(3);
  QuantumDouble qs(s3);
  auto fake_r = qs.unit_tensor(2);
  bool fails = false;
  for (int i = 0; i < qs.dim() && !fails; ++i) {
    auto delta = qs.comultiply(qs.basis(qs.flat_x(i), qs.flat_g(i)));
    fails = !(qs.product(fake_r, delta) ==
              qs.product(qs.swap_legs(delta), fake_r));
  }
  CHECK(fails);
}

TEST_CASE("group mismatch is rejected") {
  QuantumDouble qa((FiniteGroup::cyclic(2)));
  QuantumDouble qb((FiniteGroup::cyclic(3)));
  auto ea = qa.basis(1, 1);
  CHECK_THROWS_AS(qb.multiply(qb.unit(), ea), dw::ValidationError);
  CHECK_THROWS_AS(qb.multiply(ea, qb.unit()), dw::ValidationError);
}

TEST_CASE("exactness flag") {
  auto z2 = FiniteGroup::cyclic(2);
  QuantumDouble qd(z2);
  CHECK(qd.unit().exact);
  CHECK(qd.r_element().exact);
  HopfElement h;
  h.legs = 1;
  h.add(0, Complex(0.5, 0));
  h.normalize();
  CHECK_FALSE(h.exact);
  h.add(0, Complex(0.5, 0));
  h.normalize();
  CHECK(h.exact);
}
