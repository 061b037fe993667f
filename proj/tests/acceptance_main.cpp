// Acceptance suite: every criterion prints one PASS/FAIL line; the
// process exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dw/bundles.hpp"
#include "dw/chars.hpp"
#include "dw/group.hpp"
#include "dw/hopf.hpp"
#include "dw/links.hpp"
#include "dw/tqft.hpp"

namespace {

using dw::FiniteGroup;

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

void report(int criterion, bool pass, const std::string& what,
            double seconds) {
  std::printf("criterion %2d: %s  %s (%.1f s)\n", criterion,
              pass ? "PASS" : "FAIL", what.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::vector<FiniteGroup> criterion_groups() {
  return {FiniteGroup::cyclic(2),     FiniteGroup::cyclic(3),
          FiniteGroup::cyclic(4),     FiniteGroup::cyclic(6),
          FiniteGroup::symmetric(3),  FiniteGroup::dihedral(4),
          FiniteGroup::quaternion(8), FiniteGroup::alternating(4),
          FiniteGroup::symmetric(4)};
}

// 1. Hopf / quasitriangular / ribbon suites, exact, < 60 s total.
void criterion1() {
  Timer t;
  bool pass = true;
  std::string detail = "exact axiom suites:";
  for (const auto& g : criterion_groups()) {
    dw::QuantumDouble qd(g);
    bool ok = qd.verify_hopf().all_pass() &&
              qd.verify_quasitriangular().all_pass();
    pass = pass && ok;
    detail += " " + g.name() + (ok ? "" : "(FAIL)");
  }
  double secs = t.seconds();
  if (secs >= 60) {
    pass = false;
    detail += " [over 60 s budget]";
  }
  report(1, pass, detail, secs);
}

// 2. Exact rational equality of the two partition-function routes.
void criterion2() {
  Timer t;
  bool pass = true;
  std::string detail = "genus-2";
  for (const auto& g : criterion_groups()) {
    auto ct = dw::character_table(g);
    bool ok = dw::partition_presented(g, dw::surface_group_presentation(2)) ==
              dw::surface_partition_characters(ct, 2);
    if (g.order() <= 8)
      ok = ok &&
           dw::partition_presented(g, dw::surface_group_presentation(3)) ==
               dw::surface_partition_characters(ct, 3);
    if (g.order() == 6 && !g.is_abelian())
      ok = ok && dw::surface_partition_characters(ct, 2) == dw::Rational(81);
    pass = pass && ok;
    if (!ok) detail += " " + g.name() + "(FAIL)";
  }
  detail += " (and genus-3 for |G| <= 8), S3 value 81";
  double secs = t.seconds();
  if (secs >= 120) {
    pass = false;
    detail += " [over 120 s budget]";
  }
  report(2, pass, detail, secs);
}

// 3. Label count = torus Hilbert dimension = centralizer irrep count.
void criterion3() {
  Timer t;
  bool pass = true;
  std::string detail = "label triangulation";
  for (const auto& g : criterion_groups()) {
    auto irreps = dw::irreducible_bundles(g);
    long long hdim = dw::surface_hilbert_dim(g, 1);
    long long via_centralizers = 0;
    for (int rep : dw::conjugacy_data(g).representatives)
      via_centralizers += dw::centralizer_character_table(g, rep).num_classes();
    bool ok = static_cast<long long>(irreps.size()) == hdim &&
              hdim == via_centralizers;
    if (g.order() == 6 && !g.is_abelian()) ok = ok && hdim == 8;
    if (g.is_abelian())
      ok = ok && hdim == static_cast<long long>(g.order()) * g.order();
    pass = pass && ok;
    if (!ok) detail += " " + g.name() + "(FAIL)";
  }
  report(3, pass, detail, t.seconds());
}

// 4. Z(T^3) = dim E(T^2), exactly.
void criterion4() {
  Timer t;
  bool pass = true;
  std::string detail = "three-torus gluing";
  for (const auto& g : criterion_groups()) {
    try {
      auto rep = dw::three_torus_check(g);
      bool ok = rep.pass;
      if (g.order() == 6 && !g.is_abelian())
        ok = ok && rep.z_three_torus == dw::Rational(8) &&
             rep.torus_hilbert_dim == 8;
      pass = pass && ok;
    } catch (const std::exception&) {
      pass = false;
      detail += " " + g.name() + "(FAIL)";
    }
  }
  report(4, pass, detail, t.seconds());
}

// 5. Modular data invariants at 1e-8 for every criterion-1 group.
void criterion5() {
  Timer t;
  bool pass = true;
  std::string detail = "modular data (T=weights, S unitary+symmetric, "
                       "S^4=1, (ST)^3=S^2, S^2=duality)";
  for (const auto& g : criterion_groups()) {
    try {
      (void)dw::torus_modular_data(g);  // throws on any violation
    } catch (const std::exception& e) {
      pass = false;
      detail += " " + g.name() + "(" + e.what() + ")";
    }
  }
  report(5, pass, detail, t.seconds());
}

// 6. Verlinde formula matches the fusion tensor for S3 and D4.
void criterion6() {
  Timer t;
  bool pass = true;
  double worst = 0;
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::dihedral(4)}) {
    try {
      auto rep = dw::verlinde_check(g);
      worst = std::max(worst, rep.max_deviation);
      pass = pass && rep.pass;
    } catch (const std::exception&) {
      pass = false;
    }
  }
  std::string detail =
      "Verlinde vs fusion, S3 and D4 full tensors, max deviation " +
      std::to_string(worst);
  double secs = t.seconds();
  if (secs >= 60) {
    pass = false;
    detail += " [over 60 s budget]";
  }
  report(6, pass, detail, secs);
}

// 7. Schur orthogonality of the irreducible bundles.
void criterion7() {
  Timer t;
  bool pass = true;
  std::string detail = "pairing_dim(W_a, W_b) = delta_ab";
  for (const auto& g : criterion_groups()) {
    auto irreps = dw::irreducible_bundles(g);
    for (std::size_t a = 0; a < irreps.size() && pass; ++a)
      for (std::size_t b = 0; b < irreps.size() && pass; ++b)
        if (dw::pairing_dim(irreps[a].bundle, irreps[b].bundle) !=
            (a == b ? 1 : 0)) {
          pass = false;
          detail += " " + g.name() + "(FAIL)";
        }
  }
  report(7, pass, detail, t.seconds());
}

// 8. Link layer: Markov invariance, standard values, Wirtinger oracle.
void criterion8() {
  Timer t;
  bool pass = true;
  std::string detail;

  auto s3 = FiniteGroup::symmetric(3);
  dw::BraidWord trefoil2{2, {1, 1, 1}};
  dw::BraidWord trefoil3{3, {1, 2, 1, 2}};
  dw::BraidWord hopf{2, {1, 1}};
  dw::BraidWord unknot{1, {}};
  if (dw::closure_count(trefoil2, s3).raw_count != 12 ||
      dw::closure_count(trefoil3, s3).raw_count != 12) {
    pass = false;
    detail += " trefoil!=12";
  }
  if (dw::closure_count(hopf, s3).raw_count != 18) {
    pass = false;
    detail += " hopf!=18";
  }
  if (dw::closure_count(unknot, s3).normalized != dw::Rational(1)) {
    pass = false;
    detail += " unknot!=1";
  }

  std::mt19937_64 rng(0xacce97);
  int trials_done = 0;
  for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::symmetric(3),
                        FiniteGroup::dihedral(4)}) {
    for (int trial = 0; trial < 50 && pass; ++trial) {
      std::uniform_int_distribution<int> nstr(2, 4), len(1, 8), sign(0, 1);
      dw::BraidWord b;
      b.strands = nstr(rng);
      std::uniform_int_distribution<int> gen(1, b.strands - 1);
      int l = len(rng);
      for (int i = 0; i < l; ++i)
        b.word.push_back(gen(rng) * (sign(rng) ? 1 : -1));

      auto markov = dw::markov_test(b, g, 1, rng());
      if (!markov.pass) {
        pass = false;
        detail += " markov(" + g.name() + "): " + markov.witness;
      }
      if (dw::wirtinger_oracle(b, g) != dw::closure_count(b, g).raw_count) {
        pass = false;
        detail += " oracle(" + g.name() + ")";
      }
      ++trials_done;
    }
  }
  detail = "trefoil/hopf/unknot values, " + std::to_string(trials_done) +
           " randomized Markov+oracle trials" + detail;
  report(8, pass, detail, t.seconds());
}

// 9. Ribbon-braiding compatibility, algebraic and bundle-level.
void criterion9() {
  Timer t;
  bool pass = true;
  std::string detail = "Delta(v)(R21 R) = v(x)v exact; twist(W1.W2) "
                       "factorizes for S3 and Q8 pairs";
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::quaternion(8)}) {
    dw::QuantumDouble qd(g);
    auto r = qd.r_element();
    auto monodromy = qd.product(qd.swap_legs(r), r);
    auto v = qd.ribbon_element_inverse();  // RT-normalized ribbon element
    bool alg = qd.product(qd.comultiply(v), monodromy) == qd.outer(v, v);
    auto vt = qd.ribbon_element();
    alg = alg && qd.comultiply(vt) ==
                     qd.product(monodromy, qd.outer(vt, vt));
    if (!alg) {
      pass = false;
      detail += " algebra(" + g.name() + ")";
    }

    auto irreps = dw::irreducible_bundles(g);
    for (const auto& ia : irreps)
      for (const auto& ib : irreps) {
        auto lhs = dw::twist(dw::tensor(ia.bundle, ib.bundle));
        auto rhs = dw::compose(
            dw::braiding(ib.bundle, ia.bundle),
            dw::compose(dw::braiding(ia.bundle, ib.bundle),
                        dw::tensor_map(dw::twist(ia.bundle),
                                       dw::twist(ib.bundle), ia.bundle,
                                       ib.bundle)));
        if (!dw::maps_close(lhs, rhs, 1e-9)) {
          pass = false;
          detail += " bundle(" + g.name() + ")";
        }
      }
  }
  report(9, pass, detail, t.seconds());
}

// 10. Character-table quality for every named-family group of order<=48.
void criterion10() {
  Timer t;
  bool pass = true;
  int tables = 0;
  std::string detail;
  std::vector<FiniteGroup> gs;
  for (int n = 1; n <= 48; ++n) gs.push_back(FiniteGroup::cyclic(n));
  for (int n = 1; n <= 24; ++n) gs.push_back(FiniteGroup::dihedral(n));
  for (int n = 1; n <= 4; ++n) gs.push_back(FiniteGroup::symmetric(n));
  for (int n = 1; n <= 4; ++n) gs.push_back(FiniteGroup::alternating(n));
  for (int m = 2; m <= 12; ++m) gs.push_back(FiniteGroup::quaternion(4 * m));
  for (const auto& g : gs) {
    try {
      // character_table enforces row/column orthogonality at 1e-9.
      auto ct = dw::character_table(g, dw::kDefaultSeed, 1e-9);
      long long sum = 0;
      for (int d : ct.degrees) sum += static_cast<long long>(d) * d;
      if (sum != g.order()) {
        pass = false;
        detail += " " + g.name() + "(degree sum)";
      }
      ++tables;
    } catch (const std::exception&) {
      pass = false;
      detail += " " + g.name() + "(FAIL)";
    }
  }
  detail = std::to_string(tables) +
           " tables, orthogonality within 1e-9, degree sums exact" + detail;
  report(10, pass, detail, t.seconds());
}

}  // namespace

int main() {
  Timer total;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("acceptance: %s (%d/10 passed, %.1f s total)\n",
              failures == 0 ? "PASS" : "FAIL", 10 - failures, total.seconds());
  return failures;
}
