#include "dw/tqft.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace dw {

Rational partition_presented(const FiniteGroup& g, const GroupPresentation& p,
                             std::uint64_t cap) {
  auto homs = enumerate_homs(p, g, cap);
  return Rational(static_cast<std::int64_t>(homs.size()), g.order());
}

long long surface_hilbert_dim(const FiniteGroup& g, int genus,
                              std::uint64_t cap) {
  auto homs = enumerate_homs(surface_group_presentation(genus), g, cap);
  return static_cast<long long>(hom_orbits(homs, g).size());
}

std::vector<std::pair<int, int>> commuting_pairs(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g.commutes(x, y)) out.emplace_back(x, y);
  return out;
}

namespace {

struct OrbitBasis {
  std::vector<std::pair<int, int>> reps;
  std::vector<int> sizes;
  std::map<std::pair<int, int>, int> orbit_of;
};

OrbitBasis pair_orbits(const FiniteGroup& g) {
  OrbitBasis b;
  auto pairs = commuting_pairs(g);
  for (const auto& p : pairs) {
    if (b.orbit_of.count(p)) continue;
    int id = static_cast<int>(b.reps.size());
    b.reps.push_back(p);  // pairs come in lexicographic order
    int size = 0;
    for (int h = 0; h < g.order(); ++h) {
      std::pair<int, int> q{g.conjugate(h, p.first), g.conjugate(h, p.second)};
      if (b.orbit_of.emplace(q, id).second) ++size;
    }
    b.sizes.push_back(size);
  }
  return b;
}

}  // namespace

ModularData torus_modular_data(const FiniteGroup& g, std::uint64_t seed,
                               double tol) {
  const int n = g.order();
  ModularData md;

  OrbitBasis basis = pair_orbits(g);
  const int k = static_cast<int>(basis.reps.size());
  md.orbit_reps = basis.reps;
  md.orbit_sizes = basis.sizes;

  // Orbit permutations induced by the field maps; both maps commute
  // with simultaneous conjugation so they act on orbits.
  std::vector<int> t_perm(k), s_perm(k);
  for (int o = 0; o < k; ++o) {
    auto [x, y] = basis.reps[o];
    t_perm[o] = basis.orbit_of.at({x, g.mul(y, x)});
    s_perm[o] = basis.orbit_of.at({y, g.inv(x)});
  }
  // Pullback operators: (T f)(x,y) = f(x, yx), so row o has its 1 in
  // column t_perm[o].
  md.t_orbit = Eigen::MatrixXcd::Zero(k, k);
  md.s_orbit = Eigen::MatrixXcd::Zero(k, k);
  for (int o = 0; o < k; ++o) {
    md.t_orbit(o, t_perm[o]) = 1.0;
    md.s_orbit(o, s_perm[o]) = 1.0;
  }

  // T has finite order dividing the exponent of G.
  {
    std::vector<int> p(k), id(k);
    for (int i = 0; i < k; ++i) id[i] = i;
    p = t_perm;
    long long expo = g.exponent();
    int order = 1;
    while (p != id) {
      std::vector<int> q(k);
      for (int i = 0; i < k; ++i) q[i] = t_perm[p[i]];
      p = std::move(q);
      ++order;
      if (order > 2 * expo)
        throw CheckError("T action order exceeds twice the group exponent");
    }
    if (expo % order != 0)
      throw CheckError("T action order does not divide the group exponent");
    md.t_orbit_order = order;
  }

  auto irreps = irreducible_bundles(g, seed);
  const int m = static_cast<int>(irreps.size());
  if (m != k)
    throw CheckError("label count " + std::to_string(m) +
                     " does not match the orbit count " + std::to_string(k));
  md.labels.resize(m);
  md.weights.resize(m);
  for (int i = 0; i < m; ++i) {
    md.labels[i] = irreps[i].label;
    md.weights[i] = irreps[i].weight;
  }
  md.vacuum = vacuum_index(irreps, g);

  // Columns are double characters evaluated on orbit representatives.
  md.change_of_basis.resize(k, m);
  for (int i = 0; i < m; ++i) {
    Eigen::MatrixXcd chi = double_character(irreps[i].bundle);
    for (int o = 0; o < k; ++o)
      md.change_of_basis(o, i) = chi(basis.reps[o].first, basis.reps[o].second);
    // Double characters are constant on orbits; spot-verify.
    for (int o = 0; o < k; ++o) {
      auto [x, y] = basis.reps[o];
      for (int h = 0; h < n; ++h) {
        if (std::abs(chi(g.conjugate(h, x), g.conjugate(h, y)) -
                     chi(x, y)) > tol)
          throw CheckError("double character is not a class function on "
                           "commuting pairs");
      }
    }
  }

  // Inverse from orthonormality under the (1/|G|) sum over pairs.
  Eigen::MatrixXcd inv(m, k);
  for (int i = 0; i < m; ++i)
    for (int o = 0; o < k; ++o)
      inv(i, o) = double(basis.sizes[o]) / double(n) *
                  std::conj(md.change_of_basis(o, i));
  if ((inv * md.change_of_basis - Eigen::MatrixXcd::Identity(m, m))
          .cwiseAbs()
          .maxCoeff() > tol)
    throw CheckError("double characters failed to span the orbit basis");

  md.s_irrep = inv * md.s_orbit * md.change_of_basis;
  md.t_irrep = inv * md.t_orbit * md.change_of_basis;

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) throw CheckError("modular data: " + what);
  };

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex want = i == j ? md.weights[i] : 0.0;
      check(std::abs(md.t_irrep(i, j) - want) <= tol,
            "T is not diagonal with the conformal weights");
    }

  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(m, m);
  check((md.s_irrep * md.s_irrep.adjoint() - eye).cwiseAbs().maxCoeff() <=
            tol,
        "S is not unitary");
  check((md.s_irrep - md.s_irrep.transpose()).cwiseAbs().maxCoeff() <= tol,
        "S is not symmetric");

  Eigen::MatrixXcd s2 = md.s_irrep * md.s_irrep;
  check((s2 * s2 - eye).cwiseAbs().maxCoeff() <= tol, "S^4 != 1");
  Eigen::MatrixXcd st = md.s_irrep * md.t_irrep;
  check((st * st * st - s2).cwiseAbs().maxCoeff() <= tol, "(ST)^3 != S^2");

  // Charge conjugation: S^2 must be the duality permutation.
  md.dual_of.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    EquivariantBundle d = dual(irreps[a].bundle);
    for (int b = 0; b < m; ++b) {
      if (pairing_dim(d, irreps[b].bundle) == 1) {
        if (md.dual_of[a] != -1)
          throw CheckError("dual label is not unique");
        md.dual_of[a] = b;
      }
    }
    check(md.dual_of[a] >= 0, "dual label not found");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      Complex want = b == md.dual_of[a] ? 1.0 : 0.0;
      check(std::abs(s2(b, a) - want) <= tol,
            "S^2 does not match the duality permutation");
    }

  for (int j = 0; j < m; ++j) {
    Complex v = md.s_irrep(md.vacuum, j);
    check(v.real() > 0 && std::abs(v.imag()) <= tol,
          "vacuum row of S is not strictly positive");
  }

  return md;
}

VerlindeReport verlinde_check(const FiniteGroup& g, std::uint64_t seed,
                              double tol) {
  ModularData md = torus_modular_data(g, seed);
  auto irreps = irreducible_bundles(g, seed);
  auto fusion = fusion_coefficients(irreps, md.vacuum);
  const int m = md.num_labels();

  VerlindeReport rep;
  rep.pass = true;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Complex acc = 0;
        for (int i = 0; i < m; ++i)
          acc += md.s_irrep(a, i) * md.s_irrep(b, i) *
                 std::conj(md.s_irrep(c, i)) / md.s_irrep(md.vacuum, i);
        double dev = std::abs(acc - Complex(fusion[a][b][c]));
        if (dev > rep.max_deviation) rep.max_deviation = dev;
        if (dev > tol && rep.pass) {
          rep.pass = false;
          rep.bad_a = a;
          rep.bad_b = b;
          rep.bad_c = c;
        }
      }
  return rep;
}

ThreeTorusReport three_torus_check(const FiniteGroup& g) {
  const int n = g.order();
  long long triples = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!g.commutes(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (g.commutes(x, z) && g.commutes(y, z)) ++triples;
    }
  ThreeTorusReport rep;
  rep.z_three_torus = Rational(triples, n);
  rep.torus_hilbert_dim = surface_hilbert_dim(g, 1);
  rep.pass = rep.z_three_torus == Rational(rep.torus_hilbert_dim);
  if (!rep.pass)
    throw CheckError("Z(T^3) does not equal dim E(T^2) for " + g.name());
  return rep;
}

}  // namespace dw
