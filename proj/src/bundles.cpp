#include "dw/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dw {

namespace {

EquivariantBundle make_bundle(const FiniteGroup& g, std::vector<int> dims) {
  EquivariantBundle w;
  w.group = g;
  w.fiber_dim = std::move(dims);
  w.maps.assign(g.order(), std::vector<Eigen::MatrixXcd>(g.order()));
  w.compute_offsets();
  return w;
}

}  // namespace

void EquivariantBundle::compute_offsets() {
  offset.assign(fiber_dim.size(), -1);
  total_dim = 0;
  for (std::size_t x = 0; x < fiber_dim.size(); ++x)
    if (fiber_dim[x] > 0) {
      offset[x] = total_dim;
      total_dim += fiber_dim[x];
    }
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void validate_bundle(const EquivariantBundle& w, double tol) {
  const FiniteGroup& g = w.group;
  const int n = g.order();
  auto cc = conjugacy_data(g);
  for (int x = 0; x < n; ++x)
    if (w.fiber_dim[x] != w.fiber_dim[cc.representatives[cc.class_of[x]]])
      throw CheckError("fiber dimension not constant on a conjugacy class");
  for (int x = 0; x < n; ++x) {
    if (w.fiber_dim[x] == 0) continue;
    const int d = w.fiber_dim[x];
    if ((w.map_at(g.identity(), x) - Eigen::MatrixXcd::Identity(d, d))
            .cwiseAbs()
            .maxCoeff() > tol)
      throw CheckError("A_e is not the identity");
    for (int h = 0; h < n; ++h) {
      const auto& a = w.map_at(h, x);
      int xh = g.conjugate(h, x);
      if (a.rows() != w.fiber_dim[xh] || a.cols() != d)
        throw CheckError("A_g(x) has wrong shape");
      if ((a.adjoint() * a - Eigen::MatrixXcd::Identity(d, d))
              .cwiseAbs()
              .maxCoeff() > tol)
        throw CheckError("A_g(x) is not unitary");
      for (int h2 = 0; h2 < n; ++h2) {
        if ((w.map_at(h2, xh) * a - w.map_at(g.mul(h2, h), x))
                .cwiseAbs()
                .maxCoeff() > tol)
          throw CheckError("equivariance composition law fails");
      }
    }
  }
}

EquivariantBundle vacuum_bundle(const FiniteGroup& g) {
  std::vector<int> dims(g.order(), 0);
  dims[g.identity()] = 1;
  auto w = make_bundle(g, std::move(dims));
  for (int h = 0; h < g.order(); ++h)
    w.maps[h][g.identity()] = Eigen::MatrixXcd::Identity(1, 1);
  return w;
}

EquivariantBundle regular_bundle(const FiniteGroup& g) {
  auto w = make_bundle(g, std::vector<int>(g.order(), 1));
  for (int h = 0; h < g.order(); ++h)
    for (int x = 0; x < g.order(); ++x)
      w.maps[h][x] = Eigen::MatrixXcd::Identity(1, 1);
  return w;
}

std::vector<Irrep> irreducible_bundles(const FiniteGroup& g,
                                       std::uint64_t seed,
                                       bool scramble_transport) {
  const int n = g.order();
  auto cc = conjugacy_data(g);
  std::mt19937_64 scramble_rng(seed ^ 0xd0d0f00dULL);

  std::vector<Irrep> out;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    const int x0 = cc.representatives[c];
    Subgroup sub = centralizer_subgroup(g, x0);
    CharacterTable ct = character_table(sub.group, seed);

    // Transport conjugators h_x with h_x x0 h_x^{-1} = x; the identity
    // at the representative, the least conjugator elsewhere (or a
    // seeded random one, to exercise gauge invariance of the outputs).
    std::vector<int> conjugator(n, -1);
    for (int x : cc.classes[c]) {
      if (x == x0 && !scramble_transport) {
        conjugator[x] = g.identity();
        continue;
      }
      std::vector<int> candidates;
      for (int h = 0; h < n; ++h)
        if (g.conjugate(h, x0) == x) {
          if (!scramble_transport) {
            conjugator[x] = h;
            break;
          }
          candidates.push_back(h);
        }
      if (scramble_transport) {
        std::uniform_int_distribution<std::size_t> pick(
            0, candidates.size() - 1);
        conjugator[x] = candidates[pick(scramble_rng)];
      }
    }

    const int x0_sub_class = ct.classes.class_of[sub.index_of[x0]];

    for (int r = 0; r < ct.num_classes(); ++r) {
      auto rep = irrep_matrices(ct, r, seed);
      const int d = ct.degrees[r];

      Irrep ir;
      ir.label = IrrepLabel{x0, r};
      ir.weight = ct.chars(r, x0_sub_class) / double(d);

      std::vector<int> dims(n, 0);
      for (int x : cc.classes[c]) dims[x] = d;
      ir.bundle = make_bundle(g, std::move(dims));
      for (int x : cc.classes[c])
        for (int h = 0; h < n; ++h) {
          int x2 = g.conjugate(h, x);
          // h_{x2}^{-1} h h_x conjugates x0 to itself.
          int central = g.mul(g.inv(conjugator[x2]), g.mul(h, conjugator[x]));
          int idx = sub.index_of[central];
          if (idx < 0) throw CheckError("transport left the centralizer");
          ir.bundle.maps[h][x] = rep[idx];
        }
      out.push_back(std::move(ir));
    }
  }
  return out;
}

std::vector<TensorSummand> tensor_summands(const EquivariantBundle& w1,
                                           const EquivariantBundle& w2,
                                           int z) {
  const FiniteGroup& g = w1.group;
  std::vector<TensorSummand> out;
  int off = 0;
  for (int x1 = 0; x1 < g.order(); ++x1) {
    if (w1.fiber_dim[x1] == 0) continue;
    int x2 = g.mul(g.inv(x1), z);
    if (w2.fiber_dim[x2] == 0) continue;
    TensorSummand s{x1, x2, off, w1.fiber_dim[x1], w2.fiber_dim[x2]};
    off += s.d1 * s.d2;
    out.push_back(s);
  }
  return out;
}

EquivariantBundle tensor(const EquivariantBundle& w1,
                         const EquivariantBundle& w2) {
  if (!(w1.group == w2.group))
    throw ValidationError("tensor of bundles over different groups");
  const FiniteGroup& g = w1.group;
  const int n = g.order();

  std::vector<int> dims(n, 0);
  std::vector<std::vector<TensorSummand>> layout(n);
  for (int z = 0; z < n; ++z) {
    layout[z] = tensor_summands(w1, w2, z);
    int d = 0;
    for (const auto& s : layout[z]) d += s.d1 * s.d2;
    dims[z] = d;
  }
  auto w = make_bundle(g, std::move(dims));
  for (int h = 0; h < n; ++h)
    for (int z = 0; z < n; ++z) {
      if (w.fiber_dim[z] == 0) continue;
      int zh = g.conjugate(h, z);
      Eigen::MatrixXcd a =
          Eigen::MatrixXcd::Zero(w.fiber_dim[zh], w.fiber_dim[z]);
      for (const auto& s : layout[z]) {
        int y1 = g.conjugate(h, s.x1);
        auto it = std::find_if(layout[zh].begin(), layout[zh].end(),
                               [&](const TensorSummand& t) {
                                 return t.x1 == y1;
                               });
        if (it == layout[zh].end())
          throw CheckError("tensor summand image missing");
        a.block(it->offset, s.offset, it->d1 * it->d2, s.d1 * s.d2) =
            kron(w1.map_at(h, s.x1), w2.map_at(h, s.x2));
      }
      w.maps[h][z] = std::move(a);
    }
  return w;
}

EquivariantBundle dual(const EquivariantBundle& w) {
  const FiniteGroup& g = w.group;
  const int n = g.order();
  std::vector<int> dims(n, 0);
  for (int x = 0; x < n; ++x) dims[x] = w.fiber_dim[g.inv(x)];
  auto out = make_bundle(g, std::move(dims));
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) {
      if (out.fiber_dim[x] == 0) continue;
      out.maps[h][x] = w.map_at(h, g.inv(x)).conjugate();
    }
  return out;
}

BundleMap braiding(const EquivariantBundle& w1, const EquivariantBundle& w2) {
  if (!(w1.group == w2.group))
    throw ValidationError("braiding of bundles over different groups");
  const FiniteGroup& g = w1.group;
  const int n = g.order();
  BundleMap f;
  f.block.resize(n);
  for (int z = 0; z < n; ++z) {
    auto src = tensor_summands(w1, w2, z);
    auto dst = tensor_summands(w2, w1, z);
    int sd = 0, dd = 0;
    for (const auto& s : src) sd += s.d1 * s.d2;
    for (const auto& s : dst) dd += s.d1 * s.d2;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dd, sd);
    for (const auto& s : src) {
      // (x1, x2) -> (x1 x2 x1^{-1}, x1) with A^{W2}_{x1} on the moved
      // factor: w1 (x) w2 |-> A_{x1}(w2) (x) w1.
      int y1 = g.conjugate(s.x1, s.x2);
      auto it = std::find_if(dst.begin(), dst.end(), [&](const TensorSummand& t) {
        return t.x1 == y1 && t.x2 == s.x1;
      });
      if (it == dst.end()) throw CheckError("braiding target summand missing");
      const auto& a = w2.map_at(s.x1, s.x2);  // d2' x d2
      for (int j1 = 0; j1 < s.d1; ++j1)
        for (int j2 = 0; j2 < s.d2; ++j2)
          for (int i2 = 0; i2 < it->d1; ++i2)
            m(it->offset + i2 * it->d2 + j1, s.offset + j1 * s.d2 + j2) =
                a(i2, j2);
    }
    f.block[z] = std::move(m);
  }
  return f;
}

BundleMap twist(const EquivariantBundle& w) {
  const FiniteGroup& g = w.group;
  BundleMap f;
  f.block.resize(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (w.fiber_dim[x] == 0) {
      f.block[x] = Eigen::MatrixXcd::Zero(0, 0);
      continue;
    }
    f.block[x] = w.map_at(x, x);
  }
  return f;
}

BundleMap tensor_map(const BundleMap& m1, const BundleMap& m2,
                     const EquivariantBundle& w1,
                     const EquivariantBundle& w2) {
  const FiniteGroup& g = w1.group;
  BundleMap f;
  f.block.resize(g.order());
  for (int z = 0; z < g.order(); ++z) {
    auto layout = tensor_summands(w1, w2, z);
    int total = 0;
    for (const auto& s : layout) total += s.d1 * s.d2;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(total, total);
    for (const auto& s : layout)
      m.block(s.offset, s.offset, s.d1 * s.d2, s.d1 * s.d2) =
          kron(m1.block[s.x1], m2.block[s.x2]);
    f.block[z] = std::move(m);
  }
  return f;
}

BundleMap compose(const BundleMap& after, const BundleMap& before) {
  BundleMap f;
  f.block.resize(after.block.size());
  for (std::size_t x = 0; x < after.block.size(); ++x) {
    if (after.block[x].size() == 0 || before.block[x].size() == 0) {
      f.block[x] = Eigen::MatrixXcd::Zero(after.block[x].rows(),
                                          before.block[x].cols());
      continue;
    }
    f.block[x] = after.block[x] * before.block[x];
  }
  return f;
}

bool maps_close(const BundleMap& a, const BundleMap& b, double tol) {
  if (a.block.size() != b.block.size()) return false;
  for (std::size_t x = 0; x < a.block.size(); ++x) {
    if (a.block[x].rows() != b.block[x].rows() ||
        a.block[x].cols() != b.block[x].cols())
      return false;
    if (a.block[x].size() &&
        (a.block[x] - b.block[x]).cwiseAbs().maxCoeff() > tol)
      return false;
  }
  return true;
}

bool is_equivariant(const BundleMap& f, const EquivariantBundle& source,
                    const EquivariantBundle& target, double tol) {
  const FiniteGroup& g = source.group;
  for (int x = 0; x < g.order(); ++x) {
    if (source.fiber_dim[x] == 0) continue;
    for (int h = 0; h < g.order(); ++h) {
      int xh = g.conjugate(h, x);
      Eigen::MatrixXcd lhs = f.block[xh] * source.map_at(h, x);
      Eigen::MatrixXcd rhs = target.map_at(h, x) * f.block[x];
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

int pairing_dim(const EquivariantBundle& w1, const EquivariantBundle& w2,
                double tol) {
  if (!(w1.group == w2.group))
    throw ValidationError("pairing of bundles over different groups");
  const FiniteGroup& g = w1.group;
  const int n = g.order();
  Complex sum = 0;
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) {
      if (!g.commutes(h, x)) continue;
      if (w1.fiber_dim[x] > 0 && w2.fiber_dim[x] > 0)
        sum += w1.map_at(h, x).trace() * std::conj(w2.map_at(h, x).trace());
    }
  sum /= double(n);
  long long rounded = std::llround(sum.real());
  if (std::abs(sum.real() - rounded) > tol || std::abs(sum.imag()) > tol)
    throw CheckError("pairing dimension " + std::to_string(sum.real()) +
                     " is not an integer within tolerance");
  return static_cast<int>(rounded);
}

Eigen::MatrixXcd double_character(const EquivariantBundle& w) {
  const FiniteGroup& g = w.group;
  const int n = g.order();
  Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    if (w.fiber_dim[x] == 0) continue;
    for (int h = 0; h < n; ++h)
      if (g.commutes(h, x)) chi(x, h) = w.map_at(h, x).trace();
  }
  return chi;
}

int vacuum_index(const std::vector<Irrep>& irreps, const FiniteGroup& g) {
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const auto& ir = irreps[i];
    if (ir.label.class_rep != g.identity()) continue;
    // Trivial centralizer irrep: the bundle's maps are all [1].
    if (ir.bundle.fiber_dim[g.identity()] == 1) {
      bool trivial = true;
      for (int h = 0; h < g.order() && trivial; ++h)
        trivial = std::abs(ir.bundle.map_at(h, g.identity())(0, 0) - 1.0) <
                  1e-8;
      if (trivial) return static_cast<int>(i);
    }
  }
  throw CheckError("vacuum label not found among the irreducibles");
}

std::vector<std::vector<std::vector<int>>> fusion_coefficients(
    const std::vector<Irrep>& irreps, int vacuum, double tol) {
  const int k = static_cast<int>(irreps.size());
  std::vector fusion(k, std::vector(k, std::vector<int>(k, 0)));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      auto prod = tensor(irreps[a].bundle, irreps[b].bundle);
      for (int c = 0; c < k; ++c)
        fusion[a][b][c] = pairing_dim(prod, irreps[c].bundle, tol);
    }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        if (fusion[a][b][c] != fusion[b][a][c])
          throw CheckError("fusion coefficients are not symmetric in (a,b)");
        if (b == vacuum && fusion[a][b][c] != (a == c ? 1 : 0))
          throw CheckError("fusion unit row is not the identity");
      }
  return fusion;
}

}  // namespace dw
