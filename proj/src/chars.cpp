#include "dw/chars.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dw {

namespace {

double snap6(double v) { return std::round(v * 1e6) / 1e6; }

// Lexicographic comparison of character rows on value grids snapped to
// 1e-6, used only for the deterministic row order.
bool row_less(const Eigen::MatrixXcd& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) {
    double ra = snap6(m(a, j).real()), rb = snap6(m(b, j).real());
    if (ra != rb) return ra < rb;
    double ia = snap6(m(a, j).imag()), ib = snap6(m(b, j).imag());
    if (ia != ib) return ia < ib;
  }
  return false;
}

struct OrthErrors {
  double row = 0, col = 0;
};

OrthErrors orthogonality_errors(const CharacterTable& ct) {
  const int k = ct.num_classes();
  const double order = ct.group.order();
  OrthErrors e;
  for (int i = 0; i < k; ++i)
    for (int i2 = 0; i2 < k; ++i2) {
      Complex s = 0;
      for (int j = 0; j < k; ++j)
        s += double(ct.class_sizes[j]) * ct.chars(i, j) *
             std::conj(ct.chars(i2, j));
      s /= order;
      e.row = std::max(e.row, std::abs(s - (i == i2 ? 1.0 : 0.0)));
    }
  for (int j = 0; j < k; ++j)
    for (int j2 = 0; j2 < k; ++j2) {
      Complex s = 0;
      for (int i = 0; i < k; ++i)
        s += ct.chars(i, j) * std::conj(ct.chars(i, j2));
      Complex want = j == j2 ? order / ct.class_sizes[j] : 0.0;
      e.col = std::max(e.col, std::abs(s - want));
    }
  return e;
}

// One attempt at the Burnside diagonalization. Returns false when the
// random combination fails to split the eigenspaces cleanly.
bool try_character_table(const FiniteGroup& g, const ConjClassData& cc,
                         std::uint64_t seed, double tol, CharacterTable& out) {
  const int n = g.order();
  const int k = static_cast<int>(cc.classes.size());

  // Class algebra structure constants: a[i](j, m) counts pairs
  // (x, y) in C_i x C_j with x y equal to the fixed representative of
  // class m. Counting products into the whole class and dividing by its
  // size keeps everything integral.
  std::vector<Eigen::MatrixXd> a(k, Eigen::MatrixXd::Zero(k, k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<long long> cnt(k, 0);
      for (int x : cc.classes[i])
        for (int y : cc.classes[j]) ++cnt[cc.class_of[g.mul(x, y)]];
      for (int m = 0; m < k; ++m) {
        long long csz = cc.classes[m].size();
        if (cnt[m] % csz != 0)
          throw CheckError("class algebra constants are not integral");
        a[i](j, m) = static_cast<double>(cnt[m] / csz);
      }
    }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 40);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) m += coeff(rng) * a[i];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.cast<Complex>());
  if (solver.info() != Eigen::Success) return false;
  Eigen::VectorXcd lam = solver.eigenvalues();
  Eigen::MatrixXcd vec = solver.eigenvectors();

  double scale = lam.cwiseAbs().maxCoeff() + 1.0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (std::abs(lam(i) - lam(j)) < 1e-6 * scale) return false;

  // Inverse-iteration polish to machine precision per eigenvector.
  Eigen::MatrixXcd mc = m.cast<Complex>();
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXcd v = vec.col(i);
    Complex shift = lam(i) + Complex(1e-10 * scale, 1e-10 * scale);
    for (int it = 0; it < 2; ++it) {
      Eigen::MatrixXcd shifted = mc - shift * Eigen::MatrixXcd::Identity(k, k);
      Eigen::VectorXcd w = shifted.partialPivLu().solve(v);
      double nw = w.norm();
      if (!(nw > 0) || !std::isfinite(nw)) break;
      v = w / nw;
      shift = v.dot(mc * v) / v.squaredNorm() +
              Complex(1e-12 * scale, 1e-12 * scale);
    }
    vec.col(i) = v;
  }

  const int idc = cc.class_of[g.identity()];

  Eigen::MatrixXcd chars(k, k);
  std::vector<int> degrees(k);
  for (int i = 0; i < k; ++i) {
    Eigen::VectorXcd omega = vec.col(i);
    if (std::abs(omega(idc)) < 1e-9) return false;
    omega /= omega(idc);  // central character, 1 at the identity class
    double denom = 0;
    for (int j = 0; j < k; ++j)
      denom += std::norm(omega(j)) / cc.classes[j].size();
    double dsq = n / denom;
    double d = std::sqrt(dsq);
    int di = static_cast<int>(std::lround(d));
    if (di < 1 || std::abs(d - di) > kIntRoundTol) return false;
    degrees[i] = di;
    for (int j = 0; j < k; ++j)
      chars(i, j) = double(di) * omega(j) / double(cc.classes[j].size());
  }

  // Deterministic row order: by degree, then lexicographic values.
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    if (degrees[x] != degrees[y]) return degrees[x] < degrees[y];
    return row_less(chars, x, y);
  });

  out.group = g;
  out.classes = cc;
  out.class_sizes.resize(k);
  for (int j = 0; j < k; ++j)
    out.class_sizes[j] = static_cast<int>(cc.classes[j].size());
  out.chars.resize(k, k);
  out.degrees.resize(k);
  for (int i = 0; i < k; ++i) {
    out.degrees[i] = degrees[perm[i]];
    out.chars.row(i) = chars.row(perm[i]);
  }
  out.identity_class = idc;

  long long sum_sq = 0;
  for (int d : out.degrees) sum_sq += static_cast<long long>(d) * d;
  if (sum_sq != n) return false;

  auto err = orthogonality_errors(out);
  return err.row <= tol && err.col <= tol;
}

}  // namespace

int CharacterTable::trivial_row() const {
  for (int i = 0; i < num_classes(); ++i) {
    if (degrees[i] != 1) continue;
    bool ones = true;
    for (int j = 0; j < num_classes() && ones; ++j)
      ones = std::abs(chars(i, j) - 1.0) < 1e-6;
    if (ones) return i;
  }
  throw CheckError("character table is missing the trivial character");
}

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed,
                               double tol) {
  auto cc = conjugacy_data(g);
  CharacterTable out;
  for (int attempt = 0; attempt < 48; ++attempt) {
    std::uint64_t s = seed + 0x9e3779b97f4a7c15ULL * attempt;
    if (try_character_table(g, cc, s, tol, out)) return out;
  }
  throw CheckError(
      "character table for " + g.name() +
      ": eigenspace splitting or orthogonality tolerance failed after "
      "48 random class-matrix combinations");
}

Subgroup centralizer_subgroup(const FiniteGroup& g, int x) {
  const int n = g.order();
  if (x < 0 || x >= n) throw ValidationError("element index out of range");
  Subgroup s;
  for (int h = 0; h < n; ++h)
    if (g.commutes(h, x)) s.elements.push_back(h);
  const int m = static_cast<int>(s.elements.size());
  s.index_of.assign(n, -1);
  for (int i = 0; i < m; ++i) s.index_of[s.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int prod = g.mul(s.elements[i], s.elements[j]);
      int idx = s.index_of[prod];
      if (idx < 0)
        throw CheckError("centralizer is not closed under the product");
      table[i][j] = idx;
    }
  s.group = FiniteGroup::from_table(
      std::move(table), "C_" + g.name() + "(" + g.element_name(x) + ")");
  return s;
}

CharacterTable centralizer_character_table(const FiniteGroup& g, int x,
                                           std::uint64_t seed, double tol) {
  return character_table(centralizer_subgroup(g, x).group, seed, tol);
}

ClassFunction class_convolution(const ClassFunction& f1,
                                const ClassFunction& f2, const FiniteGroup& g,
                                const ConjClassData& classes) {
  const int k = static_cast<int>(classes.classes.size());
  if (static_cast<int>(f1.values.size()) != k ||
      static_cast<int>(f2.values.size()) != k)
    throw ValidationError("class function length does not match class count");
  ClassFunction out;
  out.values.assign(k, 0.0);
  const int n = g.order();
  for (int m = 0; m < k; ++m) {
    int z = classes.representatives[m];
    Complex s = 0;
    for (int x = 0; x < n; ++x) {
      int y = g.mul(g.inv(x), z);
      s += f1.values[classes.class_of[x]] * f2.values[classes.class_of[y]];
    }
    out.values[m] = s / double(n);
  }
  return out;
}

std::vector<ClassFunction> convolution_idempotents(const CharacterTable& ct,
                                                   double tol) {
  const int k = ct.num_classes();
  std::vector<ClassFunction> idem(k);
  for (int i = 0; i < k; ++i) {
    idem[i].values.resize(k);
    for (int j = 0; j < k; ++j)
      idem[i].values[j] = double(ct.degrees[i]) * ct.chars(i, j);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto prod = class_convolution(idem[i], idem[j], ct.group, ct.classes);
      for (int m = 0; m < k; ++m) {
        Complex want = i == j ? idem[i].values[m] : 0.0;
        if (std::abs(prod.values[m] - want) > tol)
          throw CheckError("convolution idempotent check failed for " +
                           ct.group.name());
      }
    }
  return idem;
}

namespace {

Rational rational_pow(Rational base, int e) {
  if (e < 0) {
    base = Rational(base.denominator(), base.numerator());
    e = -e;
  }
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

Rational surface_partition_characters(const CharacterTable& ct, int genus) {
  if (genus < 0) throw ValidationError("genus must be >= 0");
  Rational z(0);
  for (int d : ct.degrees)
    z += rational_pow(Rational(ct.group.order(), d), 2 * genus - 2);
  return z;
}

Rational surface_partition_characters(const FiniteGroup& g, int genus,
                                      std::uint64_t seed) {
  return surface_partition_characters(character_table(g, seed), genus);
}

std::vector<Eigen::MatrixXcd> irrep_matrices(const CharacterTable& ct, int row,
                                             std::uint64_t seed) {
  const FiniteGroup& g = ct.group;
  const int n = g.order();
  const int d = ct.degrees[row];

  std::vector<Eigen::MatrixXcd> out(n);
  if (d == 1) {
    for (int h = 0; h < n; ++h) {
      out[h].resize(1, 1);
      out[h](0, 0) = ct.value(row, h);
    }
    return out;
  }

  // Left regular representation: P_h e_u = e_{h u}.
  std::vector<Eigen::MatrixXcd> reg(n, Eigen::MatrixXcd::Zero(n, n));
  for (int h = 0; h < n; ++h)
    for (int u = 0; u < n; ++u) reg[h](g.mul(h, u), u) = 1.0;

  // Isotypic projector from the character.
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(n, n);
  for (int h = 0; h < n; ++h)
    proj += std::conj(ct.value(row, h)) * reg[h];
  proj *= double(d) / double(n);
  double rank = proj.trace().real();
  if (std::abs(rank - double(d) * d) > 1e-6)
    throw CheckError("isotypic projector rank mismatch for " + g.name());

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(seed + 0x51ed5eedULL * (attempt + 1) + row);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x(i, j) = Complex(gauss(rng), gauss(rng));
    x = (x + x.adjoint().eval()) / 2.0;

    // Average to the commutant, then restrict to the isotypic block.
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (int h = 0; h < n; ++h)
      t += reg[h] * x * reg[g.inv(h)];
    t /= double(n);
    Eigen::MatrixXcd q = proj * t * proj;
    q = (q + q.adjoint().eval()) / 2.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q);
    if (es.info() != Eigen::Success) continue;
    const auto& vals = es.eigenvalues();
    double scale = vals.cwiseAbs().maxCoeff() + 1e-30;

    // The isotypic block looks like 1_d (x) T; each eigenvalue of T
    // shows up d times. Grab the top cluster.
    int hi = n - 1;
    int lo = hi;
    while (lo > 0 && std::abs(vals(lo - 1) - vals(hi)) < 1e-7 * scale) --lo;
    if (hi - lo + 1 != d) continue;
    if (std::abs(vals(hi)) < 1e-6 * scale) continue;

    Eigen::MatrixXcd basis = es.eigenvectors().rightCols(d);
    bool good = true;
    for (int h = 0; h < n && good; ++h) {
      out[h] = basis.adjoint() * reg[h] * basis;
      good = (out[h] * out[h].adjoint() - Eigen::MatrixXcd::Identity(d, d))
                 .cwiseAbs()
                 .maxCoeff() < 1e-9 &&
             std::abs(out[h].trace() - ct.value(row, h)) < 1e-8;
    }
    if (!good) continue;
    for (int a = 0; a < n && good; ++a)
      for (int b = 0; b < n && good; ++b)
        good = (out[a] * out[b] - out[g.mul(a, b)]).cwiseAbs().maxCoeff() <
               1e-9;
    if (good) return out;
  }
  throw CheckError("failed to split an irreducible copy out of the regular "
                   "representation for " + g.name());
}

}  // namespace dw
