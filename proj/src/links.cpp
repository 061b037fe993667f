#include "dw/links.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace dw {

void BraidWord::validate() const {
  if (strands < 1) throw ValidationError("braid needs at least one strand");
  for (int k : word) {
    int a = k > 0 ? k : -k;
    if (a < 1 || a >= strands)
      throw ValidationError("braid letter " + std::to_string(k) +
                            " out of range for " + std::to_string(strands) +
                            " strands");
  }
}

int BraidWord::writhe() const {
  int w = 0;
  for (int k : word) w += k > 0 ? 1 : -1;
  return w;
}

std::vector<int> strand_permutation(const BraidWord& b) {
  b.validate();
  std::vector<int> p(b.strands);
  for (int i = 0; i < b.strands; ++i) p[i] = i;
  for (int k : b.word) {
    int a = (k > 0 ? k : -k) - 1;
    std::swap(p[a], p[a + 1]);
  }
  return p;
}

int closure_components(const BraidWord& b) {
  auto p = strand_permutation(b);
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return cycles;
}

void apply_braid_word(const BraidWord& b, const FiniteGroup& g,
                      std::vector<int>& t) {
  for (int k : b.word) {
    if (k > 0) {
      int p = k - 1;
      int a = t[p], c = t[p + 1];
      t[p] = g.conjugate(a, c);
      t[p + 1] = a;
    } else {
      int p = -k - 1;
      int a = t[p], c = t[p + 1];
      t[p] = c;
      t[p + 1] = g.conjugate(g.inv(c), a);
    }
  }
}

namespace {

std::uint64_t tuple_space_size(const BraidWord& b, const FiniteGroup& g,
                               std::uint64_t cap) {
  b.validate();
  std::uint64_t total = 1;
  for (int i = 0; i < b.strands; ++i) {
    total *= static_cast<std::uint64_t>(g.order());
    if (total > cap)
      throw ValidationError("tuple space |G|^n exceeds the cap of " +
                            std::to_string(cap));
  }
  return total;
}

void decode_tuple(std::uint64_t index, int n, int strands,
                  std::vector<int>& t) {
  for (int i = strands - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % n);
    index /= n;
  }
}

}  // namespace

std::vector<std::uint32_t> braid_tuple_action(const BraidWord& b,
                                              const FiniteGroup& g,
                                              std::uint64_t cap) {
  std::uint64_t total = tuple_space_size(b, g, cap);
  const int n = g.order();
  std::vector<std::uint32_t> perm(total);
  std::vector<int> t(b.strands);
  for (std::uint64_t i = 0; i < total; ++i) {
    decode_tuple(i, n, b.strands, t);
    apply_braid_word(b, g, t);
    std::uint64_t out = 0;
    for (int s = 0; s < b.strands; ++s)
      out = out * n + static_cast<std::uint64_t>(t[s]);
    perm[i] = static_cast<std::uint32_t>(out);
  }
  return perm;
}

namespace {

LinkInvariantResult count_fixed(const BraidWord& b, const FiniteGroup& g,
                                std::uint64_t cap, bool parallel) {
  const std::uint64_t total = tuple_space_size(b, g, cap);
  const int n = g.order();
  const long long signed_total = static_cast<long long>(total);
  long long fixed = 0;
  if (parallel) {
#pragma omp parallel reduction(+ : fixed)
    {
      std::vector<int> t(b.strands), u(b.strands);
#pragma omp for schedule(static)
      for (long long i = 0; i < signed_total; ++i) {
        decode_tuple(static_cast<std::uint64_t>(i), n, b.strands, t);
        u = t;
        apply_braid_word(b, g, u);
        if (u == t) ++fixed;
      }
    }
  } else {
    std::vector<int> t(b.strands), u(b.strands);
    for (long long i = 0; i < signed_total; ++i) {
      decode_tuple(static_cast<std::uint64_t>(i), n, b.strands, t);
      u = t;
      apply_braid_word(b, g, u);
      if (u == t) ++fixed;
    }
  }
  LinkInvariantResult r;
  r.raw_count = static_cast<std::uint64_t>(fixed);
  r.normalized = Rational(fixed, n);
  r.components = closure_components(b);
  r.writhe = b.writhe();
  return r;
}

}  // namespace

LinkInvariantResult closure_count(const BraidWord& b, const FiniteGroup& g,
                                  std::uint64_t cap) {
  return count_fixed(b, g, cap, true);
}

LinkInvariantResult closure_count_serial(const BraidWord& b,
                                         const FiniteGroup& g,
                                         std::uint64_t cap) {
  return count_fixed(b, g, cap, false);
}

Eigen::MatrixXcd braid_rep_matrix(const BraidWord& b,
                                  const EquivariantBundle& w, int dim_cap) {
  b.validate();
  const FiniteGroup& g = w.group;
  const int n = g.order();

  double dim_estimate = std::pow(double(w.total_dim), double(b.strands));
  if (dim_estimate > double(dim_cap))
    throw ValidationError("representation dimension (total dim)^n = " +
                          std::to_string(dim_estimate) + " exceeds cap");

  // Basis: supported tuples (x_1..x_n) in lexicographic order, each
  // carrying the tensor product of the fibers.
  std::vector<int> support;
  for (int x = 0; x < n; ++x)
    if (w.fiber_dim[x] > 0) support.push_back(x);

  std::vector<std::vector<int>> tuples;
  std::vector<int> stack(b.strands, 0);
  while (true) {
    std::vector<int> t(b.strands);
    for (int i = 0; i < b.strands; ++i) t[i] = support[stack[i]];
    tuples.push_back(std::move(t));
    int pos = b.strands - 1;
    while (pos >= 0 && stack[pos] + 1 == static_cast<int>(support.size()))
      stack[pos--] = 0;
    if (pos < 0) break;
    ++stack[pos];
  }
  std::map<std::vector<int>, int> tuple_index;
  std::vector<int> offset(tuples.size());
  int total = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    tuple_index.emplace(tuples[i], static_cast<int>(i));
    offset[i] = total;
    int block = 1;
    for (int x : tuples[i]) block *= w.fiber_dim[x];
    total += block;
  }

  auto letter_matrix = [&](int k) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(total, total);
    const int p = (k > 0 ? k : -k) - 1;
    for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
      const auto& t = tuples[ti];
      std::vector<int> out = t;
      int a = t[p], c = t[p + 1];
      Eigen::MatrixXcd block;  // acts on the moved factor
      if (k > 0) {
        out[p] = g.conjugate(a, c);
        out[p + 1] = a;
        block = w.map_at(a, c);  // A_{x_p}(x_{p+1})
      } else {
        out[p] = c;
        out[p + 1] = g.conjugate(g.inv(c), a);
        block = w.map_at(g.inv(c), a);  // A_{y_2^{-1}}(y_1)
      }
      int tj = tuple_index.at(out);

      // Enumerate tensor indices; only slots p, p+1 move.
      std::vector<int> dims(b.strands), odims(b.strands);
      for (int s = 0; s < b.strands; ++s) {
        dims[s] = w.fiber_dim[t[s]];
        odims[s] = w.fiber_dim[out[s]];
      }
      std::vector<int> j(b.strands, 0);
      while (true) {
        // source flat index
        int src = 0;
        for (int s = 0; s < b.strands; ++s) src = src * dims[s] + j[s];
        for (int r = 0; r < (k > 0 ? odims[p] : odims[p + 1]); ++r) {
          std::vector<int> jo = j;
          if (k > 0) {
            jo[p] = r;        // A(w_{p+1}) index
            jo[p + 1] = j[p]; // old w_p
          } else {
            jo[p] = j[p + 1];
            jo[p + 1] = r;
          }
          int dst = 0;
          for (int s = 0; s < b.strands; ++s) dst = dst * odims[s] + jo[s];
          Complex val = k > 0 ? block(r, j[p + 1]) : block(r, j[p]);
          if (val != 0.0) m(offset[tj] + dst, offset[ti] + src) = val;
        }
        int pos = b.strands - 1;
        while (pos >= 0 && j[pos] + 1 == dims[pos]) j[pos--] = 0;
        if (pos < 0) break;
        ++j[pos];
      }
    }
    return m;
  };

  Eigen::MatrixXcd rep = Eigen::MatrixXcd::Identity(total, total);
  for (int k : b.word) rep = letter_matrix(k) * rep;
  return rep;
}

MarkovReport markov_test(const BraidWord& b, const FiniteGroup& g, int trials,
                         std::uint64_t seed, std::uint64_t cap) {
  b.validate();
  MarkovReport rep;
  rep.trials = trials;
  const std::uint64_t base = closure_count(b, g, cap).raw_count;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> gen(1, std::max(1, b.strands - 1));
  std::uniform_int_distribution<int> sign(0, 1);

  for (int trial = 0; trial < trials; ++trial) {
    // Markov I: conjugate by a random word.
    std::vector<int> conj;
    for (int i = 0, l = len(rng); i < l; ++i)
      conj.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    BraidWord conjugated{b.strands, {}};
    conjugated.word = conj;
    conjugated.word.insert(conjugated.word.end(), b.word.begin(),
                           b.word.end());
    for (auto it = conj.rbegin(); it != conj.rend(); ++it)
      conjugated.word.push_back(-*it);
    std::uint64_t got = closure_count(conjugated, g, cap).raw_count;
    if (got != base) {
      rep.pass = false;
      rep.witness = "Markov I failed on trial " + std::to_string(trial) +
                    ": " + std::to_string(got) + " != " +
                    std::to_string(base);
      return rep;
    }

    // Markov II: stabilize with sigma_n^{+1} and sigma_n^{-1}.
    for (int s : {1, -1}) {
      BraidWord stab{b.strands + 1, b.word};
      stab.word.push_back(s * b.strands);
      got = closure_count(stab, g, cap).raw_count;
      if (got != base) {
        rep.pass = false;
        rep.witness = "Markov II (sign " + std::to_string(s) +
                      ") failed on trial " + std::to_string(trial) + ": " +
                      std::to_string(got) + " != " + std::to_string(base);
        return rep;
      }
    }
  }
  return rep;
}

namespace {

void free_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  w = std::move(out);
}

std::vector<int> concat3(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& c) {
  std::vector<int> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  free_reduce(out);
  return out;
}

std::vector<int> inverse_word(const std::vector<int>& a) {
  std::vector<int> out;
  out.reserve(a.size());
  for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back(-*it);
  return out;
}

}  // namespace

GroupPresentation wirtinger_presentation(const BraidWord& b) {
  b.validate();
  // One meridian generator per strand; push them through the braid with
  // the same rewriting the tuple action uses, but symbolically.
  std::vector<std::vector<int>> strand(b.strands);
  for (int i = 0; i < b.strands; ++i) strand[i] = {i + 1};
  for (int k : b.word) {
    if (k > 0) {
      int p = k - 1;
      auto a = strand[p], c = strand[p + 1];
      strand[p] = concat3(a, c, inverse_word(a));
      strand[p + 1] = a;
    } else {
      int p = -k - 1;
      auto a = strand[p], c = strand[p + 1];
      strand[p] = c;
      strand[p + 1] = concat3(inverse_word(c), a, c);
    }
  }
  GroupPresentation pres;
  pres.num_generators = b.strands;
  for (int i = 0; i < b.strands; ++i) {
    std::vector<int> rel = strand[i];
    rel.push_back(-(i + 1));
    free_reduce(rel);
    if (!rel.empty()) pres.relators.push_back(std::move(rel));
  }
  return pres;
}

std::uint64_t wirtinger_oracle(const BraidWord& b, const FiniteGroup& g,
                               std::uint64_t cap) {
  auto pres = wirtinger_presentation(b);
  if (pres.relators.empty())
    pres.relators.push_back({});  // no constraints: all |G|^n tuples
  std::uint64_t count = enumerate_homs(pres, g, cap).size();
  std::uint64_t fixed = closure_count(b, g).raw_count;
  if (count != fixed)
    throw CheckError("Wirtinger oracle counts " + std::to_string(count) +
                     " meridian assignments but the braid action fixes " +
                     std::to_string(fixed) +
                     " tuples; this is an implementation bug");
  return count;
}

}  // namespace dw
