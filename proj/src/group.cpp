#include "dw/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace dw {

namespace {

std::string default_name(int i) { return "g" + std::to_string(i); }

// Cycle notation for a permutation of {0..m-1}, e.g. "(0 1 2)(3 4)".
std::string cycle_name(const std::vector<int>& p) {
  const int m = static_cast<int>(p.size());
  std::vector<bool> seen(m, false);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < m; ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = p[j];
    }
    out << ')';
  }
  return any ? out.str() : "e";
}

bool perm_is_even(std::vector<int> p) {
  int transpositions = 0;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      ++transpositions;
    }
  }
  return transpositions % 2 == 0;
}

}  // namespace

void FiniteGroup::finish(std::string name) {
  name_ = std::move(name);
  const int n = n_;
  if (n <= 0) throw ValidationError("group order must be positive");

  // Latin square: each row and column is a permutation of 0..n-1.
  std::vector<bool> hit(n);
  for (int a = 0; a < n; ++a) {
    std::fill(hit.begin(), hit.end(), false);
    for (int b = 0; b < n; ++b) {
      int v = table_[a * n + b];
      if (v < 0 || v >= n)
        throw ValidationError("table entry out of range at (" +
                              std::to_string(a) + "," + std::to_string(b) +
                              ")");
      if (hit[v])
        throw ValidationError("not a group: row " + std::to_string(a) +
                              " is not a permutation");
      hit[v] = true;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::fill(hit.begin(), hit.end(), false);
    for (int a = 0; a < n; ++a) {
      int v = table_[a * n + b];
      if (hit[v])
        throw ValidationError("not a group: column " + std::to_string(b) +
                              " is not a permutation");
      hit[v] = true;
    }
  }

  // Two-sided identity.
  identity_ = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table_[e * n + a] == a && table_[a * n + e] == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw ValidationError("not a group: no identity element");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a * n + b] == identity_ && table_[b * n + a] == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0)
      throw ValidationError("not a group: element " + std::to_string(a) +
                            " has no inverse");
  }

  auto check_triple = [&](int a, int b, int c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw ValidationError("not a group: associativity fails at (" +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedULL * n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 200000; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  }

  if (element_names_.empty()) {
    element_names_.resize(n);
    for (int i = 0; i < n; ++i) element_names_[i] = default_name(i);
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::string name) {
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  if (g.n_ == 0) throw ValidationError("empty multiplication table");
  g.table_.reserve(static_cast<std::size_t>(g.n_) * g.n_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.n_)
      throw ValidationError("multiplication table is not square");
    g.table_.insert(g.table_.end(), row.begin(), row.end());
  }
  g.finish(name.empty() ? "table" + std::to_string(g.n_) : std::move(name));
  return g;
}

FiniteGroup FiniteGroup::from_permutations(
    const std::vector<std::vector<int>>& generators, std::string name,
    int closure_cap) {
  if (generators.empty())
    throw ValidationError("need at least one generator permutation");
  const int m = static_cast<int>(generators[0].size());
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != m)
      throw ValidationError("generators act on different sets");
    std::vector<bool> hit(m, false);
    for (int v : p) {
      if (v < 0 || v >= m || hit[v])
        throw ValidationError("generator is not a permutation");
      hit[v] = true;
    }
  }

  auto compose = [m](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(m);
    for (int i = 0; i < m; ++i) r[i] = p[q[i]];
    return r;
  };

  std::vector<int> identity(m);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (const auto& gen : generators) {
      auto v = compose(elems[u], gen);
      if (index.emplace(v, static_cast<int>(elems.size())).second) {
        if (static_cast<int>(elems.size()) >= closure_cap)
          throw ValidationError("permutation closure exceeds cap of " +
                                std::to_string(closure_cap));
        elems.push_back(std::move(v));
        todo.push(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.table_[a * n + b] = index.at(compose(elems[a], elems[b]));
  g.element_names_.resize(n);
  for (int i = 0; i < n; ++i) g.element_names_[i] = cycle_name(elems[i]);
  g.finish(name.empty() ? "perm" + std::to_string(n) : std::move(name));
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a * n + b] = (a + b) % n;
  g.element_names_.resize(n);
  for (int i = 0; i < n; ++i)
    g.element_names_[i] = i == 0 ? "e" : "r" + std::to_string(i);
  g.finish("Z" + std::to_string(n));
  return g;
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw ValidationError("dihedral group needs n >= 1");
  const int order = 2 * n;
  FiniteGroup g;
  g.n_ = order;
  g.table_.resize(static_cast<std::size_t>(order) * order);
  // index i < n: rotation r^i; index n+i: reflection r^i s,
  // with s r = r^{-1} s.
  auto idx = [n](int rot, int ref) { return ((rot % n) + n) % n + n * ref; };
  for (int a = 0; a < order; ++a) {
    int ia = a % n, ja = a / n;
    for (int b = 0; b < order; ++b) {
      int ib = b % n, jb = b / n;
      int rot = ja == 0 ? ia + ib : ia - ib;
      g.table_[a * order + b] = idx(rot, ja ^ jb);
    }
  }
  g.element_names_.resize(order);
  for (int i = 0; i < order; ++i) {
    int rot = i % n, ref = i / n;
    std::string s = rot == 0 ? (ref ? "" : "e") : "r" + std::to_string(rot);
    if (ref) s += "s";
    g.element_names_[i] = s.empty() ? "s" : s;
  }
  g.finish("D" + std::to_string(n));
  return g;
}

namespace {

FiniteGroup from_listed_perms(std::vector<std::vector<int>> elems,
                              std::string name) {
  const int n = static_cast<int>(elems.size());
  const int m = static_cast<int>(elems[0].size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elems[i], i);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<int> r(m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < m; ++i) r[i] = elems[a][elems[b][i]];
      table[a][b] = index.at(r);
    }
  auto g = FiniteGroup::from_table(std::move(table), std::move(name));
  return g;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 7) throw ValidationError("symmetric(n) supports 1 <= n <= 7");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto g = from_listed_perms(std::move(elems), "S" + std::to_string(n));
  // Rebuild names in cycle notation (from_table assigned generic ones).
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  int i = 0;
  do {
    g.element_names_[i++] = cycle_name(q);
  } while (std::next_permutation(q.begin(), q.end()));
  return g;
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 1 || n > 7)
    throw ValidationError("alternating(n) supports 1 <= n <= 7");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    if (perm_is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto g = from_listed_perms(elems, "A" + std::to_string(n));
  for (std::size_t i = 0; i < elems.size(); ++i)
    g.element_names_[i] = cycle_name(elems[i]);
  return g;
}

FiniteGroup FiniteGroup::quaternion(int order) {
  if (order < 8 || order % 4 != 0)
    throw ValidationError("quaternion (dicyclic) group order must be 4m >= 8");
  const int m = order / 4;
  const int two_m = 2 * m;
  FiniteGroup g;
  g.n_ = order;
  g.table_.resize(static_cast<std::size_t>(order) * order);
  // index i < 2m: a^i; index 2m+i: a^i b, with b^2 = a^m, b a = a^{-1} b.
  auto idx = [two_m](int ai, int bj) {
    return ((ai % two_m) + two_m) % two_m + two_m * bj;
  };
  for (int x = 0; x < order; ++x) {
    int i1 = x % two_m, j1 = x / two_m;
    for (int y = 0; y < order; ++y) {
      int i2 = y % two_m, j2 = y / two_m;
      int out;
      if (j1 == 0)
        out = idx(i1 + i2, j2);
      else if (j2 == 0)
        out = idx(i1 - i2, 1);
      else
        out = idx(i1 - i2 + m, 0);
      g.table_[x * order + y] = out;
    }
  }
  g.element_names_.resize(order);
  for (int x = 0; x < order; ++x) {
    int i = x % two_m, j = x / two_m;
    std::string s = i == 0 ? (j ? "" : "e") : "a" + std::to_string(i);
    if (j) s += "b";
    g.element_names_[x] = s.empty() ? "b" : s;
  }
  g.finish("Q" + std::to_string(order));
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  FiniteGroup g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  // index = i + na * j for the pair (a_i, b_j)
  for (int x = 0; x < n; ++x) {
    int xa = x % na, xb = x / na;
    for (int y = 0; y < n; ++y) {
      int ya = y % na, yb = y / na;
      g.table_[x * n + y] = a.mul(xa, ya) + na * b.mul(xb, yb);
    }
  }
  g.element_names_.resize(n);
  for (int x = 0; x < n; ++x)
    g.element_names_[x] =
        "(" + a.element_name(x % na) + "," + b.element_name(x / na) + ")";
  g.finish(a.name() + "x" + b.name());
  return g;
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  int acc = identity_;
  for (long long i = 0; i < k; ++i) acc = mul(acc, a);
  return acc;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long long FiniteGroup::exponent() const {
  long long l = 1;
  for (int a = 0; a < n_; ++a) l = std::lcm(l, (long long)element_order(a));
  return l;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::eval_word(const std::vector<int>& word,
                           const std::vector<int>& images) const {
  int acc = identity_;
  for (int letter : word) {
    int k = letter > 0 ? letter : -letter;
    int img = images[k - 1];
    acc = mul(acc, letter > 0 ? img : inv(img));
  }
  return acc;
}

std::uint64_t FiniteGroup::table_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (int v : table_) mix(static_cast<std::uint64_t>(v));
  return h;
}

ConjClassData conjugacy_data(const FiniteGroup& g) {
  const int n = g.order();
  ConjClassData d;
  d.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (d.class_of[x] >= 0) continue;
    int c = static_cast<int>(d.classes.size());
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      int y = g.conjugate(h, x);
      if (d.class_of[y] < 0) {
        d.class_of[y] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    d.representatives.push_back(members.front());
    d.classes.push_back(std::move(members));
  }
  d.centralizers.resize(n);
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h)
      if (g.commutes(h, x)) d.centralizers[x].push_back(h);
  return d;
}

void GroupPresentation::validate() const {
  if (num_generators < 1)
    throw ValidationError("presentation needs at least one generator");
  for (const auto& w : relators)
    for (int letter : w) {
      int k = letter > 0 ? letter : -letter;
      if (k < 1 || k > num_generators)
        throw ValidationError("relator letter " + std::to_string(letter) +
                              " out of range");
    }
}

GroupPresentation surface_group_presentation(int genus) {
  if (genus < 0) throw ValidationError("genus must be >= 0");
  GroupPresentation p;
  if (genus == 0) {
    p.num_generators = 1;
    p.relators = {{1}};
    return p;
  }
  p.num_generators = 2 * genus;
  std::vector<int> rel;
  for (int i = 0; i < genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    rel.insert(rel.end(), {a, b, -a, -b});
  }
  p.relators = {rel};
  return p;
}

GroupPresentation cyclic_presentation(int p) {
  if (p < 1) throw ValidationError("cyclic presentation needs p >= 1");
  GroupPresentation pr;
  pr.num_generators = 1;
  pr.relators = {std::vector<int>(p, 1)};
  return pr;
}

GroupPresentation free_presentation(int rank) {
  if (rank < 1) throw ValidationError("free presentation needs rank >= 1");
  GroupPresentation pr;
  pr.num_generators = rank;
  return pr;
}

namespace {

void check_enumeration_cap(const GroupPresentation& p, const FiniteGroup& g,
                           std::uint64_t cap) {
  p.validate();
  long double work = std::max<std::size_t>(p.relators.size(), 1);
  for (int i = 0; i < p.num_generators; ++i) work *= g.order();
  if (work > static_cast<long double>(cap))
    throw ValidationError("hom enumeration would need about " +
                          std::to_string((double)work) +
                          " relator evaluations, above the cap of " +
                          std::to_string(cap));
}

bool satisfies_all(const GroupPresentation& p, const FiniteGroup& g,
                   const std::vector<int>& images) {
  for (const auto& rel : p.relators)
    if (g.eval_word(rel, images) != g.identity()) return false;
  return true;
}

// Enumerates image tuples with images[0] = first fixed, lexicographic in
// the remaining coordinates.
void enumerate_suffix(const GroupPresentation& p, const FiniteGroup& g,
                      int first, std::vector<GroupHom>& out) {
  const int k = p.num_generators, n = g.order();
  std::vector<int> images(k, 0);
  images[0] = first;
  while (true) {
    if (satisfies_all(p, g, images))
      out.push_back(GroupHom{images, &g});
    int pos = k - 1;
    while (pos >= 1 && images[pos] == n - 1) images[pos--] = 0;
    if (pos < 1) break;
    ++images[pos];
  }
}

}  // namespace

std::vector<GroupHom> enumerate_homs_serial(const GroupPresentation& p,
                                            const FiniteGroup& g,
                                            std::uint64_t cap) {
  check_enumeration_cap(p, g, cap);
  std::vector<GroupHom> out;
  for (int first = 0; first < g.order(); ++first)
    enumerate_suffix(p, g, first, out);
  return out;
}

std::vector<GroupHom> enumerate_homs(const GroupPresentation& p,
                                     const FiniteGroup& g, std::uint64_t cap) {
  check_enumeration_cap(p, g, cap);
  const int n = g.order();
  std::vector<std::vector<GroupHom>> shard(n);
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < n; ++first)
    enumerate_suffix(p, g, first, shard[first]);
  std::vector<GroupHom> out;
  for (auto& s : shard)
    out.insert(out.end(), std::make_move_iterator(s.begin()),
               std::make_move_iterator(s.end()));
  return out;
}

std::vector<HomOrbit> hom_orbits(const std::vector<GroupHom>& homs,
                                 const FiniteGroup& g) {
  const int n = g.order();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(homs.size()); ++i) {
    if (homs[i].target && *homs[i].target != g)
      throw ValidationError("hom_orbits: hom targets a different group");
    index.emplace(homs[i].images, i);
  }

  std::vector<HomOrbit> orbits;
  std::vector<bool> done(homs.size(), false);
  std::vector<int> conj;
  for (int i = 0; i < static_cast<int>(homs.size()); ++i) {
    if (done[i]) continue;
    HomOrbit orbit;
    int stab = 0;
    const auto& base = homs[i].images;
    std::vector<bool> in_orbit(homs.size(), false);
    for (int h = 0; h < n; ++h) {
      conj.resize(base.size());
      for (std::size_t j = 0; j < base.size(); ++j)
        conj[j] = g.conjugate(h, base[j]);
      if (conj == base) ++stab;
      auto it = index.find(conj);
      if (it == index.end())
        throw CheckError("hom_orbits: conjugate hom missing from input list");
      if (!in_orbit[it->second]) {
        in_orbit[it->second] = true;
        orbit.members.push_back(it->second);
        done[it->second] = true;
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.stabilizer_order = stab;
    if (static_cast<int>(orbit.members.size()) * stab != n)
      throw CheckError("hom_orbits: orbit-stabilizer identity violated");
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace dw
