#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dw/errors.hpp"

namespace dw {

// A finite group given by its full multiplication table. Elements are
// dense indices 0..order-1; the table is the single source of truth.
// Immutable after construction and safe to share across threads.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Validates Latin-square property, identity, inverses and
  // associativity (full scan for order <= 64, random sample above).
  // Throws ValidationError with a witness on failure.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::string name = {});

  // Closure of a set of permutations of {0..m-1} under composition
  // (p*q)(i) = p(q(i)). Elements are ordered breadth-first from the
  // identity, new elements discovered as u*gen with generators in the
  // given order. Throws ValidationError if the closure exceeds the cap.
  static FiniteGroup from_permutations(
      const std::vector<std::vector<int>>& generators, std::string name = {},
      int closure_cap = 2048);

  // Named families. Element orderings are documented per constructor.
  static FiniteGroup cyclic(int n);        // 0..n-1, addition mod n
  static FiniteGroup dihedral(int n);      // order 2n: r^i (i<n), r^i s (i>=n)
  static FiniteGroup symmetric(int n);     // perms of {0..n-1} in lex order
  static FiniteGroup alternating(int n);   // even perms in lex order
  static FiniteGroup quaternion(int order);  // dicyclic of order 4m
  static FiniteGroup direct_product(const FiniteGroup& a,
                                    const FiniteGroup& b);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  // g x g^{-1}
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int power(int a, long long k) const;
  // Smallest positive k with a^k = e.
  int element_order(int a) const;
  // lcm of the element orders.
  long long exponent() const;
  bool is_abelian() const;
  bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }

  // Evaluates a relator word at the given generator images, left to
  // right. Letters are 1-based signed generator indices.
  int eval_word(const std::vector<int>& word,
                const std::vector<int>& images) const;

  const std::string& element_name(int a) const { return element_names_[a]; }
  const std::string& name() const { return name_; }
  const std::vector<int>& flat_table() const { return table_; }
  // FNV-1a over the flat table; used as a cache key.
  std::uint64_t table_hash() const;

  bool operator==(const FiniteGroup& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major, table_[a*n+b] = a*b
  std::vector<int> inverse_;
  std::vector<std::string> element_names_;
  std::string name_;

  void finish(std::string name);  // locate identity/inverses, validate
};

// Conjugation structure of a group.
struct ConjClassData {
  std::vector<std::vector<int>> classes;  // sorted members, sorted by rep
  std::vector<int> class_of;              // element -> class index
  std::vector<int> representatives;       // least element per class
  std::vector<std::vector<int>> centralizers;  // per element, sorted
};

ConjClassData conjugacy_data(const FiniteGroup& g);

// Finitely presented group: relator words are lists of nonzero signed
// 1-based generator indices (+k = generator k, -k = its inverse).
struct GroupPresentation {
  int num_generators = 0;
  std::vector<std::vector<int>> relators;

  void validate() const;
};

// A homomorphism into a finite group, recorded by generator images.
struct GroupHom {
  std::vector<int> images;
  const FiniteGroup* target = nullptr;
};

// Surface group of genus g >= 0. Genus 0 is presented as <a | a>,
// which presents the trivial group.
GroupPresentation surface_group_presentation(int genus);
// <a | a^p>, the fundamental group of a lens space L(p,q).
GroupPresentation cyclic_presentation(int p);
// Free group of the given rank (no relators).
GroupPresentation free_presentation(int rank);

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// All homomorphisms P -> G by brute force over |G|^k image tuples in
// lexicographic order (first generator most significant). The parallel
// version shards on the first generator image and is order-stable.
// Throws ValidationError if |G|^k * #relators exceeds the cap.
std::vector<GroupHom> enumerate_homs(
    const GroupPresentation& p, const FiniteGroup& g,
    std::uint64_t cap = kDefaultEnumerationCap);
std::vector<GroupHom> enumerate_homs_serial(
    const GroupPresentation& p, const FiniteGroup& g,
    std::uint64_t cap = kDefaultEnumerationCap);

// Orbits of a hom list under simultaneous conjugation of the images.
struct HomOrbit {
  std::vector<int> members;  // indices into the input list, ascending
  int stabilizer_order = 0;
};

// Partitions homs into conjugation orbits; verifies orbit-stabilizer
// (|orbit| * |stabilizer| = |G|) for each orbit.
std::vector<HomOrbit> hom_orbits(const std::vector<GroupHom>& homs,
                                 const FiniteGroup& g);

}  // namespace dw
