#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace wpb {

/// Largest ground set supported by the bitmask representation.
inline constexpr int kMaxElements = 64;
/// Default cap on `s` for automorphism search.
inline constexpr int kDefaultAutomorphismCap = 10;

/// Subset of [s] stored as a bitmask; element i (1-based) lives at bit i-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elements);

  static constexpr ElementSet from_mask(std::uint64_t mask) {
    ElementSet e;
    e.bits_ = mask;
    return e;
  }
  static ElementSet from_elements(std::span<const int> elements);

  constexpr std::uint64_t mask() const noexcept { return bits_; }
  constexpr bool contains(int i) const noexcept {
    return i >= 1 && i <= kMaxElements && ((bits_ >> (i - 1)) & 1u) != 0;
  }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  void insert(int i);
  void erase(int i);
  /// Elements in increasing order.
  std::vector<int> elements() const;
  /// Largest element, or 0 when empty.
  int max_element() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_mask(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_mask(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_mask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct PrincipalIdeal {
  ElementSet ideal;   // <i>
  ElementSet strict;  // <i>* = <i> \ {i}
};

struct Classification {
  bool is_chain;
  bool is_antichain;
};

/// Finite partial order on [s], stored fully closed as per-element down- and
/// up-set masks so comparisons are O(1).
class Poset {
 public:
  /// Reflexive-transitive closure of the given cover pairs (a, b), meaning a <= b.
  static Poset from_cover_relations(int s, std::span<const std::pair<int, int>> covers);
  static Poset from_cover_relations(int s, std::initializer_list<std::pair<int, int>> covers);
  static Poset chain(int s);
  static Poset antichain(int s);

  int size() const noexcept { return s_; }
  bool leq(int i, int j) const;
  bool less(int i, int j) const { return i != j && leq(i, j); }

  ElementSet ground_set() const noexcept;
  /// {j : j <= i}
  ElementSet down_set(int i) const;
  /// {j : i <= j}
  ElementSet up_set(int i) const;

  ElementSet ideal_of(ElementSet e) const;
  PrincipalIdeal principal_ideal(int i) const;
  ElementSet maximal_elements(ElementSet q) const;
  Classification classify() const;
  bool is_ideal(ElementSet e) const;
  /// True for the chain 1 < 2 < ... < s specifically.
  bool is_standard_chain() const;

  /// Every ideal (including the empty one), ordered by mask.
  std::vector<ElementSet> ideals() const;
  /// Hasse diagram edges (a, b) with a covered by b, sorted.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  Poset(int s, std::vector<std::uint64_t> down, std::vector<std::uint64_t> up);
  void check_element(int i) const;
  void check_set(ElementSet e) const;

  int s_ = 0;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
};

/// Block dimensions k_1..k_s of a poset block structure.
class Labeling {
 public:
  explicit Labeling(std::vector<int> k);
  static Labeling uniform(int s, int k = 1) { return Labeling(std::vector<int>(static_cast<std::size_t>(s), k)); }

  int size() const noexcept { return static_cast<int>(k_.size()); }
  /// k_i for 1-based i.
  int operator[](int i) const;
  int total() const noexcept { return n_; }
  const std::vector<int>& dims() const noexcept { return k_; }
  bool is_constant() const noexcept;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> k_;
  int n_ = 0;
};

/// Bijection on [s] (1-based images).
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int s);
  static Permutation transposition(int s, int a, int b);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int i) const;
  const std::vector<int>& image() const noexcept { return image_; }
  bool is_identity() const noexcept;

  /// (this o other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

bool is_automorphism(const Poset& p, const Permutation& phi);
bool is_labeled_automorphism(const Poset& p, const Labeling& lab, const Permutation& phi);

/// Aut(P), sorted lexicographically by image. Throws SizeMismatchError if s > cap.
std::vector<Permutation> automorphisms(const Poset& p, int cap = kDefaultAutomorphismCap);
/// Aut(P, pi) = automorphisms that preserve block dimensions.
std::vector<Permutation> labeled_automorphisms(const Poset& p, const Labeling& lab,
                                               int cap = kDefaultAutomorphismCap);

/// Q finer than P: every relation of p holds in q.
bool is_finer(const Poset& p, const Poset& q);

}  // namespace wpb
