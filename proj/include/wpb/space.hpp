#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "wpb/algebra.hpp"
#include "wpb/poset.hpp"

namespace wpb {

inline constexpr std::uint64_t kDefaultVectorBudget = std::uint64_t{1} << 20;

class BlockVector;
class SpaceContext;
using Space = std::shared_ptr<const SpaceContext>;

/// The weighted poset block space V = V_1 + ... + V_s over Z_m together with
/// its (P, pi, w)-weight. Always handled through `Space` so that vectors can
/// refer back to it.
///
/// Vectors are also addressed by a lexicographic index in [0, m^n): the first
/// coordinate is the most significant digit, so index order is coordinate
/// order. The enumeration kernels work on that index range.
class SpaceContext : public std::enable_shared_from_this<SpaceContext> {
 public:
  static Space make(Poset poset, Labeling labeling, Alphabet alphabet, WeightFunction weight);

  const Poset& poset() const noexcept { return poset_; }
  const Labeling& labeling() const noexcept { return labeling_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const WeightFunction& weight_function() const noexcept { return weight_; }

  int s() const noexcept { return poset_.size(); }
  int n() const noexcept { return labeling_.total(); }
  int m() const noexcept { return alphabet_.modulus(); }
  /// 0-based coordinate where block i (1-based) starts.
  int block_offset(int i) const;
  int block_size(int i) const { return labeling_[i]; }

  /// m^n, saturated at UINT64_MAX.
  std::uint64_t vector_count() const noexcept { return vector_count_; }
  /// Throws BudgetError when m^n exceeds the budget.
  void require_enumerable(std::uint64_t budget) const;

  std::uint64_t index_of(std::span<const int> coords) const;
  void decode(std::uint64_t index, std::span<int> coords) const;

  // Raw kernels shared by the public API and the enumeration loops.
  ElementSet support_of(std::span<const int> coords) const;
  int block_max_weight_of(std::span<const int> coords, int i) const;
  int weight_of(std::span<const int> coords) const;

  BlockVector zero() const;
  /// e_ij for block i, position j (both 1-based).
  BlockVector basis_vector(int i, int j) const;
  BlockVector vector(std::vector<int> coords) const;
  BlockVector from_index(std::uint64_t index) const;

  /// Same space with a different weight or poset; used for d_H and refinement checks.
  Space with_weight(WeightFunction w) const;
  Space with_poset(Poset p) const;

  /// Structural equality: poset, labeling, alphabet and weight all match.
  bool same_as(const SpaceContext& other) const;

 private:
  SpaceContext(Poset poset, Labeling labeling, Alphabet alphabet, WeightFunction weight);

  Poset poset_;
  Labeling labeling_;
  Alphabet alphabet_;
  WeightFunction weight_;
  std::vector<int> offsets_;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> place_value_;
  std::uint64_t vector_count_ = 0;
};

/// Element of V: a flat coordinate array whose blocks are located through the
/// context's offsets.
class BlockVector {
 public:
  BlockVector(Space context, std::vector<int> coords);

  const SpaceContext& context() const noexcept { return *context_; }
  const Space& space() const noexcept { return context_; }
  std::span<const int> coords() const noexcept { return coords_; }
  int operator[](std::size_t c) const noexcept { return coords_[c]; }
  std::size_t size() const noexcept { return coords_.size(); }
  /// u_i as a view into the coordinates.
  std::span<const int> block(int i) const;
  bool is_zero() const noexcept;
  std::uint64_t index() const { return context_->index_of(coords_); }

  BlockVector operator+(const BlockVector& o) const;
  BlockVector operator-(const BlockVector& o) const;
  BlockVector operator-() const;
  BlockVector scaled(int a) const;

  /// Coordinates only; callers comparing across spaces must check the context.
  friend bool operator==(const BlockVector& a, const BlockVector& b) { return a.coords_ == b.coords_; }
  friend auto operator<=>(const BlockVector& a, const BlockVector& b) { return a.coords_ <=> b.coords_; }

 private:
  void require_same_space(const BlockVector& o) const;

  Space context_;
  std::vector<int> coords_;
};

/// supp_pi(u) = {i : u_i != 0}
ElementSet block_support(const BlockVector& u);
/// W_i(u) = max_j w(u_ij)
int block_max_weight(const BlockVector& u, int i);
/// The (P, pi, w)-weight.
int weight(const BlockVector& u);
/// d(u, v) = weight(u - v); throws ContextMismatchError across spaces.
int distance(const BlockVector& u, const BlockVector& v);

/// { v : d(center, v) <= r } in lexicographic order (OpenMP kernel).
std::vector<BlockVector> ball(const BlockVector& center, int r, std::uint64_t budget = kDefaultVectorBudget);
/// Weight of every vector of V, indexed lexicographically (OpenMP kernel).
std::vector<int> weight_table(const SpaceContext& ctx, std::uint64_t budget = kDefaultVectorBudget);

}  // namespace wpb
