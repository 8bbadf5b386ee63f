#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wpb/poset.hpp"
#include "wpb/space.hpp"

namespace wpb {

inline constexpr std::uint64_t kDefaultMatrixBudget = std::uint64_t{1} << 24;

/// n x n matrix over Z_m acting on column vectors of V. Block (i, j) is the
/// k_i x k_j submatrix A_ij mapping V_j into V_i.
class BlockMatrix {
 public:
  /// Row-major entries; throws SizeMismatchError unless there are n*n of them.
  BlockMatrix(Space space, std::vector<int> entries);
  static BlockMatrix identity(Space space);
  static BlockMatrix from_rows(Space space, const std::vector<std::vector<int>>& rows);

  const SpaceContext& context() const noexcept { return *space_; }
  const Space& space() const noexcept { return space_; }
  int n() const noexcept { return n_; }
  /// 0-based entry access.
  int operator()(int row, int col) const noexcept { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::vector<std::vector<int>> rows() const;
  /// A_ij as a k_i x k_j row-major array (1-based block indices).
  std::vector<int> block(int i, int j) const;
  bool block_is_zero(int i, int j) const;

  /// out = A * in (raw coordinates).
  void apply_to(std::span<const int> in, std::span<int> out) const;
  /// Composition: (*this) o other.
  BlockMatrix operator*(const BlockMatrix& other) const;

  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) { return a.entries_ == b.entries_; }
  friend auto operator<=>(const BlockMatrix& a, const BlockMatrix& b) { return a.entries_ <=> b.entries_; }

 private:
  Space space_;
  int n_;
  std::vector<int> entries_;
};

struct IsometryDecomposition {
  Permutation phi;
  BlockMatrix s_part;  // element of the triangular group; original = s_part * T_phi
};

struct GroupReport {
  std::uint64_t gl_order = 0;
  std::uint64_t u_order = 0;
  std::uint64_t aut_order = 0;
  bool product_matches = false;
  /// Unique factorisation with exact recomposition for every element, and
  /// the elements with trivial eta are exactly |U| many.
  bool all_decomposed = false;
  /// Per-element: principal images of every e_ij, eta order-preserving and
  /// block-size preserving.
  bool invariants_hold = false;
  std::vector<BlockMatrix> elements;  // canonical order
};

struct EnumerationOptions {
  std::uint64_t vector_budget = kDefaultVectorBudget;
  std::uint64_t matrix_budget = kDefaultMatrixBudget;
  /// Scan all m^(n^2) matrices instead of the pruned column search.
  bool exhaustive = false;
};

BlockVector apply(const BlockMatrix& t, const BlockVector& u);

/// Injective and weight-preserving on every vector of V (OpenMP kernel).
bool is_isometry(const BlockMatrix& t, std::uint64_t budget = kDefaultVectorBudget);

/// T_phi(e_ij) = e_phi(i)j. Throws NotLabeledAutomorphismError unless phi is in Aut(P, pi).
BlockMatrix from_automorphism(const Permutation& phi, const Space& space);

/// Membership in the triangular group U: zero blocks off the order, diagonal
/// columns of block weight w(1), and diagonal blocks preserving W_r.
bool in_triangular_group(const BlockMatrix& t);

/// Whether a single k_r x k_r block satisfies the diagonal conditions of U.
bool diagonal_block_ok(const SpaceContext& ctx, int r, std::span<const int> block);

/// eta_T(i) = max of the ideal generated by supp(T e_i1).
Permutation eta(const BlockMatrix& t, std::uint64_t budget = kDefaultVectorBudget);
/// (eta_T, T o T_{eta^-1}); throws DecompositionError if the second factor leaves U.
IsometryDecomposition decompose(const BlockMatrix& t, std::uint64_t budget = kDefaultVectorBudget);

/// All linear isometries of V, in canonical (entry-lexicographic) order.
std::vector<BlockMatrix> enumerate_isometry_group(const Space& space, const EnumerationOptions& opts = {});

/// Number of k_r x k_r matrices passing the diagonal conditions.
std::uint64_t diagonal_block_count(const SpaceContext& ctx, int r, std::uint64_t budget = kDefaultMatrixBudget);
/// |U| = prod_r D_r * m^(sum over i < j of k_i k_j).
std::uint64_t triangular_group_order(const SpaceContext& ctx, std::uint64_t budget = kDefaultMatrixBudget);

GroupReport verify_semidirect(const Space& space, const EnumerationOptions& opts = {});

/// Set when the space is a non-field Z_m whose weight has no unit alpha with
/// w(alpha) = m_w; the group factorisation is not claimed there.
std::optional<std::string> ring_warning(const SpaceContext& ctx);

}  // namespace wpb
