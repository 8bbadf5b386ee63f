#pragma once

// Serial, straightforward versions of the OpenMP kernels. They favour the
// definitions over speed and are used to cross-check the parallel code.

#include <cstdint>
#include <vector>

#include "wpb/codes.hpp"
#include "wpb/isometry.hpp"

namespace wpb::reference {

std::vector<BlockVector> ball(const BlockVector& center, int r, std::uint64_t budget = kDefaultVectorBudget);
std::vector<int> weight_table(const SpaceContext& ctx, std::uint64_t budget = kDefaultVectorBudget);

/// Minimum over all pairs of distinct codewords.
int min_distance(const Code& c);
/// Grows r from 0 until two balls of radius r + 1 meet.
int packing_radius(const Code& c, std::uint64_t budget = kDefaultVectorBudget);
/// Counts, for each vector, how many codeword balls contain it.
bool is_r_perfect(const Code& c, int r, std::uint64_t budget = kDefaultVectorBudget);

bool is_isometry(const BlockMatrix& t, std::uint64_t budget = kDefaultVectorBudget);
/// Every n x n matrix over Z_m, filtered by is_isometry.
std::vector<BlockMatrix> enumerate_isometry_group(const Space& space, std::uint64_t vector_budget = kDefaultVectorBudget,
                                                  std::uint64_t matrix_budget = kDefaultMatrixBudget);

}  // namespace wpb::reference
