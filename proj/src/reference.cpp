#include "wpb/reference.hpp"

#include <algorithm>
#include <limits>

#include "wpb/errors.hpp"

namespace wpb::reference {

namespace {

std::vector<BlockVector> all_vectors(const SpaceContext& ctx, std::uint64_t budget) {
  ctx.require_enumerable(budget);
  std::vector<BlockVector> out;
  out.reserve(ctx.vector_count());
  for (std::uint64_t idx = 0; idx < ctx.vector_count(); ++idx) out.push_back(ctx.from_index(idx));
  return out;
}

}  // namespace

std::vector<BlockVector> ball(const BlockVector& center, int r, std::uint64_t budget) {
  std::vector<BlockVector> out;
  for (auto& v : all_vectors(center.context(), budget))
    if (distance(center, v) <= r) out.push_back(std::move(v));
  return out;
}

std::vector<int> weight_table(const SpaceContext& ctx, std::uint64_t budget) {
  std::vector<int> out;
  for (const auto& v : all_vectors(ctx, budget)) out.push_back(weight(v));
  return out;
}

int min_distance(const Code& c) {
  if (c.size() < 2) throw TooSmallError("minimum distance needs at least two codewords");
  int best = std::numeric_limits<int>::max();
  const auto& w = c.codewords();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, distance(w[i], w[j]));
  return best;
}

int packing_radius(const Code& c, std::uint64_t budget) {
  const auto vectors = all_vectors(c.context(), budget);
  const auto& words = c.codewords();
  if (words.size() < 2) throw TooSmallError("packing radius needs at least two codewords");
  // disjoint(r): no vector lies within r of two codewords
  auto disjoint = [&](int r) {
    for (const auto& v : vectors) {
      int hits = 0;
      for (const auto& cw : words)
        if (distance(cw, v) <= r && ++hits > 1) return false;
    }
    return true;
  };
  int r = 0;
  if (!disjoint(0)) return -1;
  while (disjoint(r + 1)) ++r;
  return r;
}

bool is_r_perfect(const Code& c, int r, std::uint64_t budget) {
  for (const auto& v : all_vectors(c.context(), budget)) {
    int hits = 0;
    for (const auto& cw : c.codewords())
      if (distance(cw, v) <= r) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

bool is_isometry(const BlockMatrix& t, std::uint64_t budget) {
  for (const auto& u : all_vectors(t.context(), budget)) {
    const BlockVector img = apply(t, u);
    if (weight(img) != weight(u)) return false;
    if (!u.is_zero() && img.is_zero()) return false;
  }
  return true;
}

std::vector<BlockMatrix> enumerate_isometry_group(const Space& space, std::uint64_t vector_budget,
                                                  std::uint64_t matrix_budget) {
  const int n = space->n();
  const auto m = static_cast<std::uint64_t>(space->m());
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < nn; ++e) {
    if (total > matrix_budget / m) throw BudgetError("exhaustive reference search exceeds the matrix budget");
    total *= m;
  }
  if (total > matrix_budget) throw BudgetError("exhaustive reference search exceeds the matrix budget");
  std::vector<BlockMatrix> out;
  std::vector<int> entries(nn);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t e = nn; e-- > 0;) {
      entries[e] = static_cast<int>(rest % m);
      rest /= m;
    }
    BlockMatrix t(space, entries);
    if (reference::is_isometry(t, vector_budget)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace wpb::reference
