#include "wpb/isometry.hpp"

#include <algorithm>
#include <limits>

#include "wpb/errors.hpp"

namespace wpb {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Weight-preservation test of a raw n x n matrix against a precomputed weight
// table. Walks V in index order; injectivity follows because only 0 has weight 0.
bool preserves_weights(const SpaceContext& ctx, const std::vector<int>& entries, const std::vector<int>& table,
                       std::vector<int>& u, std::vector<int>& out) {
  const int n = ctx.n();
  const Alphabet& a = ctx.alphabet();
  const auto total = ctx.vector_count();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    ctx.decode(idx, u);
    for (int r = 0; r < n; ++r) {
      int acc = 0;
      for (int c = 0; c < n; ++c) acc += entries[static_cast<std::size_t>(r * n + c)] * u[static_cast<std::size_t>(c)];
      out[static_cast<std::size_t>(r)] = a.reduce(acc);
    }
    const std::uint64_t img = ctx.index_of(out);
    if (img == 0 || table[img] != table[idx]) return false;
  }
  return true;
}

// Block-max weight of a raw block vector.
int block_weight(const WeightFunction& w, std::span<const int> x) {
  int out = 0;
  for (int v : x) out = std::max(out, w(v));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

BlockMatrix::BlockMatrix(Space space, std::vector<int> entries)
    : space_(std::move(space)), n_(space_->n()), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
    throw SizeMismatchError("matrix must be n x n with n = " + std::to_string(n_), {static_cast<int>(entries_.size())});
  for (int& x : entries_) {
    if (x < 0 || x >= space_->m()) throw ValidationError("matrix entry outside [0, m)", {x});
  }
}

BlockMatrix BlockMatrix::identity(Space space) {
  const int n = space->n();
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i * n + i)] = 1;
  return BlockMatrix(std::move(space), std::move(e));
}

BlockMatrix BlockMatrix::from_rows(Space space, const std::vector<std::vector<int>>& rows) {
  const int n = space->n();
  if (static_cast<int>(rows.size()) != n)
    throw SizeMismatchError("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n),
                            {static_cast<int>(rows.size()), n});
  std::vector<int> e;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw SizeMismatchError("matrix row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(n),
                              {static_cast<int>(r.size()), n});
    e.insert(e.end(), r.begin(), r.end());
  }
  return BlockMatrix(std::move(space), std::move(e));
}

std::vector<std::vector<int>> BlockMatrix::rows() const {
  std::vector<std::vector<int>> out;
  for (int r = 0; r < n_; ++r)
    out.emplace_back(entries_.begin() + r * n_, entries_.begin() + (r + 1) * n_);
  return out;
}

std::vector<int> BlockMatrix::block(int i, int j) const {
  const int r0 = space_->block_offset(i), c0 = space_->block_offset(j);
  const int ki = space_->block_size(i), kj = space_->block_size(j);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ki * kj));
  for (int r = 0; r < ki; ++r)
    for (int c = 0; c < kj; ++c) out.push_back((*this)(r0 + r, c0 + c));
  return out;
}

bool BlockMatrix::block_is_zero(int i, int j) const {
  const auto b = block(i, j);
  return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

void BlockMatrix::apply_to(std::span<const int> in, std::span<int> out) const {
  const Alphabet& a = space_->alphabet();
  for (int r = 0; r < n_; ++r) {
    long long acc = 0;
    for (int c = 0; c < n_; ++c) acc += static_cast<long long>((*this)(r, c)) * in[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = a.reduce(acc);
  }
}

BlockMatrix BlockMatrix::operator*(const BlockMatrix& other) const {
  if (!space_->same_as(other.context())) throw ContextMismatchError("composing matrices of different spaces");
  std::vector<int> e(entries_.size(), 0);
  const Alphabet& a = space_->alphabet();
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      long long acc = 0;
      for (int k = 0; k < n_; ++k) acc += static_cast<long long>((*this)(r, k)) * other(k, c);
      e[static_cast<std::size_t>(r * n_ + c)] = a.reduce(acc);
    }
  return BlockMatrix(space_, std::move(e));
}

// ---------------------------------------------------------------------------

BlockVector apply(const BlockMatrix& t, const BlockVector& u) {
  if (!t.context().same_as(u.context())) throw ContextMismatchError("matrix and vector belong to different spaces");
  std::vector<int> out(static_cast<std::size_t>(t.n()));
  t.apply_to(u.coords(), out);
  return BlockVector(t.space(), std::move(out));
}

bool is_isometry(const BlockMatrix& t, std::uint64_t budget) {
  const SpaceContext& ctx = t.context();
  const std::vector<int> table = weight_table(ctx, budget);
  const auto total = static_cast<std::int64_t>(ctx.vector_count());
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  int ok = 1;
#pragma omp parallel reduction(& : ok)
  {
    std::vector<int> u(n), out(n);
#pragma omp for schedule(static)
    for (std::int64_t idx = 1; idx < total; ++idx) {
      if (!ok) continue;
      ctx.decode(static_cast<std::uint64_t>(idx), u);
      t.apply_to(u, out);
      const std::uint64_t img = ctx.index_of(out);
      if (img == 0 || table[img] != table[static_cast<std::size_t>(idx)]) ok = 0;
    }
  }
  return ok != 0;
}

BlockMatrix from_automorphism(const Permutation& phi, const Space& space) {
  const SpaceContext& ctx = *space;
  if (!is_labeled_automorphism(ctx.poset(), ctx.labeling(), phi))
    throw NotLabeledAutomorphismError("permutation is not a block-size preserving poset automorphism", phi.image());
  const int n = ctx.n();
  std::vector<int> e(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= ctx.s(); ++i)
    for (int j = 0; j < ctx.block_size(i); ++j) {
      const int col = ctx.block_offset(i) + j;
      const int row = ctx.block_offset(phi(i)) + j;
      e[static_cast<std::size_t>(row * n + col)] = 1;
    }
  return BlockMatrix(space, std::move(e));
}

bool diagonal_block_ok(const SpaceContext& ctx, int r, std::span<const int> block) {
  const int k = ctx.block_size(r);
  const WeightFunction& w = ctx.weight_function();
  const Alphabet& a = ctx.alphabet();
  const int w1 = w(1 % ctx.m());
  for (int l = 0; l < k; ++l) {
    int col = 0;
    for (int row = 0; row < k; ++row) col = std::max(col, w(block[static_cast<std::size_t>(row * k + l)]));
    if (col != w1) return false;
  }
  // every beta in V_r
  std::vector<int> beta(static_cast<std::size_t>(k), 0), image(static_cast<std::size_t>(k));
  const std::uint64_t count = saturating_pow(static_cast<std::uint64_t>(ctx.m()), static_cast<std::uint64_t>(k));
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int d = k - 1; d >= 0; --d) {
      beta[static_cast<std::size_t>(d)] = static_cast<int>(rest % static_cast<std::uint64_t>(ctx.m()));
      rest /= static_cast<std::uint64_t>(ctx.m());
    }
    for (int row = 0; row < k; ++row) {
      long long acc = 0;
      for (int c = 0; c < k; ++c) acc += static_cast<long long>(block[static_cast<std::size_t>(row * k + c)]) * beta[static_cast<std::size_t>(c)];
      image[static_cast<std::size_t>(row)] = a.reduce(acc);
    }
    if (block_weight(w, image) != block_weight(w, beta)) return false;
  }
  return true;
}

bool in_triangular_group(const BlockMatrix& t) {
  const SpaceContext& ctx = t.context();
  const Poset& p = ctx.poset();
  for (int i = 1; i <= ctx.s(); ++i)
    for (int j = 1; j <= ctx.s(); ++j)
      if (!p.leq(i, j) && !t.block_is_zero(i, j)) return false;
  for (int r = 1; r <= ctx.s(); ++r)
    if (!diagonal_block_ok(ctx, r, t.block(r, r))) return false;
  return true;
}

namespace {

// eta without the isometry precondition check; also verifies that every
// e_ij of a block lands in the same principal ideal.
Permutation eta_of(const BlockMatrix& t) {
  const SpaceContext& ctx = t.context();
  const Poset& p = ctx.poset();
  std::vector<int> image;
  for (int i = 1; i <= ctx.s(); ++i) {
    int top_i = 0;
    for (int j = 1; j <= ctx.block_size(i); ++j) {
      const BlockVector y = apply(t, ctx.basis_vector(i, j));
      const ElementSet top = p.maximal_elements(p.ideal_of(block_support(y)));
      if (top.size() != 1)
        throw NonPrincipalError("image of e_" + std::to_string(i) + std::to_string(j) + " generates a non-principal ideal",
                                top.elements());
      if (j == 1)
        top_i = top.max_element();
      else if (top.max_element() != top_i)
        throw NonPrincipalError("columns of block " + std::to_string(i) + " reach different principal ideals",
                                {top_i, top.max_element()});
    }
    image.push_back(top_i);
  }
  return Permutation(std::move(image));
}

IsometryDecomposition decompose_unchecked(const BlockMatrix& t) {
  Permutation phi = eta_of(t);
  const BlockMatrix t_phi = from_automorphism(phi, t.space());
  const BlockMatrix s_part = t * from_automorphism(phi.inverse(), t.space());
  if (!in_triangular_group(s_part)) throw DecompositionError("T o T_{eta^-1} is not in the triangular group");
  if (s_part * t_phi != t) throw DecompositionError("recomposition does not reproduce T");
  return {std::move(phi), s_part};
}

}  // namespace

Permutation eta(const BlockMatrix& t, std::uint64_t budget) {
  if (!is_isometry(t, budget)) throw NotIsometryError("eta is defined for isometries only");
  return eta_of(t);
}

IsometryDecomposition decompose(const BlockMatrix& t, std::uint64_t budget) {
  if (!is_isometry(t, budget)) throw NotIsometryError("only isometries decompose");
  return decompose_unchecked(t);
}

// ---------------------------------------------------------------------------

namespace {

struct PrunedSearch {
  const SpaceContext& ctx;
  const std::vector<int>& table;
  int n;
  std::vector<int> block_of_col;              // 1-based block of each column
  std::vector<std::vector<int>> candidates;   // per block: flattened candidate columns
  std::vector<std::vector<int>> block_vectors;  // per block: nonzero vectors of V_i (flattened, length k_i)
  std::vector<int> block_base_weight;           // M_w * |<i>*|

  PrunedSearch(const SpaceContext& c, const std::vector<int>& t) : ctx(c), table(t), n(c.n()) {
    const int s = ctx.s();
    const Poset& p = ctx.poset();
    const int Mw = ctx.weight_function().max_weight();
    for (int i = 1; i <= s; ++i)
      for (int j = 0; j < ctx.block_size(i); ++j) block_of_col.push_back(i);

    candidates.resize(static_cast<std::size_t>(s) + 1);
    block_vectors.resize(static_cast<std::size_t>(s) + 1);
    block_base_weight.resize(static_cast<std::size_t>(s) + 1);
    const auto total = ctx.vector_count();
    std::vector<int> x(static_cast<std::size_t>(n));
    for (int i = 1; i <= s; ++i) {
      block_base_weight[static_cast<std::size_t>(i)] = Mw * p.principal_ideal(i).strict.size();
      const int target = ctx.weight_of(ctx.basis_vector(i, 1).coords());
      const int down_i = p.down_set(i).size();
      auto& cand = candidates[static_cast<std::size_t>(i)];
      for (std::uint64_t idx = 1; idx < total; ++idx) {
        if (table[idx] != target) continue;
        ctx.decode(idx, x);
        const ElementSet top = p.maximal_elements(p.ideal_of(ctx.support_of(x)));
        if (top.size() != 1) continue;
        const int j = top.max_element();
        if (p.down_set(j).size() != down_i || ctx.block_size(j) != ctx.block_size(i)) continue;
        cand.insert(cand.end(), x.begin(), x.end());
      }
      const int k = ctx.block_size(i);
      const std::uint64_t count = saturating_pow(static_cast<std::uint64_t>(ctx.m()), static_cast<std::uint64_t>(k));
      for (std::uint64_t b = 1; b < count; ++b) {
        std::uint64_t rest = b;
        std::vector<int> beta(static_cast<std::size_t>(k));
        for (int d = k - 1; d >= 0; --d) {
          beta[static_cast<std::size_t>(d)] = static_cast<int>(rest % static_cast<std::uint64_t>(ctx.m()));
          rest /= static_cast<std::uint64_t>(ctx.m());
        }
        block_vectors[static_cast<std::size_t>(i)].insert(block_vectors[static_cast<std::size_t>(i)].end(), beta.begin(),
                                                          beta.end());
      }
    }
  }

  std::size_t candidate_count(int block) const {
    return candidates[static_cast<std::size_t>(block)].size() / static_cast<std::size_t>(n);
  }

  std::uint64_t search_bound() const {
    std::uint64_t bound = 1;
    for (int b : block_of_col) bound = saturating_mul(bound, candidate_count(b));
    return bound;
  }

  void set_column(std::vector<int>& entries, int col, int block, std::size_t which) const {
    const int* src = candidates[static_cast<std::size_t>(block)].data() + which * static_cast<std::size_t>(n);
    for (int r = 0; r < n; ++r) entries[static_cast<std::size_t>(r * n + col)] = src[r];
  }

  // T restricted to V_i preserves weight (columns of block i are set).
  bool block_preserved(const std::vector<int>& entries, int i, std::vector<int>& out) const {
    const int k = ctx.block_size(i);
    const int off = ctx.block_offset(i);
    const auto& vecs = block_vectors[static_cast<std::size_t>(i)];
    const WeightFunction& w = ctx.weight_function();
    const Alphabet& a = ctx.alphabet();
    for (std::size_t v = 0; v < vecs.size(); v += static_cast<std::size_t>(k)) {
      std::span<const int> beta(vecs.data() + v, static_cast<std::size_t>(k));
      for (int r = 0; r < n; ++r) {
        int acc = 0;
        for (int c = 0; c < k; ++c) acc += entries[static_cast<std::size_t>(r * n + off + c)] * beta[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = a.reduce(acc);
      }
      if (table[ctx.index_of(out)] != block_base_weight[static_cast<std::size_t>(i)] + block_weight(w, beta)) return false;
    }
    return true;
  }

  void run(std::vector<int>& entries, int col, std::vector<int>& u, std::vector<int>& out,
           std::vector<BlockMatrix>& found, const Space& space) const {
    if (col == n) {
      if (preserves_weights(ctx, entries, table, u, out)) found.emplace_back(space, entries);
      return;
    }
    const int block = block_of_col[static_cast<std::size_t>(col)];
    const bool closes_block = col + 1 == n || block_of_col[static_cast<std::size_t>(col) + 1] != block;
    for (std::size_t c = 0; c < candidate_count(block); ++c) {
      set_column(entries, col, block, c);
      if (closes_block && !block_preserved(entries, block, out)) continue;
      run(entries, col + 1, u, out, found, space);
    }
  }
};

}  // namespace

std::vector<BlockMatrix> enumerate_isometry_group(const Space& space, const EnumerationOptions& opts) {
  const SpaceContext& ctx = *space;
  const std::vector<int> table = weight_table(ctx, opts.vector_budget);
  const int n = ctx.n();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<BlockMatrix> found;

  if (opts.exhaustive) {
    const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(ctx.m()), nn);
    if (total > opts.matrix_budget)
      throw BudgetError("exhaustive search needs m^(n^2) = " + (total == kSaturated ? std::string("overflow") : std::to_string(total)) +
                        " matrices, budget is " + std::to_string(opts.matrix_budget));
#pragma omp parallel
    {
      std::vector<int> entries(nn), u(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
      std::vector<BlockMatrix> local;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
        std::uint64_t rest = static_cast<std::uint64_t>(idx);
        for (std::size_t e = nn; e-- > 0;) {
          entries[e] = static_cast<int>(rest % static_cast<std::uint64_t>(ctx.m()));
          rest /= static_cast<std::uint64_t>(ctx.m());
        }
        if (preserves_weights(ctx, entries, table, u, out)) local.emplace_back(space, entries);
      }
#pragma omp critical(wpb_isometry_merge)
      found.insert(found.end(), local.begin(), local.end());
    }
  } else {
    const PrunedSearch search(ctx, table);
    const std::uint64_t bound = search.search_bound();
    if (bound > opts.matrix_budget)
      throw BudgetError("pruned search may visit " + (bound == kSaturated ? std::string("overflow") : std::to_string(bound)) +
                        " column assignments, budget is " + std::to_string(opts.matrix_budget));
    const int first_block = search.block_of_col.front();
    const auto first = static_cast<std::int64_t>(search.candidate_count(first_block));
#pragma omp parallel
    {
      std::vector<int> entries(nn, 0), u(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
      std::vector<BlockMatrix> local;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < first; ++c) {
        search.set_column(entries, 0, first_block, static_cast<std::size_t>(c));
        const bool closes = n == 1 || search.block_of_col[1] != first_block;
        if (closes && !search.block_preserved(entries, first_block, out)) continue;
        search.run(entries, 1, u, out, local, space);
      }
#pragma omp critical(wpb_isometry_merge)
      found.insert(found.end(), local.begin(), local.end());
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::uint64_t diagonal_block_count(const SpaceContext& ctx, int r, std::uint64_t budget) {
  const int k = ctx.block_size(r);
  const std::size_t kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(ctx.m()), kk);
  if (total > budget) throw BudgetError("diagonal block enumeration exceeds the matrix budget", {r, k});
  std::uint64_t count = 0;
#pragma omp parallel reduction(+ : count)
  {
    std::vector<int> block(kk);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      std::uint64_t rest = static_cast<std::uint64_t>(idx);
      for (std::size_t e = kk; e-- > 0;) {
        block[e] = static_cast<int>(rest % static_cast<std::uint64_t>(ctx.m()));
        rest /= static_cast<std::uint64_t>(ctx.m());
      }
      if (diagonal_block_ok(ctx, r, block)) ++count;
    }
  }
  return count;
}

std::uint64_t triangular_group_order(const SpaceContext& ctx, std::uint64_t budget) {
  std::uint64_t order = 1;
  for (int r = 1; r <= ctx.s(); ++r) order = saturating_mul(order, diagonal_block_count(ctx, r, budget));
  std::uint64_t free_entries = 0;
  for (int i = 1; i <= ctx.s(); ++i)
    for (int j = 1; j <= ctx.s(); ++j)
      if (ctx.poset().less(i, j))
        free_entries += static_cast<std::uint64_t>(ctx.block_size(i)) * static_cast<std::uint64_t>(ctx.block_size(j));
  order = saturating_mul(order, saturating_pow(static_cast<std::uint64_t>(ctx.m()), free_entries));
  if (order == kSaturated) throw BudgetError("triangular group order overflows 64 bits");
  return order;
}

GroupReport verify_semidirect(const Space& space, const EnumerationOptions& opts) {
  const SpaceContext& ctx = *space;
  GroupReport report;
  report.elements = enumerate_isometry_group(space, opts);
  report.gl_order = report.elements.size();
  report.u_order = triangular_group_order(ctx, opts.matrix_budget);
  const auto aut = labeled_automorphisms(ctx.poset(), ctx.labeling());
  report.aut_order = aut.size();
  report.product_matches = report.gl_order == saturating_mul(report.u_order, report.aut_order);

  // Uniqueness of T = S T_phi reduces to U meeting {T_phi} only in the identity.
  bool unique = true;
  for (const auto& phi : aut)
    if (in_triangular_group(from_automorphism(phi, space)) != phi.is_identity()) unique = false;

  bool decomposed = true, invariants = true;
  std::uint64_t in_u = 0;
  const Poset& p = ctx.poset();
  for (const auto& t : report.elements) {
    try {
      const auto d = decompose_unchecked(t);
      if (!std::binary_search(report.elements.begin(), report.elements.end(), d.s_part)) decomposed = false;
      if (!std::binary_search(aut.begin(), aut.end(), d.phi)) decomposed = false;
      if (d.phi.is_identity()) ++in_u;
      for (int i = 1; i <= ctx.s(); ++i)
        if (ctx.block_size(d.phi(i)) != ctx.block_size(i) || p.down_set(d.phi(i)).size() != p.down_set(i).size())
          invariants = false;
      for (int i = 1; i <= ctx.s(); ++i)
        for (int j = 1; j <= ctx.s(); ++j)
          if (p.leq(i, j) != p.leq(d.phi(i), d.phi(j))) invariants = false;
    } catch (const NonPrincipalError&) {
      invariants = false;
      decomposed = false;
    } catch (const Error&) {
      decomposed = false;
    }
  }
  report.all_decomposed = decomposed && unique && in_u == report.u_order;
  report.invariants_hold = invariants;
  return report;
}

std::optional<std::string> ring_warning(const SpaceContext& ctx) {
  const Alphabet& a = ctx.alphabet();
  if (a.is_field()) return std::nullopt;
  const WeightFunction& w = ctx.weight_function();
  for (int x = 1; x < a.modulus(); ++x)
    if (a.is_unit(x) && w(x) == w.min_weight()) return std::nullopt;
  return "Z_" + std::to_string(a.modulus()) +
         " has no unit of minimal weight; the semi-direct factorisation is not guaranteed for this weight";
}

}  // namespace wpb
