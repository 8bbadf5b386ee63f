#include "wpb/codes.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wpb/errors.hpp"

namespace wpb {

namespace {

std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(base))
      return std::numeric_limits<std::uint64_t>::max();
    out *= static_cast<std::uint64_t>(base);
  }
  return out;
}

void require_two_words(const Code& c) {
  if (c.size() < 2) throw TooSmallError("code needs at least two codewords", {static_cast<int>(c.size())});
}

// Flattened codeword coordinates, row-major.
std::vector<int> flat_words(const Code& c) {
  std::vector<int> out;
  out.reserve(c.size() * static_cast<std::size_t>(c.context().n()));
  for (const auto& w : c.codewords()) out.insert(out.end(), w.coords().begin(), w.coords().end());
  return out;
}

// index of (v - c) for raw coordinate arrays
std::uint64_t difference_index(const SpaceContext& ctx, std::span<const int> v, const int* c, std::span<int> scratch) {
  const Alphabet& a = ctx.alphabet();
  for (std::size_t d = 0; d < v.size(); ++d) scratch[d] = a.sub(v[d], c[d]);
  return ctx.index_of(scratch);
}

}  // namespace

// ---------------------------------------------------------------------------

Code::Code(Space space, std::vector<BlockVector> words, std::optional<std::vector<BlockVector>> generator)
    : space_(std::move(space)), words_(std::move(words)), generator_(std::move(generator)) {}

Code Code::from_codewords(Space space, std::vector<BlockVector> words) {
  if (words.empty()) throw TooSmallError("a code needs at least one codeword");
  std::vector<BlockVector> rehomed;
  rehomed.reserve(words.size());
  for (auto& w : words) {
    if (!w.context().same_as(*space)) throw ContextMismatchError("codeword belongs to a different space");
    rehomed.emplace_back(space, std::vector<int>(w.coords().begin(), w.coords().end()));
  }
  std::sort(rehomed.begin(), rehomed.end());
  rehomed.erase(std::unique(rehomed.begin(), rehomed.end()), rehomed.end());
  return Code(std::move(space), std::move(rehomed), std::nullopt);
}

Code Code::from_generator(Space space, std::vector<BlockVector> rows, std::uint64_t budget) {
  const SpaceContext& ctx = *space;
  for (const auto& r : rows)
    if (!r.context().same_as(ctx)) throw ContextMismatchError("generator row belongs to a different space");
  const int m = ctx.m();
  const std::size_t n = static_cast<std::size_t>(ctx.n());

  std::vector<std::uint64_t> span{0};
  std::vector<int> cur(n);
  for (const auto& row : rows) {
    std::vector<std::uint64_t> next;
    next.reserve(span.size() * static_cast<std::size_t>(m));
    for (std::uint64_t idx : span) {
      ctx.decode(idx, cur);
      for (int a = 0; a < m; ++a) {
        std::vector<int> w(n);
        for (std::size_t d = 0; d < n; ++d) w[d] = ctx.alphabet().add(cur[d], ctx.alphabet().mul(a, row[d]));
        next.push_back(ctx.index_of(w));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.size() > budget) throw BudgetError("span exceeds the vector budget");
    span = std::move(next);
  }

  std::vector<BlockVector> words;
  words.reserve(span.size());
  for (std::uint64_t idx : span) words.push_back(ctx.from_index(idx));
  std::vector<BlockVector> gen;
  for (auto& r : rows) gen.emplace_back(space, std::vector<int>(r.coords().begin(), r.coords().end()));
  return Code(std::move(space), std::move(words), std::move(gen));
}

bool Code::contains(const BlockVector& v) const { return std::binary_search(words_.begin(), words_.end(), v); }

Code Code::in_space(Space other) const {
  if (other->n() != space_->n() || other->m() != space_->m())
    throw ContextMismatchError("target space has a different length or alphabet");
  std::vector<BlockVector> words;
  for (const auto& w : words_) words.emplace_back(other, std::vector<int>(w.coords().begin(), w.coords().end()));
  std::optional<std::vector<BlockVector>> gen;
  if (generator_) {
    gen.emplace();
    for (const auto& r : *generator_) gen->emplace_back(other, std::vector<int>(r.coords().begin(), r.coords().end()));
  }
  return Code(std::move(other), std::move(words), std::move(gen));
}

// ---------------------------------------------------------------------------

FunctionTable::FunctionTable(int t, int tail_length, int head_length, int m, std::vector<std::vector<int>> heads)
    : t_(t), tail_len_(tail_length), head_len_(head_length), m_(m), heads_(std::move(heads)) {
  if (heads_.size() != checked_pow(m, tail_len_))
    throw ArityError("function table must list one head per tail vector",
                     {static_cast<int>(heads_.size()), static_cast<int>(checked_pow(m, tail_len_))});
  for (const auto& h : heads_) {
    if (static_cast<int>(h.size()) != head_len_) throw ArityError("head word has wrong length", {static_cast<int>(h.size()), head_len_});
    for (int x : h)
      if (x < 0 || x >= m_) throw ArityError("head entry outside [0, m)", {x});
  }
}

namespace {

struct Split {
  int head;
  int tail;
};

Split split_for(const SpaceContext& ctx, int t) {
  if (!ctx.poset().is_standard_chain())
    throw NotChainError("perfect-code construction needs the chain 1 < 2 < ... < s");
  if (t < 0 || t > ctx.s()) throw ArityError("t must lie in [0, s]", {t, ctx.s()});
  const int head = t == 0 ? 0 : ctx.block_offset(t) + ctx.block_size(t);
  return {head, ctx.n() - head};
}

std::vector<int> digits_of(std::uint64_t idx, int length, int m) {
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int d = length - 1; d >= 0; --d) {
    out[static_cast<std::size_t>(d)] = static_cast<int>(idx % static_cast<std::uint64_t>(m));
    idx /= static_cast<std::uint64_t>(m);
  }
  return out;
}

std::uint64_t index_of_digits(std::span<const int> digits, int m) {
  std::uint64_t idx = 0;
  for (int d : digits) idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(d);
  return idx;
}

}  // namespace

std::vector<int> FunctionTable::tail_at(std::uint64_t tail_index) const { return digits_of(tail_index, tail_len_, m_); }

FunctionTable FunctionTable::identity_like(const SpaceContext& ctx, int t) {
  const Split sp = split_for(ctx, t);
  const std::uint64_t count = checked_pow(ctx.m(), sp.tail);
  std::vector<std::vector<int>> heads;
  heads.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto tail = digits_of(i, sp.tail, ctx.m());
    std::vector<int> head(static_cast<std::size_t>(sp.head), 0);
    std::copy_n(tail.begin(), std::min(sp.head, sp.tail), head.begin());
    heads.push_back(std::move(head));
  }
  return FunctionTable(t, sp.tail, sp.head, ctx.m(), std::move(heads));
}

FunctionTable FunctionTable::random(const SpaceContext& ctx, int t, std::uint64_t seed) {
  const Split sp = split_for(ctx, t);
  std::mt19937_64 rng(seed);
  const std::uint64_t count = checked_pow(ctx.m(), sp.tail);
  std::vector<std::vector<int>> heads(count, std::vector<int>(static_cast<std::size_t>(sp.head)));
  for (auto& h : heads)
    for (int& x : h) x = static_cast<int>(rng() % static_cast<std::uint64_t>(ctx.m()));
  return FunctionTable(t, sp.tail, sp.head, ctx.m(), std::move(heads));
}

FunctionTable FunctionTable::from_pairs(const SpaceContext& ctx, int t,
                                        const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
  const Split sp = split_for(ctx, t);
  const std::uint64_t count = checked_pow(ctx.m(), sp.tail);
  std::vector<std::vector<int>> heads(count);
  std::vector<bool> seen(count, false);
  for (const auto& [tail, head] : pairs) {
    if (static_cast<int>(tail.size()) != sp.tail)
      throw ArityError("tail word has wrong length", {static_cast<int>(tail.size()), sp.tail});
    for (int x : tail)
      if (x < 0 || x >= ctx.m()) throw ArityError("tail entry outside [0, m)", {x});
    const std::uint64_t idx = index_of_digits(tail, ctx.m());
    if (seen[idx]) throw ArityError("tail word listed twice", tail);
    seen[idx] = true;
    heads[idx] = head;
  }
  for (std::uint64_t i = 0; i < count; ++i)
    if (!seen[i]) throw ArityError("function is not total: a tail word is missing", digits_of(i, sp.tail, ctx.m()));
  return FunctionTable(t, sp.tail, sp.head, ctx.m(), std::move(heads));
}

bool FunctionTable::is_linear() const {
  const std::uint64_t count = heads_.size();
  for (std::uint64_t u = 0; u < count; ++u) {
    const auto tu = tail_at(u);
    for (std::uint64_t v = 0; v < count; ++v) {
      const auto tv = tail_at(v);
      std::vector<int> sum(tu.size());
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] = (tu[d] + tv[d]) % m_;
      const auto& fs = heads_[index_of_digits(sum, m_)];
      for (std::size_t d = 0; d < fs.size(); ++d)
        if (fs[d] != (heads_[u][d] + heads_[v][d]) % m_) return false;
    }
    for (int a = 0; a < m_; ++a) {
      std::vector<int> sc(tu.size());
      for (std::size_t d = 0; d < sc.size(); ++d) sc[d] = (a * tu[d]) % m_;
      const auto& fa = heads_[index_of_digits(sc, m_)];
      for (std::size_t d = 0; d < fa.size(); ++d)
        if (fa[d] != (a * heads_[u][d]) % m_) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

int min_distance(const Code& c) {
  require_two_words(c);
  const SpaceContext& ctx = c.context();
  const auto& words = c.codewords();
  const auto K = static_cast<std::int64_t>(words.size());
  int best = std::numeric_limits<int>::max();

  if (c.is_linear()) {
#pragma omp parallel for reduction(min : best) schedule(static)
    for (std::int64_t i = 0; i < K; ++i) {
      const auto& w = words[static_cast<std::size_t>(i)];
      if (!w.is_zero()) best = std::min(best, ctx.weight_of(w.coords()));
    }
    return best;
  }

  const std::vector<int> flat = flat_words(c);
  const std::size_t n = static_cast<std::size_t>(ctx.n());
#pragma omp parallel reduction(min : best)
  {
    std::vector<int> diff(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < K; ++i)
      for (std::int64_t j = i + 1; j < K; ++j) {
        const int* a = flat.data() + static_cast<std::size_t>(i) * n;
        const int* b = flat.data() + static_cast<std::size_t>(j) * n;
        for (std::size_t d = 0; d < n; ++d) diff[d] = ctx.alphabet().sub(a[d], b[d]);
        best = std::min(best, ctx.weight_of(diff));
      }
  }
  return best;
}

int min_hamming_distance(const Code& c) {
  const Space ham = c.context().with_weight(hamming_weight(c.context().alphabet()));
  return min_distance(c.in_space(ham));
}

SingletonParams singleton_params(const Code& c) {
  const SpaceContext& ctx = c.context();
  const int d = min_distance(c);
  const WeightFunction& w = ctx.weight_function();
  SingletonParams p;
  p.lambda = (d - w.min_weight()) / w.max_weight();
  p.mu = 0;
  for (ElementSet ideal : ctx.poset().ideals()) {
    if (ideal.size() != p.lambda) continue;
    int sum = 0;
    for (int i : ideal.elements()) sum += ctx.block_size(i);
    p.mu = std::max(p.mu, sum);
  }
  p.bound = checked_pow(ctx.m(), ctx.n() - p.mu);
  p.is_mds = static_cast<std::uint64_t>(c.size()) == p.bound;
  return p;
}

int packing_radius(const Code& c, std::uint64_t budget) {
  require_two_words(c);
  const SpaceContext& ctx = c.context();
  const std::vector<int> table = weight_table(ctx, budget);
  const std::vector<int> flat = flat_words(c);
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  const std::size_t K = c.size();
  const auto total = static_cast<std::int64_t>(ctx.vector_count());

  // Balls of radius r are disjoint iff every v is within r of at most one
  // codeword, i.e. r < second-smallest distance from v to C.
  int best = std::numeric_limits<int>::max();
#pragma omp parallel reduction(min : best)
  {
    std::vector<int> v(n), diff(n);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      ctx.decode(static_cast<std::uint64_t>(idx), v);
      int d1 = std::numeric_limits<int>::max(), d2 = std::numeric_limits<int>::max();
      for (std::size_t k = 0; k < K; ++k) {
        const int d = table[difference_index(ctx, v, flat.data() + k * n, diff)];
        if (d < d1) {
          d2 = d1;
          d1 = d;
        } else if (d < d2) {
          d2 = d;
        }
      }
      best = std::min(best, d2);
    }
  }
  return best - 1;
}

bool is_r_perfect(const Code& c, int r, std::uint64_t budget) {
  const SpaceContext& ctx = c.context();
  const std::vector<int> table = weight_table(ctx, budget);
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  const auto total = static_cast<std::int64_t>(ctx.vector_count());

  std::vector<std::uint64_t> ball0;
  for (std::int64_t idx = 0; idx < total; ++idx)
    if (table[static_cast<std::size_t>(idx)] <= r) ball0.push_back(static_cast<std::uint64_t>(idx));
  // Cheap necessary condition: sizes must tile V exactly.
  const std::uint64_t count = ctx.vector_count();
  if (count % c.size() != 0 || count / c.size() != ball0.size()) return false;

  int ok = 1;
  if (c.size() <= ball0.size()) {
    const std::vector<int> flat = flat_words(c);
    const std::size_t K = c.size();
#pragma omp parallel reduction(& : ok)
    {
      std::vector<int> v(n), diff(n);
#pragma omp for schedule(static)
      for (std::int64_t idx = 0; idx < total; ++idx) {
        if (!ok) continue;
        ctx.decode(static_cast<std::uint64_t>(idx), v);
        int covered = 0;
        for (std::size_t k = 0; k < K && covered < 2; ++k)
          if (table[difference_index(ctx, v, flat.data() + k * n, diff)] <= r) ++covered;
        if (covered != 1) ok = 0;
      }
    }
  } else {
    std::vector<char> member(static_cast<std::size_t>(total), 0);
    for (const auto& w : c.codewords()) member[w.index()] = 1;
    std::vector<int> ball_flat;
    ball_flat.reserve(ball0.size() * n);
    {
      std::vector<int> b(n);
      for (std::uint64_t idx : ball0) {
        ctx.decode(idx, b);
        ball_flat.insert(ball_flat.end(), b.begin(), b.end());
      }
    }
#pragma omp parallel reduction(& : ok)
    {
      std::vector<int> v(n), diff(n);
#pragma omp for schedule(static)
      for (std::int64_t idx = 0; idx < total; ++idx) {
        if (!ok) continue;
        ctx.decode(static_cast<std::uint64_t>(idx), v);
        int covered = 0;
        for (std::size_t k = 0; k < ball0.size() && covered < 2; ++k)
          if (member[difference_index(ctx, v, ball_flat.data() + k * n, diff)]) ++covered;
        if (covered != 1) ok = 0;
      }
    }
  }
  return ok != 0;
}

CodeReport analyze(const Code& c, std::uint64_t budget) {
  CodeReport r;
  r.K = c.size();
  r.d_w = min_distance(c);
  r.d_H = min_hamming_distance(c);
  const SingletonParams sp = singleton_params(c);
  r.lambda = sp.lambda;
  r.mu = sp.mu;
  r.singleton_bound = sp.bound;
  r.is_mds = sp.is_mds;
  r.packing_radius = packing_radius(c, budget);
  r.is_perfect = is_r_perfect(c, r.packing_radius, budget);
  return r;
}

// ---------------------------------------------------------------------------

Code perfect_from_function(const Space& space, const FunctionTable& f) {
  const Split sp = split_for(*space, f.t());
  if (f.tail_length() != sp.tail || f.head_length() != sp.head)
    throw ArityError("function table does not match the block split at t", {f.tail_length(), sp.tail});
  std::vector<BlockVector> words;
  words.reserve(f.tail_count());
  for (std::uint64_t i = 0; i < f.tail_count(); ++i) {
    std::vector<int> w = f.head_at(i);
    const auto tail = f.tail_at(i);
    w.insert(w.end(), tail.begin(), tail.end());
    words.emplace_back(space, std::move(w));
  }
  return Code::from_codewords(space, std::move(words));
}

std::optional<FunctionTable> reconstruct_function(const Code& c, int t) {
  const SpaceContext& ctx = c.context();
  const Split sp = split_for(ctx, t);
  const std::uint64_t count = checked_pow(ctx.m(), sp.tail);
  if (c.size() != count) return std::nullopt;
  std::vector<std::vector<int>> heads(count);
  std::vector<bool> seen(count, false);
  for (const auto& w : c.codewords()) {
    const auto coords = w.coords();
    const std::uint64_t ti = index_of_digits(coords.subspan(static_cast<std::size_t>(sp.head)), ctx.m());
    if (seen[ti]) return std::nullopt;
    seen[ti] = true;
    heads[ti].assign(coords.begin(), coords.begin() + sp.head);
  }
  return FunctionTable(t, sp.tail, sp.head, ctx.m(), std::move(heads));
}

MdsPerfectCheck mds_iff_perfect_check(const Code& c, std::uint64_t budget) {
  const SpaceContext& ctx = c.context();
  if (!ctx.poset().classify().is_chain) throw NotChainError("MDS/perfect equivalence applies to chain posets only");
  require_two_words(c);
  const WeightFunction& w = ctx.weight_function();
  const int d_w = min_distance(c);
  const int d_h = min_hamming_distance(c);
  MdsPerfectCheck out;
  out.applicable = d_w == w.min_weight() + (d_h - 1) * w.max_weight();
  out.mds = singleton_params(c).is_mds;
  out.perfect = is_r_perfect(c, packing_radius(c, budget), budget);
  out.consistent = !out.applicable || (out.mds == out.perfect);
  return out;
}

bool finer_mds_check(const Code& c, const Poset& q) {
  const SpaceContext& ctx = c.context();
  if (!is_finer(ctx.poset(), q)) throw NotFinerError("target poset is not finer than the code's poset");
  if (!ctx.labeling().is_constant()) throw LabelError("refinement check needs a constant labeling");
  if (!singleton_params(c).is_mds) return true;
  return singleton_params(c.in_space(ctx.with_poset(q))).is_mds;
}

bool is_submodule(const Code& c) {
  const SpaceContext& ctx = c.context();
  if (!c.contains(ctx.zero())) return false;
  for (const auto& a : c.codewords()) {
    for (int k = 2; k < ctx.m(); ++k)
      if (!c.contains(a.scaled(k))) return false;
    for (const auto& b : c.codewords())
      if (!c.contains(a + b)) return false;
  }
  return true;
}

Code random_code(const Space& space, std::size_t size, std::mt19937_64& rng) {
  const std::uint64_t total = space->vector_count();
  if (size == 0 || size > total) throw TooSmallError("random code size must lie in [1, m^n]");
  std::vector<std::uint64_t> picked;
  while (picked.size() < size) {
    const std::uint64_t idx = rng() % total;
    if (std::find(picked.begin(), picked.end(), idx) == picked.end()) picked.push_back(idx);
  }
  std::vector<BlockVector> words;
  for (std::uint64_t idx : picked) words.push_back(space->from_index(idx));
  return Code::from_codewords(space, std::move(words));
}

Code random_linear_code(const Space& space, int rows, std::mt19937_64& rng) {
  std::vector<BlockVector> gen;
  for (int r = 0; r < rows; ++r) gen.push_back(space->from_index(rng() % space->vector_count()));
  return Code::from_generator(space, std::move(gen));
}

}  // namespace wpb
