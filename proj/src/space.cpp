#include "wpb/space.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "wpb/errors.hpp"

namespace wpb {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

}  // namespace

SpaceContext::SpaceContext(Poset poset, Labeling labeling, Alphabet alphabet, WeightFunction weight)
    : poset_(std::move(poset)),
      labeling_(std::move(labeling)),
      alphabet_(alphabet),
      weight_(std::move(weight)) {
  if (labeling_.size() != poset_.size())
    throw SizeMismatchError("labeling has " + std::to_string(labeling_.size()) + " entries but poset has s = " +
                                std::to_string(poset_.size()),
                            {labeling_.size(), poset_.size()});
  if (weight_.modulus() != alphabet_.modulus())
    throw SizeMismatchError("weight table length " + std::to_string(weight_.modulus()) + " differs from m = " +
                                std::to_string(alphabet_.modulus()),
                            {weight_.modulus(), alphabet_.modulus()});
  const int s = poset_.size();
  offsets_.resize(static_cast<std::size_t>(s) + 1, 0);
  for (int i = 1; i <= s; ++i) offsets_[static_cast<std::size_t>(i)] = offsets_[static_cast<std::size_t>(i - 1)] + labeling_[i];
  for (int i = 1; i <= s; ++i) {
    down_.push_back(poset_.down_set(i).mask());
    up_.push_back(poset_.up_set(i).mask());
  }
  const int n = labeling_.total();
  place_value_.resize(static_cast<std::size_t>(n));
  std::uint64_t pv = 1;
  for (int c = n - 1; c >= 0; --c) {
    place_value_[static_cast<std::size_t>(c)] = pv;
    pv = pv > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m()) ? pv : pv * static_cast<std::uint64_t>(m());
  }
  vector_count_ = saturating_pow(static_cast<std::uint64_t>(m()), n);
}

Space SpaceContext::make(Poset poset, Labeling labeling, Alphabet alphabet, WeightFunction weight) {
  return Space(new SpaceContext(std::move(poset), std::move(labeling), alphabet, std::move(weight)));
}

int SpaceContext::block_offset(int i) const {
  if (i < 1 || i > s()) throw IndexError("block " + std::to_string(i) + " not in [s]", {i});
  return offsets_[static_cast<std::size_t>(i - 1)];
}

void SpaceContext::require_enumerable(std::uint64_t budget) const {
  if (vector_count_ > budget)
    throw BudgetError("space has m^n = " + (vector_count_ == std::numeric_limits<std::uint64_t>::max()
                                                 ? std::string("overflow")
                                                 : std::to_string(vector_count_)) +
                      " vectors, budget is " + std::to_string(budget));
}

std::uint64_t SpaceContext::index_of(std::span<const int> coords) const {
  std::uint64_t idx = 0;
  for (std::size_t c = 0; c < coords.size(); ++c) idx += static_cast<std::uint64_t>(coords[c]) * place_value_[c];
  return idx;
}

void SpaceContext::decode(std::uint64_t index, std::span<int> coords) const {
  const auto mm = static_cast<std::uint64_t>(m());
  for (std::size_t c = coords.size(); c-- > 0;) {
    coords[c] = static_cast<int>(index % mm);
    index /= mm;
  }
}

ElementSet SpaceContext::support_of(std::span<const int> coords) const {
  std::uint64_t supp = 0;
  for (int i = 0; i < s(); ++i) {
    const int lo = offsets_[static_cast<std::size_t>(i)], hi = offsets_[static_cast<std::size_t>(i) + 1];
    for (int c = lo; c < hi; ++c)
      if (coords[static_cast<std::size_t>(c)] != 0) {
        supp |= std::uint64_t{1} << i;
        break;
      }
  }
  return ElementSet::from_mask(supp);
}

int SpaceContext::block_max_weight_of(std::span<const int> coords, int i) const {
  const int lo = offsets_[static_cast<std::size_t>(i - 1)], hi = offsets_[static_cast<std::size_t>(i)];
  int w = 0;
  for (int c = lo; c < hi; ++c) w = std::max(w, weight_(coords[static_cast<std::size_t>(c)]));
  return w;
}

int SpaceContext::weight_of(std::span<const int> coords) const {
  const std::uint64_t supp = support_of(coords).mask();
  std::uint64_t ideal = 0;
  for (std::uint64_t b = supp; b != 0; b &= b - 1) ideal |= down_[static_cast<std::size_t>(std::countr_zero(b))];
  int total = 0;
  int non_maximal = 0;
  for (std::uint64_t b = ideal; b != 0; b &= b - 1) {
    const int idx = std::countr_zero(b);
    if ((up_[static_cast<std::size_t>(idx)] & ideal) == (std::uint64_t{1} << idx))
      total += block_max_weight_of(coords, idx + 1);
    else
      ++non_maximal;
  }
  return total + non_maximal * weight_.max_weight();
}

BlockVector SpaceContext::zero() const {
  return BlockVector(shared_from_this(), std::vector<int>(static_cast<std::size_t>(n()), 0));
}

BlockVector SpaceContext::basis_vector(int i, int j) const {
  if (j < 1 || j > block_size(i)) throw IndexError("basis position out of block", {i, j});
  std::vector<int> c(static_cast<std::size_t>(n()), 0);
  c[static_cast<std::size_t>(block_offset(i) + j - 1)] = 1 % m();
  return BlockVector(shared_from_this(), std::move(c));
}

BlockVector SpaceContext::vector(std::vector<int> coords) const { return BlockVector(shared_from_this(), std::move(coords)); }

BlockVector SpaceContext::from_index(std::uint64_t index) const {
  if (index >= vector_count_) throw IndexError("vector index out of range");
  std::vector<int> c(static_cast<std::size_t>(n()));
  decode(index, c);
  return BlockVector(shared_from_this(), std::move(c));
}

Space SpaceContext::with_weight(WeightFunction w) const { return make(poset_, labeling_, alphabet_, std::move(w)); }

Space SpaceContext::with_poset(Poset p) const { return make(std::move(p), labeling_, alphabet_, weight_); }

bool SpaceContext::same_as(const SpaceContext& other) const {
  return this == &other || (poset_ == other.poset_ && labeling_ == other.labeling_ && alphabet_ == other.alphabet_ &&
                            weight_ == other.weight_);
}

// ---------------------------------------------------------------------------

BlockVector::BlockVector(Space context, std::vector<int> coords) : context_(std::move(context)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != context_->n())
    throw SizeMismatchError("vector has " + std::to_string(coords_.size()) + " coordinates, space has n = " +
                                std::to_string(context_->n()),
                            {static_cast<int>(coords_.size()), context_->n()});
  for (std::size_t c = 0; c < coords_.size(); ++c)
    if (coords_[c] < 0 || coords_[c] >= context_->m())
      throw ValidationError("coordinate " + std::to_string(c + 1) + " outside [0, m)", {static_cast<int>(c) + 1, coords_[c]});
}

std::span<const int> BlockVector::block(int i) const {
  const int off = context_->block_offset(i);
  return std::span<const int>(coords_).subspan(static_cast<std::size_t>(off), static_cast<std::size_t>(context_->block_size(i)));
}

bool BlockVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

void BlockVector::require_same_space(const BlockVector& o) const {
  if (!context_->same_as(*o.context_)) throw ContextMismatchError("vectors belong to different spaces");
}

BlockVector BlockVector::operator+(const BlockVector& o) const {
  require_same_space(o);
  std::vector<int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = context_->alphabet().add(coords_[i], o.coords_[i]);
  return BlockVector(context_, std::move(c));
}

BlockVector BlockVector::operator-(const BlockVector& o) const {
  require_same_space(o);
  std::vector<int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = context_->alphabet().sub(coords_[i], o.coords_[i]);
  return BlockVector(context_, std::move(c));
}

BlockVector BlockVector::operator-() const {
  std::vector<int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = context_->alphabet().neg(coords_[i]);
  return BlockVector(context_, std::move(c));
}

BlockVector BlockVector::scaled(int a) const {
  const int r = context_->alphabet().reduce(a);
  std::vector<int> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = context_->alphabet().mul(r, coords_[i]);
  return BlockVector(context_, std::move(c));
}

// ---------------------------------------------------------------------------

ElementSet block_support(const BlockVector& u) { return u.context().support_of(u.coords()); }

int block_max_weight(const BlockVector& u, int i) {
  if (i < 1 || i > u.context().s()) throw IndexError("block " + std::to_string(i) + " not in [s]", {i});
  return u.context().block_max_weight_of(u.coords(), i);
}

int weight(const BlockVector& u) { return u.context().weight_of(u.coords()); }

int distance(const BlockVector& u, const BlockVector& v) {
  if (!u.context().same_as(v.context())) throw ContextMismatchError("distance between vectors of different spaces");
  return weight(u - v);
}

std::vector<BlockVector> ball(const BlockVector& center, int r, std::uint64_t budget) {
  const SpaceContext& ctx = center.context();
  ctx.require_enumerable(budget);
  const auto total = static_cast<std::int64_t>(ctx.vector_count());
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  const Alphabet& alpha = ctx.alphabet();
  std::vector<char> inside(static_cast<std::size_t>(total), 0);

#pragma omp parallel
  {
    std::vector<int> v(n), diff(n);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      ctx.decode(static_cast<std::uint64_t>(idx), v);
      for (std::size_t c = 0; c < n; ++c) diff[c] = alpha.sub(center[c], v[c]);
      inside[static_cast<std::size_t>(idx)] = ctx.weight_of(diff) <= r ? 1 : 0;
    }
  }

  std::vector<BlockVector> out;
  for (std::int64_t idx = 0; idx < total; ++idx)
    if (inside[static_cast<std::size_t>(idx)]) out.push_back(ctx.from_index(static_cast<std::uint64_t>(idx)));
  return out;
}

std::vector<int> weight_table(const SpaceContext& ctx, std::uint64_t budget) {
  ctx.require_enumerable(budget);
  const auto total = static_cast<std::int64_t>(ctx.vector_count());
  std::vector<int> out(static_cast<std::size_t>(total));
#pragma omp parallel
  {
    std::vector<int> v(static_cast<std::size_t>(ctx.n()));
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      ctx.decode(static_cast<std::uint64_t>(idx), v);
      out[static_cast<std::size_t>(idx)] = ctx.weight_of(v);
    }
  }
  return out;
}

}  // namespace wpb
