#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wpb/space.hpp"

namespace wpb {

/// A code in a weighted poset block space. Codewords are kept deduplicated
/// and sorted; a code built from generator rows is marked linear and carries
/// those rows.
class Code {
 public:
  /// Throws TooSmallError for an empty word list and ContextMismatchError
  /// when a word lives in a different space.
  static Code from_codewords(Space space, std::vector<BlockVector> words);
  /// Z_m-span of the rows.
  static Code from_generator(Space space, std::vector<BlockVector> rows, std::uint64_t budget = kDefaultVectorBudget);

  const Space& space() const noexcept { return space_; }
  const SpaceContext& context() const noexcept { return *space_; }
  const std::vector<BlockVector>& codewords() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool is_linear() const noexcept { return generator_.has_value(); }
  const std::optional<std::vector<BlockVector>>& generator() const noexcept { return generator_; }
  bool contains(const BlockVector& v) const;

  /// The same words viewed in another space with equal n and m (for
  /// comparing metrics, e.g. under a finer poset or the Hamming weight).
  Code in_space(Space other) const;

 private:
  Code(Space space, std::vector<BlockVector> words, std::optional<std::vector<BlockVector>> generator);

  Space space_;
  std::vector<BlockVector> words_;
  std::optional<std::vector<BlockVector>> generator_;
};

struct SingletonParams {
  int lambda = 0;
  int mu = 0;
  std::uint64_t bound = 0;  // m^(n - mu)
  bool is_mds = false;
};

struct CodeReport {
  std::uint64_t K = 0;
  int d_w = 0;
  int d_H = 0;
  int lambda = 0;
  int mu = 0;
  std::uint64_t singleton_bound = 0;
  bool is_mds = false;
  int packing_radius = 0;
  bool is_perfect = false;
};

struct MdsPerfectCheck {
  bool applicable = false;
  bool mds = false;
  bool perfect = false;
  bool consistent = true;
};

/// A total map f from the tail blocks V_{t+1} + ... + V_s to the head blocks
/// V_1 + ... + V_t, stored as one head word per tail index (lexicographic).
class FunctionTable {
 public:
  FunctionTable(int t, int tail_length, int head_length, int m, std::vector<std::vector<int>> heads);

  /// Copies the first min(head, tail) tail coordinates into the head, zero-filled.
  static FunctionTable identity_like(const SpaceContext& ctx, int t);
  static FunctionTable random(const SpaceContext& ctx, int t, std::uint64_t seed);
  /// From explicit (tail, head) pairs; throws ArityError unless total and well-shaped.
  static FunctionTable from_pairs(const SpaceContext& ctx, int t,
                                  const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs);

  int t() const noexcept { return t_; }
  int tail_length() const noexcept { return tail_len_; }
  int head_length() const noexcept { return head_len_; }
  std::uint64_t tail_count() const noexcept { return heads_.size(); }
  const std::vector<int>& head_at(std::uint64_t tail_index) const { return heads_[tail_index]; }
  std::vector<int> tail_at(std::uint64_t tail_index) const;
  /// f(alpha u + beta v) = alpha f(u) + beta f(v) over Z_m.
  bool is_linear() const;

 private:
  int t_, tail_len_, head_len_, m_;
  std::vector<std::vector<int>> heads_;
};

int min_distance(const Code& c);
/// Minimum distance under the Hamming weight on the same poset and labeling.
int min_hamming_distance(const Code& c);
SingletonParams singleton_params(const Code& c);
/// Largest r with pairwise disjoint balls (OpenMP kernel).
int packing_radius(const Code& c, std::uint64_t budget = kDefaultVectorBudget);
/// Balls of radius r around the codewords partition V (OpenMP kernel).
bool is_r_perfect(const Code& c, int r, std::uint64_t budget = kDefaultVectorBudget);
CodeReport analyze(const Code& c, std::uint64_t budget = kDefaultVectorBudget);

/// { (f(v), v) } on the chain 1 < 2 < ... < s.
Code perfect_from_function(const Space& space, const FunctionTable& f);
/// Inverse of perfect_from_function: the f whose graph is c, if c is one.
std::optional<FunctionTable> reconstruct_function(const Code& c, int t);

MdsPerfectCheck mds_iff_perfect_check(const Code& c, std::uint64_t budget = kDefaultVectorBudget);
/// Truth of "c MDS under P implies c MDS under q" for q finer than P and a
/// constant labeling.
bool finer_mds_check(const Code& c, const Poset& q);

/// Closed under addition and scalar multiplication, and contains 0.
bool is_submodule(const Code& c);

/// Uniform random subset of V with `size` distinct words.
Code random_code(const Space& space, std::size_t size, std::mt19937_64& rng);
/// Span of `rows` random vectors.
Code random_linear_code(const Space& space, int rows, std::mt19937_64& rng);

}  // namespace wpb
