#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "wpb/space.hpp"

namespace fixtures {

struct Bundle {
  int s = 0;
  std::vector<std::pair<int, int>> covers;  // 1-based cover pairs
  std::vector<int> k;
  int m = 2;
  std::string weight;  // "hamming" or "lee"
  std::vector<int> table;

  oracle::Order order() const { return oracle::closure(s, covers); }
  int n() const;
  std::uint64_t vector_count() const;
  std::string describe() const;
};

struct Grid {
  int max_s = 4;
  int max_k = 2;
  int max_n = 5;
  std::vector<int> moduli = {2, 3, 4, 5};
  std::uint64_t max_vectors = 4096;
};

/// Every poset on up to max_s points, one representative per isomorphism
/// class of (poset, labeling), crossed with alphabets and weights. Lee and
/// Hamming coincide for m <= 3; such duplicates are dropped.
std::vector<Bundle> all_bundles(const Grid& grid = {});

/// The chains 1 < 2 < ... < s with every labeling, alphabet and weight.
std::vector<Bundle> chain_bundles(const Grid& grid = {});

/// Strict partial orders on s points as cover lists (all labelled posets).
std::vector<std::vector<std::pair<int, int>>> all_posets(int s);

wpb::Space make_space(const Bundle& b);
wpb::Space make_space(int s, const std::vector<std::pair<int, int>>& covers, const std::vector<int>& k, int m,
                      const std::string& weight);

}  // namespace fixtures
