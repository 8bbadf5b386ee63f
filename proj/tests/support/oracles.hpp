#pragma once

// Brute-force oracles written straight from the definitions. They share no
// code with the library beyond plain std containers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

/// Reflexive order relation on {0, ..., s-1}; le[i][j] means i <= j.
struct Order {
  int s = 0;
  std::vector<std::vector<bool>> le;
};

inline Order closure(int s, const std::vector<std::pair<int, int>>& covers) {
  Order o{s, std::vector<std::vector<bool>>(static_cast<std::size_t>(s), std::vector<bool>(static_cast<std::size_t>(s), false))};
  for (int i = 0; i < s; ++i) o.le[i][i] = true;
  for (auto [a, b] : covers) o.le[a - 1][b - 1] = true;
  for (int k = 0; k < s; ++k)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        if (o.le[i][k] && o.le[k][j]) o.le[i][j] = true;
  return o;
}

inline std::vector<int> hamming_table(int m) {
  std::vector<int> t(static_cast<std::size_t>(m), 1);
  t[0] = 0;
  return t;
}

inline std::vector<int> lee_table(int m) {
  std::vector<int> t(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) t[a] = std::min(a, m - a);
  return t;
}

inline std::vector<int> decode(std::uint64_t idx, int n, int m) {
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    c[i] = static_cast<int>(idx % static_cast<std::uint64_t>(m));
    idx /= static_cast<std::uint64_t>(m);
  }
  return c;
}

inline std::uint64_t encode(const std::vector<int>& c, int m) {
  std::uint64_t idx = 0;
  for (int x : c) idx = idx * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(x);
  return idx;
}

inline std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Blocks with a nonzero coordinate (0-based block ids).
inline std::vector<bool> support(const std::vector<int>& k, const std::vector<int>& c) {
  std::vector<bool> out(k.size(), false);
  std::size_t pos = 0;
  for (std::size_t b = 0; b < k.size(); ++b)
    for (int j = 0; j < k[b]; ++j, ++pos)
      if (c[pos] != 0) out[b] = true;
  return out;
}

inline std::vector<bool> ideal(const Order& o, const std::vector<bool>& supp) {
  std::vector<bool> out(static_cast<std::size_t>(o.s), false);
  for (int j = 0; j < o.s; ++j)
    for (int i = 0; i < o.s; ++i)
      if (supp[i] && o.le[j][i]) out[j] = true;
  return out;
}

inline int count(const std::vector<bool>& v) { return static_cast<int>(std::count(v.begin(), v.end(), true)); }

inline int ideal_size(const Order& o, const std::vector<int>& k, const std::vector<int>& c) {
  return count(ideal(o, support(k, c)));
}

inline int block_max(const std::vector<int>& k, const std::vector<int>& w, const std::vector<int>& c, int block) {
  int off = std::accumulate(k.begin(), k.begin() + block, 0);
  int best = 0;
  for (int j = 0; j < k[block]; ++j) best = std::max(best, w[c[off + j]]);
  return best;
}

/// Sum of block maxima over the maximal elements of the generated ideal,
/// plus M_w for every other ideal element.
inline int weight(const Order& o, const std::vector<int>& k, const std::vector<int>& w, const std::vector<int>& c) {
  const int Mw = *std::max_element(w.begin(), w.end());
  const auto id = ideal(o, support(k, c));
  int total = 0;
  for (int i = 0; i < o.s; ++i) {
    if (!id[i]) continue;
    bool maximal = true;
    for (int j = 0; j < o.s; ++j)
      if (j != i && id[j] && o.le[i][j]) maximal = false;
    total += maximal ? block_max(k, w, c, i) : Mw;
  }
  return total;
}

inline std::vector<int> sub(const std::vector<int>& a, const std::vector<int>& b, int m) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ((a[i] - b[i]) % m + m) % m;
  return out;
}

/// Rank of a rows x cols matrix over the prime field Z_p.
inline int rank_mod_p(std::vector<std::vector<int>> a, int p) {
  auto inv = [p](int x) {
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0;
  };
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][col] % p != 0) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    const int iv = inv(a[rank][col]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const int f = a[r][col] * iv % p;
      for (int c = 0; c < cols; ++c) a[r][c] = ((a[r][c] - f * a[rank][c]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// All permutations of {0..s-1} preserving the order and the block sizes.
inline std::vector<std::vector<int>> labeled_automorphisms(const Order& o, const std::vector<int>& k) {
  std::vector<int> p(static_cast<std::size_t>(o.s));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < o.s && ok; ++i) {
      if (k[p[i]] != k[i]) ok = false;
      for (int j = 0; j < o.s && ok; ++j)
        if (o.le[i][j] != o.le[p[i]][p[j]]) ok = false;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Linear map (row-major n x n) preserving the weight on every vector; the
/// kernel is trivial because only 0 has weight 0.
inline bool is_isometry(const Order& o, const std::vector<int>& k, const std::vector<int>& w, int m,
                        const std::vector<int>& mat) {
  const int n = static_cast<int>(k.size() == 0 ? 0 : std::accumulate(k.begin(), k.end(), 0));
  const std::uint64_t total = power(static_cast<std::uint64_t>(m), n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const auto u = decode(idx, n, m);
    std::vector<int> img(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
      int acc = 0;
      for (int c = 0; c < n; ++c) acc += mat[r * n + c] * u[c];
      img[r] = acc % m;
    }
    if (weight(o, k, w, img) != weight(o, k, w, u)) return false;
  }
  return true;
}

}  // namespace oracle
