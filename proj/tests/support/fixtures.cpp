#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fixtures {

int Bundle::n() const { return std::accumulate(k.begin(), k.end(), 0); }

std::uint64_t Bundle::vector_count() const { return oracle::power(static_cast<std::uint64_t>(m), n()); }

std::string Bundle::describe() const {
  std::ostringstream os;
  os << "s=" << s << " covers={";
  for (auto [a, b] : covers) os << "(" << a << "," << b << ")";
  os << "} k=(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ") m=" << m << " " << weight;
  return os.str();
}

namespace {

// Hasse diagram of a transitively closed strict order.
std::vector<std::pair<int, int>> hasse(int s, const std::vector<std::vector<bool>>& lt) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < s; ++k)
        if (lt[i][k] && lt[k][j]) cover = false;
      if (cover) out.emplace_back(i + 1, j + 1);
    }
  return out;
}

std::vector<std::vector<int>> labelings(int s, int max_k, int max_n) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(static_cast<std::size_t>(s), 1);
  while (true) {
    if (std::accumulate(k.begin(), k.end(), 0) <= max_n) out.push_back(k);
    int pos = s - 1;
    while (pos >= 0 && k[pos] == max_k) k[pos--] = 1;
    if (pos < 0) break;
    ++k[pos];
  }
  return out;
}

// Smallest relabelled (relation, labeling) encoding.
std::vector<int> canonical(int s, const oracle::Order& o, const std::vector<int>& k) {
  std::vector<int> p(static_cast<std::size_t>(s));
  std::iota(p.begin(), p.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> code;
    for (int i = 0; i < s; ++i) code.push_back(k[p[i]]);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) code.push_back(o.le[p[i]][p[j]] ? 1 : 0);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::vector<std::pair<std::string, std::vector<int>>> weights_for(int m) {
  std::vector<std::pair<std::string, std::vector<int>>> out{{"hamming", oracle::hamming_table(m)}};
  if (oracle::lee_table(m) != oracle::hamming_table(m)) out.emplace_back("lee", oracle::lee_table(m));
  return out;
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> all_posets(int s) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> lt(static_cast<std::size_t>(s), std::vector<bool>(static_cast<std::size_t>(s), false));
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1u) lt[pairs[b].first][pairs[b].second] = true;
    bool ok = true;
    for (int i = 0; i < s && ok; ++i)
      for (int j = 0; j < s && ok; ++j) {
        if (lt[i][j] && lt[j][i]) ok = false;
        for (int k = 0; k < s && ok; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) ok = false;
      }
    if (ok) out.push_back(hasse(s, lt));
  }
  return out;
}

std::vector<Bundle> all_bundles(const Grid& grid) {
  std::vector<Bundle> out;
  for (int s = 1; s <= grid.max_s; ++s) {
    std::set<std::vector<int>> seen;
    for (const auto& covers : all_posets(s)) {
      const auto order = oracle::closure(s, covers);
      for (const auto& k : labelings(s, grid.max_k, grid.max_n)) {
        if (!seen.insert(canonical(s, order, k)).second) continue;
        for (int m : grid.moduli)
          for (auto& [name, table] : weights_for(m)) {
            Bundle b{s, covers, k, m, name, table};
            if (b.vector_count() <= grid.max_vectors) out.push_back(std::move(b));
          }
      }
    }
  }
  return out;
}

std::vector<Bundle> chain_bundles(const Grid& grid) {
  std::vector<Bundle> out;
  for (int s = 1; s <= grid.max_s; ++s) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < s; ++i) covers.emplace_back(i, i + 1);
    for (const auto& k : labelings(s, grid.max_k, grid.max_n))
      for (int m : grid.moduli)
        for (auto& [name, table] : weights_for(m)) {
          Bundle b{s, covers, k, m, name, table};
          if (b.vector_count() <= grid.max_vectors) out.push_back(std::move(b));
        }
  }
  return out;
}

wpb::Space make_space(const Bundle& b) { return make_space(b.s, b.covers, b.k, b.m, b.weight); }

wpb::Space make_space(int s, const std::vector<std::pair<int, int>>& covers, const std::vector<int>& k, int m,
                      const std::string& weight) {
  const wpb::Alphabet a(m);
  auto w = weight == "lee" ? wpb::lee_weight(a) : wpb::hamming_weight(a);
  return wpb::SpaceContext::make(wpb::Poset::from_cover_relations(s, covers), wpb::Labeling(k), a, std::move(w));
}

}  // namespace fixtures
