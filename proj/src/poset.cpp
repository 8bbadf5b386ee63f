#include "wpb/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wpb/errors.hpp"

namespace wpb {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }

std::uint64_t full_mask(int s) {
  return s >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
}

}  // namespace

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int i : elements) insert(i);
}

ElementSet ElementSet::from_elements(std::span<const int> elements) {
  ElementSet e;
  for (int i : elements) e.insert(i);
  return e;
}

void ElementSet::insert(int i) {
  if (i < 1 || i > kMaxElements) throw IndexError("element " + std::to_string(i) + " out of range", {i});
  bits_ |= bit(i);
}

void ElementSet::erase(int i) {
  if (i >= 1 && i <= kMaxElements) bits_ &= ~bit(i);
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

// ---------------------------------------------------------------------------

Poset::Poset(int s, std::vector<std::uint64_t> down, std::vector<std::uint64_t> up)
    : s_(s), down_(std::move(down)), up_(std::move(up)) {}

Poset Poset::from_cover_relations(int s, std::span<const std::pair<int, int>> covers) {
  if (s < 1 || s > kMaxElements) throw IndexError("ground set size must be in [1, 64]", {s});
  // reach[i] = {j : i <= j}, closed by Warshall.
  std::vector<std::uint64_t> up(static_cast<std::size_t>(s));
  for (int i = 1; i <= s; ++i) up[i - 1] = bit(i);
  for (auto [a, b] : covers) {
    if (a < 1 || a > s || b < 1 || b > s)
      throw IndexError("cover pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside [s]", {a, b});
    if (a == b) throw CycleError("cover pair (" + std::to_string(a) + "," + std::to_string(a) + ") is a loop", {a, a});
    up[a - 1] |= bit(b);
  }
  for (int k = 1; k <= s; ++k)
    for (int i = 1; i <= s; ++i)
      if (up[i - 1] & bit(k)) up[i - 1] |= up[k - 1];

  std::vector<std::uint64_t> down(static_cast<std::size_t>(s), 0);
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j)
      if (up[i - 1] & bit(j)) down[j - 1] |= bit(i);

  for (int i = 1; i <= s; ++i) {
    const std::uint64_t both = up[i - 1] & down[i - 1] & ~bit(i);
    if (both != 0) {
      const int j = std::countr_zero(both) + 1;
      throw CycleError("cover relations force " + std::to_string(i) + " <= " + std::to_string(j) +
                           " and " + std::to_string(j) + " <= " + std::to_string(i),
                       {i, j});
    }
  }
  return Poset(s, std::move(down), std::move(up));
}

Poset Poset::from_cover_relations(int s, std::initializer_list<std::pair<int, int>> covers) {
  return from_cover_relations(s, std::span<const std::pair<int, int>>(covers.begin(), covers.size()));
}

Poset Poset::chain(int s) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < s; ++i) covers.emplace_back(i, i + 1);
  return from_cover_relations(s, covers);
}

Poset Poset::antichain(int s) { return from_cover_relations(s, std::span<const std::pair<int, int>>{}); }

void Poset::check_element(int i) const {
  if (i < 1 || i > s_) throw IndexError("element " + std::to_string(i) + " not in [s]", {i});
}

void Poset::check_set(ElementSet e) const {
  if (!e.subset_of(ground_set())) throw IndexError("set contains elements outside [s]", {e.max_element()});
}

bool Poset::leq(int i, int j) const {
  check_element(i);
  check_element(j);
  return (down_[j - 1] & bit(i)) != 0;
}

ElementSet Poset::ground_set() const noexcept { return ElementSet::from_mask(full_mask(s_)); }

ElementSet Poset::down_set(int i) const {
  check_element(i);
  return ElementSet::from_mask(down_[i - 1]);
}

ElementSet Poset::up_set(int i) const {
  check_element(i);
  return ElementSet::from_mask(up_[i - 1]);
}

ElementSet Poset::ideal_of(ElementSet e) const {
  check_set(e);
  std::uint64_t out = 0;
  for (std::uint64_t b = e.mask(); b != 0; b &= b - 1) out |= down_[std::countr_zero(b)];
  return ElementSet::from_mask(out);
}

PrincipalIdeal Poset::principal_ideal(int i) const {
  const ElementSet ideal = down_set(i);
  return {ideal, ideal - ElementSet{i}};
}

ElementSet Poset::maximal_elements(ElementSet q) const {
  check_set(q);
  std::uint64_t out = 0;
  for (std::uint64_t b = q.mask(); b != 0; b &= b - 1) {
    const int idx = std::countr_zero(b);
    if ((up_[idx] & q.mask()) == (std::uint64_t{1} << idx)) out |= std::uint64_t{1} << idx;
  }
  return ElementSet::from_mask(out);
}

Classification Poset::classify() const {
  bool chain = true;
  bool antichain = true;
  for (int i = 1; i <= s_; ++i) {
    const std::uint64_t comparable = down_[i - 1] | up_[i - 1];
    if (comparable != full_mask(s_)) chain = false;
    if (comparable != bit(i)) antichain = false;
  }
  return {chain, antichain};
}

bool Poset::is_ideal(ElementSet e) const {
  check_set(e);
  return ideal_of(e) == e;
}

bool Poset::is_standard_chain() const {
  for (int i = 1; i <= s_; ++i)
    if (down_[i - 1] != full_mask(i)) return false;
  return true;
}

std::vector<ElementSet> Poset::ideals() const {
  if (s_ > 24) throw BudgetError("ideal enumeration limited to s <= 24", {s_});
  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << s_;
  for (std::uint64_t m = 0; m < total; ++m) {
    bool closed = true;
    for (std::uint64_t b = m; b != 0 && closed; b &= b - 1)
      closed = (down_[std::countr_zero(b)] & ~m) == 0;
    if (closed) out.push_back(ElementSet::from_mask(m));
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= s_; ++a)
    for (int b = 1; b <= s_; ++b) {
      if (a == b || !(down_[b - 1] & bit(a))) continue;
      // a < b is a cover iff nothing sits strictly between them.
      const std::uint64_t between = up_[a - 1] & down_[b - 1] & ~bit(a) & ~bit(b);
      if (between == 0) out.emplace_back(a, b);
    }
  return out;
}

// ---------------------------------------------------------------------------

Labeling::Labeling(std::vector<int> k) : k_(std::move(k)) {
  if (k_.empty()) throw SizeMismatchError("labeling must be nonempty");
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] < 1)
      throw ValidationError("block dimension k_" + std::to_string(i + 1) + " must be positive",
                            {static_cast<int>(i) + 1, k_[i]});
  n_ = std::accumulate(k_.begin(), k_.end(), 0);
}

int Labeling::operator[](int i) const {
  if (i < 1 || i > size()) throw IndexError("labeling index " + std::to_string(i) + " not in [s]", {i});
  return k_[static_cast<std::size_t>(i - 1)];
}

bool Labeling::is_constant() const noexcept {
  return std::all_of(k_.begin(), k_.end(), [&](int k) { return k == k_.front(); });
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int s = size();
  std::vector<bool> seen(static_cast<std::size_t>(s) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > s || seen[static_cast<std::size_t>(v)])
      throw ValidationError("image is not a bijection of [s]", {v});
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int s) {
  std::vector<int> img(static_cast<std::size_t>(s));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int s, int a, int b) {
  std::vector<int> img(static_cast<std::size_t>(s));
  std::iota(img.begin(), img.end(), 1);
  if (a < 1 || a > s || b < 1 || b > s) throw IndexError("transposition outside [s]", {a, b});
  std::swap(img[static_cast<std::size_t>(a - 1)], img[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(img));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw IndexError("permutation argument " + std::to_string(i) + " not in [s]", {i});
  return image_[static_cast<std::size_t>(i - 1)];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw SizeMismatchError("composing permutations of different degree");
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = image_[static_cast<std::size_t>(other.image_[i] - 1)];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------

bool is_automorphism(const Poset& p, const Permutation& phi) {
  if (phi.size() != p.size()) throw SizeMismatchError("permutation degree differs from poset size");
  for (int i = 1; i <= p.size(); ++i)
    for (int j = 1; j <= p.size(); ++j)
      if (p.leq(i, j) != p.leq(phi(i), phi(j))) return false;
  return true;
}

bool is_labeled_automorphism(const Poset& p, const Labeling& lab, const Permutation& phi) {
  if (lab.size() != p.size()) throw SizeMismatchError("labeling length differs from poset size");
  if (!is_automorphism(p, phi)) return false;
  for (int i = 1; i <= p.size(); ++i)
    if (lab[phi(i)] != lab[i]) return false;
  return true;
}

namespace {

struct AutomorphismSearch {
  const Poset& p;
  const std::vector<int>* labels;  // optional label constraint
  std::vector<int> down_size, up_size;
  std::vector<int> image;          // 0 = unassigned
  std::vector<bool> used;
  std::vector<Permutation> found;

  AutomorphismSearch(const Poset& poset, const std::vector<int>* lab) : p(poset), labels(lab) {
    const int s = p.size();
    down_size.resize(static_cast<std::size_t>(s) + 1);
    up_size.resize(static_cast<std::size_t>(s) + 1);
    for (int i = 1; i <= s; ++i) {
      down_size[static_cast<std::size_t>(i)] = p.down_set(i).size();
      up_size[static_cast<std::size_t>(i)] = p.up_set(i).size();
    }
    image.assign(static_cast<std::size_t>(s) + 1, 0);
    used.assign(static_cast<std::size_t>(s) + 1, false);
  }

  bool compatible(int i, int j) const {
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    if (down_size[ui] != down_size[uj] || up_size[ui] != up_size[uj]) return false;
    if (labels && (*labels)[ui - 1] != (*labels)[uj - 1]) return false;
    for (int a = 1; a < i; ++a) {
      const int b = image[static_cast<std::size_t>(a)];
      if (p.leq(a, i) != p.leq(b, j) || p.leq(i, a) != p.leq(j, b)) return false;
    }
    return true;
  }

  void run(int i) {
    const int s = p.size();
    if (i > s) {
      found.emplace_back(std::vector<int>(image.begin() + 1, image.end()));
      return;
    }
    for (int j = 1; j <= s; ++j) {
      if (used[static_cast<std::size_t>(j)] || !compatible(i, j)) continue;
      image[static_cast<std::size_t>(i)] = j;
      used[static_cast<std::size_t>(j)] = true;
      run(i + 1);
      used[static_cast<std::size_t>(j)] = false;
      image[static_cast<std::size_t>(i)] = 0;
    }
  }
};

}  // namespace

std::vector<Permutation> automorphisms(const Poset& p, int cap) {
  if (p.size() > cap)
    throw SizeMismatchError("automorphism search capped at s = " + std::to_string(cap), {p.size(), cap});
  AutomorphismSearch search(p, nullptr);
  search.run(1);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

std::vector<Permutation> labeled_automorphisms(const Poset& p, const Labeling& lab, int cap) {
  if (lab.size() != p.size()) throw SizeMismatchError("labeling length differs from poset size", {lab.size(), p.size()});
  if (p.size() > cap)
    throw SizeMismatchError("automorphism search capped at s = " + std::to_string(cap), {p.size(), cap});
  AutomorphismSearch search(p, &lab.dims());
  search.run(1);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

bool is_finer(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw SizeMismatchError("posets on different ground sets", {p.size(), q.size()});
  for (int j = 1; j <= p.size(); ++j)
    if (!p.down_set(j).subset_of(q.down_set(j))) return false;
  return true;
}

}  // namespace wpb
