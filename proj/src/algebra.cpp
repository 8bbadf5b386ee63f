#include "wpb/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "wpb/errors.hpp"

namespace wpb {

bool is_prime(int m) noexcept {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

Alphabet::Alphabet(int m) : m_(m), kind_(is_prime(m) ? Kind::field : Kind::ring) {
  if (m < 2) throw ValidationError("alphabet modulus must be at least 2", {m});
  if (m > 46340) throw ValidationError("alphabet modulus too large", {m});
}

int Alphabet::reduce(long long a) const noexcept {
  const long long r = a % m_;
  return static_cast<int>(r < 0 ? r + m_ : r);
}

bool Alphabet::is_unit(int a) const noexcept { return std::gcd(a, m_) == 1; }

std::optional<int> Alphabet::inverse(int a) const noexcept {
  if (!is_unit(a)) return std::nullopt;
  // extended Euclid on (a, m)
  long long r0 = m_, r1 = a, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  return reduce(t0);
}

void Alphabet::require_field(const char* what) const {
  if (!is_field())
    throw FieldRequiredError(std::string(what) + " requires a prime modulus, got m = " + std::to_string(m_), {m_});
}

// ---------------------------------------------------------------------------

WeightFunction::WeightFunction(std::vector<int> table) : table_(std::move(table)) {
  max_w_ = *std::max_element(table_.begin(), table_.end());
  min_w_ = *std::min_element(table_.begin() + 1, table_.end());
}

WeightFunction custom_weight(const Alphabet& a, std::vector<int> table) {
  const int m = a.modulus();
  if (static_cast<int>(table.size()) != m)
    throw SizeMismatchError("weight table has " + std::to_string(table.size()) + " entries, alphabet has " +
                                std::to_string(m),
                            {static_cast<int>(table.size()), m});
  if (table[0] != 0)
    throw AxiomError(AxiomError::Axiom::zero, 0, 0, "weight of 0 must be 0");
  for (int x = 1; x < m; ++x)
    if (table[static_cast<std::size_t>(x)] <= 0)
      throw AxiomError(AxiomError::Axiom::zero, x, x, "nonzero element " + std::to_string(x) + " has weight <= 0");
  for (int x = 1; x < m; ++x)
    if (table[static_cast<std::size_t>(x)] != table[static_cast<std::size_t>(a.neg(x))])
      throw AxiomError(AxiomError::Axiom::symmetry, x, a.neg(x),
                       "w(" + std::to_string(x) + ") differs from w(-" + std::to_string(x) + ")");
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (table[static_cast<std::size_t>(a.add(x, y))] > table[static_cast<std::size_t>(x)] + table[static_cast<std::size_t>(y)])
        throw AxiomError(AxiomError::Axiom::triangle, x, y,
                         "w(" + std::to_string(x) + "+" + std::to_string(y) + ") exceeds w(" + std::to_string(x) +
                             ")+w(" + std::to_string(y) + ")");
  return WeightFunction(std::move(table));
}

WeightFunction hamming_weight(const Alphabet& a) {
  std::vector<int> t(static_cast<std::size_t>(a.modulus()), 1);
  t[0] = 0;
  return custom_weight(a, std::move(t));
}

WeightFunction lee_weight(const Alphabet& a) {
  const int m = a.modulus();
  std::vector<int> t(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) t[static_cast<std::size_t>(x)] = std::min(x, m - x);
  return custom_weight(a, std::move(t));
}

}  // namespace wpb
