#pragma once

#include <optional>
#include <vector>

namespace wpb {

/// The ring Z_m; recognised as a field when m is prime.
class Alphabet {
 public:
  enum class Kind { field, ring };

  explicit Alphabet(int m);

  int modulus() const noexcept { return m_; }
  Kind kind() const noexcept { return kind_; }
  bool is_field() const noexcept { return kind_ == Kind::field; }

  int add(int a, int b) const noexcept { return (a + b) % m_; }
  int sub(int a, int b) const noexcept { return (a - b + m_) % m_; }
  int neg(int a) const noexcept { return a == 0 ? 0 : m_ - a; }
  int mul(int a, int b) const noexcept { return (a * b) % m_; }
  /// Reduces any integer into [0, m).
  int reduce(long long a) const noexcept;
  bool is_unit(int a) const noexcept;
  std::optional<int> inverse(int a) const noexcept;
  /// Throws FieldRequiredError unless m is prime.
  void require_field(const char* what) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int m_;
  Kind kind_;
};

/// A scalar weight w: Z_m -> N satisfying the weight axioms, with its
/// extremes M_w (max over all values) and m_w (min over nonzero values).
class WeightFunction {
 public:
  int modulus() const noexcept { return static_cast<int>(table_.size()); }
  int operator()(int a) const noexcept { return table_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& table() const noexcept { return table_; }
  int max_weight() const noexcept { return max_w_; }
  int min_weight() const noexcept { return min_w_; }

  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  friend WeightFunction custom_weight(const Alphabet& a, std::vector<int> table);
  explicit WeightFunction(std::vector<int> table);

  std::vector<int> table_;
  int max_w_ = 0;
  int min_w_ = 0;
};

WeightFunction hamming_weight(const Alphabet& a);
/// w_L(a) = min(a, m - a)
WeightFunction lee_weight(const Alphabet& a);
/// Validates zero, symmetry and triangle axioms; throws AxiomError with a witness.
WeightFunction custom_weight(const Alphabet& a, std::vector<int> table);

bool is_prime(int m) noexcept;

}  // namespace wpb
