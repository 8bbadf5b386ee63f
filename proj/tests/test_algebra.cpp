#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "wpb/algebra.hpp"
#include "wpb/errors.hpp"

using namespace wpb;

TEST(Alphabet, Arithmetic) {
  const Alphabet a(5);
  EXPECT_TRUE(a.is_field());
  EXPECT_EQ(a.add(3, 4), 2);
  EXPECT_EQ(a.sub(1, 3), 3);
  EXPECT_EQ(a.neg(2), 3);
  EXPECT_EQ(a.mul(2, 3), 1);
  EXPECT_EQ(a.reduce(-7), 3);
  EXPECT_EQ(a.inverse(2), 3);
  EXPECT_EQ(a.inverse(0), std::nullopt);

  const Alphabet r(4);
  EXPECT_FALSE(r.is_field());
  EXPECT_EQ(r.kind(), Alphabet::Kind::ring);
  EXPECT_FALSE(r.is_unit(2));
  EXPECT_TRUE(r.is_unit(3));
  EXPECT_EQ(r.inverse(2), std::nullopt);
  EXPECT_THROW(r.require_field("rank"), FieldRequiredError);
  EXPECT_NO_THROW(a.require_field("rank"));

  EXPECT_THROW(Alphabet(1), ValidationError);
  EXPECT_THROW(Alphabet(0), ValidationError);
}

TEST(Alphabet, InverseMatchesSearch) {
  for (int m = 2; m <= 30; ++m) {
    const Alphabet a(m);
    EXPECT_EQ(a.is_field(), is_prime(m));
    for (int x = 0; x < m; ++x) {
      std::optional<int> expect;
      for (int y = 1; y < m; ++y)
        if (x * y % m == 1) expect = y;
      EXPECT_EQ(a.inverse(x), expect) << "m=" << m << " x=" << x;
      EXPECT_EQ(a.is_unit(x), expect.has_value());
    }
  }
}

TEST(Weights, Builtins) {
  EXPECT_EQ(hamming_weight(Alphabet(2)).table(), (std::vector<int>{0, 1}));
  EXPECT_EQ(hamming_weight(Alphabet(5)).table(), (std::vector<int>{0, 1, 1, 1, 1}));
  EXPECT_EQ(lee_weight(Alphabet(4)).table(), (std::vector<int>{0, 1, 2, 1}));
  const auto lee5 = lee_weight(Alphabet(5));
  EXPECT_EQ(lee5.table(), (std::vector<int>{0, 1, 2, 2, 1}));
  EXPECT_EQ(lee5.max_weight(), 2);
  EXPECT_EQ(lee5.min_weight(), 1);
  EXPECT_EQ(lee_weight(Alphabet(2)), hamming_weight(Alphabet(2)));
  for (int m = 2; m <= 12; ++m) EXPECT_EQ(lee_weight(Alphabet(m)).max_weight(), m / 2);
}

TEST(Weights, CustomValidation) {
  const auto h = custom_weight(Alphabet(3), {0, 1, 1});
  EXPECT_EQ(h, hamming_weight(Alphabet(3)));

  try {
    custom_weight(Alphabet(3), {0, 1, 2});
    FAIL() << "asymmetric table accepted";
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.which(), AxiomError::Axiom::symmetry);
    EXPECT_EQ(e.witness_pair().first, 1);
    EXPECT_EQ(e.code(), "axiom");
  }

  const auto w = custom_weight(Alphabet(5), {0, 2, 3, 3, 2});
  EXPECT_EQ(w.max_weight(), 3);
  EXPECT_EQ(w.min_weight(), 2);

  EXPECT_THROW(custom_weight(Alphabet(3), {0, 1}), SizeMismatchError);
  try {
    custom_weight(Alphabet(3), {1, 1, 1});
    FAIL();
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.which(), AxiomError::Axiom::zero);
  }
  try {
    custom_weight(Alphabet(3), {0, 0, 0});
    FAIL();
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.which(), AxiomError::Axiom::zero);
  }
  try {
    custom_weight(Alphabet(5), {0, 1, 3, 3, 1});
    FAIL();
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.which(), AxiomError::Axiom::triangle);
    const auto [a, b] = e.witness_pair();
    const std::vector<int> t{0, 1, 3, 3, 1};
    EXPECT_GT(t[(a + b) % 5], t[a] + t[b]);
  }
  EXPECT_THROW(custom_weight(Alphabet(3), {0, -1, -1}), AxiomError);
}

// custom_weight accepts exactly the tables that satisfy the axioms.
TEST(Weights, CustomAgreesWithAxiomOracle) {
  for (int m = 2; m <= 5; ++m) {
    const Alphabet a(m);
    const auto total = oracle::power(5, m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const auto t = oracle::decode(idx, m, 5);
      bool ok = true;
      for (int x = 0; x < m; ++x) {
        if ((t[x] == 0) != (x == 0)) ok = false;
        if (t[x] != t[(m - x) % m]) ok = false;
        for (int y = 0; y < m; ++y)
          if (t[(x + y) % m] > t[x] + t[y]) ok = false;
      }
      bool accepted = true;
      try {
        custom_weight(a, t);
      } catch (const AxiomError&) {
        accepted = false;
      }
      ASSERT_EQ(accepted, ok) << "m=" << m << " idx=" << idx;
    }
  }
}
