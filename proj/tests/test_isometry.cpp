#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wpb/errors.hpp"
#include "wpb/isometry.hpp"
#include "wpb/reference.hpp"

using namespace wpb;
using fixtures::make_space;

namespace {

Space chain2_m2() { return make_space(2, {{1, 2}}, {1, 1}, 2, "hamming"); }
Space anti2(int m) { return make_space(2, {}, {1, 1}, m, "hamming"); }

BlockMatrix mat(const Space& sp, const std::vector<std::vector<int>>& rows) { return BlockMatrix::from_rows(sp, rows); }

}  // namespace

TEST(Matrix, Apply) {
  const Space sp = anti2(2);
  const auto id = BlockMatrix::identity(sp);
  EXPECT_EQ(apply(id, sp->vector({1, 0})), sp->vector({1, 0}));
  EXPECT_EQ(apply(mat(sp, {{0, 1}, {1, 0}}), sp->vector({1, 0})), sp->vector({0, 1}));
  const Space s5 = make_space(1, {}, {1}, 5, "hamming");
  EXPECT_EQ(apply(mat(s5, {{2}}), s5->vector({3})), s5->vector({1}));
  EXPECT_THROW(mat(sp, {{1, 0}}), SizeMismatchError);
  EXPECT_THROW(mat(sp, {{1, 0}, {0, 2}}), ValidationError);
  EXPECT_EQ(mat(sp, {{1, 1}, {0, 1}}) * mat(sp, {{1, 1}, {0, 1}}), id);
}

TEST(Isometry, Examples) {
  EXPECT_TRUE(is_isometry(BlockMatrix::identity(chain2_m2())));
  EXPECT_TRUE(is_isometry(mat(anti2(2), {{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_isometry(mat(chain2_m2(), {{0, 1}, {1, 0}})));
  EXPECT_FALSE(is_isometry(mat(anti2(2), {{1, 1}, {1, 1}})));
  EXPECT_THROW(is_isometry(BlockMatrix::identity(chain2_m2()), 2), BudgetError);
}

TEST(Isometry, FromAutomorphism) {
  const Space sp = anti2(2);
  EXPECT_EQ(from_automorphism(Permutation::identity(2), sp), BlockMatrix::identity(sp));
  EXPECT_EQ(from_automorphism(Permutation::transposition(2, 1, 2), sp), mat(sp, {{0, 1}, {1, 0}}));
  EXPECT_THROW(from_automorphism(Permutation::transposition(2, 1, 2), chain2_m2()), NotLabeledAutomorphismError);
  const Space mixed = make_space(2, {}, {1, 2}, 2, "hamming");
  EXPECT_THROW(from_automorphism(Permutation::transposition(2, 1, 2), mixed), NotLabeledAutomorphismError);
  const Space blocks = make_space(2, {}, {2, 2}, 3, "hamming");
  const auto t = from_automorphism(Permutation::transposition(2, 1, 2), blocks);
  EXPECT_EQ(apply(t, blocks->basis_vector(1, 2)), blocks->basis_vector(2, 2));
}

TEST(Isometry, TriangularGroup) {
  EXPECT_TRUE(in_triangular_group(BlockMatrix::identity(chain2_m2())));
  EXPECT_TRUE(in_triangular_group(mat(chain2_m2(), {{1, 1}, {0, 1}})));
  EXPECT_FALSE(in_triangular_group(mat(chain2_m2(), {{1, 0}, {1, 1}})));
  const Space lee5 = make_space(1, {}, {1}, 5, "lee");
  EXPECT_TRUE(in_triangular_group(mat(lee5, {{4}})));
  EXPECT_FALSE(in_triangular_group(mat(lee5, {{2}})));
}

TEST(Isometry, TriangularOrder) {
  EXPECT_EQ(triangular_group_order(*chain2_m2()), 2u);
  EXPECT_EQ(triangular_group_order(*make_space(1, {}, {1}, 5, "lee")), 2u);
  EXPECT_EQ(triangular_group_order(*anti2(3)), 4u);
  EXPECT_EQ(diagonal_block_count(*make_space(1, {}, {2}, 2, "hamming"), 1), 6u);
  EXPECT_THROW(diagonal_block_count(*make_space(1, {}, {2}, 5, "hamming"), 1, 10), BudgetError);
}

TEST(Isometry, Eta) {
  EXPECT_TRUE(eta(mat(chain2_m2(), {{1, 1}, {0, 1}})).is_identity());
  EXPECT_EQ(eta(mat(anti2(2), {{0, 1}, {1, 0}})), Permutation::transposition(2, 1, 2));
  EXPECT_THROW(eta(mat(chain2_m2(), {{0, 1}, {1, 0}})), NotIsometryError);
}

TEST(Isometry, Decompose) {
  const auto u = mat(chain2_m2(), {{1, 1}, {0, 1}});
  auto d = decompose(u);
  EXPECT_TRUE(d.phi.is_identity());
  EXPECT_EQ(d.s_part, u);

  const Space sp = anti2(3);
  const auto swap = mat(sp, {{0, 1}, {1, 0}});
  d = decompose(swap);
  EXPECT_EQ(d.phi, Permutation::transposition(2, 1, 2));
  EXPECT_EQ(d.s_part, BlockMatrix::identity(sp));

  const auto t = mat(sp, {{2, 0}, {0, 2}}) * swap;
  d = decompose(t);
  EXPECT_EQ(d.phi, Permutation::transposition(2, 1, 2));
  EXPECT_EQ(d.s_part, mat(sp, {{2, 0}, {0, 2}}));
  EXPECT_EQ(d.s_part * from_automorphism(d.phi, sp), t);
  EXPECT_THROW(decompose(mat(sp, {{1, 1}, {1, 1}})), NotIsometryError);
}

TEST(Isometry, GroupOrders) {
  auto check = [](const Space& sp, std::uint64_t gl, std::uint64_t u, std::uint64_t aut) {
    const auto r = verify_semidirect(sp);
    EXPECT_EQ(r.gl_order, gl);
    EXPECT_EQ(r.u_order, u);
    EXPECT_EQ(r.aut_order, aut);
    EXPECT_TRUE(r.product_matches);
    EXPECT_TRUE(r.all_decomposed);
    EXPECT_TRUE(r.invariants_hold);
  };
  check(chain2_m2(), 2, 2, 1);
  check(anti2(3), 8, 4, 2);
  check(make_space(1, {}, {2}, 2, "hamming"), 6, 6, 1);
  check(make_space(1, {}, {1}, 5, "lee"), 2, 2, 1);
  const std::vector<BlockMatrix> chain_group{BlockMatrix::identity(chain2_m2()), mat(chain2_m2(), {{1, 1}, {0, 1}})};
  EXPECT_EQ(enumerate_isometry_group(chain2_m2()), chain_group);
}

// Pruned search, parallel exhaustive scan and the serial reference agree,
// and the triangular order matches a direct count of U.
TEST(Isometry, SearchesAgree) {
  const std::vector<Space> spaces{
      chain2_m2(),
      anti2(3),
      make_space(1, {}, {2}, 2, "hamming"),
      make_space(1, {}, {2}, 3, "hamming"),
      make_space(1, {}, {1}, 5, "lee"),
      make_space(2, {}, {1, 1}, 4, "lee"),
      make_space(2, {{1, 2}}, {1, 1}, 5, "lee"),
      make_space(3, {{1, 3}, {2, 3}}, {1, 1, 1}, 2, "hamming"),
      make_space(3, {{1, 2}, {1, 3}}, {1, 1, 1}, 2, "hamming"),
      make_space(2, {{1, 2}}, {1, 2}, 2, "hamming"),
      make_space(2, {}, {2, 1}, 2, "hamming"),
  };
  for (const auto& sp : spaces) {
    EnumerationOptions ex;
    ex.exhaustive = true;
    const auto pruned = enumerate_isometry_group(sp);
    const auto full = enumerate_isometry_group(sp, ex);
    EXPECT_EQ(pruned, full);
    EXPECT_EQ(full, reference::enumerate_isometry_group(sp));

    std::uint64_t u_count = 0;
    for (const auto& t : full) u_count += in_triangular_group(t);
    EXPECT_EQ(u_count, triangular_group_order(*sp));
    const auto r = verify_semidirect(sp);
    EXPECT_TRUE(r.product_matches);
    EXPECT_TRUE(r.all_decomposed);
  }
}

TEST(Isometry, Budgets) {
  EnumerationOptions opts;
  opts.exhaustive = true;
  opts.matrix_budget = 80;  // 3^4 = 81 matrices
  EXPECT_THROW(enumerate_isometry_group(anti2(3), opts), BudgetError);
  opts.exhaustive = false;
  opts.matrix_budget = 1;
  EXPECT_THROW(enumerate_isometry_group(anti2(3), opts), BudgetError);
}

TEST(Isometry, RingWarning) {
  EXPECT_FALSE(ring_warning(*anti2(3)).has_value());
  EXPECT_FALSE(ring_warning(*make_space(1, {}, {1}, 4, "lee")).has_value());
  const Alphabet a(4);
  const Space odd = SpaceContext::make(Poset::chain(1), Labeling({1}), a, custom_weight(a, {0, 2, 1, 2}));
  EXPECT_TRUE(ring_warning(*odd).has_value());
}
