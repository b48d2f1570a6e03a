#include <gtest/gtest.h>

#include <qbruhat/qbruhat.hpp>

#include "support.hpp"

using namespace qbruhat;
using support::generic_trials;
using Q = Quaternion;
using M = Matrix<Q>;

namespace {

M point_in(Sampler& rng, const Permutation& u, const Permutation& v)
{
    auto w = random_double_word(rng, u, v);
    return product_map(w, random_scalars<Q>(rng, static_cast<std::size_t>(w.size()), 3));
}

} // namespace

TEST(Classify, Examples)
{
    EXPECT_EQ(classify(M::identity(3)), (CellLabel{Permutation::identity(3), Permutation::identity(3)}));
    Sampler rng(1);
    for (const auto& u : Permutation::all(3)) {
        auto h = M::diagonal(random_scalars<Q>(rng, 3, 3));
        EXPECT_EQ(classify(representative<Q>(u) * h), (CellLabel{u, u}));
    }
    auto w0 = Permutation::longest(4);
    EXPECT_EQ(classify(random_matrix<Q>(rng, 4, 4, 3)), (CellLabel{w0, w0}));
    EXPECT_THROW((void)classify(M(3, 3)), NotGeneric);
}

TEST(Classify, MatchesDoubleWordOfConstruction)
{
    Sampler rng(2);
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            auto x = point_in(rng, u, v);
            EXPECT_EQ(classify(x), (CellLabel{u, v}));
            EXPECT_TRUE(bruhat_rank_profile_matches(x, u));
            EXPECT_TRUE(opposite_rank_profile_matches(x, v));
        }
}

TEST(Classify, IotaInvertsLabels)
{
    Sampler rng(3);
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            auto h = M::diagonal(random_scalars<Q>(rng, 3, 3));
            auto x = h * point_in(rng, u, v);
            EXPECT_EQ(classify(iota(x)), (CellLabel{u.inverse(), v.inverse()}));
        }
}

TEST(Classify, RankOracleRejectsOtherCells)
{
    Sampler rng(4);
    auto x = point_in(rng, Permutation::simple(1, 3), Permutation::longest(3));
    for (const auto& u : Permutation::all(3))
        EXPECT_EQ(bruhat_rank_profile_matches(x, u), u == Permutation::simple(1, 3)) << u.str();
}

TEST(BruhatFactorizationTest, ConstructiveOnS3)
{
    Sampler rng(5);
    for (const auto& u : Permutation::all(3))
        for (int t = 0; t < 5; ++t) {
            auto b1 = M::diagonal(random_scalars<Q>(rng, 3, 3)) *
                      product_map(DoubleWord({1, 2, 1}, 3), random_scalars<Q>(rng, 3, 3));
            auto b2 = product_map(DoubleWord({2, 1, 2}, 3), random_scalars<Q>(rng, 3, 3)) *
                      M::diagonal(random_scalars<Q>(rng, 3, 3));
            auto x = b1 * representative<Q>(u) * b2;
            auto f = bruhat_factorization(x);
            ASSERT_EQ(f.u, u);
            ASSERT_EQ(f.unipotent * representative<Q>(u) * f.borel, x);
            ASSERT_TRUE(is_upper_unitriangular(f.unipotent));
            ASSERT_TRUE(is_upper_triangular(f.borel));
            // unipotent part lies in u U^- u^{-1}
            auto rep = representative<Q>(u);
            ASSERT_TRUE(is_lower_unitriangular(inverse(rep) * f.unipotent * rep));
        }
}

TEST(ReducedCell, Membership)
{
    Sampler rng(6);
    auto e = Permutation::identity(3);
    EXPECT_TRUE(in_reduced_cell(M::identity(3), e, e));
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3)) {
            auto x = point_in(rng, u, v);
            EXPECT_TRUE(in_reduced_cell(x, u, v));
            auto h = M::diagonal(std::vector<Q>{Q(2), Q::i(), Q(1)});
            EXPECT_FALSE(in_reduced_cell(h * x, u, v));
        }
    EXPECT_FALSE(in_reduced_cell(M::identity(3), Permutation::simple(1, 3), e));
}

TEST(Twist, TrivialCell)
{
    auto e = Permutation::identity(3);
    EXPECT_EQ(twist_reduced(M::identity(3), e, e), M::identity(3));
}

TEST(Twist, PositiveOnlyCellFormula)
{
    Sampler rng(7);
    auto e = Permutation::identity(3);
    for (const auto& v : Permutation::all(3)) {
        auto x = point_in(rng, e, v);
        auto expected = iota(gauss_parts(x * representative<Q>(v.inverse())).minus);
        EXPECT_EQ(twist_reduced(x, e, v), expected) << v.str();
    }
}

TEST(Twist, InvolutionAndTarget)
{
    EXPECT_EQ(generic_trials(30, 8, [](Sampler& rng) {
                  auto u = random_permutation(rng, 4), v = random_permutation(rng, 4);
                  auto x = point_in(rng, u, v);
                  auto y = twist_reduced(x, u, v);
                  ASSERT_TRUE(in_reduced_cell(y, v, u));
                  ASSERT_EQ(twist_reduced(y, v, u), x);
              }),
              30);
}

TEST(Twist, GeneralTwistProperties)
{
    EXPECT_EQ(generic_trials(20, 9, [](Sampler& rng) {
                  auto u = random_permutation(rng, 3), v = random_permutation(rng, 3);
                  auto x = point_in(rng, u, v);
                  auto h = M::diagonal(random_scalars<Q>(rng, 3, 3));
                  auto g = h * x;
                  auto y = twist_general(g, u, v);
                  ASSERT_EQ(y, h * twist_reduced(x, u, v));
                  ASSERT_EQ(twist_general_second_form(g, u, v), y);
                  ASSERT_EQ(twist_general_third_form(g, u, v), y);
                  auto gv = h * point_in(rng, v, v);
                  ASSERT_EQ(twist_general(twist_general(gv, v, v), v, v), gv);
              }),
              20);
}

TEST(Twist, WrongCellIsReported)
{
    Sampler rng(10);
    auto x = point_in(rng, Permutation::simple(1, 3), Permutation::simple(2, 3));
    EXPECT_THROW((void)twist_reduced(x, Permutation::simple(2, 3), Permutation::simple(1, 3)), WrongCell);
    auto h = M::diagonal(std::vector<Q>{Q(2), Q(1), Q(1)});
    EXPECT_THROW((void)twist_reduced(h * x, Permutation::simple(1, 3), Permutation::simple(2, 3)), WrongCell);
}
