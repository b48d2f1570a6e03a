#include <gtest/gtest.h>

#include <qbruhat/qbruhat.hpp>

#include "support.hpp"

using namespace qbruhat;
using Q = Quaternion;
using M = Matrix<Q>;

TEST(Submatrix, Examples)
{
    M x{{Q(1), Q(2), Q(3)}, {Q(4), Q(5), Q(6)}, {Q(7), Q(8), Q(9)}};
    EXPECT_EQ(submatrix(x, IndexSet{1, 2}, IndexSet{2, 3}), (M{{Q(2), Q(3)}, {Q(5), Q(6)}}));
    EXPECT_EQ(submatrix(x, IndexSet::interval(1, 3), IndexSet::interval(1, 3)), x);
    EXPECT_EQ(submatrix(M::identity(4), IndexSet{2}, IndexSet{3}), (M{{Q(0)}}));
    EXPECT_THROW((void)submatrix(x, IndexSet{1, 4}, IndexSet{1, 2}), IndexOutOfRange);
}

TEST(Submatrix, Composes)
{
    Sampler rng(3);
    auto x = random_matrix<Q>(rng, 5, 5, 3);
    IndexSet rows{1, 3, 4, 5}, cols{2, 3, 4, 5};
    auto inner = submatrix(submatrix(x, rows, cols), IndexSet{2, 4}, IndexSet{1, 3});
    EXPECT_EQ(inner, submatrix(x, IndexSet{3, 5}, IndexSet{2, 4}));
}

TEST(Product, UnitsAndIdentity)
{
    Sampler rng(1);
    auto x = random_matrix<Q>(rng, 3, 3, 3);
    EXPECT_EQ(M::identity(3) * x, x);
    EXPECT_EQ(M::unit(3, 1, 2) * M::unit(3, 2, 3), M::unit(3, 1, 3));
    EXPECT_THROW((void)(M(2, 3) * M(2, 3)), ShapeMismatch);
    EXPECT_THROW((void)(M(2, 3) + M(3, 2)), ShapeMismatch);
}

TEST(Product, RespectsScalarOrder)
{
    M a{{Q::i()}}, b{{Q::j()}};
    EXPECT_EQ((a * b)(1, 1), Q::k());
    EXPECT_EQ((b * a)(1, 1), -Q::k());
    Sampler rng(2);
    bool witness = false;
    for (int t = 0; t < 50 && !witness; ++t) {
        auto x = random_matrix<Q>(rng, 2, 2, 2), y = random_matrix<Q>(rng, 2, 2, 2);
        witness = !(x * y == y * x);
    }
    EXPECT_TRUE(witness);
}

TEST(Inverse, Examples)
{
    EXPECT_EQ(inverse(M::identity(3)), M::identity(3));
    std::vector<Q> d{Q::i(), Q(2), Q(Rational(1), Rational(1), Rational(1), Rational(1))};
    std::vector<Q> dinv{inverse(d[0]), inverse(d[1]), inverse(d[2])};
    EXPECT_EQ(inverse(M::diagonal(d)), M::diagonal(dinv));
    M singular{{Q(1), Q::i()}, {Q::j(), -Q::k()}}; // row 2 = j * row 1
    EXPECT_THROW((void)inverse(singular), NotGeneric);
}

TEST(Inverse, RoundTrip)
{
    Sampler rng(7);
    for (int t = 0; t < 20; ++t) {
        auto x = random_matrix<Q>(rng, 4, 4, 3);
        auto y = inverse(x);
        ASSERT_EQ(x * y, M::identity(4));
        ASSERT_EQ(y * x, M::identity(4));
    }
}

// Entries of the inverse are inverse quasideterminants: (x^{-1})_{ij} = |x|_{ji}^{-1}.
TEST(Inverse, EntriesAreInverseQuasideterminants)
{
    Sampler rng(11);
    for (int t = 0; t < 10; ++t) {
        auto x = random_matrix<Q>(rng, 3, 3, 3);
        auto y = inverse(x);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                ASSERT_EQ(y(i, j), inverse(quasidet(x, j, i)));
    }
}

TEST(Sigma, Examples)
{
    Sampler rng(4);
    auto x = random_matrix<Q>(rng, 4, 4, 3);
    EXPECT_EQ(sigma(sigma(x)), x);
    EXPECT_EQ(sigma(M::identity(3)), M::identity(3));
    EXPECT_EQ(sigma(M::unit(3, 1, 2)), M::unit(3, 3, 2));
    EXPECT_EQ(sigma(x)(1, 2), x(4, 3));
}

TEST(Iota, DiagonalAndGenerators)
{
    std::vector<Q> h{Q::i(), Q(3), Q(Rational(1), Rational(2), Rational(0), Rational(-1))};
    std::vector<Q> hinv{inverse(h[0]), inverse(h[1]), inverse(h[2])};
    EXPECT_EQ(iota(M::diagonal(h)), M::diagonal(hinv));
    Q t(Rational(2), Rational(-1), Rational(1), Rational(3));
    for (int i = 1; i <= 2; ++i) {
        EXPECT_EQ(iota(raise(i, 3, t)), raise(i, 3, t));
        EXPECT_EQ(iota(lower(i, 3, t)), lower(i, 3, t));
    }
    EXPECT_EQ(alternating_signs<Q>(3), M::diagonal(std::vector<Q>{Q(-1), Q(1), Q(-1)}));
}

TEST(Iota, InvolutiveAntiautomorphism)
{
    Sampler rng(8);
    for (int t = 0; t < 20; ++t) {
        auto x = random_matrix<Q>(rng, 3, 3, 3), y = random_matrix<Q>(rng, 3, 3, 3);
        ASSERT_EQ(iota(iota(x)), x);
        ASSERT_EQ(iota(x * y), iota(y) * iota(x));
        auto j = alternating_signs<Q>(3);
        ASSERT_EQ(iota(x), j * inverse(x) * j);
    }
    EXPECT_THROW((void)iota(M(2, 2)), NotGeneric);
}

TEST(Shapes, TriangularPredicates)
{
    M u{{Q(1), Q::i()}, {Q(0), Q(1)}};
    EXPECT_TRUE(is_upper_unitriangular(u));
    EXPECT_FALSE(is_lower_triangular(u));
    EXPECT_TRUE(is_lower_unitriangular(transpose(u)));
    EXPECT_TRUE(is_diagonal(M::identity(2)));
    EXPECT_EQ(rank(M{{Q(1), Q::i()}, {Q::j(), -Q::k()}}), 1);
    EXPECT_EQ(rank(M::identity(3)), 3);
}

TEST(IndexSetTest, Basics)
{
    auto s = IndexSet::of({4, 1, 3, 1});
    EXPECT_EQ(s.size(), 3);
    EXPECT_EQ(s[1], 1);
    EXPECT_EQ(s[3], 4);
    EXPECT_EQ(s.position(3), 2);
    EXPECT_EQ(s.count_greater(1), 2);
    EXPECT_EQ(s.complement(5), (IndexSet{2, 5}));
    EXPECT_EQ(IndexSet::interval(2, 4) | IndexSet{1}, (IndexSet{1, 2, 3, 4}));
    EXPECT_TRUE(IndexSet::interval(3, 2).empty());
}
