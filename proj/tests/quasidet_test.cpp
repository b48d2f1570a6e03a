#include <gtest/gtest.h>

#include <qbruhat/qbruhat.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace qbruhat;
using support::generic_trials;
using Q = Quaternion;
using RF = RationalFunction;

namespace {

Matrix<Rational> random_rational(Sampler& rng, int n)
{
    Matrix<Rational> a(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a(i, j) = Rational(rng.integer(7)) / Rational(1 + rng.integer(2) + 2);
    return a;
}

Matrix<Q> conjugate_transpose(const Matrix<Q>& x)
{
    Matrix<Q> r(x.cols(), x.rows());
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j)
            r(j, i) = x(i, j).conj();
    return r;
}

} // namespace

TEST(Quasidet, SmallCases)
{
    auto a = support::symbolic_matrix(2, "a");
    EXPECT_EQ(quasidet(Matrix<RF>{{a(1, 1)}}, 1, 1), a(1, 1));
    EXPECT_EQ(quasidet(a, 1, 1), a(1, 1) - a(1, 2) * inverse(a(2, 2)) * a(2, 1));
    EXPECT_EQ(quasidet(a, 1, 2), a(1, 2) - a(1, 1) * inverse(a(2, 1)) * a(2, 2));
    EXPECT_EQ(quasidet(a, 2, 1), a(2, 1) - a(2, 2) * inverse(a(1, 2)) * a(1, 1));
    EXPECT_EQ(quasidet(a, 2, 2), a(2, 2) - a(2, 1) * inverse(a(1, 1)) * a(1, 2));
    Sampler rng(2);
    auto q = random_matrix<Q>(rng, 2, 2, 3);
    EXPECT_EQ(quasidet(q, 1, 1), q(1, 1) - q(1, 2) * inverse(q(2, 2)) * q(2, 1));
    EXPECT_EQ(quasidet(Matrix<Q>::identity(2), 1, 1), Q(1));
}

TEST(Quasidet, Errors)
{
    EXPECT_THROW((void)quasidet(Matrix<Q>::identity(2), 1, 2), NotGeneric);
    EXPECT_THROW((void)quasidet(Matrix<Q>(2, 3), 1, 1), ShapeMismatch);
    EXPECT_THROW((void)quasidet(Matrix<Q>::identity(2), 3, 1), IndexOutOfRange);
}

TEST(Quasidet, CommutativeCofactorOracle)
{
    EXPECT_EQ(generic_trials(40, 1, [](Sampler& rng) {
                  const int n = 2 + static_cast<int>(rng.index(3));
                  auto a = random_rational(rng, n);
                  for (int p = 1; p <= n; ++p)
                      for (int q = 1; q <= n; ++q) {
                          if (oracle::cofactor_det(oracle::rows_of(a, p, q)).is_zero())
                              throw NotGeneric("oracle minor");
                          ASSERT_EQ(quasidet(a, p, q), oracle::commutative_quasidet(a, p, q));
                      }
              }),
              40);
}

TEST(Quasidet, ExpansionAgreesWithDefinition)
{
    EXPECT_EQ(generic_trials(20, 2, [](Sampler& rng) {
                  auto a = random_matrix<Q>(rng, 3, 3, 3);
                  for (int p = 1; p <= 3; ++p)
                      for (int q = 1; q <= 3; ++q)
                          ASSERT_EQ(quasidet(a, p, q), quasidet_expansion(a, p, q));
              }),
              20);
}

TEST(PositiveQuasiminor, CommutativeRatioOfMinors)
{
    EXPECT_EQ(generic_trials(30, 3, [](Sampler& rng) {
                  auto x = random_rational(rng, 4);
                  IndexSet rows{1, 3, 4}, cols{1, 2, 4};
                  for (int i : rows)
                      for (int j : cols) {
                          auto big = oracle::det(submatrix(x, rows, cols));
                          auto small = oracle::det(submatrix(x, rows.without(i), cols.without(j)));
                          if (small.is_zero())
                              throw NotGeneric("oracle minor");
                          ASSERT_EQ(positive_quasiminor(x, MinorSpec(rows, cols, i, j)), big / small);
                      }
              }),
              30);
}

TEST(PositiveQuasiminor, SignAndPrincipal)
{
    Sampler rng(4);
    auto x = random_matrix<Q>(rng, 3, 3, 3);
    MinorSpec spec(IndexSet{1, 2}, IndexSet{2, 3}, 1, 2);
    EXPECT_EQ(spec.sign_exponent(), 2);
    EXPECT_EQ(positive_quasiminor(x, spec), quasidet_at(x, IndexSet{1, 2}, IndexSet{2, 3}, 1, 2));
    MinorSpec odd(IndexSet{1, 2}, IndexSet{2, 3}, 1, 3);
    EXPECT_EQ(positive_quasiminor(x, odd), -quasidet_at(x, IndexSet{1, 2}, IndexSet{2, 3}, 1, 3));
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(principal_quasiminor(x, i), quasidet(submatrix(x, IndexSet::interval(1, i), IndexSet::interval(1, i)), i, i));
}

// Invariance under permuting other rows, left scaling of rows, adding multiples of other rows.
TEST(Quasidet, BasicProperties)
{
    EXPECT_EQ(generic_trials(10, 5, [](Sampler& rng) {
                  const int n = 4;
                  auto a = random_matrix<Q>(rng, n, n, 3);
                  const int p = 2, q = 3;
                  // i) swap rows 1 and 4, columns 1 and 2: the marked entry keeps its labels
                  auto swapped = a;
                  for (int c = 1; c <= n; ++c)
                      std::swap(swapped(1, c), swapped(4, c));
                  for (int r = 1; r <= n; ++r)
                      std::swap(swapped(r, 1), swapped(r, 2));
                  ASSERT_EQ(quasidet(swapped, p, q), quasidet(a, p, q));
                  // ii) row p scaled on the left, column q on the right
                  Q lambda = rng.quaternion(3), mu = rng.quaternion(3);
                  auto scaled = a;
                  for (int c = 1; c <= n; ++c)
                      scaled(p, c) = lambda * a(p, c);
                  ASSERT_EQ(quasidet(scaled, p, q), lambda * quasidet(a, p, q));
                  ASSERT_EQ(quasidet(scaled, 1, q), quasidet(a, 1, q));
                  auto cscaled = a;
                  for (int r = 1; r <= n; ++r)
                      cscaled(r, q) = a(r, q) * mu;
                  ASSERT_EQ(quasidet(cscaled, p, q), quasidet(a, p, q) * mu);
                  // iii) add a left multiple of row 1 to row p; a right multiple of column 1 to column q
                  auto added = a;
                  for (int c = 1; c <= n; ++c)
                      added(p, c) = a(p, c) + lambda * a(1, c);
                  ASSERT_EQ(quasidet(added, p, q), quasidet(a, p, q));
                  auto cadded = a;
                  for (int r = 1; r <= n; ++r)
                      cadded(r, q) = a(r, q) + a(r, 1) * mu;
                  ASSERT_EQ(quasidet(cadded, p, q), quasidet(a, p, q));
              }),
              10);
}

TEST(Homological, RowAndColumnRelations)
{
    for (int n : {3, 4})
        EXPECT_EQ(generic_trials(10, 6 + static_cast<std::uint64_t>(n), [n](Sampler& rng) {
                      auto a = random_matrix<Q>(rng, n, n, 3);
                      for (int i = 1; i <= n; ++i)
                          for (int j = 1; j <= n; ++j)
                              for (int other = 1; other <= n; ++other) {
                                  if (other == j)
                                      continue;
                                  for (int s = 1; s <= n; ++s) {
                                      if (s == i)
                                          continue;
                                      auto row = row_homological(a, i, j, other, s);
                                      ASSERT_TRUE(row.holds()) << row.str();
                                  }
                              }
                      for (int i = 1; i <= n; ++i)
                          for (int j = 1; j <= n; ++j)
                              for (int k = 1; k <= n; ++k) {
                                  if (k == i)
                                      continue;
                                  for (int t = 1; t <= n; ++t) {
                                      if (t == j)
                                          continue;
                                      auto col = column_homological(a, i, j, k, t);
                                      ASSERT_TRUE(col.holds()) << col.str();
                                  }
                              }
                  }),
                  10);
}

TEST(Sylvester, SingleEntryPivot)
{
    auto check = [](const auto& a) {
        using S = std::decay_t<decltype(a(1, 1))>;
        auto box = [&](IndexSet r, IndexSet c, int i, int j) { return quasidet_at(a, r, c, i, j); };
        S b11 = box({1, 2}, {1, 2}, 1, 1), b13 = box({1, 2}, {2, 3}, 1, 3);
        S b31 = box({2, 3}, {1, 2}, 3, 1), b33 = box({2, 3}, {2, 3}, 3, 3);
        EXPECT_EQ(quasidet(a, 1, 1), b11 - b13 * inverse(b33) * b31);
        auto red = sylvester_reduce(a, IndexSet{2}, IndexSet{2});
        EXPECT_EQ(red.reduced(1, 1), b11);
        EXPECT_EQ(red.reduced(1, 2), b13);
        EXPECT_EQ(red.reduced(2, 1), b31);
        EXPECT_EQ(red.reduced(2, 2), b33);
        EXPECT_EQ(red.quasidet_at(1, 1), quasidet(a, 1, 1));
    };
    check(support::symbolic_matrix(3, "a"));
    Sampler rng(8);
    for (int t = 0; t < 5; ++t)
        check(random_matrix<Q>(rng, 3, 3, 3));
}

TEST(Sylvester, EmptyPivotAndLargerPivots)
{
    Sampler rng(9);
    auto a = random_matrix<Q>(rng, 5, 5, 3);
    EXPECT_EQ(sylvester_reduce(a, IndexSet{}, IndexSet{}).reduced, a);
    EXPECT_EQ(generic_trials(10, 10, [](Sampler& r) {
                  auto x = random_matrix<Q>(r, 5, 5, 3);
                  auto red = sylvester_reduce(x, IndexSet{2, 4}, IndexSet{1, 5});
                  for (int s : {1, 3, 5})
                      for (int t : {2, 3, 4})
                          ASSERT_EQ(quasidet(x, s, t), red.quasidet_at(s, t));
              }),
              10);
}

TEST(Sylvester, LewisCarroll)
{
    EXPECT_EQ(generic_trials(10, 11, [](Sampler& rng) {
                  auto x = random_matrix<Q>(rng, 4, 4, 3);
                  auto red = sylvester_reduce(x, IndexSet{2, 3}, IndexSet{2, 3});
                  ASSERT_EQ(red.reduced.rows(), 2);
                  for (int s : {1, 4})
                      for (int t : {1, 4})
                          ASSERT_EQ(quasidet(x, s, t), red.quasidet_at(s, t));
              }),
              10);
    Matrix<Q> singular_pivot = Matrix<Q>::identity(3);
    singular_pivot(2, 2) = Q(0);
    EXPECT_THROW((void)sylvester_reduce(singular_pivot, IndexSet{2}, IndexSet{2}), NotGeneric);
}

TEST(QuasiPlucker, DiagonalCoordinateIsOne)
{
    Sampler rng(12);
    auto a = random_matrix<Q>(rng, 2, 4, 3);
    EXPECT_EQ(quasi_plucker_left(a, 1, 1, IndexSet{3}), Q(1));
    auto b = random_matrix<Q>(rng, 4, 2, 3);
    EXPECT_EQ(quasi_plucker_right(b, 2, 2, IndexSet{4}), Q(1));
}

TEST(QuasiPlucker, GroupInvariance)
{
    EXPECT_EQ(generic_trials(10, 13, [](Sampler& rng) {
                  auto a = random_matrix<Q>(rng, 3, 5, 3);
                  auto g = random_matrix<Q>(rng, 3, 3, 3);
                  (void)inverse(g);
                  ASSERT_EQ(quasi_plucker_left(g * a, 1, 4, IndexSet{2, 5}), quasi_plucker_left(a, 1, 4, IndexSet{2, 5}));
                  auto b = random_matrix<Q>(rng, 5, 3, 3);
                  ASSERT_EQ(quasi_plucker_right(b * g, 4, 1, IndexSet{2, 5}),
                            quasi_plucker_right(b, 4, 1, IndexSet{2, 5}));
              }),
              10);
}

TEST(QuasiPlucker, CommutativePluckerRatio)
{
    EXPECT_EQ(generic_trials(20, 14, [](Sampler& rng) {
                  Matrix<Rational> a(2, 4);
                  for (int i = 1; i <= 2; ++i)
                      for (int j = 1; j <= 4; ++j)
                          a(i, j) = Rational(rng.integer(6));
                  auto p = [&](int c1, int c2) { return oracle::det(select(a, std::vector<int>{1, 2}, std::vector<int>{c1, c2})); };
                  if (p(1, 3).is_zero())
                      throw NotGeneric("oracle minor");
                  ASSERT_EQ(quasi_plucker_left(a, 1, 2, IndexSet{3}), p(2, 3) / p(1, 3));
                  auto b = transpose(a);
                  auto r = [&](int r1, int r2) { return oracle::det(select(b, std::vector<int>{r1, r2}, std::vector<int>{1, 2})); };
                  if (r(2, 3).is_zero())
                      throw NotGeneric("oracle minor");
                  ASSERT_EQ(quasi_plucker_right(b, 1, 2, IndexSet{3}), r(1, 3) / r(2, 3));
              }),
              20);
}

TEST(IndexedQuasiminor, IdentityPermutationsGivePrincipal)
{
    Sampler rng(15);
    auto x = random_matrix<Q>(rng, 4, 4, 3);
    auto e = Permutation::identity(4);
    for (int k = 1; k <= 4; ++k)
        EXPECT_EQ(quasiminor_indexed(x, SnMinorSpec{e, e, k}), principal_quasiminor(x, k));
}

TEST(IndexedQuasiminor, BothRoutesAgreeEverywhere)
{
    EXPECT_EQ(generic_trials(3, 16, [](Sampler& rng) {
                  auto x = random_matrix<Q>(rng, 3, 3, 3);
                  for (const auto& u : Permutation::all(3))
                      for (const auto& v : Permutation::all(3))
                          for (int k = 1; k <= 3; ++k)
                              ASSERT_EQ(delta(x, k, u, v), delta_by_conjugation(x, SnMinorSpec{u, v, k}));
              }),
              3);
}

TEST(IndexedQuasiminor, RepresentativeIsNormalized)
{
    for (const auto& u : Permutation::all(4)) {
        auto x = representative<Q>(u);
        for (int i = 1; i <= 4; ++i)
            EXPECT_EQ(delta(x, i, u, Permutation::identity(4)), Q(1)) << u.str() << " i=" << i;
    }
}

TEST(IndexedQuasiminor, SigmaSwapsWithLongest)
{
    const auto w0 = Permutation::longest(4);
    EXPECT_EQ(generic_trials(3, 17, [&](Sampler& rng) {
                  auto x = random_matrix<Q>(rng, 4, 4, 3);
                  for (int t = 0; t < 30; ++t) {
                      auto u = Permutation::all(4)[rng.index(24)], v = Permutation::all(4)[rng.index(24)];
                      for (int i = 1; i <= 4; ++i)
                          ASSERT_EQ(delta(sigma(x), i, u, v), delta(x, i, w0 * u, w0 * v));
                  }
              }),
              3);
}

TEST(IndexedQuasiminor, CartanScaling)
{
    EXPECT_EQ(generic_trials(5, 18, [](Sampler& rng) {
                  auto x = random_matrix<Q>(rng, 3, 3, 3);
                  auto hd = random_scalars<Q>(rng, 3, 3), gd = random_scalars<Q>(rng, 3, 3);
                  auto h = Matrix<Q>::diagonal(hd), g = Matrix<Q>::diagonal(gd);
                  for (const auto& u : Permutation::all(3))
                      for (const auto& v : Permutation::all(3))
                          for (int i = 1; i <= 3; ++i)
                              ASSERT_EQ(delta(h * x * g, i, u, v),
                                        hd[static_cast<std::size_t>(u(i) - 1)] * delta(x, i, u, v) *
                                            gd[static_cast<std::size_t>(v(i) - 1)]);
              }),
              5);
}

TEST(IndexedQuasiminor, TransposeOverCommutativeScalars)
{
    auto x = support::symbolic_matrix(3, "x");
    for (const auto& u : Permutation::all(3))
        for (const auto& v : Permutation::all(3))
            for (int i = 1; i <= 3; ++i)
                ASSERT_EQ(delta(x, i, u, v), delta(transpose(x), i, v, u));
}

TEST(IndexedQuasiminor, ConjugateTransposeOverQuaternions)
{
    EXPECT_EQ(generic_trials(3, 19, [](Sampler& rng) {
                  auto x = random_matrix<Q>(rng, 3, 3, 3);
                  for (const auto& u : Permutation::all(3))
                      for (const auto& v : Permutation::all(3))
                          for (int i = 1; i <= 3; ++i)
                              ASSERT_EQ(delta(conjugate_transpose(x), i, u, v), delta(x, i, v, u).conj());
              }),
              3);
}

TEST(MinorIdentities, DodgsonAndPlucker)
{
    for (int n : {3, 4}) {
        int dodgson = 0, plucker = 0;
        EXPECT_EQ(generic_trials(2, 20 + static_cast<std::uint64_t>(n), [&](Sampler& r) {
                      auto x = random_matrix<Q>(r, n, n, 3);
                      for (const auto& u : Permutation::all(n))
                          for (const auto& v : Permutation::all(n))
                              for (int i = 1; i < n; ++i) {
                                  if (dodgson_admissible(u, v, i))
                                      for (const auto& e : dodgson_identities(x, u, v, i)) {
                                          ++dodgson;
                                          ASSERT_TRUE(e.holds()) << e.str();
                                      }
                                  if (i + 1 < n && plucker_admissible(u, i)) {
                                      ++plucker;
                                      auto e = plucker_rows(x, u, v, i);
                                      ASSERT_TRUE(e.holds()) << e.str();
                                  }
                                  if (i + 1 < n && plucker_admissible(v, i)) {
                                      ++plucker;
                                      auto e = plucker_cols(x, u, v, i);
                                      ASSERT_TRUE(e.holds()) << e.str();
                                  }
                              }
                  }),
                  2);
        EXPECT_GT(dodgson, 0);
        EXPECT_GT(plucker, 0);
    }
}
