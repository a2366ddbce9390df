#include <gtest/gtest.h>

#include <random>

#include "lrc/complex.hpp"
#include "lrc/linalg.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

const Field<Rational> Q;

Matrix<Rational> qmat(const oracle::QMat& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix<Rational> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Matrix<Zp> zmat(const std::vector<std::vector<long>>& rows, const Field<Zp>& f) {
  Matrix<Zp> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

}  // namespace

TEST(Field, RationalParsing) {
  EXPECT_EQ(Q.parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Q.parse("-4"), Rational(-4));
  EXPECT_THROW(Q.parse("1/0"), ParseError);
  EXPECT_THROW(Q.parse("abc"), ParseError);
}

TEST(Field, PrimeArithmetic) {
  const Field<Zp> f7(7);
  EXPECT_EQ(f7.from_int(-1), f7.from_int(6));
  EXPECT_EQ(f7.parse("1/3") * f7.from_int(3), f7.one());
  EXPECT_EQ(f7.from_int(3).inverse() * f7.from_int(3), f7.one());
  EXPECT_THROW(Field<Zp>(8), std::invalid_argument);
  EXPECT_THROW(f7.parse("1/7"), ParseError);
  EXPECT_THROW((void)(Zp(1, 7) + Zp(1, 5)), std::logic_error);
  EXPECT_TRUE(is_zero(Zp{} + Zp(0, 5)));
}

TEST(Field, SpecParsing) {
  EXPECT_EQ(FieldSpec::parse("Q").kind, FieldSpec::Kind::rational);
  EXPECT_EQ(FieldSpec::parse("F_2").p, 2u);
  EXPECT_EQ(FieldSpec::parse("prime:101").p, 101u);
  EXPECT_THROW(FieldSpec::parse("F_4"), ParseError);
  EXPECT_THROW(FieldSpec::parse("99999999999999999999"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix<Rational>::identity(2, 1)), 2u);
  EXPECT_EQ(rank(Matrix<Rational>(3, 4)), 0u);
  EXPECT_EQ(rank(qmat({{1, 2}, {2, 4}})), 1u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Q, Matrix<Rational>::identity(3, 1)).dim(), 0u);
  EXPECT_EQ(kernel(Q, Matrix<Rational>(3, 3)).dim(), 3u);
  const auto k = kernel(Q, qmat({{1, 2}, {2, 4}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(Vector<Rational>{2, -1}));
}

TEST(Quotient, Examples) {
  const auto v = Subspace<Rational>::span(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(quotient(v, v).dim, 0u);
  EXPECT_EQ(quotient(Subspace<Rational>::full(Q, 2), Subspace<Rational>::zero(2)).dim, 2u);
  const auto w = Subspace<Rational>::span(3, {{1, 1, 0}});
  const auto q = quotient(v, w);
  EXPECT_EQ(q.dim, 1u);
  EXPECT_THROW(quotient(w, v), NotASubspace);
  EXPECT_THROW(quotient(w, Subspace<Rational>::span(3, {{0, 0, 1}})), NotASubspace);
}

TEST(Subspace, CanonicalForm) {
  const auto a = Subspace<Rational>::span(3, {{1, 1, 0}, {0, 1, 1}});
  const auto b = Subspace<Rational>::span(3, {{1, 2, 1}, {Rational(1, 2), Rational(1, 2), 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(intersect(Q, a, Subspace<Rational>::span(3, {{1, 0, 0}, {0, 0, 1}})).dim(), 1u);
  EXPECT_EQ(sum(a, Subspace<Rational>::span(3, {{0, 0, 1}})).dim(), 3u);
}

TEST(Rank, FractionFreeAgreesWithNaiveOracle) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> sz(1, 7);
    const std::size_t r = static_cast<std::size_t>(sz(rng)), c = static_cast<std::size_t>(sz(rng));
    auto m = oracle::random_matrix(rng, r, c, -5, 5, trial % 8);
    // Force some dependent rows.
    if (r > 2)
      for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = m[0][j] * 3 - m[1][j] / 2;
    const auto lm = qmat(m);
    const std::size_t rk = rank(lm);
    ASSERT_EQ(rk, oracle::rank(m)) << "trial " << trial;
    ASSERT_EQ(rk, detail::row_reduce_naive(lm).rank());
    ASSERT_EQ(rk + kernel(Q, lm).dim(), c);
    ASSERT_EQ(row_reduce(lm).reduced, detail::row_reduce_naive(lm).reduced);
    for (const auto& v : kernel_vectors(Q, lm)) ASSERT_TRUE(is_zero_vector(lm.apply(v)));
  }
}

TEST(Kernel, PrimeFieldAgreesWithEnumeration) {
  std::mt19937 rng(777);
  for (long p : {2L, 3L, 5L}) {
    const Field<Zp> f(static_cast<std::uint32_t>(p));
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<int> sz(1, 4), val(-3, 3);
      const std::size_t r = static_cast<std::size_t>(sz(rng)), c = static_cast<std::size_t>(sz(rng));
      std::vector<std::vector<long>> m(r, std::vector<long>(c));
      for (auto& row : m)
        for (auto& x : row) x = val(rng);
      const std::size_t dim = kernel(f, zmat(m, f)).dim();
      std::size_t expected = 1;
      for (std::size_t i = 0; i < dim; ++i) expected *= static_cast<std::size_t>(p);
      ASSERT_EQ(expected, oracle::kernel_size_mod_p(m, c, p)) << "p=" << p << " trial " << trial;
    }
  }
}

TEST(Rank, CharacteristicMatters) {
  const Field<Zp> f2(2);
  EXPECT_EQ(rank(qmat({{2, 0}, {0, 1}})), 2u);
  EXPECT_EQ(rank(zmat({{2, 0}, {0, 1}}, f2)), 1u);
}

TEST(Solve, RoundTrip) {
  const auto a = qmat({{1, 2, 0}, {0, 1, 1}});
  const auto b = qmat({{3}, {2}});
  const auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, b);
  EXPECT_FALSE(solve(qmat({{1, 1}, {1, 1}}), qmat({{1}, {2}})).has_value());
}

TEST(Preimage, Definition) {
  const auto m = qmat({{1, 0, 0}, {0, 1, 0}});
  const auto w = Subspace<Rational>::span(2, {{1, 0}});
  const auto pre = preimage(Q, m, w);
  EXPECT_EQ(pre.dim(), 2u);
  EXPECT_TRUE(pre.contains(Vector<Rational>{5, 0, 7}));
  EXPECT_FALSE(pre.contains(Vector<Rational>{0, 1, 0}));
}

TEST(Cohomology, Examples) {
  const CochainComplex<Rational> point(Q, {1}, {});
  EXPECT_EQ(cohomology_dims(point), (std::vector<std::size_t>{1}));
  const CochainComplex<Rational> exact(Q, {1, 1}, {Matrix<Rational>::identity(1, 1)});
  EXPECT_EQ(cohomology_dims(exact), (std::vector<std::size_t>{0, 0}));
  const CochainComplex<Rational> zero(Q, {1, 2, 1}, {Matrix<Rational>(2, 1), Matrix<Rational>(1, 2)});
  EXPECT_EQ(cohomology_dims(zero), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_THROW(cohomology_at(zero, 3), DegreeOutOfRange);
  EXPECT_THROW(cohomology_at(zero, -1), DegreeOutOfRange);
}

TEST(Cohomology, RejectsNonComplex) {
  EXPECT_THROW(CochainComplex<Rational>(Q, {1, 1, 1}, {Matrix<Rational>::identity(1, 1), Matrix<Rational>::identity(1, 1)}),
               ConstructionInconsistent);
  EXPECT_THROW(CochainComplex<Rational>(Q, {1, 2}, {Matrix<Rational>::identity(1, 1)}), InvalidComplex);
}

TEST(Cohomology, EulerCharacteristicProperty) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    // d1 d0 = 0 by construction: d0 = B A0, d1 = C with C B = 0.
    const auto d0 = qmat(oracle::random_matrix(rng, 3, 2, -3, 3, 3));
    const auto k = kernel_vectors(Q, d0.transpose());
    Matrix<Rational> d1(k.size(), 3);
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) d1(i, j) = k[i][j];
    const CochainComplex<Rational> c(Q, {2, 3, k.size()}, {d0, d1});
    long chi = 0;
    const auto h = cohomology_dims(c);
    for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(h[i]);
    ASSERT_EQ(chi, c.euler_characteristic());
    for (const auto& g : cohomology(c)) {
      ASSERT_EQ(g.representatives.size(), g.dim);
      ASSERT_EQ(g.coordinates(g.representatives), Matrix<Rational>::identity(g.dim, 1));
    }
  }
}
