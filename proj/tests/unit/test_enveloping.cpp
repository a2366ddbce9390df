#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lrc/rinehart.hpp"

using namespace lrc;
using namespace fixtures;

namespace {
const Field<Rational> Q;
using Dims = std::vector<std::size_t>;

Vector<Rational> sum(const Vector<Rational>& a, const Vector<Rational>& b, long sb = 1) {
  Vector<Rational> out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i] * sb;
  return out;
}

// The defining 2-dim representation of sl2 in the basis (e, f, h).
Representation<Rational> sl2_standard() {
  Matrix<Rational> e(2, 2), f(2, 2), h(2, 2);
  e(0, 1) = 1;
  f(1, 0) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  return {AModule<Rational>{2, {Matrix<Rational>::identity(2, 1)}}, {e, f, h}};
}

template <class K>
void expect_resolution(const LieRinehart<K>& l, std::size_t d) {
  const auto env = truncated_enveloping(l, d);
  EXPECT_TRUE(check_pbw_count(env).empty());
  EXPECT_TRUE(check_relations(env).empty());
  EXPECT_TRUE(check_associativity(env).empty());
  const auto rc = rinehart_complex(env);
  const auto rep = check_exactness(rc);
  EXPECT_TRUE(rep.square_zero);
  EXPECT_TRUE(rep.augmentation_square_zero);
  EXPECT_TRUE(rep.filtration_preserved);
  EXPECT_TRUE(rep.exact());
  for (const auto& lv : rep.levels) EXPECT_TRUE(lv.exact) << "level " << lv.level;
  EXPECT_TRUE(check_u_linearity(env, rc).empty());
}
}  // namespace

TEST(Enveloping, PolynomialRing) {
  const auto env = truncated_enveloping(abelian(Q, 1), 3);
  ASSERT_EQ(env.dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto p = env.multiply(env.basis_vector(i), env.basis_vector(j));
      EXPECT_EQ(p.overflow, i + j > 3);
      if (i + j <= 3) {
        EXPECT_EQ(p.value, env.basis_vector(i + j));
      }
    }
}

TEST(Enveloping, Aff1Straightening) {
  const auto env = truncated_enveloping(aff1(Q), 2);
  ASSERT_EQ(env.dim(), 6u);
  const auto e1 = env.generator(0), e2 = env.generator(1);
  const auto e1e2 = env.multiply(e1, e2).value;
  EXPECT_EQ(e1e2, env.basis_vector(env.index({1, 1}, 0)));
  // e2 e1 = e1 e2 + [e2, e1] = e1 e2 - e1.
  EXPECT_EQ(env.multiply(e2, e1).value, sum(e1e2, e1, -1));
}

TEST(Enveloping, FatPointRelation) {
  const auto l = fat_point_1(Q);
  const auto env = truncated_enveloping(l, 2);
  ASSERT_EQ(env.dim(), 6u);
  const auto s = env.generator(0);
  const auto x = env.scalar({0, 1});
  const auto xs = env.multiply(x, s).value;
  EXPECT_EQ(xs, env.basis_vector(env.index({1}, 1)));
  EXPECT_EQ(env.multiply(s, x).value, sum(xs, x));
}

TEST(Enveloping, PbwCounts) {
  EXPECT_EQ(truncated_enveloping(sl2(Q), 3).dim(), 20u);
  EXPECT_EQ(truncated_enveloping(fat_point_2(Q), 3).dim(), 20u);
  EXPECT_EQ(truncated_enveloping(split_example(Q), 2).dim(), 12u);
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(truncated_enveloping(heisenberg(Q), d).dim(), binomial(3 + d, d));
  EXPECT_THROW(truncated_enveloping(sl2(Q), 0), DegreeOutOfRange);
}

TEST(Enveloping, Augmentation) {
  const auto env = truncated_enveloping(fat_point_1(Q), 3);
  const auto eps = augmentation(env);
  EXPECT_EQ(eps.apply(env.scalar({1, 0})), (Vector<Rational>{1, 0}));
  EXPECT_EQ(eps.apply(env.scalar({0, 1})), (Vector<Rational>{0, 1}));
  for (std::size_t u = 0; u < env.dim(); ++u)
    if (env.degree(u) > 0) {
      EXPECT_TRUE(is_zero_vector(eps.column(u)));
    }
  EXPECT_EQ(rank(eps), 2u);
}

TEST(Enveloping, ModuleActionsAgreeWithMatrices) {
  const auto env = truncated_enveloping(sl2(Q), 3);
  EXPECT_TRUE(check_module_action(env, sl2_standard()).empty());
  EXPECT_TRUE(check_module_action(env, adjoint_representation(sl2(Q))).empty());
  // Casimir ef + fe + h^2/2 acts on the standard representation by 3/2.
  const auto e = env.generator(0), f = env.generator(1), h = env.generator(2);
  auto c = sum(env.multiply(e, f).value, env.multiply(f, e).value);
  const auto hh = env.multiply(h, h).value;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += hh[i] / 2;
  EXPECT_EQ(action_matrix(env, sl2_standard(), c), Rational(3, 2) * Matrix<Rational>::identity(2, 1));
  const auto f2 = fat_point_2(Q);
  const auto env2 = truncated_enveloping(f2, 3);
  EXPECT_TRUE(check_module_action(env2, anchor_representation(f2)).empty());
  EXPECT_TRUE(check_module_action(env2, adjoint_representation(f2)).empty());
}

TEST(Enveloping, BrokenJacobiBreaksAssociativity) {
  auto c = sl2_constants();
  set_bracket(c, 2, 1, {0, 2, 0});
  const auto env = truncated_enveloping(lie_algebra(Q, c), 3);
  EXPECT_FALSE(check_associativity(env).empty());
}

TEST(Rinehart, ExactOnCorpus) {
  expect_resolution(abelian(Q, 2), 3);
  expect_resolution(sl2(Q), 3);
  expect_resolution(heisenberg(Q), 3);
  expect_resolution(fat_point_1(Q), 3);
  expect_resolution(fat_point_2(Q), 3);
  expect_resolution(split_example(Q), 3);
  expect_resolution(sl2(Field<Zp>(2)), 3);
  expect_resolution(fat_point_1(Field<Zp>(2)), 3);
}

TEST(Rinehart, KoszulLevelDims) {
  const auto env = truncated_enveloping(abelian(Q, 2), 3);
  const auto rep = check_exactness(rinehart_complex(env));
  // F_t C_i = k[s1,s2]_{<= t-i} (x) Lambda^i k^2.
  ASSERT_EQ(rep.levels.size(), 4u);
  EXPECT_EQ(rep.levels[3].chain_dims, (Dims{10, 12, 3}));
  EXPECT_EQ(rep.levels[0].chain_dims, (Dims{1, 0, 0}));
}

TEST(Rinehart, ForgedFailureThrows) {
  ExactnessReport<Rational> rep;
  rep.first_failure = std::make_pair(std::size_t{2}, std::size_t{1});
  try {
    require_exact(rep);
    FAIL();
  } catch (const ExactnessFailure& e) {
    EXPECT_EQ(e.level(), 2u);
    EXPECT_EQ(e.degree(), 1u);
  }
}

TEST(HomIso, MatchesCE) {
  const std::vector<std::pair<LieRinehart<Rational>, Representation<Rational>>> cases = {
      {abelian(Q, 2), trivial(abelian(Q, 2))},
      {aff1(Q), trivial(aff1(Q))},
      {sl2(Q), adjoint_representation(sl2(Q))},
      {sl2(Q), sl2_standard()},
      {fat_point_1(Q), anchor_representation(fat_point_1(Q))},
      {fat_point_2(Q), adjoint_representation(fat_point_2(Q))},
      {split_example(Q), anchor_representation(split_example(Q))},
  };
  for (const auto& [l, r] : cases) {
    const auto env = truncated_enveloping(l, 3);
    const auto rc = rinehart_complex(env);
    const auto cert = hom_complex_iso(env, rc, r);
    EXPECT_EQ(cert.degrees_checked.size(), l.rank());
  }
}

TEST(HomIso, Aff1Matrices) {
  const auto l = aff1(Q);
  const auto env = truncated_enveloping(l, 2);
  const auto hom = hom_complex(env, rinehart_complex(env), trivial(l));
  EXPECT_EQ(hom.differential(0), Matrix<Rational>(2, 1));
  EXPECT_EQ(hom.differential(1), (Matrix<Rational>(1, 2, {-1, 0})));
}

TEST(HomIso, Sl2AdjointDims) {
  const auto l = sl2(Q);
  const auto env = truncated_enveloping(l, 3);
  const auto hom = hom_complex(env, rinehart_complex(env), adjoint_representation(l));
  EXPECT_EQ(hom.dims(), (Dims{3, 9, 9, 3}));
  EXPECT_GT(hom_complex_iso(env, rinehart_complex(env), adjoint_representation(l)).entries_compared, 0u);
}

TEST(HomIso, MismatchIsLocated) {
  const auto l = sl2(Q);
  const auto env = truncated_enveloping(l, 2);
  const auto hom = hom_complex(env, rinehart_complex(env), sl2_standard());
  auto wrong = sl2_standard();
  wrong.rho[2] = -wrong.rho[2];
  wrong.rho[0] = -wrong.rho[0];
  wrong.rho[1] = -wrong.rho[1];
  // Only the degree-0 differential uses the negated action.
  ExteriorIndex ex(3);
  std::vector<Matrix<Rational>> ds;
  for (std::size_t p = 0; p < 3; ++p) ds.push_back(ce_differential(l, wrong, ex, p));
  try {
    const CochainComplex<Rational> fake(Q, hom.dims(), {ds[0], hom.differential(1), hom.differential(2)});
    compare_with_ce(hom, fake);
    FAIL();
  } catch (const MismatchAt& e) {
    EXPECT_EQ(e.degree(), 0u);
  }
}

TEST(Ext, AgreesWithCE) {
  const auto run = [](const auto& l, const auto& r) {
    const auto env = truncated_enveloping(l, 3);
    const auto rc = rinehart_complex(env);
    return ext_comparison(env, rc, r, check_exactness(rc));
  };
  const auto ab = run(abelian(Q, 2), trivial(abelian(Q, 2)));
  EXPECT_TRUE(ab.ok());
  EXPECT_EQ(ab.ext_dims, (Dims{1, 2, 1}));
  const auto s = run(sl2(Q), trivial(sl2(Q)));
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.ext_dims, (Dims{1, 0, 0, 1}));
  const auto f = run(fat_point_1(Q), anchor_representation(fat_point_1(Q)));
  EXPECT_TRUE(f.ok());
  EXPECT_EQ(f.ext_dims, (Dims{1, 1}));
  const auto st = run(sl2(Q), sl2_standard());
  EXPECT_TRUE(st.ok());
  EXPECT_EQ(st.ext_dims, (Dims{0, 0, 0, 0}));
}
