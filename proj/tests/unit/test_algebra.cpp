#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lrc/algebra.hpp"

using namespace lrc;
using fixtures::dual_numbers;
using fixtures::split_algebra;

namespace {
const Field<Rational> Q;
const Field<Zp> F2(2);

bool has_axiom(const Violations& v, const std::string& axiom) {
  for (const auto& x : v)
    if (x.axiom == axiom) return true;
  return false;
}
}  // namespace

TEST(Algebra, ValidExamples) {
  EXPECT_TRUE(validate_algebra(FiniteAlgebra<Rational>::ground(Q)).empty());
  EXPECT_TRUE(validate_algebra(dual_numbers(Q)).empty());
  EXPECT_TRUE(validate_algebra(split_algebra(Q)).empty());
  EXPECT_TRUE(validate_algebra(dual_numbers(F2)).empty());
}

TEST(Algebra, BrokenUnitIsLocalized) {
  // 1 * x = 0 instead of x.
  const FiniteAlgebra<Rational> a(Q, {1, 0}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
  const auto v = validate_algebra(a);
  ASSERT_TRUE(has_axiom(v, "unit"));
  for (const auto& x : v)
    if (x.axiom == "unit") {
      EXPECT_EQ(x.witness, (std::vector<std::size_t>{1}));
    }
  EXPECT_FALSE(has_axiom(v, "commutativity"));
}

TEST(Algebra, NonCommutativeAndNonAssociative) {
  // e0 e1 = e1 but e1 e0 = 0.
  const FiniteAlgebra<Rational> nc(Q, {1, 0}, {{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}});
  const auto v = validate_algebra(nc);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().axiom, "commutativity");
  EXPECT_EQ(v.front().witness, (std::vector<std::size_t>{0, 1}));
  // x x = 1 is a valid table: k[x]/(x^2 - 1).
  const FiniteAlgebra<Rational> ok(Q, {1, 0}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  EXPECT_TRUE(validate_algebra(ok).empty());
  // Commutative and unital but (x x) y = 0 != x (x y) = x.
  const FiniteAlgebra<Rational> na(Q, {1, 0, 0},
                                   {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                    {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                                    {{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}});
  const auto w = validate_algebra(na);
  EXPECT_TRUE(has_axiom(w, "associativity"));
  EXPECT_FALSE(has_axiom(w, "commutativity"));
  EXPECT_FALSE(has_axiom(w, "unit"));
}

TEST(Derivations, Examples) {
  EXPECT_EQ(derivation_space(FiniteAlgebra<Rational>::ground(Q)).dim(), 0u);
  const auto d = derivation_space(dual_numbers(Q));
  ASSERT_EQ(d.dim(), 1u);
  EXPECT_TRUE(d.space.contains(flatten(fixtures::euler_field(Q))));
  EXPECT_EQ(derivation_space(split_algebra(Q)).dim(), 0u);
}

TEST(Derivations, CharacteristicTwoHasMore) {
  // In characteristic 2, D(x) = 1 also satisfies D(x^2) = 2 x D(x) = 0.
  EXPECT_EQ(derivation_space(dual_numbers(F2)).dim(), 2u);
  EXPECT_EQ(derivation_space(dual_numbers(Field<Zp>(3))).dim(), 1u);
}

TEST(Derivations, ClosedUnderCommutator) {
  for (const auto& a : {dual_numbers(Q), split_algebra(Q), FiniteAlgebra<Rational>::ground(Q)})
    EXPECT_TRUE(derivation_bracket_closure(derivation_space(a)).empty());
  // k[x]/(x^3): derivations D(x) = a x + b x^2, a 2-dim non-abelian Lie algebra.
  const FiniteAlgebra<Rational> t(Q, {1, 0, 0},
                                  {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                   {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},
                                   {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}});
  ASSERT_TRUE(validate_algebra(t).empty());
  const auto d = derivation_space(t);
  EXPECT_EQ(d.dim(), 2u);
  EXPECT_TRUE(derivation_bracket_closure(d).empty());
  for (const auto& x : d.basis) EXPECT_TRUE(is_derivation(t, x));
}

TEST(Modules, Validation) {
  const auto a = dual_numbers(Q);
  EXPECT_TRUE(validate_module(a, AModule<Rational>::regular(a)).empty());
  EXPECT_TRUE(validate_module(a, AModule<Rational>::free(a, 2)).empty());
  // x acting invertibly on k violates x^2 = 0.
  AModule<Rational> bad{1, {Matrix<Rational>::identity(1, 1), Matrix<Rational>::identity(1, 1)}};
  EXPECT_FALSE(validate_module(a, bad).empty());
  AModule<Rational> residue{1, {Matrix<Rational>::identity(1, 1), Matrix<Rational>(1, 1)}};
  EXPECT_TRUE(validate_module(a, residue).empty());
}

TEST(Atiyah, LieAlgebraCase) {
  const auto a = FiniteAlgebra<Rational>::ground(Q);
  AModule<Rational> m{2, {Matrix<Rational>::identity(2, 1)}};
  const auto at = atiyah_object(a, m);
  EXPECT_EQ(at.dim(), 4u);
  EXPECT_EQ(at.symbol_image.dim(), 0u);
  EXPECT_EQ(at.linear_endomorphisms.dim(), 4u);
  EXPECT_TRUE(at.kernel_is_end_a());
  EXPECT_TRUE(at.exact());
}

TEST(Atiyah, FreeRankOneOverDualNumbers) {
  const auto a = dual_numbers(Q);
  const auto at = atiyah_object(a, AModule<Rational>::regular(a));
  EXPECT_EQ(at.dim(), 3u);
  EXPECT_EQ(at.linear_endomorphisms.dim(), 2u);
  EXPECT_TRUE(at.symbol_surjective());
  EXPECT_TRUE(at.kernel_is_end_a());
  EXPECT_TRUE(at.exact());
}

TEST(Atiyah, ResidueFieldModule) {
  const auto a = dual_numbers(Q);
  AModule<Rational> k{1, {Matrix<Rational>::identity(1, 1), Matrix<Rational>(1, 1)}};
  const auto at = atiyah_object(a, k);
  EXPECT_EQ(at.linear_endomorphisms.dim(), 1u);
  EXPECT_EQ(at.symbol_image.dim(), 1u);
  EXPECT_EQ(at.dim(), 2u);
  EXPECT_TRUE(at.symbol_surjective());
  EXPECT_TRUE(at.kernel_is_end_a());
  EXPECT_TRUE(at.exact());
}

TEST(Atiyah, FreeModulesHaveSurjectiveSymbol) {
  for (const auto& a : {dual_numbers(Q), split_algebra(Q)})
    for (std::size_t r = 1; r <= 2; ++r) {
      const auto at = atiyah_object(a, AModule<Rational>::free(a, r));
      EXPECT_TRUE(at.symbol_surjective());
      EXPECT_TRUE(at.exact());
      EXPECT_EQ(at.linear_endomorphisms.dim(), r * r * a.dim());
    }
  const auto f2 = dual_numbers(F2);
  const auto at = atiyah_object(f2, AModule<Zp>::regular(f2));
  EXPECT_EQ(at.symbol_image.dim(), 2u);
  EXPECT_TRUE(at.symbol_surjective());
}

TEST(Atiyah, SymbolConditionCheck) {
  const auto a = dual_numbers(Q);
  const auto m = AModule<Rational>::regular(a);
  EXPECT_TRUE(check_scalar_symbol(a, m, fixtures::euler_field(Q), fixtures::euler_field(Q)).empty());
  EXPECT_FALSE(check_scalar_symbol(a, m, fixtures::euler_field(Q), Matrix<Rational>(2, 2)).empty());
}
