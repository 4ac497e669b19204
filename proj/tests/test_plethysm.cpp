// Copyright 2026 The ncseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ncseries/errors.hpp"
#include "ncseries/languages.hpp"
#include "ncseries/plethysm.hpp"
#include "test_util.hpp"

namespace ncs {
namespace {

using testing::kSeed;
using testing::language_oracle;
using testing::SeriesEq;
using testing::W;
using testing::words;

using Letters = std::vector<Letter>;

// Zero constant term, nonzero X0 coefficient, small letters.
NCSeries random_operand(std::mt19937_64& rng, TruncationContext ctx) {
  NCSeries r = testing::random_series(rng, ctx, 4, 0, 2);
  const Rational x0 = r.coeff(W({0}));
  return x0 == 0 ? r + NCSeries::letter(0, ctx) : r;
}

TEST(WordPlethysm, Basics) {
  const TruncationContext ctx{4, 8};
  const PlethysmOperand a(sp_trees_recursive(ctx));
  EXPECT_EQ(word_plethysm(Word{}, a), NCSeries::one(ctx));
  EXPECT_EQ(word_plethysm(W({0}), a), a.series());
  EXPECT_EQ(word_plethysm(W({1}), a), shift(a.series()));
}

TEST(WordPlethysm, TreesRootedAtFiveAndThree) {
  const TruncationContext ctx{4, 20};
  const NCSeries a = sp_trees_recursive(ctx);
  const NCSeries out = word_plethysm(W({5, 3}), PlethysmOperand(a));
  EXPECT_EQ(out.coeff(W({5, 6, 3, 4})), 1);
  EXPECT_EQ(out.coeff(W({5, 3})), 1);
  EXPECT_EQ(out.coeff(W({5, 7, 3})), 0);
  EXPECT_TRUE(SeriesEq(out, shift(a, 5) * shift(a, 3)));
}

TEST(Plethysm, IdentityOnBothSides) {
  const TruncationContext ctx{5, 12};
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries c1 = compositions(1, ctx);
  const NCSeries a = sp_trees_recursive(ctx);
  EXPECT_TRUE(SeriesEq(plethysm(c1, PlethysmOperand(x0)), c1));
  EXPECT_TRUE(SeriesEq(plethysm(x0, PlethysmOperand(a)), a));
}

TEST(Plethysm, Linearity) {
  const TruncationContext ctx{5, 12};
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries x1 = NCSeries::letter(1, ctx);
  const NCSeries a = sp_trees_recursive(ctx);
  EXPECT_TRUE(SeriesEq(plethysm(x0 + x0 * x1, PlethysmOperand(a)), a + a * shift(a)));
}

TEST(Plethysm, StaircaseWords) {
  const TruncationContext ctx{6, 15};
  NCSeries stairs(ctx);
  NCSeries word = NCSeries::one(ctx);
  for (Letter n = 0; n < 6; ++n) {
    word = word * NCSeries::letter(n, ctx);
    stairs = stairs + word;
  }
  const PlethysmOperand r(compositions(1, ctx) - NCSeries::one(ctx) + NCSeries::letter(0, ctx));
  NCSeries expected(ctx);
  NCSeries prod = NCSeries::one(ctx);
  for (Letter n = 0; n < 6; ++n) {
    prod = prod * shift(r.series(), n);
    expected = expected + prod;
  }
  EXPECT_TRUE(SeriesEq(plethysm(stairs, r), expected));
}

TEST(Plethysm, OperandErrors) {
  const TruncationContext ctx{3, 3};
  EXPECT_THROW(PlethysmOperand(NCSeries::one(ctx)), NonzeroConstantTerm);
  const PlethysmOperand no_x0(NCSeries::letter(1, ctx));
  EXPECT_FALSE(no_x0.invertible());
  EXPECT_THROW(plethystic_inverse(no_x0), NotInvertible);
  EXPECT_THROW(enriched_trees(NCSeries::letter(1, ctx), ctx), BadConstantTerm);
  EXPECT_THROW(enriched_trees(NCSeries::constant(2, ctx), ctx), BadConstantTerm);
  EXPECT_THROW(named_series("no-such-series", ctx), UnknownName);
}

TEST(Plethysm, PositivePart) {
  const TruncationContext ctx{3, 3};
  const PlethysmOperand r(words(ctx, {{0}, {1}}) + NCSeries::letter(0, ctx));
  EXPECT_EQ(r.alpha(), 2);
  EXPECT_EQ(r.positive_part(), words(ctx, {{1}}));
}

TEST(PlethysticInverse, Trees) {
  const TruncationContext ctx{6, 15};
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries x1 = NCSeries::letter(1, ctx);
  EXPECT_TRUE(SeriesEq(plethystic_inverse(PlethysmOperand(sp_trees_recursive(ctx))), x0 - x0 * x1));
}

TEST(PlethysticInverse, BranchlessAndSigma) {
  const TruncationContext ctx{6, 15};
  const NCSeries one = NCSeries::one(ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries x1 = NCSeries::letter(1, ctx);
  EXPECT_TRUE(SeriesEq(plethystic_inverse(PlethysmOperand(named_series("ell-plus", ctx))), x0 * inverse(one + x1)));
  EXPECT_TRUE(SeriesEq(plethystic_inverse(PlethysmOperand(named_series("sigma0", ctx))), x0 - x1));
}

TEST(PlethysticInverse, SigmaComposedWithBranchless) {
  const TruncationContext ctx{6, 15};
  const NCSeries one = NCSeries::one(ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries x1 = NCSeries::letter(1, ctx);
  const NCSeries x2 = NCSeries::letter(2, ctx);
  const NCSeries inv = plethystic_inverse(PlethysmOperand(named_series("a0-ell-plus", ctx)));
  EXPECT_TRUE(SeriesEq(inv, (x0 - x1) * inverse(one + x1 - x2)));
  // The form (X0 - X1) / (1 + (X0 - X1)) differs already at X0X0.
  const NCSeries literal = (x0 - x1) * inverse(one + x0 - x1);
  ASSERT_FALSE(eq_trunc(inv, literal));
  EXPECT_EQ(first_difference(inv, literal), W({0, 0}));
}

TEST(NamedSeries, BranchlessFamily) {
  EXPECT_EQ(named_series("ell", {3, 3}), words({3, 3}, {{}, {0}, {0, 1}, {0, 1, 2}}));
  const TruncationContext ctx{6, 20};
  const NCSeries even = language_oracle(ctx, [](const Letters& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 2 * i) return false;
    }
    return !w.empty();
  });
  EXPECT_TRUE(SeriesEq(named_series("ell-plus-even", ctx), even));
  EXPECT_TRUE(SeriesEq(named_series("ell-plus-odd", ctx), shift(even)));
  EXPECT_TRUE(SeriesEq(named_series("ell-plus", ctx), named_series("ell", ctx) - NCSeries::one(ctx)));
}

TEST(NamedSeries, SigmaComposedContainsStaircase) {
  const TruncationContext ctx{4, 12};
  const NCSeries s = named_series("a0-ell-plus", ctx);
  EXPECT_EQ(s.coeff(W({2, 3, 4})), 1);
  EXPECT_EQ(s.coeff(W({2, 4})), 0);
  for (const auto& [w, c] : s.terms()) {
    for (std::size_t i = 1; i < w.length(); ++i) EXPECT_EQ(w[i], w[i - 1] + 1) << to_string(w);
  }
}

TEST(NamedSeries, AllNamesBuild) {
  const TruncationContext ctx{4, 8};
  for (std::string_view name : named_series_names()) {
    const NCSeries s = named_series(name, ctx);
    EXPECT_EQ(s.context(), ctx) << name;
    EXPECT_FALSE(s.is_zero()) << name;
  }
}

TEST(EnrichedTrees, Examples) {
  const TruncationContext ctx{6, 15};
  const NCSeries one = NCSeries::one(ctx);
  EXPECT_TRUE(SeriesEq(enriched_trees(geometric(NCSeries::letter(1, ctx)), ctx), sp_trees_recursive(ctx)));
  const NCSeries branchless = language_oracle(ctx, [](const Letters& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != i) return false;
    }
    return !w.empty();
  });
  EXPECT_TRUE(SeriesEq(enriched_trees(one + NCSeries::letter(1, ctx), ctx), branchless));
}

TEST(EnrichedTrees, TreeImplicitForms) {
  const TruncationContext ctx{6, 15};
  const NCSeries a = sp_trees_recursive(ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  EXPECT_TRUE(SeriesEq(a, x0 + plethysm(x0 * NCSeries::letter(1, ctx), PlethysmOperand(a))));
  EXPECT_TRUE(SeriesEq(a * (NCSeries::one(ctx) - shift(a)), x0));
}

TEST(EnrichedTrees, InverseIsX0OverM) {
  const TruncationContext ctx{5, 12};
  const NCSeries one = NCSeries::one(ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries ell_plus = named_series("ell-plus", ctx);
  const std::vector<NCSeries> enrichments = {
      geometric(NCSeries::letter(1, ctx)), one + NCSeries::letter(1, ctx), one + NCSeries::letter(2, ctx),
      shift(one + ell_plus), inverse(one - shift(ell_plus)),
  };
  for (const NCSeries& m : enrichments) {
    const NCSeries tree = enriched_trees(m, ctx);
    const NCSeries candidate = x0 * inverse(m);
    EXPECT_TRUE(SeriesEq(plethystic_inverse(PlethysmOperand(tree)), candidate)) << to_text(m);
    EXPECT_TRUE(SeriesEq(plethysm(tree, PlethysmOperand(candidate)), x0));
    EXPECT_TRUE(SeriesEq(plethysm(candidate, PlethysmOperand(tree)), x0));
  }
}

// ---------------------------------------------------------------- properties

class PlethysmProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{kSeed};
  const TruncationContext ctx{4, 10};
};

TEST_F(PlethysmProperties, Associativity) {
  SCOPED_TRACE("seed " + std::to_string(kSeed));
  for (int i = 0; i < 15; ++i) {
    const NCSeries t = random_operand(rng, ctx);
    const PlethysmOperand r(random_operand(rng, ctx));
    const PlethysmOperand s(random_operand(rng, ctx));
    EXPECT_TRUE(SeriesEq(plethysm(plethysm(t, r), s), plethysm(t, PlethysmOperand(plethysm(r.series(), s)))));
  }
}

TEST_F(PlethysmProperties, TwoSidedAndDoubleInverse) {
  SCOPED_TRACE("seed " + std::to_string(kSeed));
  const NCSeries x0 = NCSeries::letter(0, ctx);
  for (int i = 0; i < 15; ++i) {
    const PlethysmOperand r(random_operand(rng, ctx));
    const NCSeries inv = plethystic_inverse(r);
    EXPECT_TRUE(SeriesEq(plethysm(r.series(), PlethysmOperand(inv)), x0));
    EXPECT_TRUE(SeriesEq(plethysm(inv, r), x0));
    EXPECT_TRUE(SeriesEq(plethystic_inverse(PlethysmOperand(inv)), r.series()));
  }
}

TEST_F(PlethysmProperties, DistributiveAndMultiplicative) {
  SCOPED_TRACE("seed " + std::to_string(kSeed));
  for (int i = 0; i < 15; ++i) {
    const NCSeries t = testing::random_series(rng, ctx, 4, 1, 3);
    const NCSeries u = testing::random_series(rng, ctx, 4, -2, 3);
    const PlethysmOperand r(random_operand(rng, ctx));
    EXPECT_TRUE(SeriesEq(plethysm(t + u, r), plethysm(t, r) + plethysm(u, r)));
    EXPECT_TRUE(SeriesEq(plethysm(t * u, r), plethysm(t, r) * plethysm(u, r)));
  }
}

TEST_F(PlethysmProperties, ShiftCommutesWithPlethysm) {
  SCOPED_TRACE("seed " + std::to_string(kSeed));
  for (int i = 0; i < 10; ++i) {
    const NCSeries t = random_operand(rng, ctx);
    const PlethysmOperand r(random_operand(rng, ctx));
    EXPECT_TRUE(SeriesEq(shift(plethysm(t, r)), plethysm(shift(t), r)));
  }
}

}  // namespace
}  // namespace ncs
