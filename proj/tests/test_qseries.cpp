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

#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ncseries/compositions.hpp"
#include "ncseries/errors.hpp"
#include "ncseries/languages.hpp"
#include "ncseries/plane_tree.hpp"
#include "ncseries/qseries.hpp"
#include "test_util.hpp"

namespace ncs {
namespace {

using testing::catalan;
using testing::kSeed;
using testing::random_series;
using testing::W;

QSeries from_ints(std::size_t max_q, const std::map<std::size_t, long>& coeffs) {
  std::vector<Rational> c(max_q + 1);
  for (const auto& [m, v] : coeffs) c[m] = v;
  return QSeries(max_q, c);
}

// Partition counts p(0..n), by a DP over part sizes.
std::vector<long> partition_counts(std::size_t n) {
  std::vector<long> p(n + 1);
  p[0] = 1;
  for (std::size_t part = 1; part <= n; ++part) {
    for (std::size_t m = part; m <= n; ++m) p[m] += p[m - part];
  }
  return p;
}

TEST(Umbral, Examples) {
  const NCSeries w = NCSeries::word(W({0, 1, 2, 2, 1, 2, 2, 2, 3}), {9, 15});
  const QPoly p = umbral(w);
  EXPECT_EQ(p.coeff(9, 15), 1);
  EXPECT_EQ(p, QPoly::monomial(1, 9, 15, 9, 15));
  EXPECT_EQ(umbral(NCSeries::one({3, 3})), QPoly::one(3, 3));
  EXPECT_EQ(umbral_q(NCSeries::word(W({2, 3}), {2, 5})), QSeries::monomial(1, 5, 5));
}

TEST(Umbral, PartitionCounts) {
  const QSeries p = umbral_q(partitions_m_distinct(0, {5, 5}));
  EXPECT_EQ(p, from_ints(5, {{0, 1}, {1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 7}}));
  const std::size_t big = 14;
  const QSeries full = umbral_q(partitions_m_distinct(0, {big, big}));
  const auto counts = partition_counts(big);
  for (std::size_t m = 0; m <= big; ++m) EXPECT_EQ(full[m], counts[m]) << m;
}

TEST(Umbral, SignedShiftedCompositionsAtEleven) {
  const NCSeries c = shift(compositions(1, {11, 11}));
  EXPECT_EQ(umbral_q(sign_by_length(c)).coeff(11), 1);
}

TEST(Umbral, ShiftIsZToZq) {
  std::mt19937_64 rng(kSeed);
  SCOPED_TRACE("seed " + std::to_string(kSeed));
  const TruncationContext ctx{5, 12};
  for (int i = 0; i < 20; ++i) {
    const NCSeries s = random_series(rng, ctx, 8, i % 3, 4);
    EXPECT_EQ(umbral(shift(s)), umbral(s).subst_z_zq());
  }
}

TEST(Umbral, IsAHomomorphism) {
  std::mt19937_64 rng(kSeed + 1);
  SCOPED_TRACE("seed " + std::to_string(kSeed + 1));
  const TruncationContext ctx{5, 12};
  for (int i = 0; i < 20; ++i) {
    const NCSeries a = random_series(rng, ctx, 6, 1);
    const NCSeries b = random_series(rng, ctx, 6, -3);
    EXPECT_EQ(umbral(a * b), umbral(a) * umbral(b));
    EXPECT_EQ(umbral(a + b), umbral(a) + umbral(b));
    EXPECT_EQ(umbral_q(a), umbral(a).subst_z(1));
  }
}

TEST(QPoly, InverseOfOneMinusQz) {
  const QPoly one = QPoly::one(6, 10);
  const QPoly f = one - QPoly::monomial(1, 1, 1, 6, 10);
  const QPoly inv = inverse(f);
  EXPECT_EQ(f * inv, one);
  EXPECT_EQ(inv.coeff(4, 4), 1);
  EXPECT_EQ(inv.coeff(4, 3), 0);
  EXPECT_THROW(inverse(QPoly::monomial(1, 1, 0, 3, 3)), ZeroConstantTerm);
}

TEST(QPoly, SubstitutionsAndRows) {
  // 1 + 2 z q + z^2 q^3.
  const QPoly p = QPoly::one(2, 5) + QPoly::monomial(2, 1, 1, 2, 5) + QPoly::monomial(1, 2, 3, 2, 5);
  EXPECT_EQ(p.subst_z(1), from_ints(5, {{0, 1}, {1, 2}, {3, 1}}));
  EXPECT_EQ(p.subst_z(-1), from_ints(5, {{0, 1}, {1, -2}, {3, 1}}));
  EXPECT_EQ(p.subst_z_zq(), QPoly::one(2, 5) + QPoly::monomial(2, 1, 2, 2, 5) + QPoly::monomial(1, 2, 5, 2, 5));
  EXPECT_EQ(p.row(1), QSeries::monomial(2, 1, 5));
  EXPECT_EQ(QPoly::from_rows({p.row(0), p.row(1), p.row(2)}, 5), p);
  EXPECT_EQ(p.truncated(1, 5), QPoly::one(1, 5) + QPoly::monomial(2, 1, 1, 1, 5));
}

TEST(QSeries, Arithmetic) {
  const QSeries one = QSeries::one(8);
  const QSeries f = one - QSeries::monomial(1, 1, 8);
  const QSeries inv = inverse(f);
  for (std::size_t m = 0; m <= 8; ++m) EXPECT_EQ(inv[m], 1);
  EXPECT_EQ(f * inv, one);
  EXPECT_EQ((f + f), Rational(2) * f);
  EXPECT_THROW(inverse(QSeries::monomial(1, 1, 3)), ZeroConstantTerm);
  EXPECT_EQ((one * QSeries::one(3)).max_q(), 3u);
}

TEST(CompositionsAtMinusOne, MatchesGradedAtOne) {
  const TruncationContext ctx{12, 12};
  const NCSeries c1 = compositions(1, ctx);
  EXPECT_EQ(umbral(c1).subst_z(-1), umbral_q(sign_by_length(c1)));
  EXPECT_EQ(umbral(c1).subst_z(-1), rr_product(1, 4, 12));
}

TEST(RRProduct, Anchors) {
  EXPECT_EQ(rr_product(1, 4, 6), from_ints(6, {{0, 1}, {1, -1}, {4, -1}, {5, 1}, {6, -1}}));
  EXPECT_EQ(to_text(rr_product(1, 4, 6)), "1 - q - q^4 + q^5 - q^6");
  EXPECT_EQ(rr_product(1, 4, 30).coeff(5), 1);
  EXPECT_EQ(rr_product(2, 3, 30).coeff(10), 2);
  EXPECT_EQ(rr_product(2, 3, 11).coeff(11), 1);
  EXPECT_THROW(rr_product(0, 4, 5), std::invalid_argument);
  EXPECT_THROW(rr_product(1, 6, 5), std::invalid_argument);
}

TEST(RRProduct, MatchesDistinctPartitionCount) {
  // Coefficient of q^n: signed count of partitions of n into distinct parts
  // that are 1 or 4 mod 5, by explicit subset enumeration.
  const std::size_t max_q = 25;
  std::vector<unsigned> parts;
  for (unsigned e = 1; e <= max_q; ++e) {
    if (e % 5 == 1 || e % 5 == 4) parts.push_back(e);
  }
  std::vector<Rational> c(max_q + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << parts.size()); ++mask) {
    unsigned sum = 0;
    int sign = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (mask >> i & 1) {
        sum += parts[i];
        sign = -sign;
      }
    }
    if (sum <= max_q) c[sum] += sign;
  }
  EXPECT_EQ(rr_product(1, 4, max_q), QSeries(max_q, c));
}

TEST(RRSum, FirstTerms) {
  const QPoly s = rr_sum_side(RRVariant::kFirst, 1, 4);
  QPoly expected = QPoly::one(1, 4);
  for (std::size_t m = 1; m <= 4; ++m) expected = expected + QPoly::monomial(1, 1, m, 1, 4);
  EXPECT_EQ(s, expected);
}

TEST(RRSum, MatchesTwoDistinctLanguages) {
  const TruncationContext ctx{5, 25};
  const NCSeries p2 = partitions_m_distinct(2, ctx);
  EXPECT_EQ(umbral(p2), rr_sum_side(RRVariant::kFirst, 5, 25));
  EXPECT_EQ(umbral(shift(p2)), rr_sum_side(RRVariant::kSecond, 5, 25));
  EXPECT_EQ(rr_sum_side(RRVariant::kSecond, 5, 25).subst_z(1), umbral_q(shift(p2)));
}

TEST(PathLength, Rows) {
  using M = std::map<std::uint64_t, Integer>;
  EXPECT_EQ(path_length_coeffs(1, PathLengthSource::kAlgebraic), (M{{0, 1}}));
  EXPECT_EQ(path_length_coeffs(4, PathLengthSource::kAlgebraic), (M{{3, 1}, {4, 2}, {5, 1}, {6, 1}}));
  EXPECT_EQ(path_length_coeffs(5, PathLengthSource::kAlgebraic),
            (M{{4, 1}, {5, 3}, {6, 3}, {7, 3}, {8, 2}, {9, 1}, {10, 1}}));
  const M six = {{5, 1}, {6, 4}, {7, 6}, {8, 7}, {9, 7}, {10, 5}, {11, 5}, {12, 3}, {13, 2}, {14, 1}, {15, 1}};
  EXPECT_EQ(path_length_coeffs(6, PathLengthSource::kAlgebraic), six);
  EXPECT_EQ(path_length_coeffs(6, PathLengthSource::kOracle), six);
}

TEST(PathLength, CatalanSumsAndSupport) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto alg = path_length_coeffs(n, PathLengthSource::kAlgebraic);
    EXPECT_EQ(alg, path_length_coeffs(n, PathLengthSource::kOracle)) << n;
    Integer total = 0;
    for (const auto& [m, c] : alg) total += c;
    EXPECT_EQ(total, catalan(n - 1)) << n;
    EXPECT_EQ(alg.begin()->first, n - 1);
    EXPECT_EQ(alg.rbegin()->first, n * (n - 1) / 2);
    EXPECT_EQ(alg.rbegin()->second, 1);
    EXPECT_EQ(alg.size(), n * (n - 1) / 2 - (n - 1) + 1);
  }
}

TEST(PathLength, TreeSeriesText) {
  const QPoly a = umbral(sp_trees_recursive({6, 15}));
  EXPECT_EQ(to_text(a),
            "z + q z^2 + (q^2 + q^3) z^3 + (q^3 + 2 q^4 + q^5 + q^6) z^4 + "
            "(q^4 + 3 q^5 + 3 q^6 + 3 q^7 + 2 q^8 + q^9 + q^10) z^5 + "
            "(q^5 + 4 q^6 + 6 q^7 + 7 q^8 + 7 q^9 + 5 q^10 + 5 q^11 + 3 q^12 + 2 q^13 + q^14 + q^15) z^6");
}

TEST(PathLength, QuotientClearedOfDivision) {
  const TruncationContext ctx{6, 15};
  const QPoly a = umbral(sp_trees_recursive(ctx));
  const QPoly p2 = umbral(partitions_m_distinct(2, ctx));
  const QPoly c1 = umbral(compositions(1, ctx));
  const QPoly z = QPoly::monomial(1, 1, 0, 6, 15);
  EXPECT_EQ(a * umbral(shift(compositions(1, ctx))), z * c1);
  // With the graded 2-distinct series the quotient form holds.
  const QPoly p2g = umbral(sign_by_length(partitions_m_distinct(2, ctx)));
  EXPECT_EQ(a * p2g, z * p2g.subst_z_zq());
  // The ungraded series does not satisfy it.
  EXPECT_NE(a * p2, z * p2.subst_z_zq());
}

TEST(QText, Rendering) {
  EXPECT_EQ(to_text(QSeries(3)), "0");
  EXPECT_EQ(to_text(from_ints(3, {{0, -2}, {2, 1}})), "-2 + q^2");
  EXPECT_EQ(to_text(QPoly::one(2, 2) - QPoly::monomial(Rational(1, 2), 2, 1, 2, 2)), "1 - 1/2 q z^2");
}

TEST(QJson, RoundTrip) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 10; ++i) {
    const QPoly p = umbral(random_series(rng, {4, 9}, 8, Rational(i, 3)));
    const nlohmann::json j = to_json(p);
    EXPECT_EQ(j["max_z"], 4);
    EXPECT_EQ(j["max_q"], 9);
    EXPECT_EQ(qpoly_from_json(nlohmann::json::parse(j.dump())), p);
  }
  const nlohmann::json j = to_json(QPoly::monomial(Rational(-3, 4), 1, 2, 2, 3));
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["z"], 1);
  EXPECT_EQ(j["terms"][0]["q"], 2);
  EXPECT_EQ(j["terms"][0]["coeff"], "-3/4");
}

TEST(QDiff, FirstDifference) {
  EXPECT_EQ(first_difference(rr_product(1, 4, 10), rr_product(1, 4, 10)), std::nullopt);
  EXPECT_EQ(first_difference(rr_product(1, 4, 10), rr_product(2, 3, 10)), 1u);
  const QPoly a = QPoly::one(2, 2);
  const auto d = first_difference(a, a + QPoly::monomial(1, 2, 1, 2, 2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (std::pair<std::size_t, std::size_t>{2, 1}));
}

}  // namespace
}  // namespace ncs
