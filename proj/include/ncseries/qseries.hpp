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

#ifndef NCSERIES_QSERIES_HPP
#define NCSERIES_QSERIES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ncseries/rational.hpp"
#include "ncseries/series.hpp"

namespace ncs {

/// Power series in q truncated after q^max_q.
class QSeries {
 public:
  explicit QSeries(std::size_t max_q = 0) : c_(max_q + 1) {}
  QSeries(std::size_t max_q, std::vector<Rational> coeffs);

  static QSeries one(std::size_t max_q) { return monomial(1, 0, max_q); }
  // c q^m, or zero when m > max_q.
  static QSeries monomial(const Rational& c, std::size_t m, std::size_t max_q);

  std::size_t max_q() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t m) const { return c_[m]; }
  Rational coeff(std::size_t m) const { return m < c_.size() ? c_[m] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  QSeries truncated(std::size_t max_q) const;

  friend bool operator==(const QSeries&, const QSeries&) = default;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);

 private:
  std::vector<Rational> c_;
};

// Throws ZeroConstantTerm.
QSeries inverse(const QSeries& a);

/// Bivariate polynomial in (z, q), truncated to z^max_z and q^max_q.
///
/// The image of q-umbral evaluation X_k -> z q^k. Dense storage; binary
/// operations work on the meet of the two truncations.
class QPoly {
 public:
  explicit QPoly(std::size_t max_z = 0, std::size_t max_q = 0)
      : max_z_(max_z), max_q_(max_q), c_((max_z + 1) * (max_q + 1)) {}

  static QPoly one(std::size_t max_z, std::size_t max_q) { return monomial(1, 0, 0, max_z, max_q); }
  // c z^n q^m, or zero outside the truncation.
  static QPoly monomial(const Rational& c, std::size_t n, std::size_t m, std::size_t max_z, std::size_t max_q);
  // rows[n] is the coefficient of z^n; max_z = rows.size() - 1.
  static QPoly from_rows(const std::vector<QSeries>& rows, std::size_t max_q);

  std::size_t max_z() const { return max_z_; }
  std::size_t max_q() const { return max_q_; }
  Rational coeff(std::size_t n, std::size_t m) const;
  bool is_zero() const;
  // Coefficient of z^n as a q-series.
  QSeries row(std::size_t n) const;

  QPoly truncated(std::size_t max_z, std::size_t max_q) const;
  // z -> c; the result keeps max_q. Used with c = 1 and c = -1.
  QSeries subst_z(const Rational& c) const;
  // z -> z q.
  QPoly subst_z_zq() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& c, const QPoly& a);

 private:
  friend QPoly inverse(const QPoly& a);
  friend QPoly umbral(const NCSeries& r);
  Rational& at(std::size_t n, std::size_t m) { return c_[n * (max_q_ + 1) + m]; }
  const Rational& at(std::size_t n, std::size_t m) const { return c_[n * (max_q_ + 1) + m]; }

  std::size_t max_z_;
  std::size_t max_q_;
  std::vector<Rational> c_;
};

// Throws ZeroConstantTerm.
QPoly inverse(const QPoly& a);

// A word of length l and weight w contributes its coefficient to z^l q^w.
QPoly umbral(const NCSeries& r);
// X_k -> q^k; truncated at q^max_weight.
QSeries umbral_q(const NCSeries& r);

// prod_{k >= 0} (1 - q^{5k+a})(1 - q^{5k+b}), factors with exponent <= max_q.
// Throws std::invalid_argument unless 1 <= a, b <= 5.
QSeries rr_product(unsigned a, unsigned b, std::size_t max_q);

enum class RRVariant { kFirst, kSecond };
// sum_n z^n q^{n^2} / ((1-q)...(1-q^n)), or with q^{n(n+1)} for kSecond.
QPoly rr_sum_side(RRVariant variant, std::size_t max_z, std::size_t max_q);

enum class PathLengthSource { kAlgebraic, kOracle };
/// Number of plane trees on n vertices by path length m, P(n, m).
///
/// kAlgebraic reads the z^n row of the umbral image of the tree language;
/// kOracle counts enumerated trees directly.
std::map<std::uint64_t, Integer> path_length_coeffs(std::size_t n, PathLengthSource source);

// Ascending powers: "1 - q - q^4 + q^5".
std::string to_text(const QSeries& s);
// Grouped by powers of z: "z + q z^2 + (q^2 + q^3) z^3".
std::string to_text(const QPoly& p);
// {"max_q": W, "terms": [{"q": m, "coeff": "p/q"}]}
nlohmann::json to_json(const QSeries& s);
// {"max_z": N, "max_q": W, "terms": [{"z": n, "q": m, "coeff": "p/q"}]}
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

// First q-power where a and b differ, on the common truncation.
std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b);
// First (n, m) in (n, m)-lexicographic order where a and b differ.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const QPoly& a, const QPoly& b);

}  // namespace ncs

#endif  // NCSERIES_QSERIES_HPP
