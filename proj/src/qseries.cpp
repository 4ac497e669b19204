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

#include "ncseries/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncseries/errors.hpp"
#include "ncseries/languages.hpp"
#include "ncseries/plane_tree.hpp"

namespace ncs {

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(std::size_t max_q, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(max_q + 1);
  for (Rational& c : c_) c.canonicalize();
}

QSeries QSeries::monomial(const Rational& c, std::size_t m, std::size_t max_q) {
  QSeries out(max_q);
  if (m <= max_q) {
    out.c_[m] = c;
    out.c_[m].canonicalize();
  }
  return out;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

QSeries QSeries::truncated(std::size_t max_q) const {
  return QSeries(max_q, std::vector<Rational>(c_.begin(), c_.begin() + std::min(c_.size(), max_q + 1)));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.max_q(), b.max_q()));
  for (std::size_t m = 0; m <= out.max_q(); ++m) out.c_[m] = a.c_[m] + b.c_[m];
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.max_q(), b.max_q()));
  for (std::size_t m = 0; m <= out.max_q(); ++m) out.c_[m] = a.c_[m] - b.c_[m];
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries out(std::min(a.max_q(), b.max_q()));
  const std::size_t top = out.max_q();
  for (std::size_t i = 0; i <= top; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= top; ++j) {
      if (b.c_[j] != 0) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

QSeries operator*(const Rational& c, const QSeries& a) {
  QSeries out(a.max_q());
  for (std::size_t m = 0; m <= a.max_q(); ++m) out.c_[m] = c * a.c_[m];
  return out;
}

QSeries inverse(const QSeries& a) {
  if (a[0] == 0) throw ZeroConstantTerm("inverse: q-series has zero constant term");
  const std::size_t top = a.max_q();
  std::vector<Rational> s(top + 1);
  const Rational inv0 = 1 / a[0];
  s[0] = inv0;
  for (std::size_t m = 1; m <= top; ++m) {
    Rational acc;
    for (std::size_t i = 1; i <= m; ++i) {
      if (a[i] != 0) acc += a[i] * s[m - i];
    }
    s[m] = -inv0 * acc;
  }
  return QSeries(top, std::move(s));
}

// ------------------------------------------------------------------ QPoly

QPoly QPoly::monomial(const Rational& c, std::size_t n, std::size_t m, std::size_t max_z, std::size_t max_q) {
  QPoly out(max_z, max_q);
  if (n <= max_z && m <= max_q) {
    out.at(n, m) = c;
    out.at(n, m).canonicalize();
  }
  return out;
}

QPoly QPoly::from_rows(const std::vector<QSeries>& rows, std::size_t max_q) {
  if (rows.empty()) throw std::invalid_argument("QPoly::from_rows: no rows");
  QPoly out(rows.size() - 1, max_q);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t m = 0; m <= max_q; ++m) out.at(n, m) = rows[n].coeff(m);
  }
  return out;
}

Rational QPoly::coeff(std::size_t n, std::size_t m) const {
  return n <= max_z_ && m <= max_q_ ? at(n, m) : Rational(0);
}

bool QPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

QSeries QPoly::row(std::size_t n) const {
  QSeries out(max_q_);
  if (n > max_z_) return out;
  std::vector<Rational> coeffs(c_.begin() + n * (max_q_ + 1), c_.begin() + (n + 1) * (max_q_ + 1));
  return QSeries(max_q_, std::move(coeffs));
}

QPoly QPoly::truncated(std::size_t max_z, std::size_t max_q) const {
  QPoly out(max_z, max_q);
  for (std::size_t n = 0; n <= std::min(max_z, max_z_); ++n) {
    for (std::size_t m = 0; m <= std::min(max_q, max_q_); ++m) out.at(n, m) = at(n, m);
  }
  return out;
}

QSeries QPoly::subst_z(const Rational& c) const {
  std::vector<Rational> coeffs(max_q_ + 1);
  Rational power = 1;
  for (std::size_t n = 0; n <= max_z_; ++n) {
    for (std::size_t m = 0; m <= max_q_; ++m) {
      if (at(n, m) != 0) coeffs[m] += power * at(n, m);
    }
    power *= c;
  }
  return QSeries(max_q_, std::move(coeffs));
}

QPoly QPoly::subst_z_zq() const {
  QPoly out(max_z_, max_q_);
  for (std::size_t n = 0; n <= max_z_; ++n) {
    for (std::size_t m = 0; m + n <= max_q_; ++m) out.at(n, m + n) = at(n, m);
  }
  return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly out = a.truncated(std::min(a.max_z_, b.max_z_), std::min(a.max_q_, b.max_q_));
  for (std::size_t n = 0; n <= out.max_z_; ++n) {
    for (std::size_t m = 0; m <= out.max_q_; ++m) out.at(n, m) += b.at(n, m);
  }
  return out;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rational(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out(std::min(a.max_z_, b.max_z_), std::min(a.max_q_, b.max_q_));
  for (std::size_t n1 = 0; n1 <= out.max_z_; ++n1) {
    for (std::size_t m1 = 0; m1 <= out.max_q_; ++m1) {
      const Rational& x = a.at(n1, m1);
      if (x == 0) continue;
      for (std::size_t n2 = 0; n1 + n2 <= out.max_z_; ++n2) {
        for (std::size_t m2 = 0; m1 + m2 <= out.max_q_; ++m2) {
          const Rational& y = b.at(n2, m2);
          if (y != 0) out.at(n1 + n2, m1 + m2) += x * y;
        }
      }
    }
  }
  return out;
}

QPoly operator*(const Rational& c, const QPoly& a) {
  QPoly out(a.max_z_, a.max_q_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = c * a.c_[i];
  return out;
}

QPoly inverse(const QPoly& a) {
  if (a.at(0, 0) == 0) throw ZeroConstantTerm("inverse: q-polynomial has zero constant term");
  QPoly s(a.max_z_, a.max_q_);
  const Rational inv0 = 1 / a.at(0, 0);
  // Solve a * s = 1 one coefficient at a time, in (n, m) order.
  for (std::size_t n = 0; n <= a.max_z_; ++n) {
    for (std::size_t m = 0; m <= a.max_q_; ++m) {
      if (n == 0 && m == 0) {
        s.at(0, 0) = inv0;
        continue;
      }
      Rational acc;
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= m; ++j) {
          if ((i == 0 && j == 0) || a.at(i, j) == 0) continue;
          acc += a.at(i, j) * s.at(n - i, m - j);
        }
      }
      s.at(n, m) = -inv0 * acc;
    }
  }
  return s;
}

// ------------------------------------------------------- umbral evaluation

QPoly umbral(const NCSeries& r) {
  QPoly out(r.context().max_len, r.context().max_weight);
  for (const auto& [w, c] : r.terms()) out.at(w.length(), w.weight()) += c;
  return out;
}

QSeries umbral_q(const NCSeries& r) {
  std::vector<Rational> coeffs(r.context().max_weight + 1);
  for (const auto& [w, c] : r.terms()) coeffs[w.weight()] += c;
  return QSeries(r.context().max_weight, std::move(coeffs));
}

QSeries rr_product(unsigned a, unsigned b, std::size_t max_q) {
  if (a < 1 || a > 5 || b < 1 || b > 5) throw std::invalid_argument("rr_product: residues must lie in 1..5");
  QSeries out = QSeries::one(max_q);
  for (unsigned residue : {a, b}) {
    for (std::size_t e = residue; e <= max_q; e += 5) out = out * (QSeries::one(max_q) - QSeries::monomial(1, e, max_q));
  }
  return out;
}

QPoly rr_sum_side(RRVariant variant, std::size_t max_z, std::size_t max_q) {
  QPoly out(max_z, max_q);
  // 1 / ((1 - q)...(1 - q^n)), accumulated as n grows.
  QSeries denominator_inverse = QSeries::one(max_q);
  for (std::size_t n = 0; n <= max_z; ++n) {
    if (n > 0) denominator_inverse = denominator_inverse * inverse(QSeries::one(max_q) - QSeries::monomial(1, n, max_q));
    const std::size_t exponent = variant == RRVariant::kFirst ? n * n : n * (n + 1);
    if (exponent > max_q) break;
    for (std::size_t m = 0; m + exponent <= max_q; ++m) {
      if (denominator_inverse[m] != 0) out = out + QPoly::monomial(denominator_inverse[m], n, m + exponent, max_z, max_q);
    }
  }
  return out;
}

std::map<std::uint64_t, Integer> path_length_coeffs(std::size_t n, PathLengthSource source) {
  if (n == 0) throw std::invalid_argument("path_length_coeffs: n must be positive");
  std::map<std::uint64_t, Integer> out;
  const std::uint64_t max_pl = n * (n - 1) / 2;
  if (source == PathLengthSource::kOracle) {
    for (const PlaneTree& t : PlaneTree::enumerate(n)) out[t.path_length()] += 1;
    return out;
  }
  const QSeries row = umbral(sp_trees_recursive({n, max_pl})).row(n);
  for (std::size_t m = 0; m <= max_pl; ++m) {
    if (row[m] != 0) out[m] = row[m].get_num();
  }
  return out;
}

// --------------------------------------------------------------- rendering

namespace {

// "q^m" with a coefficient; sign handled by the caller.
std::string q_term(const Rational& magnitude, std::size_t m) {
  std::string power = m == 0 ? "" : (m == 1 ? "q" : "q^" + std::to_string(m));
  if (m == 0) return to_string(magnitude);
  if (magnitude == 1) return power;
  return to_string(magnitude) + " " + power;
}

std::string join_signed(const std::vector<std::pair<Rational, std::string>>& parts) {
  // parts: (coefficient sign carrier, rendered magnitude term)
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool negative = parts[i].first < 0;
    if (i == 0) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += parts[i].second;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_text(const QSeries& s) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (std::size_t m = 0; m <= s.max_q(); ++m) {
    if (s[m] != 0) parts.emplace_back(s[m], q_term(abs(s[m]), m));
  }
  return join_signed(parts);
}

std::string to_text(const QPoly& p) {
  std::vector<std::pair<Rational, std::string>> parts;
  for (std::size_t n = 0; n <= p.max_z(); ++n) {
    const QSeries row = p.row(n);
    std::vector<std::size_t> support;
    for (std::size_t m = 0; m <= row.max_q(); ++m) {
      if (row[m] != 0) support.push_back(m);
    }
    if (support.empty()) continue;
    const std::string zpow = n == 0 ? "" : (n == 1 ? "z" : "z^" + std::to_string(n));
    if (support.size() == 1) {
      const std::size_t m = support.front();
      const Rational mag = abs(row[m]);
      std::string term;
      if (n == 0) {
        term = q_term(mag, m);
      } else if (m == 0) {
        term = mag == 1 ? zpow : to_string(mag) + " " + zpow;
      } else {
        term = q_term(mag, m) + " " + zpow;
      }
      parts.emplace_back(row[m], term);
    } else {
      std::string inner = to_text(row);
      parts.emplace_back(Rational(1), n == 0 ? inner : "(" + inner + ") " + zpow);
    }
  }
  return join_signed(parts);
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t m = 0; m <= s.max_q(); ++m) {
    if (s[m] != 0) terms.push_back({{"q", m}, {"coeff", to_string(s[m])}});
  }
  return {{"max_q", s.max_q()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t n = 0; n <= p.max_z(); ++n) {
    for (std::size_t m = 0; m <= p.max_q(); ++m) {
      const Rational c = p.coeff(n, m);
      if (c != 0) terms.push_back({{"z", n}, {"q", m}, {"coeff", to_string(c)}});
    }
  }
  return {{"max_z", p.max_z()}, {"max_q", p.max_q()}, {"terms", std::move(terms)}};
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  const auto max_z = j.at("max_z").get<std::size_t>();
  const auto max_q = j.at("max_q").get<std::size_t>();
  QPoly out(max_z, max_q);
  for (const auto& t : j.at("terms")) {
    out = out + QPoly::monomial(parse_rational(t.at("coeff").get<std::string>()), t.at("z").get<std::size_t>(),
                                t.at("q").get<std::size_t>(), max_z, max_q);
  }
  return out;
}

std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
  const std::size_t top = std::min(a.max_q(), b.max_q());
  for (std::size_t m = 0; m <= top; ++m) {
    if (a[m] != b[m]) return m;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const QPoly& a, const QPoly& b) {
  const std::size_t top_z = std::min(a.max_z(), b.max_z());
  const std::size_t top_q = std::min(a.max_q(), b.max_q());
  for (std::size_t n = 0; n <= top_z; ++n) {
    for (std::size_t m = 0; m <= top_q; ++m) {
      if (a.coeff(n, m) != b.coeff(n, m)) return std::pair{n, m};
    }
  }
  return std::nullopt;
}

}  // namespace ncs
