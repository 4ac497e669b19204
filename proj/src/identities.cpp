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

#include "ncseries/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "ncseries/compositions.hpp"
#include "ncseries/errors.hpp"
#include "ncseries/involutions.hpp"
#include "ncseries/languages.hpp"
#include "ncseries/plethysm.hpp"

namespace ncs {

namespace {

// Records sub-equalities; keeps the first failure.
class Checker {
 public:
  explicit Checker(IdentityReport& report) : report_(report) {}

  void nc(std::string_view name, const NCSeries& lhs, const NCSeries& rhs) {
    ++report_.checks;
    if (auto w = first_difference(lhs, rhs)) {
      fail(name, to_string(*w), to_string(lhs.coeff(*w)), to_string(rhs.coeff(*w)));
    }
  }

  void q(std::string_view name, const QSeries& lhs, const QSeries& rhs) {
    ++report_.checks;
    if (auto m = first_difference(lhs, rhs)) {
      fail(name, "q^" + std::to_string(*m), to_string(lhs[*m]), to_string(rhs[*m]));
    }
  }

  void poly(std::string_view name, const QPoly& lhs, const QPoly& rhs) {
    ++report_.checks;
    if (auto nm = first_difference(lhs, rhs)) {
      const auto [n, m] = *nm;
      fail(name, "z^" + std::to_string(n) + " q^" + std::to_string(m), to_string(lhs.coeff(n, m)),
           to_string(rhs.coeff(n, m)));
    }
  }

  void value(std::string_view name, std::string location, const std::string& lhs, const std::string& rhs) {
    ++report_.checks;
    if (lhs != rhs) fail(name, std::move(location), lhs, rhs);
  }

 private:
  void fail(std::string_view name, std::string location, std::string lhs, std::string rhs) {
    report_.passed = false;
    if (!report_.discrepancy) {
      report_.discrepancy = Discrepancy{std::string(name), std::move(location), std::move(lhs), std::move(rhs)};
    }
  }

  IdentityReport& report_;
};

using Rows = std::vector<QSeries>;

Rows unit_rows(std::size_t max_z, std::size_t max_q) {
  Rows rows(max_z + 1, QSeries(max_q));
  rows[0] = QSeries::one(max_q);
  return rows;
}

// E / (1 + z x): F_0 = E_0, F_n = E_n - x F_{n-1}.
Rows divide_one_plus_zx(const Rows& e, const QSeries& x) {
  Rows f = e;
  for (std::size_t n = 1; n < f.size(); ++n) f[n] = e[n] - x * f[n - 1];
  return f;
}

// total += z^shift * mult * f.
void accumulate(Rows& total, const Rows& f, std::size_t shift, const QSeries& mult) {
  for (std::size_t r = 0; r + shift < total.size(); ++r) total[r + shift] = total[r + shift] + mult * f[r];
}

QSeries q_power(std::size_t m, std::size_t max_q) { return QSeries::monomial(1, m, max_q); }

QSeries q_pow_series(const QSeries& base, std::size_t e) {
  QSeries out = QSeries::one(base.max_q());
  for (std::size_t i = 0; i < e; ++i) out = out * base;
  return out;
}

// prod_{n=hi}^{lo} f(n), leftmost factor n = hi; empty when hi < lo.
NCSeries descending_product(Letter hi, Letter lo, TruncationContext ctx, const std::function<NCSeries(Letter)>& f) {
  NCSeries out = NCSeries::one(ctx);
  for (Letter n = hi; n >= lo; --n) {
    out = out * f(n);
    if (n == 0) break;
  }
  return out;
}

// prod_{n=lo}^{hi} f(n), leftmost factor n = lo.
NCSeries ascending_product(Letter lo, Letter hi, TruncationContext ctx, const std::function<NCSeries(Letter)>& f) {
  NCSeries out = NCSeries::one(ctx);
  for (Letter n = lo; n <= hi; ++n) out = out * f(n);
  return out;
}

NCSeries c1(TruncationContext ctx) { return compositions(1, ctx); }
NCSeries p2(TruncationContext ctx) { return partitions_m_distinct(2, ctx); }

NCSeries word_series(std::initializer_list<Letter> letters, TruncationContext ctx, const Rational& c = 1) {
  return NCSeries::word(Word(std::vector<Letter>(letters)), ctx, c);
}

QPoly z_times(const QPoly& p) {
  return QPoly::monomial(1, 1, 0, p.max_z(), p.max_q()) * p;
}

// A random series with zero constant term: a handful of words with small
// integer coefficients. The X0 coefficient is forced nonzero so the result is
// plethystically invertible.
NCSeries random_operand(std::mt19937_64& rng, TruncationContext ctx, std::size_t terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(ctx.max_len, 1));
  NCSeries out = NCSeries::letter(0, ctx);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t l = len(rng);
    std::vector<Letter> letters;
    std::uint64_t budget = ctx.max_weight;
    for (std::size_t i = 0; i < l; ++i) {
      std::uniform_int_distribution<Letter> pick(0, static_cast<Letter>(std::min<std::uint64_t>(budget, 3)));
      letters.push_back(pick(rng));
      budget -= letters.back();
    }
    out = out + NCSeries::word(Word(letters), ctx, coeff(rng));
  }
  if (out.coeff(Word{0}) == 0) out = out + NCSeries::letter(0, ctx);
  return out;
}

// ------------------------------------------------------------ checkers

void set_nc_orders(IdentityReport& r, TruncationContext ctx) {
  r.orders["max_len"] = ctx.max_len;
  r.orders["max_weight"] = ctx.max_weight;
}

void check_path_length(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  c.poly("umbral(A) = tree oracle", umbral(sp_trees_recursive(ctx)), umbral(sp_trees_oracle(ctx)));
}

void check_continued_fraction(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries rec = sp_trees_recursive(ctx);
  c.nc("convergent of depth W = recursive", sp_trees_cf(ctx.max_weight, ctx), rec);
  c.nc("recursive = tree oracle", rec, sp_trees_oracle(ctx));
}

void check_tree_words(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  // Tails: rise-one compositions starting with 1, plus the empty tail.
  const NCSeries comp = c1(ctx);
  NCSeries::Terms tails;
  for (const auto& [w, k] : comp.terms()) {
    if (w.empty() || w.front() == 1) tails.emplace(w, k);
  }
  c.nc("A = X0 (1 + tails)", sp_trees_recursive(ctx), NCSeries::letter(0, ctx) * NCSeries(ctx, tails));
}

void check_quotient(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries p2g = sign_by_length(p2(ctx));
  c.nc("A = X0 sigma(P2g) P2g^-1", sp_trees_recursive(ctx), NCSeries::letter(0, ctx) * shift(p2g) * inverse(p2g));
}

void check_quotient_dual(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries comp = c1(ctx);
  c.nc("A = X0 (sigma C1)^-1 C1", sp_trees_recursive(ctx), NCSeries::letter(0, ctx) * inverse(shift(comp)) * comp);
}

void check_quotient_q(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const QPoly p2g = umbral(sign_by_length(p2(ctx)));
  c.poly("A(z,q) P2g(z,q) = z P2g(zq,q)", umbral(sp_trees_recursive(ctx)) * p2g, z_times(p2g.subst_z_zq()));
}

void check_quotient_dual_q(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const QPoly comp = umbral(c1(ctx));
  c.poly("A(z,q) C1(zq,q) = z C1(z,q)", umbral(sp_trees_recursive(ctx)) * comp.subst_z_zq(), z_times(comp));
}

void check_shift_q(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  for (const NCSeries& s : {sp_trees_recursive(ctx), c1(ctx), p2(ctx)}) {
    c.poly("(sigma S)(z,q) = S(zq,q)", umbral(shift(s)), umbral(s).subst_z_zq());
  }
}

void check_graded_relation(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries n_dual = module_language(k_dual(tail_module_spec()), ctx);
  const NCSeries one = NCSeries::one(ctx);
  c.nc("N^! = sigma P2 - 1", n_dual, shift(p2(ctx)) - one);
  c.nc("sigma(P2g) = 1 - N^g", shift(sign_by_length(p2(ctx))), one - module_graded(n_dual));
  c.nc("N = tail module", module_language(tail_module_spec(), ctx), compositions(1, ctx, 2) - one);
}

void check_kdual_c1(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries comp = c1(ctx);
  const NCSeries parts = p2(ctx);
  c.nc("(C1)^! = P2", linked_language(k_dual(composition_spec(1)), ctx), parts);
  c.nc("(P2)^! = C1", linked_language(k_dual(partition_spec(2)), ctx), comp);
  c.nc("C1g P2 = 1", sign_by_length(comp) * parts, NCSeries::one(ctx));
  c.nc("P2g C1 = 1", sign_by_length(parts) * comp, NCSeries::one(ctx));
  c.nc("(sigma C1)g sigma P2 = 1", sign_by_length(shift(comp)) * shift(parts), NCSeries::one(ctx));
}

void check_partition_duals(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const auto one_plus = [&](Letter n) { return NCSeries::one(ctx) + NCSeries::letter(n, ctx); };
  const NCSeries increasing = partitions_m_distinct(0, ctx);
  const NCSeries decreasing = linked_language(decreasing_partition_spec(), ctx);
  const Letter w = static_cast<Letter>(ctx.max_weight);
  c.nc("P^! = prod_{n=W..1}(1 + X_n)", inverse(sign_by_length(increasing)), descending_product(w, 1, ctx, one_plus));
  c.nc("P^! = linked dual", inverse(sign_by_length(increasing)), linked_language(k_dual(partition_spec(0)), ctx));
  c.nc("(decreasing)^! = prod_{n=1..W}(1 + X_n)", inverse(sign_by_length(decreasing)),
       ascending_product(1, w, ctx, one_plus));
  c.nc("P = prod_{n=1..W} 1/(1 - X_n)", increasing,
       ascending_product(1, w, ctx, [&](Letter n) { return geometric(NCSeries::letter(n, ctx)); }));
}

void check_rr_sum(Checker& c, const Bounds& b, IdentityReport& r, bool second) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries lang = second ? shift(p2(ctx)) : p2(ctx);
  c.poly("umbral = closed-form sum", umbral(lang),
         rr_sum_side(second ? RRVariant::kSecond : RRVariant::kFirst, ctx.max_len, ctx.max_weight));
}

void check_minus_one(Checker& c, const Bounds& b, IdentityReport& r, bool second) {
  // Length is bounded by weight for these languages, so (W, W) is complete.
  const TruncationContext ctx{static_cast<std::size_t>(b.max_weight), b.max_weight};
  set_nc_orders(r, ctx);
  const NCSeries comp = second ? shift(c1(ctx)) : c1(ctx);
  const QSeries product = second ? rr_product(2, 3, ctx.max_weight) : rr_product(1, 4, ctx.max_weight);
  c.q("C(-1,q) = product", umbral(comp).subst_z(-1), product);
  c.q("Cg(1,q) = product", umbral_q(sign_by_length(comp)), product);
  const QPoly sum = rr_sum_side(second ? RRVariant::kSecond : RRVariant::kFirst, ctx.max_len, ctx.max_weight);
  c.q("product * P2(1,q) = 1", product * sum.subst_z(1), QSeries::one(ctx.max_weight));
}

void check_rr(Checker& c, const Bounds& b, IdentityReport& r, bool second) {
  r.orders["max_q"] = b.max_q;
  const QSeries lhs = signed_composition_series(b.max_q, second ? 2 : 1);
  c.q("signed compositions = product", lhs, second ? rr_product(2, 3, b.max_q) : rr_product(1, 4, b.max_q));
}

void check_zero_weight(Checker& c, const Bounds& b, IdentityReport& r) {
  r.orders["max_n"] = b.max_q;
  for (bool shifted : {false, true}) {
    for (unsigned n = shifted ? 2 : 1; n <= b.max_q; ++n) {
      const SignedSumReport s = hatted_signed_sum(n, shifted);
      c.value(shifted ? "shifted hatted total" : "hatted total", "n=" + std::to_string(n), std::to_string(s.total),
              "0");
    }
  }
}

void check_trees_q(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const QPoly a = umbral(sp_trees_recursive(ctx));
  const QPoly a_zq = a.subst_z_zq();
  const QPoly one = QPoly::one(a.max_z(), a.max_q());
  c.poly("A = z + A(z,q) A(zq,q)", a, z_times(one) + a * a_zq);
  c.poly("A (1 - A(zq,q)) = z", a * (one - a_zq), z_times(one));
}

void check_branchless_q(Checker& c, const Bounds& b, IdentityReport& r) {
  r.orders["max_z"] = b.max_z;
  r.orders["max_q"] = b.max_q;
  const QPoly one = QPoly::one(b.max_z, b.max_q);
  c.poly("sum = 1 + z", branchless_sum(b.max_z, b.max_q), one + z_times(one));
  // Specializations: terms with C(n,2) > max_q cannot contribute.
  const std::size_t n_cap = b.max_q + 2;
  const QPoly full = branchless_sum(n_cap, b.max_q);
  c.q("z = 1: sum = 2", full.subst_z(1), QSeries::monomial(2, 0, b.max_q));
  c.q("z = -1: sum = 0", full.subst_z(-1), QSeries(b.max_q));
}

void check_rogers_odd(Checker& c, const Bounds& b, IdentityReport& r) {
  r.orders["max_z"] = b.max_z;
  r.orders["max_q"] = b.max_q;
  c.poly("sum = 1", rogers_odd_sum(b.max_z, b.max_q), QPoly::one(b.max_z, b.max_q));
  // z = -1; terms with n^2 > max_q cannot contribute.
  std::size_t n_cap = 0;
  while ((n_cap + 1) * (n_cap + 1) <= b.max_q) ++n_cap;
  c.q("z = -1: sum = 1", rogers_odd_sum(n_cap, b.max_q).subst_z(-1), QSeries::one(b.max_q));
}

void check_double_sum_q(Checker& c, const Bounds& b, IdentityReport& r, bool rescaled) {
  r.orders["max_z"] = b.max_z;
  r.orders["max_q"] = b.max_q;
  const QPoly one = QPoly::one(b.max_z, b.max_q);
  if (!rescaled) {
    c.poly("double sum = z", double_sum(b.max_z, b.max_q, true), z_times(one));
    return;
  }
  Rows geometric_q(b.max_z + 1, QSeries(b.max_q));
  geometric_q[1] = inverse(QSeries::one(b.max_q) - q_power(1, b.max_q));
  c.poly("double sum = z/(1-q)", double_sum(b.max_z, b.max_q, false), QPoly::from_rows(geometric_q, b.max_q));
}

void check_plethystic_inverses(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries one = NCSeries::one(ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries x1 = NCSeries::letter(1, ctx);
  const NCSeries x2 = NCSeries::letter(2, ctx);
  const NCSeries a = sp_trees_recursive(ctx);
  const NCSeries ell_plus = named_series("ell-plus", ctx);

  c.nc("A = A_{1/(1-X1)}", enriched_trees(geometric(x1), ctx), a);
  c.nc("A^<-1> = X0 - X0X1", plethystic_inverse(PlethysmOperand(a)), x0 - x0 * x1);
  c.nc("A = X0 + (X0X1) o A", a, x0 + plethysm(x0 * x1, PlethysmOperand(a)));
  c.nc("A (1 - sigma A) = X0", a * (one - shift(a)), x0);
  c.nc("L+^<-1> = X0/(1+X1)", plethystic_inverse(PlethysmOperand(ell_plus)), x0 * inverse(one + x1));
  c.nc("L+even^<-1> = X0/(1+X2)", plethystic_inverse(PlethysmOperand(named_series("ell-plus-even", ctx))),
       x0 * inverse(one + x2));
  c.nc("Sigma0^<-1> = X0 - X1", plethystic_inverse(PlethysmOperand(named_series("sigma0", ctx))), x0 - x1);
  c.nc("(Sigma0 o L+)^<-1> = (X0-X1)/(1+X1-X2)",
       plethystic_inverse(PlethysmOperand(named_series("a0-ell-plus", ctx))), (x0 - x1) * inverse(one + x1 - x2));
  c.nc("A_{sigma L}^<-1> = X0 (sigma L)^-1", plethystic_inverse(PlethysmOperand(named_series("a-sigma-ell", ctx))),
       x0 * inverse(shift(named_series("ell", ctx))));
  c.nc("A_M^<-1> = X0 - X0 sigma L+", plethystic_inverse(PlethysmOperand(named_series("a-m", ctx))),
       x0 - x0 * shift(ell_plus));
  c.nc("L(o) = sigma L(e)", named_series("ell-plus-odd", ctx), shift(named_series("ell-plus-even", ctx)));
}

void check_enriched_inverses(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries one = NCSeries::one(ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries ell_plus = named_series("ell-plus", ctx);
  const std::array<NCSeries, 5> enrichments = {
      geometric(NCSeries::letter(1, ctx)), one + NCSeries::letter(1, ctx), one + NCSeries::letter(2, ctx),
      shift(one + ell_plus), inverse(one - shift(ell_plus)),
  };
  for (const NCSeries& m : enrichments) {
    const NCSeries tree = enriched_trees(m, ctx);
    const NCSeries candidate = x0 * inverse(m);
    c.nc("A_M o X0 M^-1 = X0", plethysm(tree, PlethysmOperand(candidate)), x0);
    c.nc("X0 M^-1 o A_M = X0", plethysm(candidate, PlethysmOperand(tree)), x0);
    c.nc("A_M^<-1> = X0 M^-1", plethystic_inverse(PlethysmOperand(tree)), candidate);
  }
}

void check_plethysm_laws(Checker& c, const Bounds& b, IdentityReport& r) {
  const TruncationContext ctx = meet(b.context(), {4, 10});
  set_nc_orders(r, ctx);
  r.orders["seed"] = b.seed;
  std::mt19937_64 rng(b.seed);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  for (int trial = 0; trial < 10; ++trial) {
    const NCSeries t = random_operand(rng, ctx, 4);
    const NCSeries u = random_operand(rng, ctx, 4);
    const PlethysmOperand rop(random_operand(rng, ctx, 4));
    const PlethysmOperand sop(random_operand(rng, ctx, 4));
    c.nc("(T o R) o S = T o (R o S)", plethysm(plethysm(t, rop), sop),
         plethysm(t, PlethysmOperand(plethysm(rop.series(), sop))));
    c.nc("(T + U) o R = T o R + U o R", plethysm(t + u, rop), plethysm(t, rop) + plethysm(u, rop));
    c.nc("(T U) o R = (T o R)(U o R)", plethysm(t * u, rop), plethysm(t, rop) * plethysm(u, rop));
    c.nc("T o X0 = T", plethysm(t, PlethysmOperand(x0)), t);
    c.nc("X0 o R = R", plethysm(x0, rop), rop.series());
    const NCSeries inv = plethystic_inverse(rop);
    c.nc("R o R^<-1> = X0", plethysm(rop.series(), PlethysmOperand(inv)), x0);
    c.nc("R^<-1> o R = X0", plethysm(inv, rop), x0);
    c.nc("(R^<-1>)^<-1> = R", plethystic_inverse(PlethysmOperand(inv)), rop.series());
  }
}

void check_local_minima(Checker& c, const Bounds& b, IdentityReport& r, bool second) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const Letter from = second ? 2 : 1;
  const NCSeries a = sp_trees_recursive(ctx);
  const NCSeries lhs = second ? shift(c1(ctx)) : c1(ctx);
  const NCSeries partitions =
      descending_product(static_cast<Letter>(ctx.max_weight), from, ctx, [&](Letter n) { return geometric(NCSeries::letter(n, ctx)); });
  c.nc("C = (prod 1/(1-X_n)) o A", lhs, plethysm(partitions, PlethysmOperand(a)));
  c.nc("C = prod 1/(1 - sigma^n A)", lhs,
       descending_product(static_cast<Letter>(ctx.max_weight), from, ctx, [&](Letter n) { return geometric(shift(a, n)); }));
}

QPoly z_shift_power(const QPoly& p, std::size_t k) {
  QPoly out = p;
  for (std::size_t i = 0; i < k; ++i) out = out.subst_z_zq();
  return out;
}

void check_local_minima_q(Checker& c, const Bounds& b, IdentityReport& r) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const QPoly a = umbral(sp_trees_recursive(ctx));
  const QPoly one = QPoly::one(a.max_z(), a.max_q());
  QPoly product = one;
  for (std::size_t n = 1; n <= ctx.max_weight; ++n) product = product * inverse(one - z_shift_power(a, n));
  c.poly("C1(z,q) = prod 1/(1 - A(zq^n,q))", umbral(c1(ctx)), product);
  // q-substitution: (sum_n X0..X_{n-1}) o A evaluates to sum_n prod_i A(zq^i,q).
  QPoly substituted(a.max_z(), a.max_q());
  QPoly term = one;
  for (std::size_t n = 1; n <= ctx.max_len; ++n) {
    term = term * z_shift_power(a, n - 1);
    substituted = substituted + term;
  }
  c.poly("(L+ o A)(z,q) = q-substitution", umbral(plethysm(named_series("ell-plus", ctx), PlethysmOperand(
                                                                 sp_trees_recursive(ctx)))),
         substituted);
}

void check_inverse_app(Checker& c, const Bounds& b, IdentityReport& r, bool second) {
  const auto ctx = b.context();
  set_nc_orders(r, ctx);
  const NCSeries x0 = NCSeries::letter(0, ctx);
  const NCSeries x0x1 = word_series({0, 1}, ctx);
  const Letter w = static_cast<Letter>(ctx.max_weight);
  if (!second) {
    c.nc("C1 o (X0 - X0X1) = prod_{n=W..1} 1/(1-X_n)", plethysm(c1(ctx), PlethysmOperand(x0 - x0x1)),
         descending_product(w, 1, ctx, [&](Letter n) { return geometric(NCSeries::letter(n, ctx)); }));
    return;
  }
  const NCSeries graded_a = sign_by_length(sp_trees_recursive(ctx));
  c.nc("A(-X)^<-1> = X0X1 - X0", plethystic_inverse(PlethysmOperand(graded_a)), x0x1 - x0);
  c.nc("C1g = (prod 1/(1-X_n)) o A(-X)", sign_by_length(c1(ctx)),
       plethysm(descending_product(w, 1, ctx, [&](Letter n) { return geometric(NCSeries::letter(n, ctx)); }),
                PlethysmOperand(graded_a)));
  c.nc("P2 o (X0X1 - X0) = prod_{n=1..W}(1 - X_n)", plethysm(p2(ctx), PlethysmOperand(x0x1 - x0)),
       ascending_product(1, w, ctx, [&](Letter n) { return NCSeries::one(ctx) - NCSeries::letter(n, ctx); }));
}

void check_closing(Checker& c, const Bounds& b, IdentityReport& r, bool second) {
  r.orders["max_q"] = b.max_q;
  if (!second) {
    c.q("compositions side = prod 1/(1-q^n)", closing_composition_side(b.max_q), inverse(euler_product(b.max_q)));
  } else {
    c.q("partitions side = prod (1-q^n)", closing_partition_side(b.max_q), euler_product(b.max_q));
  }
}

void check_kduality_random(Checker& c, const Bounds& b, IdentityReport& r) {
  const TruncationContext ctx = meet(b.context(), {4, 10});
  set_nc_orders(r, ctx);
  r.orders["seed"] = b.seed;
  r.orders["specs"] = 20;
  std::mt19937_64 rng(b.seed);
  for (int i = 0; i < 20; ++i) {
    const LinkSpec spec = random_link_spec(rng);
    const NCSeries dual = linked_language(k_dual(spec), ctx);
    c.nc("Lg L^! = 1", sign_by_length(linked_language(spec, ctx)) * dual, NCSeries::one(ctx));
    const ModuleSpec mspec = random_module_spec(rng);
    c.nc("Ng L^! = N^!", module_graded(module_language(mspec, ctx)) * linked_language(k_dual(mspec.body), ctx),
         module_language(k_dual(mspec), ctx));
  }
}

struct Entry {
  IdentityInfo info;
  std::function<void(Checker&, const Bounds&, IdentityReport&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"path-length", "umbral(A) rows agree with plane trees counted by path length"}, check_path_length},
      {{"continued-fraction", "depth-W convergent = recursive tree language = tree oracle"}, check_continued_fraction},
      {{"tree-words", "A = X0 (1 + rise-one compositions starting with 1)"}, check_tree_words},
      {{"quotient", "A = X0 sigma(P2g) (P2g)^-1"}, check_quotient},
      {{"quotient-dual", "A = X0 (sigma C1)^-1 C1"}, check_quotient_dual},
      {{"quotient-q", "A(z,q) P2g(z,q) = z P2g(zq,q)"}, check_quotient_q},
      {{"quotient-dual-q", "A(z,q) C1(zq,q) = z C1(z,q)"}, check_quotient_dual_q},
      {{"shift-q", "(sigma S)(z,q) = S(zq,q)"}, check_shift_q},
      {{"graded-relation", "N^! = sigma P2 - 1 and sigma(P2g) = 1 - N^g"}, check_graded_relation},
      {{"kdual-c1", "P2 is the K-dual of C1"}, check_kdual_c1},
      {{"partition-duals", "duals of the increasing and decreasing partition languages"}, check_partition_duals},
      {{"rr-sum-first", "umbral(P2) = sum z^n q^{n^2}/(q)_n"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_rr_sum(c, b, r, false); }},
      {{"rr-sum-second", "umbral(sigma P2) = sum z^n q^{n(n+1)}/(q)_n"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_rr_sum(c, b, r, true); }},
      {{"minus-one-first", "C1(-1,q) = prod (1-q^{5k+1})(1-q^{5k+4})"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_minus_one(c, b, r, false); }},
      {{"minus-one-second", "(sigma C1)(-1,q) = prod (1-q^{5k+2})(1-q^{5k+3})"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_minus_one(c, b, r, true); }},
      {{"rr-first", "signed rise-one compositions = prod (1-q^{5k+1})(1-q^{5k+4})"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_rr(c, b, r, false); }},
      {{"rr-second", "signed rise-one compositions, parts >= 2 = prod (1-q^{5k+2})(1-q^{5k+3})"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_rr(c, b, r, true); }},
      {{"zero-weight", "hatted signed sums vanish for every n <= max_q"}, check_zero_weight},
      {{"trees-q", "A(z,q) = z + A(z,q) A(zq,q)"}, check_trees_q},
      {{"branchless-q", "sum q^{C(n,2)} z^n / prod_{k=1}^n (1+zq^k) = 1 + z"}, check_branchless_q},
      {{"rogers-odd", "sum q^{n^2} z^n / prod_{j=0}^n (1+zq^{2j+1}) = 1"}, check_rogers_odd},
      {{"double-sum-q", "double sum with (1-q)^n = z"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_double_sum_q(c, b, r, false); }},
      {{"double-sum-rescaled-q", "double sum after z(1-q) -> z = z/(1-q)"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_double_sum_q(c, b, r, true); }},
      {{"plethystic-inverses", "inverses of A, L+, L+even, Sigma0, Sigma0 o L+, A_{sigma L}, A_M"},
       check_plethystic_inverses},
      {{"enriched-inverses", "A_M^<-1> = X0 M^-1 for every named enrichment"}, check_enriched_inverses},
      {{"plethysm-laws", "associativity, linearity, multiplicativity, identity, double inverse"},
       check_plethysm_laws},
      {{"local-minima-first", "C1 = (prod_{n=W..1} 1/(1-X_n)) o A"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_local_minima(c, b, r, false); }},
      {{"local-minima-second", "sigma C1 = (prod_{n=W..2} 1/(1-X_n)) o A"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_local_minima(c, b, r, true); }},
      {{"local-minima-q", "C1(z,q) = prod 1/(1 - A(zq^n,q)) and q-substitution"}, check_local_minima_q},
      {{"inverse-app-first", "C1 o (X0 - X0X1) = prod_{n=W..1} 1/(1-X_n)"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_inverse_app(c, b, r, false); }},
      {{"inverse-app-second", "P2 o (X0X1 - X0) = prod_{n=1..W} (1-X_n)"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_inverse_app(c, b, r, true); }},
      {{"closing-first", "sum_kappa q^|kappa| prod (1-q^{kappa_i+1}) = prod 1/(1-q^n)"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_closing(c, b, r, false); }},
      {{"closing-second", "sum_lambda q^|lambda| prod (q^{lambda_i+1}-1) = prod (1-q^n)"},
       [](Checker& c, const Bounds& b, IdentityReport& r) { check_closing(c, b, r, true); }},
      {{"kduality-random", "Lg L^! = 1 and Ng L^! = N^! for 20 seeded random link specs"}, check_kduality_random},
  };
  return table;
}

}  // namespace

std::span<const IdentityInfo> identity_registry() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

IdentityReport check_identity(std::string_view id, const Bounds& bounds) {
  for (const Entry& e : entries()) {
    if (e.info.id != id) continue;
    IdentityReport report;
    report.id = std::string(id);
    Checker checker(report);
    e.run(checker, bounds, report);
    return report;
  }
  throw UnknownIdentity(std::string(id));
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json j = {{"id", report.id},
                      {"passed", report.passed},
                      {"orders", report.orders},
                      {"checks", report.checks}};
  if (report.discrepancy) {
    const Discrepancy& d = *report.discrepancy;
    j["discrepancy"] = {{"check", d.check}, {"location", d.location}, {"lhs", d.lhs}, {"rhs", d.rhs}};
  }
  return j;
}

std::string to_text(const IdentityReport& report) {
  std::ostringstream out;
  out << (report.passed ? "PASS " : "FAIL ") << report.id << " (";
  bool first = true;
  for (const auto& [key, value] : report.orders) {
    out << (first ? "" : ", ") << key << '=' << value;
    first = false;
  }
  out << ')';
  if (report.discrepancy) {
    const Discrepancy& d = *report.discrepancy;
    out << ": " << d.check << " differs at " << d.location << ": lhs " << d.lhs << ", rhs " << d.rhs;
  }
  return out.str();
}

// ------------------------------------------------------ q-side builders

QSeries signed_composition_series(std::size_t max_q, unsigned min_part) {
  const auto counts = rise_one_counts(static_cast<unsigned>(max_q), min_part);
  std::vector<Rational> c(max_q + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= max_q; ++n) {
    Integer acc;
    for (std::size_t k = 1; k <= n; ++k) acc += (k % 2 ? -1 : 1) * counts[n][k];
    c[n] = Rational(acc);
  }
  return QSeries(max_q, std::move(c));
}

QSeries closing_composition_side(std::size_t max_q) {
  // tail[w][p]: compositions of weight w ending in part p, each weighted by
  // prod_i (1 - q^{kappa_i + 1}), without the q^w factor.
  std::vector<std::vector<QSeries>> tail(max_q + 1, std::vector<QSeries>(max_q + 1, QSeries(max_q)));
  QSeries total = QSeries::one(max_q);
  for (std::size_t w = 1; w <= max_q; ++w) {
    for (std::size_t p = 1; p <= w; ++p) {
      QSeries prev = w == p ? QSeries::one(max_q) : QSeries(max_q);
      for (std::size_t last = std::max<std::size_t>(p, 2) - 1; last <= w - p; ++last) prev = prev + tail[w - p][last];
      tail[w][p] = (QSeries::one(max_q) - q_power(p + 1, max_q)) * prev;
      total = total + q_power(w, max_q) * tail[w][p];
    }
  }
  return total;
}

QSeries closing_partition_side(std::size_t max_q) {
  std::vector<std::vector<QSeries>> tail(max_q + 1, std::vector<QSeries>(max_q + 1, QSeries(max_q)));
  QSeries total = QSeries::one(max_q);
  for (std::size_t w = 1; w <= max_q; ++w) {
    for (std::size_t p = 1; p <= w; ++p) {
      QSeries prev = w == p ? QSeries::one(max_q) : QSeries(max_q);
      for (std::size_t last = 1; last + 2 <= p && last <= w - p; ++last) prev = prev + tail[w - p][last];
      tail[w][p] = (q_power(p + 1, max_q) - QSeries::one(max_q)) * prev;
      total = total + q_power(w, max_q) * tail[w][p];
    }
  }
  return total;
}

QSeries euler_product(std::size_t max_q) {
  QSeries out = QSeries::one(max_q);
  for (std::size_t n = 1; n <= max_q; ++n) out = out * (QSeries::one(max_q) - q_power(n, max_q));
  return out;
}

QPoly branchless_sum(std::size_t max_z, std::size_t max_q) {
  Rows total(max_z + 1, QSeries(max_q));
  Rows f = unit_rows(max_z, max_q);
  for (std::size_t n = 0; n <= max_z && n * (n - 1) / 2 <= max_q; ++n) {
    if (n > 0) f = divide_one_plus_zx(f, q_power(n, max_q));
    accumulate(total, f, n, q_power(n * (n - 1) / 2, max_q));
  }
  return QPoly::from_rows(total, max_q);
}

QPoly rogers_odd_sum(std::size_t max_z, std::size_t max_q) {
  Rows total(max_z + 1, QSeries(max_q));
  Rows f = divide_one_plus_zx(unit_rows(max_z, max_q), q_power(1, max_q));
  for (std::size_t n = 0; n <= max_z && n * n <= max_q; ++n) {
    if (n > 0) f = divide_one_plus_zx(f, q_power(2 * n + 1, max_q));
    accumulate(total, f, n, q_power(n * n, max_q));
  }
  return QPoly::from_rows(total, max_q);
}

QPoly double_sum(std::size_t max_z, std::size_t max_q, bool scaled, int sign) {
  const QSeries one = QSeries::one(max_q);
  const QSeries c = scaled ? one - q_power(1, max_q) : one;
  const Rational s = sign >= 0 ? 1 : -1;
  Rows total(max_z + 1, QSeries(max_q));
  // The (n, j) term starts at q^{C(n,2) + jn}.
  for (std::size_t j = 0; j <= max_q; ++j) {
    Rows f = unit_rows(max_z, max_q);
    for (std::size_t n = 1; n <= max_z; ++n) {
      const std::size_t start = n * (n - 1) / 2 + j * n;
      if (start > max_q) break;
      f = divide_one_plus_zx(f, s * (q_power(j + n, max_q) * c));
      accumulate(total, f, n, q_power(start, max_q) * q_pow_series(c, n));
    }
  }
  return QPoly::from_rows(total, max_q);
}

}  // namespace ncs
