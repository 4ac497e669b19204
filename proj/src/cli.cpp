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

#include "ncseries/cli.hpp"

#include <charconv>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncseries/compositions.hpp"
#include "ncseries/errors.hpp"
#include "ncseries/identities.hpp"
#include "ncseries/involutions.hpp"
#include "ncseries/languages.hpp"
#include "ncseries/plethysm.hpp"
#include "ncseries/qseries.hpp"
#include "ncseries/series_io.hpp"

namespace ncs {

namespace {

using nlohmann::json;

struct RunConfig {
  std::size_t max_len = 6;
  std::uint64_t max_weight = 15;
  std::size_t max_q = 30;
  std::size_t max_z = 8;
  std::string format = "text";
  std::uint64_t seed = 1;

  bool json() const { return format == "json"; }
  TruncationContext context() const { return {max_len, max_weight}; }
  Bounds bounds() const { return {max_len, max_weight, max_q, max_z, seed}; }
};

// Composition listings beyond this many entries are summarized.
constexpr std::size_t kMaxListed = 2000;

std::optional<std::int64_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
  std::int64_t value = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) return std::nullopt;
  return value;
}

NCSeries resolve_series(const std::string& name, TruncationContext ctx) {
  if (name == "sptrees") return sp_trees_recursive(ctx);
  if (name == "sptrees-cf") return sp_trees_cf(ctx.max_weight, ctx);
  if (name == "sptrees-oracle") return sp_trees_oracle(ctx);
  if (name == "compositions") return compositions(std::nullopt, ctx);
  if (name == "sigma-c1") return shift(compositions(1, ctx));
  if (name == "sigma-p2") return shift(partitions_m_distinct(2, ctx));
  if (name == "n-module") return module_language(tail_module_spec(), ctx);
  if (name == "n-dual") return module_language(k_dual(tail_module_spec()), ctx);
  if (auto m = suffix_number(name, "c")) return compositions(*m, ctx);
  if (auto m = suffix_number(name, "p")) return partitions_m_distinct(*m, ctx);
  return named_series(name, ctx);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_expand(const RunConfig& cfg, const std::string& name, std::ostream& out) {
  const NCSeries s = resolve_series(name, cfg.context());
  if (cfg.json()) {
    json j = to_json(s);
    j["name"] = name;
    emit(out, j);
  } else {
    out << to_text(s) << '\n';
  }
  return kExitOk;
}

int cmd_tables(const RunConfig& cfg, unsigned n, bool shifted, std::ostream& out) {
  const SignedSumReport report = hatted_signed_sum(n, shifted);
  const unsigned min_part = shifted ? 2 : 1;
  const auto counts = rise_one_counts(n, min_part);
  Integer total_count;
  for (const Integer& c : counts[n]) total_count += c;
  const bool list = total_count <= kMaxListed;

  std::vector<std::vector<Composition>> by_k(report.per_k.size() + 1);
  if (list) {
    for (Composition& c : rise_one_compositions(n, min_part)) by_k[c.size()].push_back(std::move(c));
  }
  auto excluded = [&](const Composition& c) {
    return std::find(report.excluded.begin(), report.excluded.end(), c) != report.excluded.end();
  };

  if (cfg.json()) {
    json j = to_json(report);
    j["shifted"] = shifted;
    json rows = json::array();
    for (std::size_t k = 1; k < by_k.size(); ++k) {
      json row = {{"k", k}, {"count", counts[n][k].get_str()}, {"weight", report.per_k[k - 1]}};
      if (list) row["compositions"] = by_k[k];
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    emit(out, j);
    return kExitOk;
  }

  out << "n = " << n << (shifted ? ", parts >= 2" : ", parts >= 1") << ", risings <= 1\n";
  out << "k  weight  compositions ([..] excluded)\n";
  for (std::size_t k = 1; k < by_k.size(); ++k) {
    std::ostringstream line;
    line << k << "  " << report.per_k[k - 1];
    std::string text = line.str();
    text.resize(std::max<std::size_t>(text.size() + 1, 10), ' ');
    out << text;
    if (list) {
      for (std::size_t i = 0; i < by_k[k].size(); ++i) {
        const std::string label = composition_label(by_k[k][i]);
        out << (i ? " " : "") << (excluded(by_k[k][i]) ? "[" + label + "]" : label);
      }
    } else {
      out << '(' << counts[n][k].get_str() << " compositions)";
    }
    out << '\n';
  }
  out << "total " << report.total << '\n';
  out << "excluded:";
  for (const Composition& c : report.excluded) out << ' ' << composition_label(c);
  out << '\n';
  return kExitOk;
}

json coeff_map_json(const std::map<std::uint64_t, Integer>& coeffs) {
  json terms = json::array();
  for (const auto& [m, c] : coeffs) terms.push_back({{"q", m}, {"coeff", c.get_str()}});
  return terms;
}

std::string coeff_map_text(const std::map<std::uint64_t, Integer>& coeffs) {
  std::vector<Rational> dense(coeffs.empty() ? 1 : coeffs.rbegin()->first + 1);
  for (const auto& [m, c] : coeffs) dense[m] = Rational(c);
  const std::size_t max_q = dense.size() - 1;
  return to_text(QSeries(max_q, std::move(dense)));
}

struct QseriesArgs {
  std::size_t n = 1;
  bool oracle = false;
  unsigned a = 1;
  unsigned b = 4;
  std::string variant = "first";
};

int cmd_qseries(const RunConfig& cfg, const std::string& target, const QseriesArgs& args, std::ostream& out,
                std::ostream& err) {
  json j = {{"target", target}};
  std::string text;
  const bool second = args.variant == "second";
  if (target == "pathlength") {
    const auto coeffs =
        path_length_coeffs(args.n, args.oracle ? PathLengthSource::kOracle : PathLengthSource::kAlgebraic);
    j["n"] = args.n;
    j["source"] = args.oracle ? "oracle" : "algebraic";
    j["terms"] = coeff_map_json(coeffs);
    text = coeff_map_text(coeffs);
  } else if (target == "rr-product") {
    const QSeries p = rr_product(args.a, args.b, cfg.max_q);
    j["a"] = args.a;
    j["b"] = args.b;
    j["series"] = to_json(p);
    text = to_text(p);
  } else if (target == "rr-sum") {
    const QPoly p = rr_sum_side(second ? RRVariant::kSecond : RRVariant::kFirst, cfg.max_z, cfg.max_q);
    j["variant"] = args.variant;
    j["series"] = to_json(p);
    text = to_text(p);
  } else if (target == "signed-compositions") {
    const QSeries p = signed_composition_series(cfg.max_q, second ? 2 : 1);
    j["variant"] = args.variant;
    j["series"] = to_json(p);
    text = to_text(p);
  } else if (target == "sptrees") {
    const QPoly p = umbral(sp_trees_recursive(cfg.context()));
    j["series"] = to_json(p);
    text = to_text(p);
  } else {
    err << "unknown qseries target: " << target << '\n';
    return kExitUnknownName;
  }
  if (cfg.json()) {
    emit(out, j);
  } else {
    out << text << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& id, std::ostream& out, std::ostream& err) {
  std::vector<std::string> ids;
  if (id == "all") {
    for (const IdentityInfo& info : identity_registry()) ids.emplace_back(info.id);
  } else {
    const auto registry = identity_registry();
    if (std::none_of(registry.begin(), registry.end(), [&](const IdentityInfo& i) { return i.id == id; })) {
      err << UnknownIdentity(id).what() << '\n';
      return kExitUnknownName;
    }
    ids.push_back(id);
  }
  const Bounds bounds = cfg.bounds();
  std::vector<std::future<IdentityReport>> pending;
  for (const std::string& i : ids) {
    pending.push_back(std::async(std::launch::async, [i, bounds] { return check_identity(i, bounds); }));
  }
  bool all_passed = true;
  json reports = json::array();
  for (auto& f : pending) {
    const IdentityReport r = f.get();
    all_passed = all_passed && r.passed;
    if (cfg.json()) {
      reports.push_back(to_json(r));
    } else {
      out << to_text(r) << '\n';
    }
  }
  if (cfg.json()) {
    emit(out, {{"passed", all_passed}, {"identities", std::move(reports)}});
  } else {
    out << (all_passed ? "all " : "some ") << "identities " << (all_passed ? "passed" : "FAILED") << " ("
        << ids.size() << " checked)\n";
  }
  return all_passed ? kExitOk : kExitIdentityFailure;
}

int cmd_involutions(const RunConfig& cfg, std::size_t count, std::ostream& out) {
  const TruncationContext ctx = cfg.context();
  std::mt19937_64 rng(cfg.seed);
  bool all_passed = true;
  json rows = json::array();
  auto record = [&](const std::string& kind, const std::string& label, const InvolutionReport& r) {
    all_passed = all_passed && r.passed();
    if (cfg.json()) {
      rows.push_back({{"involution", kind},
                      {"spec", label},
                      {"pairs", r.pairs},
                      {"fixed_points", r.fixed_points},
                      {"passed", r.passed()}});
    } else {
      out << (r.passed() ? "PASS " : "FAIL ") << kind << ' ' << label << ": " << r.summary() << '\n';
    }
  };
  record("phi", "compositions-rise-1", check_phi_exhaustive(composition_spec(1), ctx));
  record("phi", "partitions-2-distinct", check_phi_exhaustive(partition_spec(2), ctx));
  record("psi", "tail-module", check_psi_exhaustive(tail_module_spec(), ctx));
  for (std::size_t i = 0; i < count; ++i) {
    const std::string label = "random-" + std::to_string(i);
    record("phi", label, check_phi_exhaustive(random_link_spec(rng), ctx));
    record("psi", label, check_psi_exhaustive(random_module_spec(rng), ctx));
  }
  if (cfg.json()) {
    emit(out, {{"seed", cfg.seed},
               {"context", {{"max_len", ctx.max_len}, {"max_weight", ctx.max_weight}}},
               {"passed", all_passed},
               {"checks", std::move(rows)}});
  } else {
    out << "seed " << cfg.seed << ": " << (all_passed ? "all involution checks passed" : "involution checks FAILED")
        << '\n';
  }
  return all_passed ? kExitOk : kExitIdentityFailure;
}

}  // namespace

std::vector<std::string> expandable_series_names() {
  std::vector<std::string> names = {"sptrees", "sptrees-cf", "sptrees-oracle", "compositions", "c0",
                                    "c1",      "c2",         "sigma-c1",       "p0",           "p1",
                                    "p2",      "sigma-p2",   "n-module",       "n-dual"};
  for (std::string_view n : named_series_names()) names.emplace_back(n);
  return names;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated noncommutative series, shift plethysm and q-series identities", "ncseries"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  auto* len_opt = app.add_option("--max-len", cfg.max_len, "maximum word length L")->check(CLI::NonNegativeNumber);
  auto* weight_opt =
      app.add_option("--max-weight", cfg.max_weight, "maximum word weight W")->check(CLI::NonNegativeNumber);
  app.add_option("--max-q", cfg.max_q, "maximum power of q")->check(CLI::NonNegativeNumber);
  app.add_option("--max-z", cfg.max_z, "maximum power of z")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for random link specs");

  std::string series_name;
  auto* expand = app.add_subcommand("expand", "print a named series in canonical order");
  expand->add_option("name", series_name, "series name")->required();

  unsigned table_n = 10;
  bool table_shifted = false;
  auto* tables = app.add_subcommand("tables", "signed rise-one compositions of n by number of parts");
  tables->add_option("--n", table_n, "weight n")->required()->check(CLI::PositiveNumber);
  tables->add_flag("--shifted", table_shifted, "parts >= 2 and the mod-5 {2,3} exclusions");

  std::string target;
  QseriesArgs qargs;
  auto* qseries = app.add_subcommand("qseries", "q-series: pathlength, rr-product, rr-sum, signed-compositions, sptrees");
  qseries->add_option("target", target, "target name")->required();
  qseries->add_option("--n", qargs.n, "number of vertices (pathlength)")->check(CLI::PositiveNumber);
  qseries->add_flag("--oracle", qargs.oracle, "count enumerated trees instead (pathlength)");
  qseries->add_option("--a", qargs.a, "first residue (rr-product)")->check(CLI::Range(1, 5));
  qseries->add_option("--b", qargs.b, "second residue (rr-product)")->check(CLI::Range(1, 5));
  qseries->add_option("--variant", qargs.variant, "first or second")->check(CLI::IsMember({"first", "second"}));

  std::string identity;
  auto* verify = app.add_subcommand("verify", "check a registered identity, or all of them");
  verify->add_option("identity", identity, "identity id or 'all'")->required();

  std::size_t random_specs = 20;
  auto* involutions = app.add_subcommand("involutions", "exhaustive checks of the sign-reversing involutions");
  involutions->add_option("--count", random_specs, "number of random link specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(cfg, series_name, out);
    if (*tables) {
      if (table_shifted && table_n < 2) {
        err << "tables: --shifted needs n >= 2\n";
        return kExitUsage;
      }
      return cmd_tables(cfg, table_n, table_shifted, out);
    }
    if (*qseries) return cmd_qseries(cfg, target, qargs, out, err);
    if (*verify) return cmd_verify(cfg, identity, out, err);
    if (*involutions) {
      // The exhaustive pair walk is quadratic in the language size; default
      // to the small universe unless bounds were given.
      if (len_opt->count() == 0) cfg.max_len = 4;
      if (weight_opt->count() == 0) cfg.max_weight = 10;
      return cmd_involutions(cfg, random_specs, out);
    }
  } catch (const UnknownName& e) {
    err << e.what() << '\n';
    return kExitUnknownName;
  } catch (const UnknownIdentity& e) {
    err << e.what() << '\n';
    return kExitUnknownName;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"ncseries"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ncs
