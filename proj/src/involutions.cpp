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

#include "ncseries/involutions.hpp"

#include <memory>
#include <vector>

#include "ncseries/errors.hpp"

namespace ncs {

namespace {

// Moves the first letter of `right` to the end of `left`.
WordPair pull_left(const WordPair& p) {
  return {p.first * p.second.subword(0, 1), p.second.subword(1)};
}

// Moves the last letter of `left` to the front of `right`.
WordPair push_right(const WordPair& p) {
  const std::size_t k = p.first.length();
  return {p.first.subword(0, k - 1), p.first.subword(k - 1) * p.second};
}

std::vector<Word> words_of(const NCSeries& s) {
  std::vector<Word> out;
  out.reserve(s.size());
  for (const auto& [w, c] : s.terms()) out.push_back(w);
  return out;
}

// Pairs (u, v) from the two word lists whose concatenation fits in ctx.
template <typename Visit>
void for_each_pair(const std::vector<Word>& left, const std::vector<Word>& right, TruncationContext ctx,
                   Visit visit) {
  for (const Word& u : left) {
    for (const Word& v : right) {
      if (ctx.admits(u.length() + v.length(), u.weight() + v.weight())) visit(WordPair{u, v});
    }
  }
}

using LinkTable = std::vector<bool>;

LinkPredicate table_links(std::shared_ptr<const LinkTable> table, Letter max_letter) {
  return [table = std::move(table), max_letter](Letter i, Letter j) {
    return i <= max_letter && j <= max_letter && (*table)[i * (max_letter + 1) + j];
  };
}

std::shared_ptr<const LinkTable> random_table(std::mt19937_64& rng, Letter max_letter) {
  auto table = std::make_shared<LinkTable>((max_letter + 1) * (max_letter + 1));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < table->size(); ++i) (*table)[i] = coin(rng);
  return table;
}

}  // namespace

WordPair involution_phi(const WordPair& pair, const LinkSpec& spec) {
  const auto& [w, wp] = pair;
  if (!in_language(w, spec) || !in_language(wp, k_dual(spec))) {
    throw InvalidPair("phi: pair is not in L x L^!");
  }
  if (w.empty() && wp.empty()) return pair;
  if (w.empty()) return pull_left(pair);
  if (wp.empty()) return push_right(pair);
  return spec.links(w.back(), wp.front()) ? pull_left(pair) : push_right(pair);
}

WordPair involution_psi(const WordPair& pair, const ModuleSpec& spec) {
  const auto& [w, wp] = pair;
  if (!in_module(w, spec) || !in_language(wp, k_dual(spec.body))) {
    throw InvalidPair("psi: pair is not in N x L^!");
  }
  if (w.length() >= 2) {
    if (!wp.empty() && spec.body.links(w.back(), wp.front())) return pull_left(pair);
    return push_right(pair);
  }
  if (!wp.empty() && spec.head_links(w.front(), wp.front())) return pull_left(pair);
  return pair;
}

std::string InvolutionReport::summary() const {
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  return std::to_string(pairs) + " pairs, " + std::to_string(fixed_points) + " fixed; involutive " +
         flag(involutive) + ", product " + flag(preserves_product) + ", sign " + flag(sign_reversing) +
         ", fixed set " + flag(fixed_set_ok) + ", signed sum " + flag(signed_sum_ok);
}

InvolutionReport check_phi_exhaustive(const LinkSpec& spec, TruncationContext ctx) {
  InvolutionReport report;
  const LinkSpec dual = k_dual(spec);
  std::vector<std::pair<Word, Rational>> surviving;
  for_each_pair(words_of(linked_language(spec, ctx)), words_of(linked_language(dual, ctx)), ctx,
                [&](const WordPair& p) {
                  ++report.pairs;
                  const WordPair image = involution_phi(p, spec);
                  if (involution_phi(image, spec) != p) report.involutive = false;
                  if (image.first * image.second != p.first * p.second) report.preserves_product = false;
                  const bool fixed = image == p;
                  const bool expected_fixed = p.first.empty() && p.second.empty();
                  if (fixed) {
                    ++report.fixed_points;
                    surviving.emplace_back(p.first * p.second, p.first.length() % 2 ? -1 : 1);
                  } else if (image.first.length() % 2 == p.first.length() % 2) {
                    report.sign_reversing = false;
                  }
                  if (fixed != expected_fixed) report.fixed_set_ok = false;
                });
  report.signed_sum_ok = NCSeries::from_terms(surviving, ctx) == NCSeries::one(ctx);
  return report;
}

InvolutionReport check_psi_exhaustive(const ModuleSpec& spec, TruncationContext ctx) {
  InvolutionReport report;
  const ModuleSpec dual = k_dual(spec);
  std::vector<std::pair<Word, Rational>> surviving;
  for_each_pair(words_of(module_language(spec, ctx)), words_of(linked_language(dual.body, ctx)), ctx,
                [&](const WordPair& p) {
                  ++report.pairs;
                  const WordPair image = involution_psi(p, spec);
                  if (involution_psi(image, spec) != p) report.involutive = false;
                  if (image.first * image.second != p.first * p.second) report.preserves_product = false;
                  const bool fixed = image == p;
                  const bool expected_fixed =
                      p.first.length() == 1 && (p.second.empty() || !spec.head_links(p.first[0], p.second[0]));
                  if (fixed) {
                    ++report.fixed_points;
                    surviving.emplace_back(p.first * p.second, p.first.length() % 2 ? 1 : -1);
                  } else if (image.first.length() % 2 == p.first.length() % 2) {
                    report.sign_reversing = false;
                  }
                  if (fixed != expected_fixed) report.fixed_set_ok = false;
                });
  report.signed_sum_ok = NCSeries::from_terms(surviving, ctx) == module_language(dual, ctx);
  return report;
}

LinkSpec random_link_spec(std::mt19937_64& rng, Letter max_letter) {
  return {[max_letter](Letter i) { return i >= 1 && i <= max_letter; },
          table_links(random_table(rng, max_letter), max_letter)};
}

ModuleSpec random_module_spec(std::mt19937_64& rng, Letter max_letter) {
  LinkSpec body = random_link_spec(rng, max_letter);
  auto heads = std::make_shared<std::vector<bool>>(max_letter + 1, false);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<Letter> pick(1, max_letter);
  for (Letter i = 1; i <= max_letter; ++i) (*heads)[i] = coin(rng);
  (*heads)[pick(rng)] = true;
  LetterPredicate head_alphabet = [heads, max_letter](Letter i) { return i <= max_letter && (*heads)[i]; };
  LinkPredicate raw = table_links(random_table(rng, max_letter), max_letter);
  LinkPredicate head_links = [head_alphabet, alphabet = body.alphabet, raw](Letter i, Letter j) {
    return head_alphabet(i) && alphabet(j) && raw(i, j);
  };
  return {std::move(head_alphabet), std::move(head_links), std::move(body)};
}

}  // namespace ncs
