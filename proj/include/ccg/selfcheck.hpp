#pragma once

// The invariant suites behind `ccg check`: strict score descent, the
// quadratic termination bound and its tightness, root-first linearity,
// confluence across strategies and across exhaustive sequence search,
// preservation of category/frontier/semantics under normalization, and
// parser/oracle agreement on the bundled grammars. The acceptance tests run
// the same suites, so the CLI and the test binary cannot drift apart.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ccg/builtin_grammars.hpp"
#include "ccg/derivation.hpp"
#include "ccg/generate.hpp"
#include "ccg/lexicon.hpp"
#include "ccg/oracle.hpp"
#include "ccg/parser.hpp"
#include "ccg/rewrite.hpp"

namespace ccg {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double ms = 0.0;
};

namespace detail {

class CheckTimer {
public:
  CheckTimer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline void fail(CheckResult& r, const std::string& why) {
  r.pass = false;
  if (r.detail.empty()) r.detail = why;
}

// The random population every rewrite suite draws from.
inline std::vector<Derivation> random_population(std::uint64_t seed,
                                                 std::size_t count,
                                                 std::size_t min_internal,
                                                 std::size_t max_internal) {
  Rng rng(seed);
  std::vector<Derivation> out;
  out.reserve(count);
  std::uniform_int_distribution<std::size_t> size(min_internal, max_internal);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_derivation(rng, size(rng)));
  return out;
}

// Every bracketing of forward, backward, and atom-terminated forward chains
// with `items` leaves.
inline std::vector<Derivation> all_chain_shapes(std::size_t items) {
  const RuleConfig config;
  std::vector<Derivation> out;
  for (const auto& chain : {forward_chain(items), backward_chain(items),
                            forward_chain(items, true)}) {
    auto all = enumerate_all(chain, config);
    out.insert(out.end(), all.begin(), all.end());
  }
  return out;
}

}  // namespace detail

// Every single contraction available anywhere along a normalization path
// drops the score by exactly #(left-left grandchild) + 1.
inline CheckResult check_sigma_descent(std::uint64_t seed,
                                       std::size_t count = 1000,
                                       std::size_t max_internal = 12) {
  detail::CheckTimer timer;
  CheckResult r;
  r.name = "sigma-descent";
  const RuleConfig config = RuleConfig::unrestricted();
  std::size_t contractions = 0;
  auto pop = detail::random_population(seed, count, 1, max_internal);
  for (const Derivation& start : pop) {
    Derivation d = start;
    for (;;) {
      auto redexes = find_redexes(d);
      if (redexes.empty()) break;
      for (const Position& p : redexes) {
        const Derivation a = node_at(d, p).left().left();
        const Derivation next = contract(d, p, config);
        ++contractions;
        if (sigma(next) + a.internal_count() + 1 != sigma(d)) {
          detail::fail(r, "descent mismatch at " + format_position(p) +
                              " in:\n" + pretty(d));
          return r;
        }
      }
      d = contract(d, redexes.front(), config);
    }
  }
  r.detail = std::to_string(pop.size()) + " derivations, " +
             std::to_string(contractions) + " contractions checked";
  r.ms = timer.ms();
  return r;
}

// Steps never exceed n(n-1)/2 under any strategy; exhaustive sequence search
// up to 6 internal nodes confirms the bound is attained on left-combs and
// never exceeded on any chain shape.
inline CheckResult check_termination_bound(std::uint64_t seed,
                                           std::size_t count = 1000,
                                           std::size_t max_internal = 12) {
  detail::CheckTimer timer;
  CheckResult r;
  r.name = "termination-bound";
  const RuleConfig config = RuleConfig::unrestricted();
  const auto strategies = standard_strategies();
  for (const Derivation& d :
       detail::random_population(seed, count, 1, max_internal)) {
    const std::size_t n = d.internal_count();
    const std::size_t bound = n * (n - 1) / 2;
    for (const RewriteStrategy& s : strategies) {
      const auto report = normalize(d, s, config);
      if (report.steps > bound) {
        detail::fail(r, s.name() + " used " + std::to_string(report.steps) +
                            " steps, bound " + std::to_string(bound));
        return r;
      }
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t bound = n * (n - 1) / 2;
    for (bool backward : {false, true}) {
      const auto items =
          backward ? backward_chain(n + 1) : forward_chain(n + 1);
      const auto search = all_rewrite_sequences(left_comb(items), config);
      if (search.max_length() != bound)
        detail::fail(r, "left-comb n=" + std::to_string(n) + " max " +
                            std::to_string(search.max_length()) +
                            " != " + std::to_string(bound));
    }
  }
  for (std::size_t items = 2; items <= 7; ++items) {
    for (const Derivation& d : detail::all_chain_shapes(items)) {
      const std::size_t n = d.internal_count();
      const auto search = all_rewrite_sequences(d, config);
      if (search.max_length() > n * (n - 1) / 2)
        detail::fail(r, "sequence beyond bound on a chain shape");
    }
  }
  r.ms = timer.ms();
  if (r.pass) r.detail = "bound n(n-1)/2 held; tight on left-combs for n<=6";
  return r;
}

// Contracting as close to the root as possible uses at most n steps on the
// chain algebra, where the redex set is stable under contraction. On
// arbitrary mixed derivations that stability fails: a contraction rewrites
// the degree at its position and can enable a redex above it, and there are
// derivations none of whose maximal sequences fit in n steps (the test suite
// freezes a 5-node derivation whose every maximal sequence has 6 steps). The
// suite therefore enforces the linear bound exhaustively on chains, and on
// the random population enforces the quadratic bound while counting and
// reporting linear-bound overruns.
inline CheckResult check_root_first_linearity(std::uint64_t seed,
                                              std::size_t count = 1000,
                                              std::size_t max_internal = 12) {
  detail::CheckTimer timer;
  CheckResult r;
  r.name = "root-first-linearity";
  const RuleConfig config = RuleConfig::unrestricted();
  std::size_t chain_shapes = 0;
  for (std::size_t items = 2; items <= 7; ++items) {
    for (const Derivation& d : detail::all_chain_shapes(items)) {
      const auto report = normalize(d, RewriteStrategy::root_first(), config);
      ++chain_shapes;
      if (report.steps > d.internal_count())
        detail::fail(r, "root-first used " + std::to_string(report.steps) +
                            " steps on a chain shape with " +
                            std::to_string(d.internal_count()) +
                            " internal nodes");
    }
  }
  std::size_t overruns = 0, worst_over = 0;
  for (const Derivation& d :
       detail::random_population(seed, count, 1, max_internal)) {
    const std::size_t n = d.internal_count();
    const auto report = normalize(d, RewriteStrategy::root_first(), config);
    if (report.steps > n * (n - 1) / 2)
      detail::fail(r, "root-first exceeded the quadratic bound");
    if (report.steps > n) {
      ++overruns;
      worst_over = std::max(worst_over, report.steps - n);
    }
  }
  r.ms = timer.ms();
  if (r.pass) {
    r.detail = "<= n on all " + std::to_string(chain_shapes) +
               " chain shapes; random population: " +
               std::to_string(overruns) + "/" + std::to_string(count) +
               " beyond n (worst +" + std::to_string(worst_over) +
               "), quadratic bound held";
  }
  return r;
}

// All strategies agree on the normal form; exhaustive sequence search finds
// a unique terminal form for every start up to 5 internal nodes.
inline CheckResult check_confluence_suite(std::uint64_t seed,
                                          std::size_t count = 1000,
                                          std::size_t max_internal = 12) {
  detail::CheckTimer timer;
  CheckResult r;
  r.name = "confluence";
  const RuleConfig config = RuleConfig::unrestricted();
  const auto strategies = standard_strategies();
  for (std::size_t items = 2; items <= 6; ++items)
    for (const Derivation& d : detail::all_chain_shapes(items))
      if (!check_confluence(d, strategies, config))
        detail::fail(r, "strategies diverged on a chain shape");
  for (const Derivation& d :
       detail::random_population(seed, count, 7, max_internal))
    if (!check_confluence(d, strategies, config))
      detail::fail(r, "strategies diverged on a random derivation");
  for (std::size_t items = 2; items <= 6; ++items)
    for (const Derivation& d : detail::all_chain_shapes(items))
      if (all_rewrite_sequences(d, config).terminal_forms.size() != 1)
        detail::fail(r, "multiple terminal forms from one start");
  Rng rng(seed ^ 0x5eedULL);
  for (std::size_t i = 0; i < 200; ++i) {
    const Derivation d = random_derivation(
        rng, std::uniform_int_distribution<std::size_t>(1, 5)(rng));
    if (all_rewrite_sequences(d, config).terminal_forms.size() != 1)
      detail::fail(r, "multiple terminal forms from a random start");
  }
  r.ms = timer.ms();
  if (r.pass) r.detail = "identical normal forms across strategies";
  return r;
}

// Normalization preserves the root category, the frontier, and the
// semantics.
inline CheckResult check_preservation(std::uint64_t seed,
                                      std::size_t count = 1000,
                                      std::size_t max_internal = 12) {
  detail::CheckTimer timer;
  CheckResult r;
  r.name = "preservation";
  const RuleConfig config = RuleConfig::unrestricted();
  auto verify = [&](const Derivation& d, const RewriteStrategy& s) {
    const Derivation nf = normalize(d, s, config).normal_form;
    if (nf.cat() != d.cat()) detail::fail(r, "root category changed");
    const auto before = frontier(d);
    const auto after = frontier(nf);
    if (before.size() != after.size()) detail::fail(r, "frontier changed");
    for (std::size_t i = 0; r.pass && i < before.size(); ++i)
      if (before[i].word != after[i].word || before[i].cat != after[i].cat)
        detail::fail(r, "frontier changed");
    if (r.pass && !sem_equiv(d.sem(), nf.sem(), arity(d.cat())))
      detail::fail(r, "semantics changed");
  };
  const auto strategies = standard_strategies(3);
  for (const Derivation& d :
       detail::random_population(seed, count, 1, max_internal))
    for (const RewriteStrategy& s : strategies) verify(d, s);
  for (std::size_t items = 2; items <= 7; ++items)
    for (const Derivation& d : detail::all_chain_shapes(items))
      verify(d, RewriteStrategy::root_first());
  r.ms = timer.ms();
  if (r.pass) r.detail = "category, frontier and semantics preserved";
  return r;
}

namespace detail {

// Union over lexical-entry assignments of the oracle's full-span
// enumeration.
inline std::vector<Derivation> oracle_derivations(
    const std::vector<std::string>& words, const Lexicon& lex,
    const RuleConfig& config) {
  std::vector<std::vector<LexItem>> assignments{{}};
  for (const std::string& word : words) {
    const auto& entries = lex.entries.at(word);
    std::vector<std::vector<LexItem>> next;
    for (const auto& partial : assignments)
      for (const LexEntry& e : entries) {
        auto copy = partial;
        copy.push_back({word, e.cat});
        next.push_back(std::move(copy));
      }
    assignments = std::move(next);
  }
  std::vector<Derivation> out;
  std::vector<std::string> seen;
  for (const auto& items : assignments)
    for (const Derivation& d : enumerate_all(items, config)) {
      std::string key = digest(d);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(std::move(key));
        out.push_back(d);
      }
    }
  return out;
}

struct EquivalenceCase {
  std::string_view lexicon;
  std::vector<std::string> sentences;
};

inline std::vector<EquivalenceCase> equivalence_cases() {
  return {
      {grammars::paper_lex,
       {"the flowers sent", "whose cat did fred find", "john loves mary",
        "john loves mary madly"}},
      {grammars::bcbc_lex, {"wa wc wdc wbd", "wa wc wdc wbd wmod"}},
      {grammars::reanalysis_lex, {"u1 u2 u3", "u1 u2 u3 umod"}},
      {grammars::toy_en_lex,
       {"the dog barks", "the insults annoy the teacher",
        "the new students shouted the insults"}},
      {grammars::ppattach_lex, {"john sees the man with the telescope"}},
  };
}

}  // namespace detail

// Exhaustive parsing equals the oracle enumeration (as a set of whole
// derivations) on every bundled lexicon.
inline CheckResult check_oracle_equivalence() {
  detail::CheckTimer timer;
  CheckResult r;
  r.name = "oracle-equivalence";
  const RuleConfig config;
  std::size_t cases = 0, derivations = 0;
  for (const auto& eq : detail::equivalence_cases()) {
    const Lexicon lex = parse_lexicon(std::string(eq.lexicon));
    for (const std::string& sentence : eq.sentences) {
      const auto words = tokenize(sentence);
      const auto expected = detail::oracle_derivations(words, lex, config);
      const auto result = parse(words, lex, ParsePolicy::exhaustive(), config);
      std::vector<std::string> got;
      for (const Analysis& a : result.final_analyses)
        if (a.constituents.size() == 1)
          got.push_back(digest(a.constituents[0]));
      if (got.size() != expected.size()) {
        detail::fail(r, "'" + sentence + "': parser found " +
                            std::to_string(got.size()) + ", oracle " +
                            std::to_string(expected.size()));
        continue;
      }
      for (const Derivation& d : expected)
        if (std::find(got.begin(), got.end(), digest(d)) == got.end())
          detail::fail(r, "'" + sentence + "': oracle derivation missing");
      ++cases;
      derivations += expected.size();
    }
  }
  r.ms = timer.ms();
  if (r.pass)
    r.detail = std::to_string(cases) + " sentences, " +
               std::to_string(derivations) + " derivations matched";
  return r;
}

inline std::vector<CheckResult> run_all_checks(std::uint64_t seed = 20240801) {
  return {check_sigma_descent(seed),      check_termination_bound(seed),
          check_root_first_linearity(seed), check_confluence_suite(seed),
          check_preservation(seed),       check_oracle_equivalence()};
}

}  // namespace ccg
