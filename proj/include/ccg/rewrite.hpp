#pragma once

// The derivation rewrite system: left-nested same-direction rule pairs are
// rewritten into their right-branching equivalents,
//
//   ( x >m y ) >n z   ->   x >(m+n-1) ( y >n z )        m >= 1
//   ( x <n y ) <o z   ->   x <n ( y <(o-n+1) z )        o >= n
//
// preserving the root category, the frontier, and the semantics (both sides
// denote B^n (B^m a b) c = B^(m+n-1) a (B^n b c)). The degree side
// conditions mark exactly the shapes where the schema variable linking the
// two nodes exists; a same-direction pair that fails them (forward inner
// degree 0, or backward outer degree below inner) is not a redex — no
// frontier- and meaning-preserving right rotation exists for it.
//
// Contracting strictly decreases the derivation score s by #(a)+1, where a
// is the redex's left-left grandchild, so every contraction sequence is
// finite (at most #(#-1)/2 steps) and, since overlapping redexes rejoin, all
// strategies reach the same normal form. Contracting as close to the root as
// possible needs at most # steps.
//
// Degrees in the contractum are recomputed from the categories, never read
// off the node labels. When the recomputed rule is blocked by the active
// RuleConfig the contraction fails loudly with RewriteObstructedError.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccg/derivation.hpp"
#include "ccg/errors.hpp"
#include "ccg/rules.hpp"

namespace ccg {

struct RewriteStrategy {
  enum class Kind { root_first, leftmost_innermost, random_seeded };

  Kind kind = Kind::root_first;
  std::uint64_t seed = 0;

  static RewriteStrategy root_first() {
    return {Kind::root_first, 0};
  }
  static RewriteStrategy leftmost_innermost() {
    return {Kind::leftmost_innermost, 0};
  }
  static RewriteStrategy random_seeded(std::uint64_t seed) {
    return {Kind::random_seeded, seed};
  }

  std::string name() const {
    switch (kind) {
      case Kind::root_first:
        return "root-first";
      case Kind::leftmost_innermost:
        return "leftmost-innermost";
      case Kind::random_seeded:
        return "random:" + std::to_string(seed);
    }
    return {};
  }
};

// True iff the node is a redex root: an internal node whose left child is an
// internal node of the same rule direction, subject to the degree side
// conditions above.
inline bool is_redex(const Derivation& d) {
  if (d.is_leaf() || d.left().is_leaf()) return false;
  const RuleUse& outer = d.rule();
  const RuleUse& inner = d.left().rule();
  if (outer.dir != inner.dir) return false;
  if (outer.dir == RuleDir::forward) return inner.degree >= 1;
  return outer.degree >= inner.degree;
}

namespace detail {

inline void collect_redexes(const Derivation& d, Position& p,
                            std::vector<Position>& out) {
  if (d.is_leaf()) return;
  if (is_redex(d)) out.push_back(p);
  p.steps.push_back('L');
  collect_redexes(d.left(), p, out);
  p.steps.back() = 'R';
  collect_redexes(d.right(), p, out);
  p.steps.pop_back();
}

}  // namespace detail

// All redex positions in preorder.
inline std::vector<Position> find_redexes(const Derivation& d) {
  std::vector<Position> out;
  Position p{};
  detail::collect_redexes(d, p, out);
  return out;
}

inline bool is_normal_form(const Derivation& d) {
  if (d.is_leaf()) return true;
  return !is_redex(d) && is_normal_form(d.left()) &&
         is_normal_form(d.right());
}

namespace detail {

// Combines two subtrees in a fixed direction at the category-forced degree,
// surfacing config violations as obstructions.
inline Derivation combine_checked(const Derivation& left,
                                  const Derivation& right, RuleDir dir,
                                  const RuleConfig& config,
                                  const Position& where) {
  auto comb = find_rule(left.cat(), right.cat(), dir);
  if (!comb)
    throw DerivationError("no " +
                          std::string(dir == RuleDir::forward ? ">" : "<") +
                          "-rule combines " + format_category(left.cat()) +
                          " with " + format_category(right.cat()) +
                          " at position " + format_position(where));
  if (!config.allows(comb->rule))
    throw RewriteObstructedError("rewrite obstructed at position " +
                                 format_position(where) + ": rule " +
                                 comb->rule.name() +
                                 " is outside the rule configuration");
  auto m = detail::match_rule(left.cat(), right.cat(), comb->rule);
  if (!config.predicate_ok(comb->rule, *m))
    throw RewriteObstructedError("rewrite obstructed at position " +
                                 format_position(where) + ": rule " +
                                 comb->rule.name() +
                                 " rejected by rule predicate");
  return make_node(comb->rule, left, right);
}

}  // namespace detail

// Contracts the redex at p: with a = left-left grandchild, b = left-right
// grandchild, c = right child, the contractum is a combined with (b
// combined with c), same direction, degrees recomputed from the categories.
inline Derivation contract(const Derivation& d, const Position& p,
                           const RuleConfig& config = RuleConfig()) {
  const Derivation node = node_at(d, p);
  if (!is_redex(node))
    throw DerivationError("position " + format_position(p) +
                          " is not a redex");
  const RuleDir dir = node.rule().dir;
  const Derivation a = node.left().left();
  const Derivation b = node.left().right();
  const Derivation c = node.right();
  const Derivation inner = detail::combine_checked(b, c, dir, config, p);
  const Derivation outer = detail::combine_checked(a, inner, dir, config, p);
  return replace_at(d, p, outer);
}

struct RewriteReport {
  Derivation normal_form;
  std::size_t steps = 0;
  std::vector<std::size_t> sigma_trace;  // strictly decreasing, initial first
};

namespace detail {

inline Position choose_redex(const std::vector<Position>& redexes,
                             const RewriteStrategy& strategy,
                             std::mt19937_64& rng) {
  switch (strategy.kind) {
    case RewriteStrategy::Kind::root_first: {
      // Minimal depth; preorder settles ties.
      const Position* best = &redexes.front();
      for (const Position& p : redexes)
        if (p.depth() < best->depth()) best = &p;
      return *best;
    }
    case RewriteStrategy::Kind::leftmost_innermost: {
      // Redexes with no redex strictly below them; first in preorder wins.
      for (const Position& p : redexes) {
        bool innermost = true;
        for (const Position& q : redexes) {
          if (q.steps.size() > p.steps.size() &&
              q.steps.compare(0, p.steps.size(), p.steps) == 0) {
            innermost = false;
            break;
          }
        }
        if (innermost) return p;
      }
      return redexes.front();
    }
    case RewriteStrategy::Kind::random_seeded: {
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      return redexes[pick(rng)];
    }
  }
  return redexes.front();
}

}  // namespace detail

// Repeatedly contracts the strategy's chosen redex until none remain.
inline RewriteReport normalize(const Derivation& d,
                               const RewriteStrategy& strategy,
                               const RuleConfig& config = RuleConfig()) {
  std::mt19937_64 rng(strategy.seed);
  RewriteReport report{d, 0, {sigma(d)}};
  for (;;) {
    auto redexes = find_redexes(report.normal_form);
    if (redexes.empty()) break;
    const Position p = detail::choose_redex(redexes, strategy, rng);
    report.normal_form = contract(report.normal_form, p, config);
    report.sigma_trace.push_back(sigma(report.normal_form));
    ++report.steps;
  }
  return report;
}

// True iff every strategy reaches a structurally identical normal form.
inline bool check_confluence(const Derivation& d,
                             const std::vector<RewriteStrategy>& strategies,
                             const RuleConfig& config = RuleConfig()) {
  if (strategies.empty()) return true;
  const Derivation first = normalize(d, strategies.front(), config).normal_form;
  for (std::size_t i = 1; i < strategies.size(); ++i)
    if (normalize(d, strategies[i], config).normal_form != first) return false;
  return true;
}

// The strategy set the confluence suites run: both deterministic orders plus
// ten seeded random orders.
inline std::vector<RewriteStrategy> standard_strategies(
    std::size_t random_count = 10, std::uint64_t seed_base = 1) {
  std::vector<RewriteStrategy> out{RewriteStrategy::root_first(),
                                   RewriteStrategy::leftmost_innermost()};
  for (std::size_t i = 0; i < random_count; ++i)
    out.push_back(RewriteStrategy::random_seeded(seed_base + i));
  return out;
}

}  // namespace ccg
