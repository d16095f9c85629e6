#pragma once

// Generalized forward and backward combination of arbitrary degree.
//
//   >n :  X/Y   Y|Z1..|Zn  ->  X|Z1..|Zn
//   <n :  Y|Z1..|Zn   X\Y  ->  X|Z1..|Zn
//
// where each |Zi stands for either /Zi or \Zi and keeps its direction in the
// result. Degree 0 is plain function application. Viewed as three-place
// relations the rules are functional in all three arguments: any two of
// {left, right, result} determine the third.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccg/category.hpp"

namespace ccg {

enum class RuleDir : char { forward = '>', backward = '<' };

struct RuleUse {
  RuleDir dir = RuleDir::forward;
  std::size_t degree = 0;

  std::string name() const {
    return std::string(1, static_cast<char>(dir)) + std::to_string(degree);
  }

  friend bool operator==(const RuleUse& a, const RuleUse& b) {
    return a.dir == b.dir && a.degree == b.degree;
  }
  friend bool operator!=(const RuleUse& a, const RuleUse& b) {
    return !(a == b);
  }
  friend bool operator<(const RuleUse& a, const RuleUse& b) {
    if (a.dir != b.dir) return a.dir == RuleDir::forward;
    return a.degree < b.degree;
  }
};

inline RuleUse forward_rule(std::size_t degree) {
  return RuleUse{RuleDir::forward, degree};
}
inline RuleUse backward_rule(std::size_t degree) {
  return RuleUse{RuleDir::backward, degree};
}

// Parses ">1" / "<0" style rule names.
inline std::optional<RuleUse> parse_rule_name(std::string_view s) {
  if (s.size() < 2 || (s[0] != '>' && s[0] != '<')) return std::nullopt;
  std::size_t degree = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    degree = degree * 10 + static_cast<std::size_t>(s[i] - '0');
  }
  return RuleUse{s[0] == '>' ? RuleDir::forward : RuleDir::backward, degree};
}

// The variable bindings of a successful rule match, offered to predicate
// hooks: result = X|Z1..|Zn.
struct RuleMatch {
  Category x;
  Category y;
  std::vector<SlashArg> zs;  // outermost-first
  Category result;
};

using RulePredicate = std::function<bool(
    const RuleUse& rule, const Category& x, const Category& y,
    const std::vector<SlashArg>& zs)>;

struct RuleConfig {
  std::size_t max_degree = 3;
  std::set<RuleUse> blocked;
  RulePredicate predicate;  // null = always true

  bool allows(const RuleUse& rule) const {
    return rule.degree <= max_degree && !blocked.contains(rule);
  }

  bool predicate_ok(const RuleUse& rule, const RuleMatch& m) const {
    return !predicate || predicate(rule, m.x, m.y, m.zs);
  }

  // No degree cap, nothing blocked, no predicate.
  static RuleConfig unrestricted() {
    RuleConfig c;
    c.max_degree = static_cast<std::size_t>(-1);
    return c;
  }
};

namespace detail {

// Pure structural match, no config involvement.
inline std::optional<RuleMatch> match_rule(const Category& left,
                                           const Category& right,
                                           const RuleUse& rule) {
  const Category& functor = rule.dir == RuleDir::forward ? left : right;
  const Category& operand = rule.dir == RuleDir::forward ? right : left;
  if (functor.is_atom()) return std::nullopt;
  const Slash want =
      rule.dir == RuleDir::forward ? Slash::forward : Slash::backward;
  if (functor.slash() != want) return std::nullopt;
  const Category y = functor.argument();
  auto zs = outer_args(operand, rule.degree);
  if (!zs) return std::nullopt;
  auto core = peel(operand, rule.degree);
  if (*core != y) return std::nullopt;
  const Category x = functor.result();
  return RuleMatch{x, y, *zs, attach(x, *zs)};
}

}  // namespace detail

// Applies one combinatory rule. Shape mismatch is a failure value, not a
// fault; the degree bound is the caller's lookout.
inline std::optional<Category> apply_rule(const Category& left,
                                          const Category& right,
                                          const RuleUse& rule) {
  auto m = detail::match_rule(left, right, rule);
  if (!m) return std::nullopt;
  return m->result;
}

struct Combination {
  RuleUse rule;
  Category result;
};

// All rule instances combining left with right under config, forward before
// backward, ascending degree.
inline std::vector<Combination> enumerate_combinations(
    const Category& left, const Category& right, const RuleConfig& config) {
  std::vector<Combination> out;
  for (RuleDir dir : {RuleDir::forward, RuleDir::backward}) {
    const std::size_t cap =
        std::min(config.max_degree,
                 arity(dir == RuleDir::forward ? right : left));
    for (std::size_t n = 0; n <= cap; ++n) {
      const RuleUse rule{dir, n};
      if (!config.allows(rule)) continue;
      auto m = detail::match_rule(left, right, rule);
      if (!m) continue;
      if (!config.predicate_ok(rule, *m)) continue;
      out.push_back({rule, m->result});
    }
  }
  return out;
}

// The unique degree (if any) at which left and right combine in the given
// direction, ignoring the config entirely. Uniqueness holds because peeling
// different numbers of arguments from the operand yields distinct categories.
inline std::optional<Combination> find_rule(const Category& left,
                                            const Category& right,
                                            RuleDir dir) {
  const Category& operand = dir == RuleDir::forward ? right : left;
  const std::size_t cap = arity(operand);
  for (std::size_t n = 0; n <= cap; ++n) {
    const RuleUse rule{dir, n};
    auto m = detail::match_rule(left, right, rule);
    if (m) return Combination{rule, m->result};
  }
  return std::nullopt;
}

}  // namespace ccg
