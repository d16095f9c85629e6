#pragma once

// Random generators for property suites: categories, well-formed derivations
// with mixed directions and degrees, and random bracketings of chains. All
// take an explicit engine so suites are reproducible from a seed.
//
// Derivations generate top-down from a target category: a node of category C
// splits, in the chosen direction and degree k, into X/Y and Y|Z1..Zk (the
// Zs being C's own outer arguments, Y fresh), so every generated tree is
// well-formed by construction at any degree mix.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/derivation.hpp"
#include "ccg/oracle.hpp"
#include "ccg/rules.hpp"

namespace ccg {

using Rng = std::mt19937_64;

struct GenOptions {
  std::size_t max_degree = 3;
  std::size_t max_cat_depth = 2;
  std::vector<std::string> atoms = {"a", "b", "c", "d", "e", "f"};
};

inline Category random_category(Rng& rng, std::size_t max_depth,
                                const GenOptions& opts = GenOptions()) {
  std::uniform_int_distribution<std::size_t> pick_atom(0,
                                                       opts.atoms.size() - 1);
  if (max_depth == 0 || std::uniform_int_distribution<int>(0, 2)(rng) == 0)
    return Category::atom(opts.atoms[pick_atom(rng)]);
  const Slash s = std::uniform_int_distribution<int>(0, 1)(rng)
                      ? Slash::forward
                      : Slash::backward;
  return Category::make(random_category(rng, max_depth - 1, opts), s,
                        random_category(rng, max_depth - 1, opts));
}

namespace detail {

// Direction runs, left-heavy splits, and composition degrees >= 1 are all
// over-weighted: they are what produces redexes, and an unbiased draw leaves
// the rewrite suites with mostly trivial normal forms.
inline Derivation gen_derivation_rec(const Category& cat,
                                     std::size_t internal, Rng& rng,
                                     const GenOptions& opts,
                                     std::size_t& leaf_counter,
                                     const RuleDir* parent_dir) {
  if (internal == 0)
    return Derivation::leaf("w" + std::to_string(leaf_counter++), cat);
  const std::size_t max_k = std::min(arity(cat), opts.max_degree);
  std::uniform_int_distribution<std::size_t> pick_degree(0, max_k);
  std::size_t k = pick_degree(rng);
  if (k == 0 && max_k >= 1 && std::uniform_int_distribution<int>(0, 1)(rng))
    k = pick_degree(rng);
  std::uniform_int_distribution<int> percent(0, 99);
  RuleDir dir;
  if (parent_dir && percent(rng) < 70)
    dir = *parent_dir;
  else
    dir = std::uniform_int_distribution<int>(0, 1)(rng) ? RuleDir::forward
                                                        : RuleDir::backward;
  const Category x = *peel(cat, k);
  const auto zs = *outer_args(cat, k);
  const Category y = random_category(rng, opts.max_cat_depth, opts);
  Category functor = Category::make(
      x, dir == RuleDir::forward ? Slash::forward : Slash::backward, y);
  Category operand = attach(y, zs);
  const Category left_cat = dir == RuleDir::forward ? functor : operand;
  const Category right_cat = dir == RuleDir::forward ? operand : functor;
  std::size_t left_internal;
  if (percent(rng) < 35)
    left_internal = internal - 1;
  else
    left_internal =
        std::uniform_int_distribution<std::size_t>(0, internal - 1)(rng);
  Derivation left = gen_derivation_rec(left_cat, left_internal, rng, opts,
                                       leaf_counter, &dir);
  Derivation right =
      gen_derivation_rec(right_cat, internal - 1 - left_internal, rng, opts,
                         leaf_counter, &dir);
  return make_node(RuleUse{dir, k}, left, right);
}

}  // namespace detail

// A random well-formed derivation with exactly `internal` internal nodes.
inline Derivation random_derivation(Rng& rng, std::size_t internal,
                                    const GenOptions& opts = GenOptions()) {
  std::size_t leaf_counter = 0;
  const Category root = random_category(rng, opts.max_cat_depth, opts);
  return detail::gen_derivation_rec(root, internal, rng, opts, leaf_counter,
                                    nullptr);
}

namespace detail {

inline Derivation random_shape_rec(const std::vector<LexItem>& items,
                                   std::size_t begin, std::size_t end,
                                   Rng& rng, const RuleConfig& config) {
  if (end - begin == 1)
    return Derivation::leaf(items[begin].word, items[begin].cat);
  const std::size_t mid =
      std::uniform_int_distribution<std::size_t>(begin + 1, end - 1)(rng);
  Derivation left = random_shape_rec(items, begin, mid, rng, config);
  Derivation right = random_shape_rec(items, mid, end, rng, config);
  auto combs = enumerate_combinations(left.cat(), right.cat(), config);
  if (combs.empty())
    throw DerivationError("item sequence does not combine at every split");
  return make_node(combs.front().rule, left, right);
}

}  // namespace detail

// A uniformly random bracketing of an item sequence whose every split
// combines (chains qualify).
inline Derivation random_chain_shape(const std::vector<LexItem>& items,
                                     Rng& rng,
                                     const RuleConfig& config = RuleConfig()) {
  if (items.empty()) throw DerivationError("empty item sequence");
  return detail::random_shape_rec(items, 0, items.size(), rng, config);
}

}  // namespace ccg
