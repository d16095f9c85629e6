#pragma once

// Brute-force ground truth: exhaustive enumeration of whole derivations over
// a category sequence (all bracketings, all applicable rules per split) and
// exhaustive exploration of every maximal contraction sequence. Both are
// guarded against exponential blowup and exist to validate the parser, the
// rewrite bounds, and confluence — not for production parsing.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccg/derivation.hpp"
#include "ccg/errors.hpp"
#include "ccg/rewrite.hpp"
#include "ccg/rules.hpp"
#include "ccg/semterm.hpp"

namespace ccg {

struct LexItem {
  std::string word;
  Category cat;
};

namespace detail {

class SpanEnumerator {
public:
  SpanEnumerator(const std::vector<LexItem>& items, const RuleConfig& config)
      : items_(items), config_(config) {}

  // Derivation sets for identical spans are computed once.
  const std::vector<Derivation>& span(std::size_t start, std::size_t end) {
    auto key = start * (items_.size() + 1) + end;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Derivation> out;
    if (end - start == 1) {
      out.push_back(Derivation::leaf(items_[start].word, items_[start].cat));
    } else {
      for (std::size_t mid = start + 1; mid < end; ++mid) {
        const auto& lefts = span(start, mid);
        const auto& rights = span(mid, end);
        for (const Derivation& l : lefts)
          for (const Derivation& r : rights)
            for (const Combination& comb :
                 enumerate_combinations(l.cat(), r.cat(), config_))
              out.push_back(make_node(comb.rule, l, r));
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

private:
  const std::vector<LexItem>& items_;
  const RuleConfig& config_;
  std::unordered_map<std::size_t, std::vector<Derivation>> memo_;
};

}  // namespace detail

// Every derivation spanning the whole sequence. Whole derivations are
// materialized deliberately, redundancy and all: the unit of comparison in
// this artifact is the derivation, not the chart edge.
inline std::vector<Derivation> enumerate_all(const std::vector<LexItem>& items,
                                             const RuleConfig& config,
                                             std::size_t max_items = 10) {
  if (items.empty()) return {};
  if (items.size() > max_items)
    throw GuardError("enumeration guard exceeded: " +
                     std::to_string(items.size()) + " items > " +
                     std::to_string(max_items));
  detail::SpanEnumerator spans(items, config);
  return spans.span(0, items.size());
}

// Result of exploring every maximal contraction sequence from a derivation.
// Sequence counts grow combinatorially, so lengths come back as a
// length -> count table rather than a flat list.
struct SequenceSearch {
  std::map<std::size_t, std::uint64_t> length_counts;
  std::vector<Derivation> terminal_forms;  // distinct normal forms reached

  std::size_t max_length() const {
    return length_counts.empty() ? 0 : length_counts.rbegin()->first;
  }
  std::size_t min_length() const {
    return length_counts.empty() ? 0 : length_counts.begin()->first;
  }
  std::uint64_t total_sequences() const {
    std::uint64_t n = 0;
    for (auto& [len, count] : length_counts) n += count;
    return n;
  }
};

namespace detail {

struct SequenceMemo {
  std::map<std::size_t, std::uint64_t> length_counts;
  std::vector<std::string> terminal_digests;
};

inline const SequenceMemo& search_sequences(
    const Derivation& d, const RuleConfig& config,
    std::unordered_map<std::string, SequenceMemo>& memo,
    std::unordered_map<std::string, Derivation>& terminals) {
  const std::string key = digest(d);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  SequenceMemo result;
  const auto redexes = find_redexes(d);
  if (redexes.empty()) {
    result.length_counts[0] = 1;
    result.terminal_digests.push_back(key);
    terminals.emplace(key, d);
  } else {
    for (const Position& p : redexes) {
      const Derivation next = contract(d, p, config);
      const SequenceMemo& sub = search_sequences(next, config, memo, terminals);
      for (auto& [len, count] : sub.length_counts)
        result.length_counts[len + 1] += count;
      for (auto& t : sub.terminal_digests)
        if (std::find(result.terminal_digests.begin(),
                      result.terminal_digests.end(),
                      t) == result.terminal_digests.end())
          result.terminal_digests.push_back(t);
    }
  }
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

// Exhaustively explores every maximal contraction sequence.
inline SequenceSearch all_rewrite_sequences(const Derivation& d,
                                            const RuleConfig& config =
                                                RuleConfig::unrestricted(),
                                            std::size_t max_internal = 6) {
  if (d.internal_count() > max_internal)
    throw GuardError("sequence search guard exceeded: " +
                     std::to_string(d.internal_count()) +
                     " internal nodes > " + std::to_string(max_internal));
  std::unordered_map<std::string, detail::SequenceMemo> memo;
  std::unordered_map<std::string, Derivation> terminals;
  const auto& root = detail::search_sequences(d, config, memo, terminals);
  SequenceSearch out;
  out.length_counts = root.length_counts;
  for (auto& t : root.terminal_digests) out.terminal_forms.push_back(terminals.at(t));
  return out;
}

// Partitions derivations sharing one frontier and root category into
// truth-conditional equivalence classes.
inline std::vector<std::vector<Derivation>> sem_partition(
    const std::vector<Derivation>& derivs) {
  std::vector<std::vector<Derivation>> classes;
  std::vector<std::string> keys;
  for (const Derivation& d : derivs) {
    const std::size_t ar = arity(d.cat());
    const std::string key = format_semterm(saturate_reduce(d.sem(), ar));
    bool placed = false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (keys[i] == key) {
        classes[i].push_back(d);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back({d});
      keys.push_back(key);
    }
  }
  return classes;
}

// The free associative chain x0/x1, x1/x2, ...: every bracketing of it is a
// valid derivation, which makes it the canonical stress input for the
// rewrite suites. With `terminal_atom` the last item is the bare atom, mixing
// degree-0 applications into the chain.
inline std::vector<LexItem> forward_chain(std::size_t items,
                                          bool terminal_atom = false,
                                          const std::string& prefix = "x") {
  std::vector<LexItem> out;
  for (std::size_t i = 0; i < items; ++i) {
    const Category from = Category::atom(prefix + std::to_string(i));
    if (terminal_atom && i + 1 == items) {
      out.push_back({"w" + std::to_string(i), from});
    } else {
      const Category to = Category::atom(prefix + std::to_string(i + 1));
      out.push_back(
          {"w" + std::to_string(i), Category::make(from, Slash::forward, to)});
    }
  }
  return out;
}

// Mirror image: items x1\x0, x2\x1, ... combine all-backward in any
// bracketing.
inline std::vector<LexItem> backward_chain(std::size_t items,
                                           const std::string& prefix = "x") {
  std::vector<LexItem> out;
  for (std::size_t i = 0; i < items; ++i) {
    const Category from = Category::atom(prefix + std::to_string(i));
    const Category to = Category::atom(prefix + std::to_string(i + 1));
    out.push_back(
        {"w" + std::to_string(i), Category::make(to, Slash::backward, from)});
  }
  return out;
}

// Fully left-branching / right-branching derivations over a sequence whose
// adjacent spans all combine (chains do).
inline Derivation left_comb(const std::vector<LexItem>& items,
                            const RuleConfig& config = RuleConfig()) {
  if (items.empty()) throw DerivationError("empty item sequence");
  Derivation d = Derivation::leaf(items[0].word, items[0].cat);
  for (std::size_t i = 1; i < items.size(); ++i) {
    const Derivation leaf = Derivation::leaf(items[i].word, items[i].cat);
    auto combs = enumerate_combinations(d.cat(), leaf.cat(), config);
    if (combs.empty())
      throw DerivationError("left comb stuck at item " + std::to_string(i));
    d = make_node(combs.front().rule, d, leaf);
  }
  return d;
}

inline Derivation right_comb(const std::vector<LexItem>& items,
                             const RuleConfig& config = RuleConfig()) {
  if (items.empty()) throw DerivationError("empty item sequence");
  const std::size_t last = items.size() - 1;
  Derivation d = Derivation::leaf(items[last].word, items[last].cat);
  for (std::size_t i = last; i-- > 0;) {
    const Derivation leaf = Derivation::leaf(items[i].word, items[i].cat);
    auto combs = enumerate_combinations(leaf.cat(), d.cat(), config);
    if (combs.empty())
      throw DerivationError("right comb stuck at item " + std::to_string(i));
    d = make_node(combs.front().rule, leaf, d);
  }
  return d;
}

}  // namespace ccg
