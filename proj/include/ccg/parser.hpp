#pragma once

// The incremental parser. It maintains a set of parallel analyses — each a
// sequence of derivations covering the prefix consumed so far — and runs two
// operations per word:
//
//   scan     replace each analysis by one copy per lexical entry of the new
//            word, the entry's leaf appended rightmost;
//   combine  repeatedly add, for every analysis, every combination of its
//            rightmost two constituents (originals retained) until fixpoint.
//
// Under the eager policy an analysis whose rightmost two constituents could
// combine but did not is then discarded, which keeps exactly the maximally
// left-branching (most incremental) analyses. When a leftward-looking
// constituent X\Y arrives that cannot combine with its neighbor directly,
// the neighbor derivation is rewritten to right-branching normal form and
// the modifier is adjoined at each right-frontier node of category X —
// provided the modifier is endocentric (X\X). Non-endocentric attachment is
// refused: it would retract an argument commitment already made, which is
// exactly the non-monotonic reanalysis this parser rules out.
//
// An optional viability model filters analyses right after each scan,
// discarding those whose category signature has only ever led to failure.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ccg/derivation.hpp"
#include "ccg/errors.hpp"
#include "ccg/lexicon.hpp"
#include "ccg/rewrite.hpp"
#include "ccg/rules.hpp"
#include "ccg/viability.hpp"

namespace ccg {

struct Analysis {
  std::vector<Derivation> constituents;

  std::vector<FrontierItem> frontier() const {
    std::vector<FrontierItem> out;
    for (const Derivation& d : constituents) collect_frontier(d, out);
    return out;
  }

  std::vector<std::string> frontier_words() const {
    std::vector<std::string> out;
    for (auto& item : frontier()) out.push_back(item.word);
    return out;
  }

  std::vector<std::string> categories() const {
    std::vector<std::string> out;
    for (const Derivation& d : constituents)
      out.push_back(format_category(d.cat()));
    return out;
  }

  std::string digest() const {
    std::string out;
    for (const Derivation& d : constituents) {
      out += ccg::digest(d);
      out += ':';
    }
    return out;
  }

  friend bool operator==(const Analysis& a, const Analysis& b) {
    return a.constituents == b.constituents;
  }
};

enum class TraceKind {
  scanned,
  combined,
  revealed,
  attached,
  discarded_viability,
  discarded_eager,
  refused_nonendocentric,
};

inline const char* trace_kind_name(TraceKind k) {
  switch (k) {
    case TraceKind::scanned: return "scanned";
    case TraceKind::combined: return "combined";
    case TraceKind::revealed: return "revealed";
    case TraceKind::attached: return "attached";
    case TraceKind::discarded_viability: return "discarded_viability";
    case TraceKind::discarded_eager: return "discarded_eager";
    case TraceKind::refused_nonendocentric: return "refused_nonendocentric";
  }
  return "?";
}

// Append-only, ordered event log entry: what happened, at which word, to an
// analysis with which constituent categories.
struct TraceEvent {
  TraceKind kind;
  std::size_t word_index = 0;
  std::vector<std::string> cats;
  std::string note;
};

struct ParsePolicy {
  enum class Mode { exhaustive, eager };

  Mode mode = Mode::eager;
  bool reveal_enabled = true;
  bool endocentric_only = true;
  std::shared_ptr<const ViabilityModel> viability;

  static ParsePolicy exhaustive() {
    ParsePolicy p;
    p.mode = Mode::exhaustive;
    p.reveal_enabled = false;
    return p;
  }
  static ParsePolicy eager() { return ParsePolicy{}; }

  // Revealing rides on the eager left-branching policy.
  void validate() const {
    if (reveal_enabled && mode != Mode::eager)
      throw ConfigError("reveal requires eager mode");
  }
};

struct ParserState {
  std::vector<Analysis> analyses;
  std::vector<std::string> consumed;
  std::vector<TraceEvent> trace;

  std::size_t current_word_index() const {
    return consumed.empty() ? 0 : consumed.size() - 1;
  }
};

inline AnalysisSignature signature_of(const Analysis& a, std::size_t k) {
  const std::size_t n = a.constituents.size();
  const std::size_t take = std::min(k, n);
  AnalysisSignature sig;
  for (std::size_t i = n - take; i < n; ++i)
    sig.push_back(format_category(a.constituents[i].cat()));
  return sig;
}

inline bool is_viable(const ViabilityModel& m, const Analysis& a) {
  return is_viable(m, signature_of(a, m.k));
}

namespace detail {

inline bool push_unique(std::vector<Analysis>& out,
                        std::vector<std::string>& digests, Analysis a) {
  std::string d = a.digest();
  if (std::find(digests.begin(), digests.end(), d) != digests.end())
    return false;
  digests.push_back(std::move(d));
  out.push_back(std::move(a));
  return true;
}

}  // namespace detail

// Fig-style scan: one copy of every analysis per lexical entry of the word,
// with the entry's leaf appended rightmost. The initial empty state yields
// one analysis per entry.
inline ParserState scan(ParserState state, const std::string& word,
                        const Lexicon& lex) {
  auto it = lex.entries.find(word);
  if (it == lex.entries.end())
    throw UnknownWordError(word, state.consumed.size());
  const std::size_t index = state.consumed.size();
  std::vector<Analysis> next;
  std::vector<std::string> digests;
  const bool initial = state.analyses.empty() && state.consumed.empty();
  auto extend = [&](const Analysis& base) {
    for (const LexEntry& entry : it->second) {
      Analysis a = base;
      a.constituents.push_back(Derivation::leaf(word, entry.cat, entry.sem));
      if (detail::push_unique(next, digests, a))
        state.trace.push_back(
            {TraceKind::scanned, index, next.back().categories(), word});
    }
  };
  if (initial) {
    extend(Analysis{});
  } else {
    for (const Analysis& a : state.analyses) extend(a);
  }
  state.analyses = std::move(next);
  state.consumed.push_back(word);
  return state;
}

// Combination closure: for every analysis with at least two constituents,
// every rule combining the rightmost two adds the combined variant (the
// original is retained) until fixpoint, with structural deduplication. In
// eager mode, analyses whose rightmost two constituents still admit some
// combination are then discarded.
inline ParserState combine_closure(ParserState state,
                                   const ParsePolicy& policy,
                                   const RuleConfig& rules = RuleConfig()) {
  const std::size_t index = state.current_word_index();
  std::vector<Analysis> all;
  std::vector<std::string> digests;
  for (Analysis& a : state.analyses)
    detail::push_unique(all, digests, std::move(a));
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].constituents.size() < 2) continue;
    const Derivation& l = all[i].constituents[all[i].constituents.size() - 2];
    const Derivation& r = all[i].constituents.back();
    for (const Combination& comb :
         enumerate_combinations(l.cat(), r.cat(), rules)) {
      Analysis combined = all[i];
      Derivation node = make_node(comb.rule, l, r);
      combined.constituents.pop_back();
      combined.constituents.back() = std::move(node);
      if (detail::push_unique(all, digests, std::move(combined)))
        state.trace.push_back({TraceKind::combined, index,
                               all.back().categories(), comb.rule.name()});
    }
  }
  if (policy.mode == ParsePolicy::Mode::eager) {
    std::vector<Analysis> kept;
    for (Analysis& a : all) {
      bool combinable = false;
      if (a.constituents.size() >= 2) {
        const Derivation& l = a.constituents[a.constituents.size() - 2];
        const Derivation& r = a.constituents.back();
        combinable = !enumerate_combinations(l.cat(), r.cat(), rules).empty();
      }
      if (combinable)
        state.trace.push_back(
            {TraceKind::discarded_eager, index, a.categories(), ""});
      else
        kept.push_back(std::move(a));
    }
    all = std::move(kept);
  }
  state.analyses = std::move(all);
  return state;
}

// Removes analyses the model deems non-viable. No rescue: an empty state is
// a possible (and meaningful) outcome.
inline ParserState filter_state(ParserState state, const ViabilityModel& m) {
  const std::size_t index = state.current_word_index();
  std::vector<Analysis> kept;
  for (Analysis& a : state.analyses) {
    if (is_viable(m, a)) {
      kept.push_back(std::move(a));
    } else {
      state.trace.push_back(
          {TraceKind::discarded_viability, index, a.categories(), ""});
    }
  }
  state.analyses = std::move(kept);
  return state;
}

// Revealing: the analysis's rightmost constituent must be leftward-looking
// (X\Y). If it is endocentric (X\X), the next-to-rightmost derivation is
// rewritten to right-branching normal form, whose right frontier provides
// all grammatically possible attachment sites; the modifier is adjoined at
// every node of category X, low and high attachments each yielding one
// analysis. The spine above the site rebuilds with its original rules — an
// X\X maps X to X, so the categories along it cannot change. Everything the
// old derivation committed to stays committed: adjunction only adds.
inline std::vector<Analysis> reveal_attach(
    const Analysis& a, const ParsePolicy& policy,
    const RuleConfig& rules = RuleConfig(),
    std::vector<TraceEvent>* trace = nullptr, std::size_t word_index = 0) {
  std::vector<Analysis> out;
  if (a.constituents.size() < 2) return out;
  const Derivation& modifier = a.constituents.back();
  const Category mcat = modifier.cat();
  if (mcat.is_atom() || mcat.slash() != Slash::backward) return out;
  const Category target = mcat.argument();
  if (policy.endocentric_only && mcat.result() != target) {
    if (trace)
      trace->push_back({TraceKind::refused_nonendocentric, word_index,
                        a.categories(), format_category(mcat)});
    return out;
  }
  const Derivation& neighbor = a.constituents[a.constituents.size() - 2];
  const Derivation nf =
      normalize(neighbor, RewriteStrategy::root_first(), rules).normal_form;
  if (trace)
    trace->push_back({TraceKind::revealed, word_index, a.categories(),
                      format_category(nf.cat())});
  for (const FrontierSite& site : right_frontier(nf)) {
    if (site.cat != target) continue;
    const Derivation at = node_at(nf, site.pos);
    auto comb = find_rule(at.cat(), mcat, RuleDir::backward);
    if (!comb || !rules.allows(comb->rule)) continue;
    Derivation adjoined = make_node(comb->rule, at, modifier);
    Derivation rebuilt = nf;
    try {
      rebuilt = replace_at(nf, site.pos, adjoined);
    } catch (const DerivationError&) {
      // Only reachable with endocentric_only off: a non-endocentric
      // modifier changed the site's category and the spine above no longer
      // derives. Not an attachment site.
      continue;
    }
    Analysis result = a;
    result.constituents.pop_back();
    result.constituents.back() = std::move(rebuilt);
    if (trace)
      trace->push_back({TraceKind::attached, word_index, result.categories(),
                        format_position(site.pos)});
    out.push_back(std::move(result));
  }
  return out;
}

struct AnalysisSummary {
  std::vector<std::string> cats;
  std::vector<std::string> digests;
};

struct WordSnapshot {
  std::size_t word_index = 0;
  std::string word;
  std::vector<AnalysisSummary> analyses;
};

struct ParseResult {
  std::vector<WordSnapshot> snapshots;
  std::vector<Analysis> final_analyses;
  std::vector<Derivation> complete;  // single-constituent goal analyses
  std::vector<TraceEvent> trace;
};

// Full incremental parse: scan, viability filter (if configured), combine
// closure, and — in eager mode — reveal/attach whenever a surviving
// analysis's rightmost constituent is leftward-looking and did not combine
// directly. Throws UnknownWordError and StuckError.
inline ParseResult parse(const std::vector<std::string>& words,
                         const Lexicon& lex, const ParsePolicy& policy,
                         const RuleConfig& rules = RuleConfig(),
                         std::size_t max_analyses = 100000) {
  policy.validate();
  ParserState state;
  ParseResult result;
  for (const std::string& word : words) {
    state = scan(std::move(state), word, lex);
    const std::size_t index = state.current_word_index();
    if (policy.viability) state = filter_state(std::move(state), *policy.viability);
    std::vector<std::string> reveal_seen;
    for (;;) {
      state = combine_closure(std::move(state), policy, rules);
      if (policy.mode != ParsePolicy::Mode::eager || !policy.reveal_enabled)
        break;
      std::vector<Analysis> additions;
      for (const Analysis& a : state.analyses) {
        if (a.constituents.size() < 2) continue;
        const Category last = a.constituents.back().cat();
        if (last.is_atom() || last.slash() != Slash::backward) continue;
        const Derivation& l = a.constituents[a.constituents.size() - 2];
        if (!enumerate_combinations(l.cat(), a.constituents.back().cat(), rules)
                 .empty())
          continue;
        std::string key = a.digest();
        if (std::find(reveal_seen.begin(), reveal_seen.end(), key) !=
            reveal_seen.end())
          continue;
        reveal_seen.push_back(std::move(key));
        auto revealed =
            reveal_attach(a, policy, rules, &state.trace, index);
        additions.insert(additions.end(), revealed.begin(), revealed.end());
      }
      std::vector<std::string> digests;
      for (const Analysis& a : state.analyses) digests.push_back(a.digest());
      bool grew = false;
      for (Analysis& a : additions)
        grew |= detail::push_unique(state.analyses, digests, std::move(a));
      if (!grew) break;
    }
    if (state.analyses.empty()) {
      std::string tail;
      const std::size_t first =
          state.trace.size() > 5 ? state.trace.size() - 5 : 0;
      for (std::size_t i = first; i < state.trace.size(); ++i) {
        const TraceEvent& e = state.trace[i];
        if (!tail.empty()) tail += ", ";
        tail += trace_kind_name(e.kind);
        tail += "@";
        tail += std::to_string(e.word_index);
        tail += "[";
        for (std::size_t c = 0; c < e.cats.size(); ++c) {
          if (c) tail += ' ';
          tail += e.cats[c];
        }
        tail += "]";
      }
      throw StuckError(word, index, tail);
    }
    if (state.analyses.size() > max_analyses)
      throw GuardError("analysis budget exceeded at word " +
                       std::to_string(index) + ": " +
                       std::to_string(state.analyses.size()) + " analyses");
    WordSnapshot snap{index, word, {}};
    for (const Analysis& a : state.analyses) {
      AnalysisSummary s{a.categories(), {}};
      for (const Derivation& d : a.constituents) s.digests.push_back(digest(d));
      snap.analyses.push_back(std::move(s));
    }
    result.snapshots.push_back(std::move(snap));
  }
  for (const Analysis& a : state.analyses) {
    if (a.constituents.size() == 1 && lex.is_goal(a.constituents[0].cat()))
      result.complete.push_back(a.constituents[0]);
  }
  result.final_analyses = std::move(state.analyses);
  result.trace = std::move(state.trace);
  return result;
}

inline ParseResult parse(const std::string& sentence, const Lexicon& lex,
                         const ParsePolicy& policy,
                         const RuleConfig& rules = RuleConfig()) {
  return parse(tokenize(sentence), lex, policy, rules);
}

}  // namespace ccg
