#pragma once

// Viability training: run the parser exhaustively (no filtering) over a
// corpus, tracking lineage between analysis snapshots; an intermediate
// analysis is labeled a success if some complete goal analysis descends from
// it, and a failure otherwise. Each label increments its signature's count.
// Training is additive, so models can be grown corpus by corpus.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ccg/lexicon.hpp"
#include "ccg/parser.hpp"
#include "ccg/viability.hpp"

namespace ccg {

struct TrainStats {
  std::size_t sentences = 0;
  std::size_t skipped = 0;
  std::vector<std::string> warnings;
};

namespace detail {

struct SnapshotRec {
  AnalysisSignature sig;
  std::vector<std::size_t> parents;  // all producers, across dedup merges
  bool success = false;
};

struct TrainRound {
  std::vector<Analysis> analyses;
  std::vector<std::string> digests;
  std::vector<std::size_t> rec_ids;
};

inline std::size_t round_insert(TrainRound& round,
                                std::vector<SnapshotRec>& recs, Analysis a,
                                std::size_t parent, bool has_parent,
                                std::size_t k) {
  std::string d = a.digest();
  for (std::size_t i = 0; i < round.digests.size(); ++i) {
    if (round.digests[i] == d) {
      if (has_parent) {
        auto& parents = recs[round.rec_ids[i]].parents;
        if (std::find(parents.begin(), parents.end(), parent) ==
            parents.end())
          parents.push_back(parent);
      }
      return round.rec_ids[i];
    }
  }
  SnapshotRec rec;
  rec.sig = signature_of(a, k);
  if (has_parent) rec.parents.push_back(parent);
  recs.push_back(std::move(rec));
  round.digests.push_back(std::move(d));
  round.analyses.push_back(std::move(a));
  round.rec_ids.push_back(recs.size() - 1);
  return recs.size() - 1;
}

}  // namespace detail

// Trains m on one sentence; returns false (leaving m untouched) when the
// sentence has no exhaustive parse or trips the analysis budget.
inline bool train_sentence(const std::vector<std::string>& words,
                           const Lexicon& lex, ViabilityModel& m,
                           const RuleConfig& rules = RuleConfig(),
                           std::string* warning = nullptr,
                           std::size_t max_analyses = 100000) {
  std::vector<detail::SnapshotRec> recs;
  detail::TrainRound current;
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    auto it = lex.entries.find(words[wi]);
    if (it == lex.entries.end()) {
      if (warning)
        *warning = "unknown word '" + words[wi] + "' at position " +
                   std::to_string(wi);
      return false;
    }
    detail::TrainRound next;
    auto extend = [&](const Analysis& base, std::size_t parent,
                      bool has_parent) {
      for (const LexEntry& entry : it->second) {
        Analysis a = base;
        a.constituents.push_back(
            Derivation::leaf(words[wi], entry.cat, entry.sem));
        detail::round_insert(next, recs, std::move(a), parent, has_parent,
                             m.k);
      }
    };
    if (wi == 0) {
      extend(Analysis{}, 0, false);
    } else {
      for (std::size_t i = 0; i < current.analyses.size(); ++i)
        extend(current.analyses[i], current.rec_ids[i], true);
    }
    // Exhaustive combination closure with lineage.
    for (std::size_t i = 0; i < next.analyses.size(); ++i) {
      if (next.analyses[i].constituents.size() < 2) continue;
      const Analysis& a = next.analyses[i];
      const Derivation& l = a.constituents[a.constituents.size() - 2];
      const Derivation& r = a.constituents.back();
      for (const Combination& comb :
           enumerate_combinations(l.cat(), r.cat(), rules)) {
        Analysis combined = a;
        Derivation node = make_node(comb.rule, l, r);
        combined.constituents.pop_back();
        combined.constituents.back() = std::move(node);
        detail::round_insert(next, recs, std::move(combined),
                             next.rec_ids[i], true, m.k);
      }
      if (next.analyses.size() > max_analyses) {
        if (warning)
          *warning = "analysis budget exceeded at word " + std::to_string(wi);
        return false;
      }
    }
    current = std::move(next);
  }
  // Label: successes are the ancestors of complete goal analyses.
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < current.analyses.size(); ++i) {
    const Analysis& a = current.analyses[i];
    if (a.constituents.size() == 1 && lex.is_goal(a.constituents[0].cat()))
      queue.push_back(current.rec_ids[i]);
  }
  if (queue.empty()) {
    if (warning) *warning = "no complete parse";
    return false;
  }
  while (!queue.empty()) {
    const std::size_t id = queue.back();
    queue.pop_back();
    if (recs[id].success) continue;
    recs[id].success = true;
    for (std::size_t p : recs[id].parents) queue.push_back(p);
  }
  for (const detail::SnapshotRec& rec : recs) {
    auto& counts = m.counts[rec.sig];
    if (rec.success)
      ++counts.successes;
    else
      ++counts.failures;
  }
  return true;
}

inline ViabilityModel train(const std::vector<std::vector<std::string>>& corpus,
                            const Lexicon& lex, ViabilityModel m,
                            const RuleConfig& rules = RuleConfig(),
                            TrainStats* stats = nullptr) {
  for (const auto& words : corpus) {
    std::string warning;
    if (train_sentence(words, lex, m, rules, &warning)) {
      if (stats) ++stats->sentences;
    } else {
      if (stats) {
        ++stats->skipped;
        std::string sentence;
        for (const auto& w : words) {
          if (!sentence.empty()) sentence += ' ';
          sentence += w;
        }
        stats->warnings.push_back("skipped '" + sentence + "': " + warning);
      }
    }
  }
  return m;
}

}  // namespace ccg
