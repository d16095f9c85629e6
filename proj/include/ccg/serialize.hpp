#pragma once

// JSON forms of the engine's values. Derivations serialize as nested
// objects — leaves as {"word","cat"[,"sem"]}, internal nodes as
// {"rule","cat","left","right"} — and deserialize through make_node, so a
// tampered file cannot produce an ill-formed tree: categories and semantics
// are recomputed and any stored category is verified against them.

#include <string>

#include <json.hpp>

#include "ccg/config.hpp"
#include "ccg/derivation.hpp"
#include "ccg/errors.hpp"
#include "ccg/parser.hpp"
#include "ccg/rewrite.hpp"

namespace ccg {

using json = nlohmann::json;

inline json derivation_to_json(const Derivation& d) {
  if (d.is_leaf()) {
    json j{{"word", d.word()}, {"cat", format_category(d.cat())}};
    if (d.sem().kind() != SemTerm::Kind::constant ||
        d.sem().name() != d.word())
      j["sem"] = format_semterm(d.sem());
    return j;
  }
  return json{{"rule", d.rule().name()},
              {"cat", format_category(d.cat())},
              {"left", derivation_to_json(d.left())},
              {"right", derivation_to_json(d.right())}};
}

inline Derivation derivation_from_json(const json& j) {
  if (!j.is_object()) throw Error("derivation node must be an object");
  if (j.contains("word")) {
    const std::string word = j.at("word").get<std::string>();
    const Category cat = parse_category(j.at("cat").get<std::string>());
    if (j.contains("sem"))
      return Derivation::leaf(word, cat,
                              SemTerm::constant(j.at("sem").get<std::string>()));
    return Derivation::leaf(word, cat);
  }
  if (!j.contains("rule") || !j.contains("left") || !j.contains("right"))
    throw Error("derivation node needs rule/left/right or word/cat");
  const auto rule = parse_rule_name(j.at("rule").get<std::string>());
  if (!rule) throw Error("bad rule name: " + j.at("rule").dump());
  Derivation left = derivation_from_json(j.at("left"));
  Derivation right = derivation_from_json(j.at("right"));
  Derivation node = make_node(*rule, left, right);
  if (j.contains("cat")) {
    const Category stored = parse_category(j.at("cat").get<std::string>());
    if (stored != node.cat())
      throw Error("stored category " + format_category(stored) +
                  " disagrees with recomputed " +
                  format_category(node.cat()));
  }
  return node;
}

inline json rewrite_report_to_json(const RewriteReport& report) {
  return json{{"steps", report.steps},
              {"sigma_trace", report.sigma_trace},
              {"normal_form", derivation_to_json(report.normal_form)}};
}

inline json trace_event_to_json(const TraceEvent& e) {
  json j{{"event", trace_kind_name(e.kind)},
         {"word_index", e.word_index},
         {"cats", e.cats}};
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline json snapshot_to_json(const WordSnapshot& snap) {
  json analyses = json::array();
  for (const AnalysisSummary& a : snap.analyses)
    analyses.push_back(json{{"cats", a.cats}, {"digests", a.digests}});
  return json{{"record", "snapshot"},
              {"word_index", snap.word_index},
              {"word", snap.word},
              {"analyses", analyses}};
}

inline json rule_config_to_json(const RuleConfig& rc) {
  json blocked = json::array();
  for (const RuleUse& r : rc.blocked) blocked.push_back(r.name());
  return json{{"max_degree", rc.max_degree}, {"blocked", blocked}};
}

inline RuleConfig rule_config_from_json(const json& j) {
  RuleConfig rc;
  rc.max_degree = j.value("max_degree", rc.max_degree);
  if (j.contains("blocked"))
    for (const auto& name : j.at("blocked")) {
      auto rule = parse_rule_name(name.get<std::string>());
      if (!rule) throw ConfigError("bad blocked rule name: " + name.dump());
      rc.blocked.insert(*rule);
    }
  return rc;
}

inline json engine_config_to_json(const EngineConfig& cfg) {
  return json{
      {"rules", rule_config_to_json(cfg.rules)},
      {"policy",
       json{{"mode", cfg.policy.mode == ParsePolicy::Mode::eager
                         ? "eager"
                         : "exhaustive"},
            {"reveal", cfg.policy.reveal_enabled},
            {"endocentric_only", cfg.policy.endocentric_only}}},
      {"viability_model", cfg.viability_model_path},
      {"k", cfg.k},
      {"threshold", cfg.threshold},
      {"guards", json{{"max_enum_items", cfg.guards.max_enum_items},
                      {"max_sequence_nodes", cfg.guards.max_sequence_nodes},
                      {"max_analyses", cfg.guards.max_analyses}}}};
}

inline EngineConfig engine_config_from_json(const json& j) {
  EngineConfig cfg;
  if (j.contains("rules")) cfg.rules = rule_config_from_json(j.at("rules"));
  if (j.contains("policy")) {
    const json& p = j.at("policy");
    const std::string mode = p.value("mode", "eager");
    if (mode == "eager")
      cfg.policy.mode = ParsePolicy::Mode::eager;
    else if (mode == "exhaustive")
      cfg.policy.mode = ParsePolicy::Mode::exhaustive;
    else
      throw ConfigError("bad policy mode: " + mode);
    cfg.policy.reveal_enabled = p.value("reveal", cfg.policy.reveal_enabled);
    cfg.policy.endocentric_only =
        p.value("endocentric_only", cfg.policy.endocentric_only);
  }
  cfg.viability_model_path = j.value("viability_model", std::string());
  cfg.k = j.value("k", cfg.k);
  cfg.threshold = j.value("threshold", cfg.threshold);
  if (j.contains("guards")) {
    const json& g = j.at("guards");
    cfg.guards.max_enum_items =
        g.value("max_enum_items", cfg.guards.max_enum_items);
    cfg.guards.max_sequence_nodes =
        g.value("max_sequence_nodes", cfg.guards.max_sequence_nodes);
    cfg.guards.max_analyses = g.value("max_analyses", cfg.guards.max_analyses);
  }
  cfg.validate();
  return cfg;
}

}  // namespace ccg
