#include "doctest.h"

#include "ccg/config.hpp"
#include "ccg/serialize.hpp"

using namespace ccg;

TEST_CASE("engine config round-trips through JSON") {
  EngineConfig cfg;
  cfg.rules.max_degree = 2;
  cfg.rules.blocked.insert(backward_rule(2));
  cfg.policy.mode = ParsePolicy::Mode::eager;
  cfg.policy.reveal_enabled = true;
  cfg.viability_model_path = "toy.model";
  cfg.k = 3;
  cfg.threshold = 5;
  cfg.guards.max_analyses = 1234;

  const EngineConfig back = engine_config_from_json(engine_config_to_json(cfg));
  CHECK(back.rules.max_degree == 2);
  CHECK(back.rules.blocked.contains(backward_rule(2)));
  CHECK(!back.rules.blocked.contains(forward_rule(2)));
  CHECK(back.policy.mode == ParsePolicy::Mode::eager);
  CHECK(back.policy.reveal_enabled);
  CHECK(back.viability_model_path == "toy.model");
  CHECK(back.k == 3);
  CHECK(back.threshold == 5);
  CHECK(back.guards.max_analyses == 1234);
  CHECK(back.guards.max_enum_items == 10);
}

TEST_CASE("inconsistent configs are rejected") {
  // Reveal without eager mode.
  json j{{"policy", {{"mode", "exhaustive"}, {"reveal", true}}}};
  CHECK_THROWS_AS(engine_config_from_json(j), ConfigError);
  CHECK_THROWS_AS(
      engine_config_from_json(json{{"policy", {{"mode", "lazy"}}}}),
      ConfigError);
  CHECK_THROWS_AS(
      engine_config_from_json(json{{"rules", {{"blocked", {"x1"}}}}}),
      ConfigError);
}

TEST_CASE("defaults are usable as-is") {
  const EngineConfig cfg = engine_config_from_json(json::object());
  CHECK(cfg.rules.max_degree == 3);
  CHECK(cfg.policy.mode == ParsePolicy::Mode::eager);
  CHECK(cfg.policy.reveal_enabled);
  CHECK(cfg.policy.endocentric_only);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("trace events serialize as flat records") {
  const TraceEvent e{TraceKind::refused_nonendocentric, 3,
                     {"a/d", "s\\(a/b)\\(b/d)"}, "s\\(a/b)\\(b/d)"};
  const json j = trace_event_to_json(e);
  CHECK(j.at("event") == "refused_nonendocentric");
  CHECK(j.at("word_index") == 3);
  CHECK(j.at("cats").size() == 2);
  CHECK(j.at("note") == "s\\(a/b)\\(b/d)");
}

TEST_CASE("a tampered leaf category is rejected at deserialization") {
  json node{{"rule", ">0"},
            {"left", {{"word", "john"}, {"cat", "s/vp"}}},
            {"right", {{"word", "mary"}, {"cat", "pp"}}}};
  CHECK_THROWS_AS(derivation_from_json(node), DerivationError);
}
