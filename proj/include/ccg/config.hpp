#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ccg/errors.hpp"
#include "ccg/parser.hpp"
#include "ccg/rules.hpp"

namespace ccg {

struct EngineGuards {
  std::size_t max_enum_items = 10;       // oracle enumeration length
  std::size_t max_sequence_nodes = 6;    // exhaustive sequence search size
  std::size_t max_analyses = 100000;     // parser fan-out budget
};

// Everything the CLI wires together: rule configuration, parsing policy,
// the viability model location and its parameters, and the size guards.
struct EngineConfig {
  RuleConfig rules;
  ParsePolicy policy;
  std::string viability_model_path;
  std::size_t k = 2;
  std::uint64_t threshold = 3;
  EngineGuards guards;

  void validate() const { policy.validate(); }
};

}  // namespace ccg
