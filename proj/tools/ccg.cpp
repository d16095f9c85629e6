// Command-line surface: parse | normalize | enumerate | train | check.
//
// parse, train and normalize emit line-delimited JSON records on stdout so
// per-word analysis counts and traces stay scriptable; enumerate and check
// print plain text. Exit codes: 0 success, 1 parse/processing failure,
// 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccg/ccg.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ccg::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct ParseArgs {
  std::string lexicon;
  std::string sentence;
  std::string policy = "eager";
  std::string model;
  std::string config_path;
  std::vector<std::string> goals;
  bool no_reveal = false;
  bool trace = false;
  bool trees = false;
};

int run_parse(const ParseArgs& args) {
  ccg::EngineConfig cfg;
  if (!args.config_path.empty())
    cfg = ccg::engine_config_from_json(
        ccg::json::parse(slurp(args.config_path)));
  if (args.policy == "eager") {
    cfg.policy.mode = ccg::ParsePolicy::Mode::eager;
  } else if (args.policy == "exhaustive") {
    cfg.policy.mode = ccg::ParsePolicy::Mode::exhaustive;
    cfg.policy.reveal_enabled = false;
  } else {
    throw ccg::ConfigError("bad --policy: " + args.policy);
  }
  if (args.no_reveal) cfg.policy.reveal_enabled = false;
  std::string model_path =
      !args.model.empty() ? args.model : cfg.viability_model_path;
  if (!model_path.empty())
    cfg.policy.viability = std::make_shared<const ccg::ViabilityModel>(
        ccg::load_viability_model(model_path));
  cfg.validate();

  ccg::Lexicon lex = ccg::load_lexicon(args.lexicon);
  if (!args.goals.empty()) {
    lex.goals.clear();
    for (const std::string& g : args.goals)
      lex.goals.push_back(ccg::parse_category(g));
  }
  const auto words = ccg::tokenize(args.sentence);
  if (words.empty()) throw ccg::ConfigError("empty sentence");

  const ccg::ParseResult result = ccg::parse(
      words, lex, cfg.policy, cfg.rules, cfg.guards.max_analyses);

  for (const ccg::WordSnapshot& snap : result.snapshots) {
    for (const ccg::AnalysisSummary& a : snap.analyses) {
      ccg::json j{{"record", "analysis"},
                  {"word_index", snap.word_index},
                  {"word", snap.word},
                  {"cats", a.cats},
                  {"digests", a.digests}};
      std::cout << j.dump() << "\n";
    }
  }
  if (args.trace)
    for (const ccg::TraceEvent& e : result.trace)
      std::cout << ccg::trace_event_to_json(e).dump() << "\n";
  ccg::json cats = ccg::json::array();
  for (const ccg::Analysis& a : result.final_analyses)
    cats.push_back(a.categories());
  std::cout << ccg::json{{"record", "result"},
                         {"complete", result.complete.size()},
                         {"final_analyses", result.final_analyses.size()},
                         {"categories", cats}}
                   .dump()
            << "\n";
  if (args.trees) {
    std::size_t i = 0;
    for (const ccg::Derivation& d : result.complete)
      std::cout << ccg::json{{"record", "tree"},
                             {"index", i++},
                             {"sem", ccg::format_semterm(d.sem())},
                             {"derivation", ccg::derivation_to_json(d)},
                             {"pretty", ccg::pretty(d)}}
                       .dump()
                << "\n";
  }
  return 0;
}

struct NormalizeArgs {
  std::string input = "-";
  std::string strategy = "root-first";
  std::uint64_t seed = 0;
  std::size_t max_degree = 3;
  bool show_pretty = false;
};

int run_normalize(const NormalizeArgs& args) {
  ccg::RewriteStrategy strategy = ccg::RewriteStrategy::root_first();
  if (args.strategy == "root-first")
    strategy = ccg::RewriteStrategy::root_first();
  else if (args.strategy == "leftmost-innermost")
    strategy = ccg::RewriteStrategy::leftmost_innermost();
  else if (args.strategy == "random")
    strategy = ccg::RewriteStrategy::random_seeded(args.seed);
  else
    throw ccg::ConfigError("bad --strategy: " + args.strategy);
  ccg::RuleConfig rules;
  rules.max_degree = args.max_degree;
  const ccg::Derivation input =
      ccg::derivation_from_json(ccg::json::parse(slurp(args.input)));
  const ccg::RewriteReport report = ccg::normalize(input, strategy, rules);
  ccg::json j = ccg::rewrite_report_to_json(report);
  j["record"] = "rewrite";
  j["strategy"] = strategy.name();
  std::cout << j.dump() << "\n";
  if (args.show_pretty) {
    std::cout << ccg::json{{"record", "tree"},
                           {"which", "input"},
                           {"pretty", ccg::pretty(input)}}
                     .dump()
              << "\n";
    std::cout << ccg::json{{"record", "tree"},
                           {"which", "normal_form"},
                           {"pretty", ccg::pretty(report.normal_form)}}
                     .dump()
              << "\n";
  }
  return 0;
}

struct EnumerateArgs {
  std::size_t chain = 0;
  std::string lexicon;
  std::string sentence;
  std::string config_path;
  bool trees = false;
};

int run_enumerate(const EnumerateArgs& args) {
  ccg::EngineConfig cfg;
  if (!args.config_path.empty())
    cfg = ccg::engine_config_from_json(
        ccg::json::parse(slurp(args.config_path)));
  const ccg::RuleConfig& rules = cfg.rules;
  const std::size_t max_items = cfg.guards.max_enum_items;
  std::vector<ccg::Derivation> derivs;
  if (args.chain > 0) {
    derivs =
        ccg::enumerate_all(ccg::forward_chain(args.chain), rules, max_items);
  } else {
    if (args.lexicon.empty() || args.sentence.empty())
      throw ccg::ConfigError("enumerate needs --chain N or --lexicon + sentence");
    const ccg::Lexicon lex = ccg::load_lexicon(args.lexicon);
    std::vector<ccg::LexItem> items;
    std::vector<std::vector<ccg::LexItem>> assignments{{}};
    for (const std::string& word : ccg::tokenize(args.sentence)) {
      auto it = lex.entries.find(word);
      if (!lex.has_word(word))
        throw ccg::UnknownWordError(word, assignments.front().size());
      std::vector<std::vector<ccg::LexItem>> next;
      for (const auto& partial : assignments)
        for (const ccg::LexEntry& e : it->second) {
          auto copy = partial;
          copy.push_back({word, e.cat});
          next.push_back(std::move(copy));
        }
      assignments = std::move(next);
    }
    std::vector<std::string> seen;
    for (const auto& assignment : assignments)
      for (const ccg::Derivation& d :
           ccg::enumerate_all(assignment, rules, max_items)) {
        std::string key = ccg::digest(d);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(std::move(key));
          derivs.push_back(d);
        }
      }
  }
  std::cout << "derivations: " << derivs.size() << "\n";
  if (!derivs.empty() && args.chain > 0) {
    std::cout << "sem-classes: " << ccg::sem_partition(derivs).size() << "\n";
  } else if (!derivs.empty()) {
    // Partition within each root category; classes add up across roots.
    std::map<std::string, std::vector<ccg::Derivation>> by_root;
    for (const ccg::Derivation& d : derivs)
      by_root[ccg::format_category(d.cat())].push_back(d);
    std::size_t classes = 0;
    for (auto& [root, group] : by_root)
      classes += ccg::sem_partition(group).size();
    std::cout << "sem-classes: " << classes << "\n";
  }
  if (args.trees)
    for (const ccg::Derivation& d : derivs) std::cout << ccg::pretty(d);
  return 0;
}

struct TrainArgs {
  std::string lexicon;
  std::string corpus;
  std::string model_out;
  std::string model_in;
  std::size_t k = 2;
  std::uint64_t threshold = 3;
};

int run_train(const TrainArgs& args) {
  const ccg::Lexicon lex = ccg::load_lexicon(args.lexicon);
  const auto corpus = ccg::load_corpus(args.corpus);
  ccg::ViabilityModel model;
  if (!args.model_in.empty())
    model = ccg::load_viability_model(args.model_in);
  model.k = args.k;
  model.threshold = args.threshold;
  ccg::TrainStats stats;
  model = ccg::train(corpus, lex, std::move(model), ccg::RuleConfig(), &stats);
  ccg::save_viability_model(model, args.model_out);
  for (const std::string& w : stats.warnings)
    std::cout << ccg::json{{"record", "warning"}, {"message", w}}.dump()
              << "\n";
  std::cout << ccg::json{{"record", "trained"},
                         {"sentences", stats.sentences},
                         {"skipped", stats.skipped},
                         {"signatures", model.counts.size()},
                         {"model", args.model_out}}
                   .dump()
            << "\n";
  return 0;
}

int run_check(std::uint64_t seed) {
  bool all_pass = true;
  for (const ccg::CheckResult& r : ccg::run_all_checks(seed)) {
    all_pass &= r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  ("
              << static_cast<long>(r.ms) << " ms)";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental CCG parsing engine with derivation rewriting"};
  app.require_subcommand(1);

  ParseArgs parse_args;
  CLI::App* parse_cmd = app.add_subcommand("parse", "Parse a sentence");
  parse_cmd->add_option("--lexicon", parse_args.lexicon, "Lexicon file")
      ->required();
  parse_cmd->add_option("--policy", parse_args.policy,
                        "eager (default) or exhaustive");
  parse_cmd->add_flag("--no-reveal", parse_args.no_reveal,
                      "Disable reveal/attach");
  parse_cmd->add_option("--goal", parse_args.goals,
                        "Override goal categories");
  parse_cmd->add_option("--model", parse_args.model, "Viability model file");
  parse_cmd->add_option("--config", parse_args.config_path,
                        "Engine config JSON file");
  parse_cmd->add_flag("--trace", parse_args.trace, "Emit trace events");
  parse_cmd->add_flag("--trees", parse_args.trees,
                      "Emit pretty trees of complete derivations");
  parse_cmd->add_option("sentence", parse_args.sentence, "Sentence to parse")
      ->required();

  NormalizeArgs norm_args;
  CLI::App* norm_cmd = app.add_subcommand(
      "normalize", "Rewrite a serialized derivation to normal form");
  norm_cmd->add_option("--input", norm_args.input,
                       "Derivation JSON file ('-' = stdin)");
  norm_cmd->add_option("--strategy", norm_args.strategy,
                       "root-first | leftmost-innermost | random");
  norm_cmd->add_option("--seed", norm_args.seed, "Seed for random strategy");
  norm_cmd->add_option("--max-degree", norm_args.max_degree,
                       "Rule degree cap");
  norm_cmd->add_flag("--pretty", norm_args.show_pretty,
                     "Also emit pretty trees");

  EnumerateArgs enum_args;
  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "Exhaustively enumerate derivations");
  enum_cmd->add_option("--chain", enum_args.chain,
                       "Uniform forward chain of N items");
  enum_cmd->add_option("--lexicon", enum_args.lexicon, "Lexicon file");
  enum_cmd->add_option("--config", enum_args.config_path,
                       "Engine config JSON file");
  enum_cmd->add_option("sentence", enum_args.sentence, "Sentence");
  enum_cmd->add_flag("--trees", enum_args.trees, "Print all pretty trees");

  TrainArgs train_args;
  CLI::App* train_cmd =
      app.add_subcommand("train", "Train a viability model on a corpus");
  train_cmd->add_option("--lexicon", train_args.lexicon, "Lexicon file")
      ->required();
  train_cmd->add_option("--corpus", train_args.corpus,
                        "Corpus file, one sentence per line")
      ->required();
  train_cmd->add_option("--model-out", train_args.model_out,
                        "Output model file")
      ->required();
  train_cmd->add_option("--model-in", train_args.model_in,
                        "Existing model to extend");
  train_cmd->add_option("--k", train_args.k, "Signature length");
  train_cmd->add_option("--threshold", train_args.threshold,
                        "Failure threshold");

  std::uint64_t check_seed = 20240801;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Run the invariant suites");
  check_cmd->add_option("--seed", check_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (parse_cmd->parsed()) return run_parse(parse_args);
    if (norm_cmd->parsed()) return run_normalize(norm_args);
    if (enum_cmd->parsed()) return run_enumerate(enum_args);
    if (train_cmd->parsed()) return run_train(train_args);
    if (check_cmd->parsed()) return run_check(check_seed);
  } catch (const ccg::UnknownWordError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ccg::StuckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ccg::RewriteObstructedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ccg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ccg::json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
