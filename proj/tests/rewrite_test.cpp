#include "doctest.h"

#include "ccg/generate.hpp"
#include "ccg/oracle.hpp"
#include "ccg/rewrite.hpp"

using namespace ccg;

namespace {

Derivation L(const char* word, const char* cat) {
  return Derivation::leaf(word, parse_category(cat));
}

Derivation jlm_left() {
  return make_node(forward_rule(0),
                   make_node(forward_rule(1), L("john", "s/vp"),
                             L("loves", "vp/np")),
                   L("mary", "np"));
}

Derivation jlm_right() {
  return make_node(forward_rule(0), L("john", "s/vp"),
                   make_node(forward_rule(0), L("loves", "vp/np"),
                             L("mary", "np")));
}

// (wa >0 ((wc <0 wdc) <0 wbd)), category a with b\c buried inside.
Derivation bcbc_tree() {
  return make_node(
      forward_rule(0), L("wa", "a/b"),
      make_node(backward_rule(0),
                make_node(backward_rule(0), L("wc", "c"), L("wdc", "d\\c")),
                L("wbd", "b\\d")));
}

}  // namespace

TEST_CASE("find_redexes flags left-nested same-direction pairs") {
  auto redexes = find_redexes(jlm_left());
  REQUIRE(redexes.size() == 1);
  CHECK(redexes[0] == Position{});

  CHECK(find_redexes(jlm_right()).empty());
  CHECK(is_normal_form(jlm_right()));

  // Mixed direction at the root, backward pair below: only the pair counts.
  auto bcbc = find_redexes(bcbc_tree());
  REQUIRE(bcbc.size() == 1);
  CHECK(bcbc[0] == Position{"R"});
}

TEST_CASE("a forward pair whose inner node is plain application is no redex") {
  // ((the >0 flowers) >1 sent): same direction, but the inner combination
  // supplies no argument for the outer one to re-associate over — there is
  // no frontier-preserving right-branching equivalent.
  const Derivation d = make_node(
      forward_rule(1),
      make_node(forward_rule(0), L("the", "s/(s\\np)/n"), L("flowers", "n")),
      L("sent", "s\\np/pp"));
  CHECK(find_redexes(d).empty());
  CHECK(is_normal_form(d));
}

TEST_CASE("a backward pair with outer degree below inner is no redex") {
  // ((y\z <1 x\y) <0 w\(x\z)): the outer functor consumes the composition's
  // own argument chain, so the pair cannot re-associate.
  const Derivation inner =
      make_node(backward_rule(1), L("u", "y\\z"), L("v", "x\\y"));
  CHECK(format_category(inner.cat()) == "x\\z");
  const Derivation d =
      make_node(backward_rule(0), inner, L("w", "w\\(x\\z)"));
  CHECK(find_redexes(d).empty());

  // Outer degree equal to inner degree is one: ((c <0 d\c) <0 b\d).
  CHECK(find_redexes(bcbc_tree()).size() == 1);
}

TEST_CASE("contract turns the left-branching clause right-branching") {
  const Derivation d = jlm_left();
  const Derivation contracted = contract(d, Position{});
  CHECK(contracted == jlm_right());
  CHECK(contracted.cat() == d.cat());
  CHECK(sem_equiv(contracted.sem(), d.sem(), 0));
  // Score drop is #(a)+1 with a the left-left grandchild (a leaf here).
  CHECK(sigma(d) - sigma(contracted) == 1);
}

TEST_CASE("contract reveals the buried backward constituent") {
  const Derivation d = bcbc_tree();
  const Derivation contracted = contract(d, Position{"R"});
  // (c <0 (d\c <1 b\d)): the revealed right frontier now carries b\c.
  const Derivation sub = node_at(contracted, Position{"R"});
  CHECK(format_category(sub.cat()) == "b");
  REQUIRE(!sub.is_leaf());
  CHECK(sub.rule() == backward_rule(0));
  CHECK(format_category(sub.right().cat()) == "b\\c");
  CHECK(sub.right().rule() == backward_rule(1));
  bool exposed = false;
  for (const FrontierSite& site : right_frontier(contracted))
    exposed |= format_category(site.cat) == "b\\c";
  CHECK(exposed);
  CHECK(contracted.cat() == d.cat());
  CHECK(sem_equiv(contracted.sem(), d.sem(), arity(d.cat())));
}

TEST_CASE("contract recomputes degrees on uniform composition chains") {
  // ((a/b >1 b/c) >1 c/d) -> (a/b >1 (b/c >1 c/d)): outer degree m+n-1 = 1.
  const Derivation d = make_node(
      forward_rule(1),
      make_node(forward_rule(1), L("w0", "a/b"), L("w1", "b/c")),
      L("w2", "c/d"));
  const Derivation contracted = contract(d, Position{});
  CHECK(format_category(contracted.cat()) == "a/d");
  CHECK(contracted.rule() == forward_rule(1));
  REQUIRE(!contracted.right().is_leaf());
  CHECK(contracted.right().rule() == forward_rule(1));
  CHECK(contracted.left().word() == "w0");
}

TEST_CASE("contract on a non-redex position is an error") {
  CHECK_THROWS_AS(contract(jlm_right(), Position{}), DerivationError);
  CHECK_THROWS_AS(contract(jlm_left(), Position{"L"}), DerivationError);
}

TEST_CASE("sigma drops by exactly internal_count(a)+1 on every contraction") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const Derivation d = random_derivation(rng, 2 + i % 10);
    for (const Position& p : find_redexes(d)) {
      const Derivation a = node_at(d, p).left().left();
      const Derivation next = contract(d, p, RuleConfig::unrestricted());
      CHECK(sigma(d) - sigma(next) == a.internal_count() + 1);
    }
  }
}

TEST_CASE("a blocked contractum degree obstructs the rewrite loudly") {
  // ((y <0 (p\q)\y) <1 w\p) contracts via a backward rule of degree 2.
  const Derivation inner =
      make_node(backward_rule(0), L("u", "y"), L("v", "(p\\q)\\y"));
  const Derivation d = make_node(backward_rule(1), inner, L("w", "w\\p"));
  REQUIRE(find_redexes(d).size() == 1);

  RuleConfig tight;
  tight.max_degree = 1;
  CHECK_THROWS_AS(contract(d, Position{}, tight), RewriteObstructedError);
  CHECK_THROWS_AS(normalize(d, RewriteStrategy::root_first(), tight),
                  RewriteObstructedError);

  const Derivation ok = contract(d, Position{});  // default cap 3
  CHECK(format_category(ok.cat()) == "w\\q");
  REQUIRE(!ok.right().is_leaf());
  CHECK(ok.right().rule() == backward_rule(2));
}

TEST_CASE("a rejecting rule predicate obstructs the rewrite") {
  RuleConfig config;
  config.predicate = [](const RuleUse&, const Category&, const Category&,
                        const std::vector<SlashArg>&) { return false; };
  CHECK_THROWS_AS(contract(jlm_left(), Position{}, config),
                  RewriteObstructedError);
}

TEST_CASE("normalize: leaves and normal forms are fixed points") {
  const auto leaf_report =
      normalize(L("mary", "np"), RewriteStrategy::root_first());
  CHECK(leaf_report.steps == 0);
  CHECK(leaf_report.sigma_trace == std::vector<std::size_t>{0});

  const auto nf_report = normalize(jlm_right(), RewriteStrategy::root_first());
  CHECK(nf_report.steps == 0);
  CHECK(nf_report.normal_form == jlm_right());
}

TEST_CASE("normalize left-combs: innermost is quadratic, root-first linear") {
  const auto chain = forward_chain(4);
  const Derivation lc = left_comb(chain);
  const Derivation rc = right_comb(chain);

  const auto lmi = normalize(lc, RewriteStrategy::leftmost_innermost());
  CHECK(lmi.normal_form == rc);
  CHECK(lmi.steps == 3);  // n(n-1)/2 for n = 3

  const auto rf = normalize(lc, RewriteStrategy::root_first());
  CHECK(rf.normal_form == rc);
  CHECK(rf.steps <= 3);

  for (std::size_t i = 1; i < rf.sigma_trace.size(); ++i)
    CHECK(rf.sigma_trace[i] < rf.sigma_trace[i - 1]);
  CHECK(rf.sigma_trace.size() == rf.steps + 1);
}

TEST_CASE("chains normalize to the right-comb under every strategy") {
  for (std::size_t items = 2; items <= 6; ++items) {
    for (int kind = 0; kind < 3; ++kind) {
      // Pure forward, pure backward, and forward ending in a bare atom (the
      // last mixes plain applications into the composition chain).
      const auto chain = kind == 0   ? forward_chain(items)
                         : kind == 1 ? backward_chain(items)
                                     : forward_chain(items, true);
      const Derivation rc = right_comb(chain);
      for (const Derivation& d : enumerate_all(chain, RuleConfig())) {
        for (const RewriteStrategy& s : standard_strategies(3)) {
          const auto report = normalize(d, s);
          CHECK(report.normal_form == rc);
          const std::size_t n = d.internal_count();
          CHECK(report.steps <= n * (n - 1) / 2);
        }
        CHECK(normalize(d, RewriteStrategy::root_first()).steps <=
              d.internal_count());
      }
    }
  }
}

TEST_CASE("normal form means no internal node re-associates leftward") {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const Derivation d = random_derivation(rng, 1 + i % 10);
    const Derivation nf =
        normalize(d, RewriteStrategy::root_first(), RuleConfig::unrestricted())
            .normal_form;
    CHECK(is_normal_form(nf));
    CHECK(find_redexes(nf).empty());
  }
}

TEST_CASE("overlapping redexes rejoin: weak Church-Rosser witness") {
  // The left-comb over four chain items has redexes at the root and at its
  // left child, sharing the middle internal node. Completing from either
  // side reaches the same normal form.
  const Derivation d = left_comb(forward_chain(4));
  auto redexes = find_redexes(d);
  REQUIRE(redexes.size() == 2);
  const Derivation via_root = contract(d, redexes[0]);
  const Derivation via_inner = contract(d, redexes[1]);
  CHECK(via_root != via_inner);
  const auto s = RewriteStrategy::root_first();
  CHECK(normalize(via_root, s).normal_form ==
        normalize(via_inner, s).normal_form);
}

TEST_CASE("single-redex derivations are trivially confluent") {
  CHECK(check_confluence(jlm_left(), standard_strategies()));
}

TEST_CASE("all 14 shapes over five chain items share one normal form") {
  const auto chain = forward_chain(5);
  const auto shapes = enumerate_all(chain, RuleConfig());
  REQUIRE(shapes.size() == 14);
  const Derivation rc = right_comb(chain);
  for (const Derivation& d : shapes) {
    CHECK(check_confluence(d, standard_strategies()));
    CHECK(normalize(d, RewriteStrategy::root_first()).normal_form == rc);
  }
}

TEST_CASE("the linear root-first bound is specific to stable redex sets") {
  // On chains every same-direction left-nesting is a redex from the start
  // and stays one, and root-first normalization fits in #(d) steps (checked
  // above). That stability can fail elsewhere: here, all-backward with
  // degrees <= 1 and five internal nodes, contracting the single initial
  // redex manufactures a degree-2 combination whose lower degree enables the
  // pair above it, and the cascade repeats. Exhaustive search over every
  // maximal contraction sequence shows each one takes exactly six steps, so
  // no selection strategy stays within five. The quadratic bound, unique
  // normal form, and preservation all still hold.
  const Derivation n1 =
      make_node(backward_rule(0), L("w2", "f"),
                L("w3", "c\\b/(b\\f)\\(c\\f)\\(c/f\\(e\\d))\\c\\f"));
  const Derivation n2 = make_node(backward_rule(0), L("w1", "c"), n1);
  const Derivation n3 =
      make_node(backward_rule(0), L("w0", "c/f\\(e\\d)"), n2);
  const Derivation n4 = make_node(backward_rule(1), n3,
                                  L("w4", "f\\c\\(c\\b/(b\\f))"));
  const Derivation d =
      make_node(backward_rule(0), n4, L("w5", "e\\(f\\c\\(c\\f))"));
  REQUIRE(d.internal_count() == 5);
  REQUIRE(format_category(d.cat()) == "e");
  REQUIRE(find_redexes(d) == std::vector<Position>{Position{"L"}});

  const RuleConfig config = RuleConfig::unrestricted();
  const auto search = all_rewrite_sequences(d, config, 8);
  CHECK(search.min_length() == 6);
  CHECK(search.max_length() == 6);
  CHECK(search.terminal_forms.size() == 1);
  CHECK(search.max_length() <= 5 * 4 / 2);

  const auto rf = normalize(d, RewriteStrategy::root_first(), config);
  CHECK(rf.steps == 6);
  CHECK(rf.normal_form == search.terminal_forms[0]);
  CHECK(rf.normal_form.cat() == d.cat());
  CHECK(sem_equiv(rf.normal_form.sem(), d.sem(), 0));
}

TEST_CASE("random seeded strategies are reproducible") {
  Rng rng(41);
  const Derivation d = random_derivation(rng, 9);
  const auto s = RewriteStrategy::random_seeded(99);
  const auto a = normalize(d, s, RuleConfig::unrestricted());
  const auto b = normalize(d, s, RuleConfig::unrestricted());
  CHECK(a.normal_form == b.normal_form);
  CHECK(a.sigma_trace == b.sigma_trace);
}
