#include "doctest.h"

#include "ccg/derivation.hpp"
#include "ccg/generate.hpp"
#include "ccg/oracle.hpp"
#include "ccg/serialize.hpp"

using namespace ccg;

namespace {

Derivation L(const char* word, const char* cat) {
  return Derivation::leaf(word, parse_category(cat));
}

// The running example trees.
Derivation flowers_tree() {
  // ((the >0 flowers) >1 sent)
  return make_node(forward_rule(1),
                   make_node(forward_rule(0), L("the", "s/(s\\np)/n"),
                             L("flowers", "n")),
                   L("sent", "s\\np/pp"));
}

Derivation whose_tree() {
  // ((whose >0 cat) >0 ((did >1 fred) >1 find))
  return make_node(
      forward_rule(0),
      make_node(forward_rule(0), L("whose", "q/(s/np)/n"), L("cat", "n")),
      make_node(forward_rule(1),
                make_node(forward_rule(1), L("did", "s/s"),
                          L("fred", "s/(s\\np)")),
                L("find", "s\\np/np")));
}

Derivation jlm_left() {
  // ((john >1 loves) >0 mary)
  return make_node(forward_rule(0),
                   make_node(forward_rule(1), L("john", "s/vp"),
                             L("loves", "vp/np")),
                   L("mary", "np"));
}

Derivation jlm_right() {
  // (john >0 (loves >0 mary))
  return make_node(forward_rule(0), L("john", "s/vp"),
                   make_node(forward_rule(0), L("loves", "vp/np"),
                             L("mary", "np")));
}

}  // namespace

TEST_CASE("make_node computes categories and semantics") {
  const Derivation np = make_node(forward_rule(0), L("the", "s/(s\\np)/n"),
                                  L("flowers", "n"));
  CHECK(format_category(np.cat()) == "s/(s\\np)");
  CHECK(format_semterm(np.sem()) == "(the flowers)");

  const Derivation spp =
      make_node(forward_rule(1), np, L("sent", "s\\np/pp"));
  CHECK(format_category(spp.cat()) == "s/pp");
  CHECK(format_semterm(spp.sem()) == "(B^1 (the flowers) sent)");

  CHECK_THROWS_AS(make_node(forward_rule(0), L("x", "np"), L("y", "np")),
                  DerivationError);
}

TEST_CASE("backward nodes take the functor from the right") {
  const Derivation s = make_node(backward_rule(0), L("mary", "np"),
                                 L("sleeps", "s\\np"));
  CHECK(format_category(s.cat()) == "s");
  CHECK(format_semterm(s.sem()) == "(sleeps mary)");
}

TEST_CASE("internal_count and sigma follow the recursive definitions") {
  const Derivation leaf = L("mary", "np");
  CHECK(internal_count(leaf) == 0);
  CHECK(sigma(leaf) == 0);

  const Derivation pair =
      make_node(backward_rule(0), L("mary", "np"), L("sleeps", "s\\np"));
  CHECK(internal_count(pair) == 1);

  const auto chain4 = forward_chain(4);
  CHECK(internal_count(left_comb(chain4)) == 3);
  CHECK(sigma(left_comb(chain4)) == 3);     // 0 + 1 + 2
  CHECK(sigma(right_comb(chain4)) == 0);    // every left child is a leaf
  for (std::size_t items = 2; items <= 7; ++items)
    CHECK(sigma(right_comb(forward_chain(items))) == 0);
}

TEST_CASE("internal count equals leaf count minus one") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const Derivation d = random_derivation(rng, 1 + i % 10);
    CHECK(d.internal_count() + 1 == d.leaf_count());
    CHECK(frontier(d).size() == d.leaf_count());
  }
}

TEST_CASE("sigma is bounded by n(n-1)/2 with equality exactly on left-combs") {
  for (std::size_t items = 2; items <= 7; ++items) {
    const auto chain = forward_chain(items);
    const Derivation lc = left_comb(chain);
    for (const Derivation& d : enumerate_all(chain, RuleConfig())) {
      const std::size_t n = d.internal_count();
      CHECK(sigma(d) <= n * (n - 1) / 2);
      if (sigma(d) == n * (n - 1) / 2) CHECK(d == lc);
    }
  }
}

TEST_CASE("right_frontier walks root to rightmost leaf") {
  auto sites = right_frontier(jlm_right());
  REQUIRE(sites.size() == 3);
  CHECK(format_category(sites[0].cat) == "s");
  CHECK(sites[0].pos == Position{});
  CHECK(format_category(sites[1].cat) == "vp");
  CHECK(sites[1].pos == Position{"R"});
  CHECK(format_category(sites[2].cat) == "np");
  CHECK(sites[2].pos == Position{"RR"});

  auto leaf_sites = right_frontier(L("mary", "np"));
  REQUIRE(leaf_sites.size() == 1);
  CHECK(format_category(leaf_sites[0].cat) == "np");

  // The left-branching tree hides the vp: only s and np are exposed.
  auto left_sites = right_frontier(jlm_left());
  REQUIRE(left_sites.size() == 2);
  CHECK(format_category(left_sites[0].cat) == "s");
  CHECK(format_category(left_sites[1].cat) == "np");
}

TEST_CASE("positions address nodes; replace_at rebuilds the spine") {
  const Derivation d = jlm_right();
  CHECK(format_category(node_at(d, Position{"R"}).cat()) == "vp");
  CHECK(node_at(d, Position{"L"}).word() == "john");
  CHECK_THROWS_AS(node_at(d, Position{"LL"}), DerivationError);

  const Derivation replacement =
      make_node(forward_rule(0), L("hates", "vp/np"), L("mary", "np"));
  const Derivation swapped = replace_at(d, Position{"R"}, replacement);
  CHECK(format_category(swapped.cat()) == "s");
  CHECK(frontier_words(swapped) ==
        std::vector<std::string>{"john", "hates", "mary"});
}

TEST_CASE("pretty renders words, categories and rule names") {
  CHECK(pretty(flowers_tree()) ==
        "s/pp  >1  [the flowers sent]\n"
        "  s/(s\\np)  >0  [the flowers]\n"
        "    the := s/(s\\np)/n\n"
        "    flowers := n\n"
        "  sent := s\\np/pp\n");
  CHECK(pretty(whose_tree()) ==
        "q  >0  [whose cat did fred find]\n"
        "  q/(s/np)  >0  [whose cat]\n"
        "    whose := q/(s/np)/n\n"
        "    cat := n\n"
        "  s/np  >1  [did fred find]\n"
        "    s/(s\\np)  >1  [did fred]\n"
        "      did := s/s\n"
        "      fred := s/(s\\np)\n"
        "    find := s\\np/np\n");
  CHECK(pretty(jlm_right()) ==
        "s  >0  [john loves mary]\n"
        "  john := s/vp\n"
        "  vp  >0  [loves mary]\n"
        "    loves := vp/np\n"
        "    mary := np\n");
}

TEST_CASE("derivations serialize and revalidate through JSON") {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    const Derivation d = random_derivation(rng, 1 + i % 8);
    const Derivation back = derivation_from_json(derivation_to_json(d));
    CHECK(back == d);
    CHECK(validate_derivation(back));
  }
  // A tampered stored category is rejected.
  json j = derivation_to_json(jlm_right());
  j["cat"] = "np";
  CHECK_THROWS_AS(derivation_from_json(j), Error);
}

TEST_CASE("validate_derivation accepts construction output") {
  CHECK(validate_derivation(flowers_tree()));
  CHECK(validate_derivation(whose_tree()));
  CHECK(validate_derivation(jlm_left()));
}

TEST_CASE("digests distinguish distinct derivations") {
  CHECK(digest(jlm_left()) != digest(jlm_right()));
  CHECK(digest(jlm_left()) == digest(jlm_left()));
}
