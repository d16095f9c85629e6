#include "doctest.h"

#include "ccg/semterm.hpp"

using namespace ccg;

namespace {

SemTerm C(const char* name) { return SemTerm::constant(name); }

}  // namespace

TEST_CASE("sem_of_combination: degree 0 applies, degree n composes") {
  const SemTerm f = C("f"), a = C("a"), g = C("g");
  CHECK(sem_of_combination(forward_rule(0), f, a) == SemTerm::app(f, a));
  CHECK(sem_of_combination(forward_rule(1), f, g) == SemTerm::comp(1, f, g));
  // Direction does not affect the term.
  CHECK(sem_of_combination(backward_rule(1), f, g) ==
        sem_of_combination(forward_rule(1), f, g));
}

TEST_CASE("saturate_reduce applies fresh variables and eliminates combinators") {
  const SemTerm f = C("f"), g = C("g");
  const SemTerm b1 = SemTerm::comp(1, f, g);
  const SemTerm reduced = saturate_reduce(b1, 1);
  CHECK(reduced == SemTerm::app(f, SemTerm::app(g, SemTerm::var(1))));
  CHECK(format_semterm(reduced) == "(f (g v1))");
}

TEST_CASE("nested compositions reduce to the nested application") {
  // B^1 (B^1 a b) c saturated with one variable: a (b (c v1)).
  const SemTerm t = SemTerm::comp(1, SemTerm::comp(1, C("a"), C("b")), C("c"));
  const SemTerm expect = SemTerm::app(
      C("a"), SemTerm::app(C("b"), SemTerm::app(C("c"), SemTerm::var(1))));
  CHECK(saturate_reduce(t, 1) == expect);
}

TEST_CASE("combinator-free terms pass through") {
  const SemTerm t = SemTerm::app(C("f"), C("a"));
  CHECK(saturate_reduce(t, 0) == t);
}

TEST_CASE("insufficient arity signals a category/semantics mismatch") {
  CHECK_THROWS_AS(saturate_reduce(SemTerm::comp(1, C("f"), C("g")), 0),
                  SemArityError);
  CHECK_THROWS_AS(saturate_reduce(SemTerm::comp(2, C("f"), C("g")), 1),
                  SemArityError);
}

TEST_CASE("sem_equiv identifies left- and right-branching application") {
  // John loves Mary, composed vs applied.
  const SemTerm left =
      SemTerm::app(SemTerm::comp(1, C("john"), C("loves")), C("mary"));
  const SemTerm right =
      SemTerm::app(C("john"), SemTerm::app(C("loves"), C("mary")));
  CHECK(sem_equiv(left, right, 0));

  const SemTerm f = C("f");
  CHECK(sem_equiv(f, f, 0));
  CHECK(!sem_equiv(SemTerm::app(f, C("a")), SemTerm::app(f, C("b")), 0));
}

TEST_CASE("the composition law holds for all degree pairs up to 3") {
  // B^n (B^m a b) c == B^(m+n-1) a (B^n b c) at arity m+n-1.
  const SemTerm a = C("a"), b = C("b"), c = C("c");
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const SemTerm lhs = SemTerm::comp(n, SemTerm::comp(m, a, b), c);
      const SemTerm rhs =
          SemTerm::comp(m + n - 1, a, SemTerm::comp(n, b, c));
      CHECK(sem_equiv(lhs, rhs, m + n - 1));
    }
  }
}

TEST_CASE("composition combinators in argument position canonicalize") {
  // A function-valued argument never meets enough applications to reduce
  // away; equivalence still holds because embedded combinators right-nest.
  const SemTerm wc = C("whosecat");
  const SemTerm lhs = SemTerm::app(
      wc, SemTerm::comp(1, SemTerm::comp(1, C("did"), C("fred")), C("find")));
  const SemTerm rhs = SemTerm::app(
      wc, SemTerm::comp(1, C("did"), SemTerm::comp(1, C("fred"), C("find"))));
  CHECK(sem_equiv(lhs, rhs, 0));
  CHECK(format_semterm(saturate_reduce(lhs, 0)) ==
        "(whosecat (B^1 did (B^1 fred find)))");
}

TEST_CASE("reduction steps track the composition weight on first-order terms") {
  // Without embedded function arguments, every step discharges exactly one
  // pending composition argument: step count equals the initial weight and
  // the weight decreases monotonically.
  const SemTerm t = SemTerm::comp(
      2, C("f"), SemTerm::comp(1, C("g"), SemTerm::comp(1, C("h"), C("k"))));
  const auto trace = saturate_reduce_trace(t, 2);
  CHECK(trace.steps() == composition_weight(t));
  for (std::size_t i = 1; i < trace.weights.size(); ++i)
    CHECK(trace.weights[i] == trace.weights[i - 1] - 1);
  CHECK(trace.weights.back() == 0);
}

TEST_CASE("prefix printing") {
  const SemTerm t = SemTerm::app(C("john"), SemTerm::app(C("loves"), C("mary")));
  CHECK(format_semterm(t) == "(john (loves mary))");
  CHECK(format_semterm(SemTerm::comp(2, C("f"), C("g"))) == "(B^2 f g)");
  CHECK(format_semterm(SemTerm::var(3)) == "v3");
}
