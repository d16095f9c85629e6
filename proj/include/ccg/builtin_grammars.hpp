#pragma once

// Bundled grammars. The same texts ship as files under grammars/ for CLI
// use; a test keeps the two in sync. Keeping them in a header lets the
// self-check suites run with no filesystem dependencies.

#include <string_view>
#include <utility>
#include <vector>

namespace ccg::grammars {

// Small English fragment: a type-raised subject determiner, a WH word taking
// an object-gap clause, auxiliaries and verbs, and a VP adverb. Supports
// "the flowers sent", "whose cat did fred find", "john loves mary madly".
inline constexpr std::string_view paper_lex = R"(# Small English fragment.
@goal s q
the := s/(s\np)/n
flowers := n
sent := s\np/pp
whose := q/(s/np)/n
cat := n
did := s/s
fred := s/(s\np)
find := s\np/np
john := s/vp
loves := vp/np
mary := np
madly := vp\vp
)";

// Abstract categories exercising revealing after two mixed-direction
// combinations: parsing "wa wc wdc wbd" yields category a with b\c buried
// mid-derivation, and the endocentric wmod attaches to it only after the
// backward pair is rewritten.
inline constexpr std::string_view bcbc_lex = R"(# Buried-constituent grammar.
@goal a
wa := a/b
wc := c
wdc := d\c
wbd := b\d
wmod := b\c\(b\c)
)";

// Abstract categories for the refused non-monotonic reanalysis: after
// "u1 u2 u3" composes to a/d, the non-endocentric umod would need the
// parser to retract the a/b + b/c composition. It is refused.
inline constexpr std::string_view reanalysis_lex = R"(# Non-endocentric modifier grammar.
@goal s
u1 := a/b
u2 := b/c
u3 := c/d
umod := s\(a/b)\(b/d)
)";

// Toy English with a noun/verb-ambiguous word, determiners in both plain and
// type-raised forms, adjectives, relatives, and a copula. The viability
// corpus below trains the determiner+verb signatures into non-viability.
inline constexpr std::string_view toy_en_lex = R"(# Determiner-noun/verb toy grammar.
@goal s
the := np/n | (s/(s\np))/n
a := np/n | (s/(s\np))/n
insults := n | (s\np)/np
dog := n
cats := n
students := n
teacher := n
flowers := n
new := n/n
barks := s\np
sleeps := s\np
sleep := s\np
sees := (s\np)/np
see := (s\np)/np
annoy := (s\np)/np
shouted := (s\np)/np
that := (n\n)/(s/np)
were := (s\np)/adj
appalling := adj
)";

inline constexpr std::string_view det_nv_corpus = R"(# Training corpus: determiner-noun/verb sentences.
the dog barks
the cats sleep
a dog sleeps
the teacher sees the dog
a teacher sees the cats
the students see the teacher
the insults annoy the teacher
the insults annoy the students
a dog sees the insults
the new dog barks
a new teacher sleeps
the new students see the dog
the students shouted the insults
the new students shouted the insults
the teacher sees the new cats
a new dog sees the teacher
the flowers annoy the teacher
the new flowers annoy the students
a teacher sees the new flowers
the dog sees a teacher
the cats see the new insults
)";

// PP attachment ambiguity: "john sees the man with the telescope" has
// exactly two truth-conditionally distinct readings.
inline constexpr std::string_view ppattach_lex = R"(# PP attachment grammar.
@goal s
john := np
sees := (s\np)/np
the := np/n
man := n
telescope := n
with := (np\np)/np | ((s\np)\(s\np))/np
)";

struct Bundled {
  std::string_view name;
  std::string_view text;
};

inline std::vector<Bundled> all_bundled() {
  return {{"paper.lex", paper_lex},
          {"bcbc.lex", bcbc_lex},
          {"reanalysis.lex", reanalysis_lex},
          {"toy_en.lex", toy_en_lex},
          {"ppattach.lex", ppattach_lex}};
}

}  // namespace ccg::grammars
