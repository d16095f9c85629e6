#pragma once

// Derivations: binary trees whose leaves are single-word constituents and
// whose internal nodes are rule applications. Every node carries its
// category and semantic term; both are computed at construction and cached,
// so trees are well-formed by construction and validation is cheap.
//
// Two node scores drive the rewrite engine's termination argument:
//
//   #(x) = number of internal nodes below (and including) x
//   s(x) = 0 for leaves, s(left) + s(right) + #(left) otherwise
//
// s is maximal on left-combs (#(#-1)/2) and zero exactly on trees whose
// every left child is a leaf.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/errors.hpp"
#include "ccg/rules.hpp"
#include "ccg/semterm.hpp"

namespace ccg {

class Derivation {
public:
  static Derivation leaf(std::string word, Category cat, SemTerm sem) {
    auto rep = std::make_shared<Rep>(Rep{
        std::nullopt, std::move(word), nullptr, nullptr, std::move(cat),
        std::move(sem), 0, 0, 1});
    return Derivation(std::move(rep));
  }

  // Leaf whose semantics is the word constant itself.
  static Derivation leaf(std::string word, Category cat) {
    SemTerm sem = SemTerm::constant(word);
    return leaf(std::move(word), std::move(cat), std::move(sem));
  }

  bool is_leaf() const { return !rep_->rule.has_value(); }
  const std::string& word() const { return rep_->word; }
  const RuleUse& rule() const { return *rep_->rule; }
  Derivation left() const { return Derivation(rep_->left); }
  Derivation right() const { return Derivation(rep_->right); }
  const Category& cat() const { return rep_->cat; }
  const SemTerm& sem() const { return rep_->sem; }

  // The rewrite-system scores, cached at construction.
  std::size_t internal_count() const { return rep_->internal_count; }
  std::size_t sigma() const { return rep_->sigma; }
  std::size_t leaf_count() const { return rep_->leaf_count; }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return equal(a.rep_.get(), b.rep_.get());
  }
  friend bool operator!=(const Derivation& a, const Derivation& b) {
    return !(a == b);
  }

private:
  struct Rep {
    std::optional<RuleUse> rule;  // nullopt = leaf
    std::string word;             // leaves only
    std::shared_ptr<const Rep> left;
    std::shared_ptr<const Rep> right;
    Category cat;
    SemTerm sem;
    std::size_t internal_count;
    std::size_t sigma;
    std::size_t leaf_count;
  };

  explicit Derivation(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  static bool equal(const Rep* a, const Rep* b) {
    if (a == b) return true;
    if (a->rule.has_value() != b->rule.has_value()) return false;
    if (!a->rule) return a->word == b->word && a->cat == b->cat;
    return *a->rule == *b->rule && equal(a->left.get(), b->left.get()) &&
           equal(a->right.get(), b->right.get());
  }

  friend Derivation make_node(const RuleUse&, const Derivation&,
                              const Derivation&);

  std::shared_ptr<const Rep> rep_;
};

// Combines two derivations by one rule application. The functor child is
// left for forward rules and right for backward rules.
inline Derivation make_node(const RuleUse& rule, const Derivation& left,
                            const Derivation& right) {
  auto cat = apply_rule(left.cat(), right.cat(), rule);
  if (!cat)
    throw DerivationError("rule " + rule.name() + " does not combine " +
                          format_category(left.cat()) + " with " +
                          format_category(right.cat()));
  const bool forward = rule.dir == RuleDir::forward;
  SemTerm sem = sem_of_combination(rule, forward ? left.sem() : right.sem(),
                                   forward ? right.sem() : left.sem());
  auto rep = std::make_shared<Derivation::Rep>(Derivation::Rep{
      rule, std::string(), left.rep_, right.rep_, std::move(*cat),
      std::move(sem),
      1 + left.internal_count() + right.internal_count(),
      left.sigma() + right.sigma() + left.internal_count(),
      left.leaf_count() + right.leaf_count()});
  return Derivation(std::move(rep));
}

inline std::size_t internal_count(const Derivation& d) {
  return d.internal_count();
}

inline std::size_t sigma(const Derivation& d) { return d.sigma(); }

// A path from the root; empty = the root itself.
struct Position {
  std::string steps;  // 'L' / 'R'

  std::size_t depth() const { return steps.size(); }
  Position child(char step) const { return Position{steps + step}; }

  friend bool operator==(const Position& a, const Position& b) {
    return a.steps == b.steps;
  }
  friend bool operator<(const Position& a, const Position& b) {
    return a.steps < b.steps;
  }
};

inline std::string format_position(const Position& p) {
  return p.steps.empty() ? std::string(".") : p.steps;
}

inline Derivation node_at(const Derivation& d, const Position& p) {
  Derivation cur = d;
  for (char step : p.steps) {
    if (cur.is_leaf())
      throw DerivationError("position " + format_position(p) +
                            " does not address a node");
    cur = step == 'L' ? cur.left() : cur.right();
  }
  return cur;
}

// Replaces the subtree at p, revalidating every node on the spine above it
// with its original rule.
inline Derivation replace_at(const Derivation& d, const Position& p,
                             const Derivation& replacement,
                             std::size_t index = 0) {
  if (index == p.steps.size()) return replacement;
  if (d.is_leaf())
    throw DerivationError("position " + format_position(p) +
                          " does not address a node");
  const char step = p.steps[index];
  if (step == 'L')
    return make_node(d.rule(), replace_at(d.left(), p, replacement, index + 1),
                     d.right());
  return make_node(d.rule(), d.left(),
                   replace_at(d.right(), p, replacement, index + 1));
}

struct FrontierItem {
  std::string word;
  Category cat;
};

inline void collect_frontier(const Derivation& d,
                             std::vector<FrontierItem>& out) {
  if (d.is_leaf()) {
    out.push_back({d.word(), d.cat()});
    return;
  }
  collect_frontier(d.left(), out);
  collect_frontier(d.right(), out);
}

// Left-to-right leaf sequence.
inline std::vector<FrontierItem> frontier(const Derivation& d) {
  std::vector<FrontierItem> out;
  out.reserve(d.leaf_count());
  collect_frontier(d, out);
  return out;
}

inline std::vector<std::string> frontier_words(const Derivation& d) {
  std::vector<std::string> out;
  for (auto& item : frontier(d)) out.push_back(item.word);
  return out;
}

struct FrontierSite {
  Position pos;
  Category cat;
};

// The root, then each successive right child down to the rightmost leaf,
// outermost first. These are the attachment sites a right-branching
// derivation exposes.
inline std::vector<FrontierSite> right_frontier(const Derivation& d) {
  std::vector<FrontierSite> out;
  Position p{};
  Derivation cur = d;
  out.push_back({p, cur.cat()});
  while (!cur.is_leaf()) {
    p = p.child('R');
    cur = cur.right();
    out.push_back({p, cur.cat()});
  }
  return out;
}

// Deterministic indented rendering: internal nodes show category, rule name
// and word span; leaves show word and category.
inline void pretty_lines(const Derivation& d, std::string& out,
                         std::size_t indent) {
  out.append(indent * 2, ' ');
  if (d.is_leaf()) {
    out += d.word();
    out += " := ";
    out += format_category(d.cat());
    out += '\n';
    return;
  }
  out += format_category(d.cat());
  out += "  ";
  out += d.rule().name();
  out += "  [";
  bool first = true;
  for (auto& item : frontier(d)) {
    if (!first) out += ' ';
    out += item.word;
    first = false;
  }
  out += "]\n";
  pretty_lines(d.left(), out, indent + 1);
  pretty_lines(d.right(), out, indent + 1);
}

inline std::string pretty(const Derivation& d) {
  std::string out;
  pretty_lines(d, out, 0);
  return out;
}

// Stable content digest (FNV-1a over a canonical preorder serialization);
// used for deduplication keys and trace records.
inline void digest_feed(std::uint64_t& h, std::string_view s) {
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  h = (h ^ 0x1f) * 1099511628211ull;
}

inline void digest_node(const Derivation& d, std::uint64_t& h) {
  if (d.is_leaf()) {
    digest_feed(h, "w");
    digest_feed(h, d.word());
    digest_feed(h, format_category(d.cat()));
    digest_feed(h, format_semterm(d.sem()));
    return;
  }
  digest_feed(h, d.rule().name());
  digest_node(d.left(), h);
  digest_node(d.right(), h);
}

inline std::string digest(const Derivation& d) {
  std::uint64_t h = 1469598103934665603ull;
  digest_node(d, h);
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

// Deep re-check of the construction invariants: recomputes every internal
// node's category and semantics from its children and compares with the
// cached values. Construction makes violations unrepresentable; this exists
// for tests and for derivations read back from serialized form.
inline bool validate_derivation(const Derivation& d) {
  if (d.is_leaf()) return true;
  if (!validate_derivation(d.left()) || !validate_derivation(d.right()))
    return false;
  auto cat = apply_rule(d.left().cat(), d.right().cat(), d.rule());
  if (!cat || *cat != d.cat()) return false;
  const bool forward = d.rule().dir == RuleDir::forward;
  SemTerm sem = sem_of_combination(
      d.rule(), forward ? d.left().sem() : d.right().sem(),
      forward ? d.right().sem() : d.left().sem());
  return sem == d.sem();
}

}  // namespace ccg
