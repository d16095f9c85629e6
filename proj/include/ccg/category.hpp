#pragma once

// The category algebra: atomic categories closed under the two slash
// constructors. A category X/Y is an X missing a Y to its right; X\Y is an
// X missing a Y to its left.
//
// Notation grammar (documented surface syntax):
//
//   Cat  := Unit (('/' | '\') Unit)*        left-associative
//   Unit := Atom | '(' Cat ')'
//   Atom := [A-Za-z0-9_]+
//
// so "s\np/pp" reads as "(s\np)/pp". Whitespace is insignificant.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccg/errors.hpp"

namespace ccg {

enum class Slash : char { forward = '/', backward = '\\' };

inline char slash_char(Slash s) { return static_cast<char>(s); }

// Immutable value type; cheap to copy and safe to share between threads.
class Category {
public:
  static Category atom(std::string name) {
    if (name.empty()) throw DerivationError("atom name must be non-empty");
    auto rep = std::make_shared<Rep>();
    rep->name = std::move(name);
    rep->hash = hash_atom(rep->name);
    return Category(std::move(rep));
  }

  static Category make(Category result, Slash slash, Category argument) {
    auto rep = std::make_shared<Rep>();
    rep->result = std::move(result.rep_);
    rep->argument = std::move(argument.rep_);
    rep->slash = slash;
    rep->hash = hash_complex(rep->result->hash, slash, rep->argument->hash);
    return Category(std::move(rep));
  }

  bool is_atom() const { return rep_->result == nullptr; }

  const std::string& name() const { return rep_->name; }

  Category result() const { return Category(rep_->result); }
  Slash slash() const { return rep_->slash; }
  Category argument() const { return Category(rep_->argument); }

  std::size_t hash() const { return rep_->hash; }

  friend bool operator==(const Category& a, const Category& b) {
    return equal(a.rep_.get(), b.rep_.get());
  }
  friend bool operator!=(const Category& a, const Category& b) {
    return !(a == b);
  }

private:
  struct Rep {
    std::string name;  // empty iff complex
    std::shared_ptr<const Rep> result;
    std::shared_ptr<const Rep> argument;
    Slash slash = Slash::forward;
    std::size_t hash = 0;
  };

  explicit Category(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  static std::size_t hash_atom(const std::string& name) {
    std::size_t h = 1469598103934665603ull;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return h;
  }

  static std::size_t hash_complex(std::size_t r, Slash s, std::size_t a) {
    std::size_t h = r;
    h ^= a + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(slash_char(s)) + (h << 6) + (h >> 2);
    return h;
  }

  static bool equal(const Rep* a, const Rep* b) {
    if (a == b) return true;
    if (a->hash != b->hash) return false;
    if ((a->result == nullptr) != (b->result == nullptr)) return false;
    if (a->result == nullptr) return a->name == b->name;
    return a->slash == b->slash && equal(a->result.get(), b->result.get()) &&
           equal(a->argument.get(), b->argument.get());
  }

  std::shared_ptr<const Rep> rep_;
};

// One outer argument of a complex category, with its slash direction.
struct SlashArg {
  Slash slash;
  Category cat;

  friend bool operator==(const SlashArg& a, const SlashArg& b) {
    return a.slash == b.slash && a.cat == b.cat;
  }
};

struct Decomposition {
  Category target;              // innermost result
  std::vector<SlashArg> args;   // outermost-first
};

// Peels every outer argument down to the innermost result. Reattaching the
// args in reverse order reproduces the input.
inline Decomposition decompose(const Category& c) {
  Decomposition d{c, {}};
  while (!d.target.is_atom()) {
    d.args.push_back({d.target.slash(), d.target.argument()});
    d.target = d.target.result();
  }
  return d;
}

// Number of outer arguments (0 for atoms).
inline std::size_t arity(const Category& c) {
  std::size_t n = 0;
  Category cur = c;
  while (!cur.is_atom()) {
    ++n;
    cur = cur.result();
  }
  return n;
}

// Removes the n outermost arguments, or nullopt if fewer exist.
inline std::optional<Category> peel(const Category& c, std::size_t n) {
  Category cur = c;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur.is_atom()) return std::nullopt;
    cur = cur.result();
  }
  return cur;
}

// The n outermost arguments, outermost-first; nullopt if fewer exist.
inline std::optional<std::vector<SlashArg>> outer_args(const Category& c,
                                                       std::size_t n) {
  std::vector<SlashArg> args;
  Category cur = c;
  for (std::size_t i = 0; i < n; ++i) {
    if (cur.is_atom()) return std::nullopt;
    args.push_back({cur.slash(), cur.argument()});
    cur = cur.result();
  }
  return args;
}

// Reattaches args (given outermost-first) onto target.
inline Category attach(Category target, const std::vector<SlashArg>& args) {
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    target = Category::make(std::move(target), it->slash, it->cat);
  return target;
}

// Minimal-parenthesis canonical form. Left-associativity makes parentheses
// around results redundant; arguments need them exactly when complex.
inline std::string format_category(const Category& c) {
  if (c.is_atom()) return c.name();
  std::string out = format_category(c.result());
  out += slash_char(c.slash());
  const Category arg = c.argument();
  if (arg.is_atom()) {
    out += arg.name();
  } else {
    out += '(';
    out += format_category(arg);
    out += ')';
  }
  return out;
}

namespace detail {

inline bool is_atom_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

class CategoryParser {
public:
  explicit CategoryParser(std::string_view text) : text_(text) {}

  Category parse() {
    skip_ws();
    if (pos_ >= text_.size())
      throw CategoryParseError("empty category", pos_);
    Category c = parse_cat();
    skip_ws();
    if (pos_ < text_.size())
      throw CategoryParseError(std::string("unexpected character '") +
                                   text_[pos_] + "'",
                               pos_);
    return c;
  }

private:
  Category parse_cat() {
    Category c = parse_unit();
    skip_ws();
    while (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '\\')) {
      const Slash s = text_[pos_] == '/' ? Slash::forward : Slash::backward;
      ++pos_;
      skip_ws();
      c = Category::make(std::move(c), s, parse_unit());
      skip_ws();
    }
    return c;
  }

  Category parse_unit() {
    skip_ws();
    if (pos_ >= text_.size())
      throw CategoryParseError("expected category", pos_);
    if (text_[pos_] == '(') {
      const std::size_t open = pos_;
      ++pos_;
      Category c = parse_cat();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw CategoryParseError("unbalanced parenthesis", open);
      ++pos_;
      return c;
    }
    if (!is_atom_char(text_[pos_]))
      throw CategoryParseError(
          std::string("illegal character '") + text_[pos_] + "'", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
    return Category::atom(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Category parse_category(std::string_view text) {
  return detail::CategoryParser(text).parse();
}

}  // namespace ccg

template <>
struct std::hash<ccg::Category> {
  std::size_t operator()(const ccg::Category& c) const noexcept {
    return c.hash();
  }
};
