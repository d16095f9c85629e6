#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccg {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed category notation; position is a byte offset into the input.
class CategoryParseError : public Error {
public:
  CategoryParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Malformed lexicon, corpus, or model file; line is 1-based.
class FileFormatError : public Error {
public:
  FileFormatError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A semantic term could not be fully reduced at the arity its category
// promised; signals a category/semantics mismatch.
class SemArityError : public Error {
public:
  using Error::Error;
};

// Invalid derivation construction or an invalid tree position.
class DerivationError : public Error {
public:
  using Error::Error;
};

// A contraction whose recomputed rule is blocked by the active RuleConfig
// (degree cap, blocked rule, or predicate). Distinct from DerivationError so
// restricted grammars fail loudly instead of silently skipping rewrites.
class RewriteObstructedError : public Error {
public:
  using Error::Error;
};

// Word missing from the lexicon; index is the 0-based sentence position.
class UnknownWordError : public Error {
public:
  UnknownWordError(const std::string& word, std::size_t index)
      : Error("unknown word '" + word + "' at position " +
              std::to_string(index)),
        word_(word),
        index_(index) {}

  const std::string& word() const { return word_; }
  std::size_t index() const { return index_; }

private:
  std::string word_;
  std::size_t index_;
};

// The parser ran out of analyses mid-sentence; trace_tail summarizes the
// last events before the state emptied.
class StuckError : public Error {
public:
  StuckError(const std::string& word, std::size_t index,
             const std::string& trace_tail = {})
      : Error("stuck at word " + std::to_string(index) + " ('" + word + "')" +
              (trace_tail.empty() ? "" : "; last events: " + trace_tail)),
        word_(word),
        index_(index) {}

  const std::string& word() const { return word_; }
  std::size_t index() const { return index_; }

private:
  std::string word_;
  std::size_t index_;
};

// Inconsistent engine configuration (e.g. reveal without eager mode).
class ConfigError : public Error {
public:
  using Error::Error;
};

// A size guard tripped (enumeration length, sequence-search size, analysis
// budget).
class GuardError : public Error {
public:
  using Error::Error;
};

}  // namespace ccg
