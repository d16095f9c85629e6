#pragma once

// Lexicon file format — one file, human-writable, diff-friendly:
//
//   # comment
//   @goal s q
//   fred := np | s/(s\np)
//   sent := s\np/pp
//
// Each word maps to one or more categories; duplicate word lines merge.
// Type-raised entries (a proper name as both np and s/(s\np)) are ordinary
// lexicon lines — type raising is not an online rule here. The @goal line
// declares the categories that count as complete parses; it defaults to
// s and q.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ccg/category.hpp"
#include "ccg/errors.hpp"
#include "ccg/semterm.hpp"

namespace ccg {

struct LexEntry {
  Category cat;
  SemTerm sem;  // a constant; defaults to the word itself
};

struct Lexicon {
  std::map<std::string, std::vector<LexEntry>> entries;
  std::vector<Category> goals;

  bool has_word(const std::string& word) const {
    return entries.contains(word);
  }

  bool is_goal(const Category& c) const {
    return std::find(goals.begin(), goals.end(), c) != goals.end();
  }

  void add(const std::string& word, Category cat) {
    auto& list = entries[word];
    for (const LexEntry& e : list)
      if (e.cat == cat) return;  // duplicates merge silently
    list.push_back({std::move(cat), SemTerm::constant(word)});
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

inline Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  bool goals_declared = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.starts_with("@goal")) {
      goals_declared = true;
      for (const std::string& tok : detail::split_ws(line.substr(5))) {
        try {
          lex.goals.push_back(parse_category(tok));
        } catch (const CategoryParseError& e) {
          throw FileFormatError(std::string("bad goal category: ") + e.what(),
                                line_no);
        }
      }
      continue;
    }
    const std::size_t sep = line.find(":=");
    if (sep == std::string::npos)
      throw FileFormatError("expected 'word := category (| category)*'",
                            line_no);
    const std::string word = detail::trim(line.substr(0, sep));
    if (word.empty() || detail::split_ws(word).size() != 1)
      throw FileFormatError("expected a single word before ':='", line_no);
    std::string rest = line.substr(sep + 2);
    std::size_t start = 0;
    bool any = false;
    for (;;) {
      const std::size_t bar = rest.find('|', start);
      const std::string piece = detail::trim(
          bar == std::string::npos ? rest.substr(start)
                                   : rest.substr(start, bar - start));
      if (piece.empty())
        throw FileFormatError("empty category alternative", line_no);
      try {
        lex.add(word, parse_category(piece));
      } catch (const CategoryParseError& e) {
        throw FileFormatError(std::string("bad category: ") + e.what(),
                              line_no);
      }
      any = true;
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (!any)
      throw FileFormatError("word with no categories", line_no);
  }
  if (lex.entries.empty()) throw FileFormatError("empty lexicon", line_no);
  if (!goals_declared) {
    lex.goals.push_back(Category::atom("s"));
    lex.goals.push_back(Category::atom("q"));
  }
  return lex;
}

inline Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

inline std::string format_lexicon(const Lexicon& lex) {
  std::string out = "@goal";
  for (const Category& g : lex.goals) {
    out += ' ';
    out += format_category(g);
  }
  out += '\n';
  for (const auto& [word, list] : lex.entries) {
    out += word;
    out += " := ";
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) out += " | ";
      out += format_category(list[i].cat);
    }
    out += '\n';
  }
  return out;
}

inline void save_lexicon(const Lexicon& lex, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write lexicon file: " + path);
  out << format_lexicon(lex);
}

// Whitespace tokenization for sentences and corpus lines.
inline std::vector<std::string> tokenize(const std::string& sentence) {
  return detail::split_ws(sentence);
}

// Corpus file: one sentence per line, '#' comments, blank lines ignored.
inline std::vector<std::vector<std::string>> parse_corpus(
    const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw = raw.substr(0, hash);
    auto words = tokenize(raw);
    if (!words.empty()) out.push_back(std::move(words));
  }
  return out;
}

inline std::vector<std::vector<std::string>> load_corpus(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

}  // namespace ccg
