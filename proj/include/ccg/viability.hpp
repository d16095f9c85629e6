#pragma once

// The viable-analysis model: statistics over the category signatures of
// analyses (the printed categories of their last k constituents), trained by
// observing which analyses ever extend to a complete parse. A signature that
// has failed at least `threshold` times and never once succeeded is not
// viable; everything unseen is viable — the filter starts out completely
// permissive and only ever learns to discard.
//
// Persisted as a plain text table, one line per signature: the categories
// tab-separated, then the failure and success counts. A header comment
// carries k and the threshold so a model reloads losslessly.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccg/errors.hpp"

namespace ccg {

using AnalysisSignature = std::vector<std::string>;

struct SignatureCounts {
  std::uint64_t failures = 0;
  std::uint64_t successes = 0;

  friend bool operator==(const SignatureCounts&,
                         const SignatureCounts&) = default;
};

struct ViabilityModel {
  std::map<AnalysisSignature, SignatureCounts> counts;
  std::uint64_t threshold = 3;
  std::size_t k = 2;
};

inline bool is_viable(const ViabilityModel& m, const AnalysisSignature& sig) {
  auto it = m.counts.find(sig);
  if (it == m.counts.end()) return true;
  return it->second.successes > 0 || it->second.failures < m.threshold;
}

inline std::string format_viability_model(const ViabilityModel& m) {
  std::string out = "#viability k=" + std::to_string(m.k) +
                    " threshold=" + std::to_string(m.threshold) + "\n";
  for (const auto& [sig, counts] : m.counts) {
    for (const std::string& cat : sig) {
      out += cat;
      out += '\t';
    }
    out += std::to_string(counts.failures);
    out += '\t';
    out += std::to_string(counts.successes);
    out += '\n';
  }
  return out;
}

inline ViabilityModel parse_viability_model(const std::string& text) {
  ViabilityModel m;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream header(line.substr(1));
      std::string tok;
      while (header >> tok) {
        if (tok.starts_with("k=")) m.k = std::stoul(tok.substr(2));
        if (tok.starts_with("threshold="))
          m.threshold = std::stoull(tok.substr(10));
      }
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(
          start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 3)
      throw FileFormatError("model line needs categories and two counts",
                            line_no);
    SignatureCounts counts;
    try {
      counts.failures = std::stoull(fields[fields.size() - 2]);
      counts.successes = std::stoull(fields[fields.size() - 1]);
    } catch (const std::exception&) {
      throw FileFormatError("bad count field", line_no);
    }
    AnalysisSignature sig(fields.begin(), fields.end() - 2);
    m.counts[sig] = counts;
  }
  return m;
}

inline void save_viability_model(const ViabilityModel& m,
                                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file: " + path);
  out << format_viability_model(m);
}

inline ViabilityModel load_viability_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_viability_model(buf.str());
}

}  // namespace ccg
