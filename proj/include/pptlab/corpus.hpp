#ifndef PPTLAB_CORPUS_HPP
#define PPTLAB_CORPUS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pptlab/record.hpp"

namespace pptlab {

// One built-in example with its stored expectations.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> tags;
  unsigned p;
  std::string vars;
  std::string f;
  unsigned depth;
  std::vector<unsigned> expected_sequence;  // s_0..s_depth
  std::string expected_verdict;             // PerfectoidPure, NotPerfectoidPure, Inconclusive
  std::optional<std::string> expected_ppt;  // exact value, e.g. "1/3"
  std::set<int> expected_criteria;
  std::string annotation;
};

const std::vector<CorpusEntry>& builtin_corpus();

// Case-sensitive substring match against the name and the tags; an empty
// filter selects everything.
bool corpus_matches(const CorpusEntry& e, const std::string& filter);

// Runs the selected rows and diffs them against the stored values.  The
// table carries one row per entry plus the list of mismatching names.
json run_corpus(const std::string& filter, const Limits& limits,
                std::vector<std::string>& mismatches);

}  // namespace pptlab

#endif
