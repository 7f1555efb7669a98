#ifndef IMPJUDGE_CORPUS_HPP
#define IMPJUDGE_CORPUS_HPP

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "impjudge/judge.hpp"
#include "impjudge/lexicon.hpp"

namespace impjudge {

// One block of a corpus file:
//   id: <string>
//   sent: <tokens>
//   expect: OK | <ViolationCode>
//   coref: pro1=<form|NULLTOP> pro2=...   (only with expect: OK)
struct CorpusEntry {
  std::string id;
  std::string sentence;
  std::string expect;                        // "OK" or a violation code name
  std::map<std::string, std::string> coref;  // pro label -> antecedent form or NULLTOP
  int line = 0;
};

struct CorpusParse {
  std::vector<CorpusEntry> entries;
  std::vector<std::string> malformed;  // "line N: message" — run continues
};

CorpusParse parse_corpus(std::istream& in);
CorpusParse parse_corpus_file(const std::string& path);

struct EntryResult {
  CorpusEntry entry;
  std::string actual;  // verdict or primary code
  bool match = false;
  std::string diff;  // empty when matched
};

struct RunReport {
  std::vector<EntryResult> results;
  std::vector<std::string> malformed;
  int total = 0;
  int matched = 0;
  bool all_ok() const { return matched == total && malformed.empty(); }
};

// Judges every entry in file order; expectations are exact (verdict class,
// primary code, and the full coreference map when given).
RunReport run_corpus(const Lexicon& lex, const CorpusParse& corpus);

std::string render_report(const RunReport& report);

// Exposed for tests: does this judgment satisfy the entry's expectation?
bool entry_matches(const CorpusEntry& entry, const Judgment& j, std::string& diff);

}  // namespace impjudge

#endif  // IMPJUDGE_CORPUS_HPP
