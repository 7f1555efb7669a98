#include "impjudge/corpus.hpp"

#include <fstream>
#include <sstream>

namespace impjudge {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

CorpusParse parse_corpus(std::istream& in) {
  CorpusParse out;
  CorpusEntry current;
  bool open = false;
  int lineno = 0;

  auto flush = [&]() {
    if (!open) return;
    if (current.id.empty())
      out.malformed.push_back("line " + std::to_string(current.line) + ": block without id");
    else if (current.sentence.empty())
      out.malformed.push_back("line " + std::to_string(current.line) + ": block '" + current.id +
                              "' without sent");
    else if (current.expect.empty())
      out.malformed.push_back("line " + std::to_string(current.line) + ": block '" + current.id +
                              "' without expect");
    else if (current.expect != "OK" && !violation_from_string(current.expect))
      out.malformed.push_back("line " + std::to_string(current.line) + ": block '" + current.id +
                              "' has unknown expectation '" + current.expect + "'");
    else if (!current.coref.empty() && current.expect != "OK")
      out.malformed.push_back("line " + std::to_string(current.line) + ": block '" + current.id +
                              "' gives coref with a non-OK expectation");
    else
      out.entries.push_back(current);
    current = CorpusEntry{};
    open = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      out.malformed.push_back("line " + std::to_string(lineno) + ": expected 'key: value'");
      continue;
    }
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (!open) {
      open = true;
      current.line = lineno;
    }
    if (key == "id") {
      current.id = value;
    } else if (key == "sent") {
      current.sentence = value;
    } else if (key == "expect") {
      current.expect = value;
    } else if (key == "coref") {
      std::istringstream fields(value);
      std::string field;
      while (fields >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) {
          out.malformed.push_back("line " + std::to_string(lineno) + ": bad coref field '" +
                                  field + "'");
          continue;
        }
        current.coref[field.substr(0, eq)] = field.substr(eq + 1);
      }
    } else {
      out.malformed.push_back("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  flush();
  return out;
}

CorpusParse parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus(in);
}

bool entry_matches(const CorpusEntry& entry, const Judgment& j, std::string& diff) {
  if (entry.expect == "OK") {
    if (!j.grammatical()) {
      diff = "expected OK, got " + (j.violations.empty() ? j.verdict_string() : j.primary_code());
      return false;
    }
    if (!entry.coref.empty()) {
      if (entry.coref.size() != j.coreference.size()) {
        diff = "expected " + std::to_string(entry.coref.size()) + " pro(s), engine found " +
               std::to_string(j.coreference.size());
        return false;
      }
      for (const ProResolution& r : j.coreference) {
        auto it = entry.coref.find(r.label);
        if (it == entry.coref.end()) {
          diff = "engine resolved unexpected " + r.label;
          return false;
        }
        bool want_null = it->second == "NULLTOP" || it->second.rfind("NULLTOP#", 0) == 0;
        bool ok = want_null ? r.antecedent.kind == Antecedent::Kind::NullTopic
                            : (r.antecedent.kind == Antecedent::Kind::Overt &&
                               r.antecedent.form == it->second);
        if (!ok) {
          diff = r.label + ": expected " + it->second + ", got " + r.antecedent.display();
          return false;
        }
      }
    }
    return true;
  }
  // starred expectation: exact primary code
  if (j.grammatical()) {
    diff = "expected " + entry.expect + ", got Grammatical";
    return false;
  }
  if (j.primary_code() != entry.expect) {
    diff = "expected " + entry.expect + ", got " +
           (j.violations.empty() ? ("input error: " + j.input_error) : j.primary_code());
    return false;
  }
  return true;
}

RunReport run_corpus(const Lexicon& lex, const CorpusParse& corpus) {
  RunReport report;
  report.malformed = corpus.malformed;
  for (const CorpusEntry& entry : corpus.entries) {
    EntryResult res;
    res.entry = entry;
    Judgment j = judge(lex, entry.sentence);
    res.actual = j.grammatical() ? "OK"
                 : j.violations.empty() ? ("input error: " + j.input_error)
                                        : j.primary_code();
    res.match = entry_matches(entry, j, res.diff);
    report.results.push_back(std::move(res));
  }
  report.total = static_cast<int>(report.results.size());
  for (const EntryResult& r : report.results)
    if (r.match) ++report.matched;
  return report;
}

std::string render_report(const RunReport& report) {
  std::ostringstream out;
  for (const EntryResult& r : report.results) {
    out << (r.match ? "pass" : "FAIL") << "  " << r.entry.id << "  expect=" << r.entry.expect
        << " actual=" << r.actual;
    if (!r.match) out << "  (" << r.diff << ")";
    out << "\n";
  }
  for (const std::string& m : report.malformed) out << "malformed: " << m << "\n";
  out << report.matched << "/" << report.total << " entries matched";
  if (!report.malformed.empty())
    out << ", " << report.malformed.size() << " malformed block(s)";
  out << "\n";
  return out.str();
}

}  // namespace impjudge
