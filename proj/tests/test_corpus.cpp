#include <sstream>

#include "doctest.h"
#include "impjudge/corpus.hpp"
#include "impjudge/render.hpp"

using namespace impjudge;

TEST_CASE("corpus blocks parse with comments and blank lines") {
  std::istringstream in(
      "# header comment\n"
      "id: one\n"
      "sent: ʔiktub\n"
      "expect: OK\n"
      "coref: pro1=NULLTOP\n"
      "\n"
      "id: two\n"
      "sent: taʕaal baʕd saaʕah qa jiʔk\n"
      "expect: PastTense\n");
  CorpusParse corpus = parse_corpus(in);
  CHECK(corpus.malformed.empty());
  REQUIRE(corpus.entries.size() == 2);
  CHECK(corpus.entries[0].id == "one");
  CHECK(corpus.entries[0].coref.at("pro1") == "NULLTOP");
  CHECK(corpus.entries[1].expect == "PastTense");
}

TEST_CASE("malformed blocks are reported with line numbers and skipped") {
  std::istringstream in(
      "id: incomplete\n"
      "expect: OK\n"
      "\n"
      "id: badcode\n"
      "sent: ʔiktub\n"
      "expect: NotACode\n"
      "\n"
      "id: good\n"
      "sent: ʔiktub\n"
      "expect: OK\n");
  CorpusParse corpus = parse_corpus(in);
  CHECK(corpus.malformed.size() == 2);
  CHECK(corpus.malformed[0].find("line 1") != std::string::npos);
  REQUIRE(corpus.entries.size() == 1);
  CHECK(corpus.entries[0].id == "good");
}

TEST_CASE("an empty corpus runs clean") {
  std::istringstream in("\n\n");
  RunReport report = run_corpus(Lexicon::seed(), parse_corpus(in));
  CHECK(report.all_ok());
  CHECK(report.total == 0);
}

TEST_CASE("a flipped expectation produces exactly one diff") {
  std::istringstream in(
      "id: flipped\n"
      "sent: ʕali ʔiftaħ l-baab\n"
      "expect: PastTense\n"
      "\n"
      "id: straight\n"
      "sent: ʕali ʔiftaħ l-baab\n"
      "expect: OK\n"
      "coref: pro1=ʕali\n");
  RunReport report = run_corpus(Lexicon::seed(), parse_corpus(in));
  CHECK(!report.all_ok());
  CHECK(report.total == 2);
  CHECK(report.matched == 1);
  CHECK(!report.results[0].match);
  CHECK(!report.results[0].diff.empty());
  CHECK(report.results[1].match);
}

TEST_CASE("a wrong coreference expectation is a diff") {
  std::istringstream in(
      "id: wrongcoref\n"
      "sent: ʕali ʔiftaħ l-baab\n"
      "expect: OK\n"
      "coref: pro1=ʕaliya\n");
  RunReport report = run_corpus(Lexicon::seed(), parse_corpus(in));
  CHECK(report.matched == 0);
  CHECK(report.results[0].diff.find("pro1") != std::string::npos);
}

TEST_CASE("the shipped corpus passes in full") {
  CorpusParse corpus = parse_corpus_file(IMPJUDGE_CORPUS_FILE);
  REQUIRE(corpus.malformed.empty());
  RunReport report = run_corpus(Lexicon::seed(), corpus);
  for (const EntryResult& r : report.results) {
    INFO(r.entry.id, ": ", r.diff);
    CHECK(r.match);
  }
  CHECK(report.all_ok());
}

TEST_CASE("rendering is deterministic") {
  Judgment j1 = judge(Lexicon::seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura");
  Judgment j2 = judge(Lexicon::seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura");
  CHECK(render_text(j1, true) == render_text(j2, true));
  CHECK(render_structured(j1) == render_structured(j2));
}

TEST_CASE("structured output carries every field the text shows") {
  Judgment j = judge(Lexicon::seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura");
  std::string text = render_text(j, false);
  std::string structured = render_structured(j);

  CHECK(text.find("pro1 ⇒ ʕali") != std::string::npos);
  CHECK(text.find("Grammatical") != std::string::npos);
  for (const char* field :
       {"\"verdict\"", "\"violations\"", "\"coreference\"", "\"chains\"", "\"structure\"",
        "\"steps\"", "\"trace\"", "\"final_state\"", "\"antecedent\""}) {
    INFO(field);
    CHECK(structured.find(field) != std::string::npos);
  }
  CHECK(structured.find("Grammatical") != std::string::npos);
  CHECK(structured.find("ʕali") != std::string::npos);

  Judgment starred = judge(Lexicon::seed(), "taʕaal baʕd saaʕah qa jiʔk");
  std::string starred_text = render_text(starred, false);
  CHECK(starred_text.find("PastTense") != std::string::npos);
  CHECK(render_structured(starred).find("PastTense") != std::string::npos);
}

TEST_CASE("single-pro text rendering uses the bare pro label") {
  Judgment j = judge(Lexicon::seed(), "ʕali ʔiftaħ l-baab");
  CHECK(render_text(j, false).find("pro ⇒ ʕali") != std::string::npos);
}
