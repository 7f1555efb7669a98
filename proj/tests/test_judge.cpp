#include <map>
#include <set>

#include "doctest.h"
#include "impjudge/corpus.hpp"
#include "impjudge/judge.hpp"
#include "impjudge/render.hpp"

using namespace impjudge;

namespace {

const Lexicon& seed() { return Lexicon::seed(); }

}  // namespace

TEST_CASE("tag tense decides the verdict") {
  Judgment fut = judge(seed(), "taʕaal baʕd saaʕah ʕa tʒaħ");
  CHECK(fut.grammatical());
  CHECK(fut.exit_code() == 0);

  Judgment past = judge(seed(), "taʕaal baʕd saaʕah qa jiʔk");
  CHECK(past.verdict == Judgment::Verdict::Ungrammatical);
  CHECK(past.primary_code() == "PastTense");
  CHECK(past.exit_code() == 1);
}

TEST_CASE("paired topics each control their own conjunct") {
  Judgment j = judge(seed(), "ʔawlaad ʔimšuu wa banaat ʔibquu");
  REQUIRE(j.grammatical());
  REQUIRE(j.coreference.size() == 2);
  CHECK(j.coreference[0].antecedent.form == "ʔawlaad");
  CHECK(j.coreference[1].antecedent.form == "banaat");
}

TEST_CASE("negation is rejected as out of scope, not judged grammatical") {
  Judgment j = judge(seed(), "laa t-imnaʕ-š l-kalaam");
  CHECK(j.verdict == Judgment::Verdict::Ungrammatical);
  CHECK(j.primary_code() == "OutOfScopeNegation");
  CHECK(j.exit_code() == 1);
}

TEST_CASE("input rejections exit with status 2") {
  Judgment empty = judge(seed(), "");
  CHECK(empty.verdict == Judgment::Verdict::InputError);
  CHECK(empty.primary_code() == "EmptyInput");
  CHECK(empty.exit_code() == 2);

  Judgment unknown = judge(seed(), "qulk lak ʔijzaʕ");
  CHECK(unknown.verdict == Judgment::Verdict::InputError);
  CHECK(unknown.primary_code() == "UnknownForm");
  CHECK(unknown.violations.front().locus == "qulk");
  CHECK(unknown.exit_code() == 2);

  Judgment bare = judge(seed(), "ʕali");
  CHECK(bare.verdict == Judgment::Verdict::InputError);
  CHECK(bare.input_error.find("not an imperative clause") != std::string::npos);
}

TEST_CASE("wh element over a 1-person verb form is out of scope") {
  Lexicon lex = Lexicon::load_string(
      "ʔaiš WH GLOSS=what\n"
      "ʔaktub V.IMP GLOSS=write.1S PERS=1 NUM=Sg GEND=M TENSE=Pres\n");
  Judgment j = judge(lex, "ʔaiš ʔaktub");
  CHECK(j.verdict == Judgment::Verdict::InputError);
  CHECK(j.input_error.find("out of scope") != std::string::npos);
}

TEST_CASE("removing the offending token repairs each starred structure") {
  // stacked topics: drop the second one
  CHECK(!judge(seed(), "ʕali ʔaħmad ʔiftaħ l-baab li-ʕaliya").grammatical());
  CHECK(judge(seed(), "ʕali ʔiftaħ l-baab li-ʕaliya").grammatical());

  // doubly filled force field: drop either filler
  CHECK(!judge(seed(), "ʕali muh ʔinna al-kitaab maʕak taʕaal").grammatical());
  CHECK(judge(seed(), "ʕali ʔinna al-kitaab maʕak taʕaal").grammatical());
  CHECK(judge(seed(), "ʕali muh al-kitaab maʕak taʕaal").grammatical());

  // anaphor person: swap in the 2-person form
  CHECK(!judge(seed(), "ʕali ʕarrif nafas-i").grammatical());
  CHECK(!judge(seed(), "ʕali ʕarrif nafas-uh").grammatical());
  CHECK(judge(seed(), "ʕali ʕarrif nafas-ak").grammatical());

  // repeated topic: silence it
  CHECK(!judge(seed(), "ʕali biz l-masaaha wa ʕali ʔimsaħ ṣ-ṣabuura").grammatical());
  CHECK(judge(seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura").grammatical());
}

TEST_CASE("post-parse checks accumulate instead of short-circuiting") {
  Judgment j = judge(seed(), "ʕaliya taʕaal qa jiʔk");
  CHECK(j.verdict == Judgment::Verdict::Ungrammatical);
  REQUIRE(j.violations.size() >= 2);
  CHECK(j.primary_code() == "AgreementMismatch");
  bool past_listed = false;
  for (const Violation& v : j.violations)
    if (v.code == ViolationCode::PastTense) past_listed = true;
  CHECK(past_listed);
}

TEST_CASE("agreement mismatches coincide with recorded conflicts") {
  Judgment j = judge(seed(), "ʕali taʕaal-i");
  CHECK(j.primary_code() == "AgreementMismatch");
  bool conflict = false;
  for (const ProbeGoalStep& s : j.steps)
    if (s.any_conflict()) conflict = true;
  CHECK(conflict);
}

// Every valuation between the post-parse state and the final state must be
// justified by exactly one recorded step (or structural event).
TEST_CASE("trace audit: one justification per valuation, corpus-wide") {
  CorpusParse corpus = parse_corpus_file(IMPJUDGE_CORPUS_FILE);
  for (const CorpusEntry& entry : corpus.entries) {
    Judgment j = judge(seed(), entry.sentence);
    if (j.verdict == Judgment::Verdict::InputError) continue;
    if (j.initial_state.empty()) continue;  // structural rejection, no derivation ran
    INFO(entry.id);

    std::map<std::pair<std::string, std::string>, int> claims;  // (position, attr) -> count
    for (const TraceEvent& ev : j.trace) {
      if (ev.step) {
        for (const AttrResult& r : ev.step->results)
          if (r.result == MatchResult::Valued)
            ++claims[{ev.step->probe, to_string(r.attr)}];
      }
      for (const auto& [pos, attr] : ev.structural_valuations) ++claims[{pos, to_string(attr)}];
    }

    for (const auto& [pos, final_bundle] : j.final_state) {
      auto initial_it = j.initial_state.find(pos);
      REQUIRE(initial_it != j.initial_state.end());
      for (const auto& [attr, feature] : final_bundle) {
        if (!feature.is_valued()) continue;
        const Feature* before = initial_it->second.find(attr);
        if (before && before->is_valued()) continue;  // valued since assembly
        auto key = std::make_pair(pos, to_string(attr));
        INFO(pos, " ", to_string(attr));
        CHECK(claims[key] == 1);
      }
    }
  }
}

TEST_CASE("interpretation-choice notes appear in every derivation trace") {
  Judgment j = judge(seed(), "ʕali ʔiftaħ l-baab");
  bool carrier_note = false, spcty_note = false, stp_note = false;
  for (const TraceEvent& ev : j.trace) {
    if (ev.text.find("morphological carrier") != std::string::npos) carrier_note = true;
    if (ev.text.find("Spcty matched like any feature") != std::string::npos) spcty_note = true;
    if (ev.text.find("same referent") != std::string::npos) stp_note = true;
  }
  CHECK(carrier_note);
  CHECK(spcty_note);
  CHECK(stp_note);
}
