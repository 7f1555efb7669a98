#ifndef IMPJUDGE_JUDGE_HPP
#define IMPJUDGE_JUDGE_HPP

#include <string>
#include <vector>

#include "impjudge/agree.hpp"
#include "impjudge/chains.hpp"
#include "impjudge/lexicon.hpp"
#include "impjudge/syntax.hpp"
#include "impjudge/verdict.hpp"

namespace impjudge {

// Grammatical carries the coreference map; Ungrammatical carries every
// detected violation, primary first; InputError covers strings the judge
// cannot take into the derivation at all (empty input, unknown forms, shapes
// outside the imperative fragment).
struct Judgment {
  enum class Verdict { Grammatical, Ungrammatical, InputError };

  Verdict verdict = Verdict::InputError;
  std::string sentence;
  std::vector<Violation> violations;
  std::string input_error;  // message for InputError rejections

  CoreferenceMap coreference;
  std::vector<AChain> chains;
  std::vector<std::string> brackets;  // one per conjunct
  std::vector<TraceEvent> trace;
  std::vector<ProbeGoalStep> steps;

  FeatureState initial_state;  // right after clause assembly
  FeatureState final_state;    // after Agree across phases

  bool grammatical() const { return verdict == Verdict::Grammatical; }
  // 0 Grammatical, 1 Ungrammatical, 2 input error
  int exit_code() const;
  std::string verdict_string() const;
  // empty for Grammatical; the first (primary) code otherwise
  std::string primary_code() const;
};

// Full pipeline: parse -> inherit -> agree -> chains -> STP -> AAP ->
// binding -> tense -> convergence. Post-parse checks accumulate; only
// structural parse failures short-circuit.
Judgment judge(const Lexicon& lex, const std::string& sentence);

}  // namespace impjudge

#endif  // IMPJUDGE_JUDGE_HPP
