#include "impjudge/judge.hpp"

namespace impjudge {

#include "verdict_strings.inc"

std::string to_string(ViolationCode code) {
  return violation_names[static_cast<std::size_t>(code)];
}

std::optional<ViolationCode> violation_from_string(const std::string& name) {
  for (std::size_t i = 0; i < std::size(violation_names); ++i)
    if (name == violation_names[i]) return static_cast<ViolationCode>(i);
  return std::nullopt;
}

bool is_input_error(ViolationCode code) {
  return code == ViolationCode::UnknownForm || code == ViolationCode::EmptyInput;
}

std::string to_string(TraceEvent::Kind kind) {
  switch (kind) {
    case TraceEvent::Kind::Merge: return "merge";
    case TraceEvent::Kind::Insert: return "insert";
    case TraceEvent::Kind::Remerge: return "remerge";
    case TraceEvent::Kind::Inherit: return "inherit";
    case TraceEvent::Kind::Agree: return "agree";
    case TraceEvent::Kind::Chain: return "chain";
    case TraceEvent::Kind::Stp: return "stp";
    case TraceEvent::Kind::Coref: return "coref";
    case TraceEvent::Kind::Binding: return "binding";
    case TraceEvent::Kind::Tense: return "tense";
    case TraceEvent::Kind::Note: return "note";
    case TraceEvent::Kind::LfReport: return "lf";
  }
  return "?";
}

int Judgment::exit_code() const {
  switch (verdict) {
    case Verdict::Grammatical: return 0;
    case Verdict::Ungrammatical: return 1;
    case Verdict::InputError: return 2;
  }
  return 2;
}

std::string Judgment::verdict_string() const {
  switch (verdict) {
    case Verdict::Grammatical: return "Grammatical";
    case Verdict::Ungrammatical: return "Ungrammatical";
    case Verdict::InputError: return "InputError";
  }
  return "?";
}

std::string Judgment::primary_code() const {
  return violations.empty() ? "" : to_string(violations.front().code);
}

namespace {

std::vector<Violation> tense_check(Derivation& deriv) {
  std::vector<Violation> out;
  for (const Conjunct& c : deriv.structure.conjuncts) {
    if (!c.verbless()) {
      const Feature* t = c.tp->head_feats.find(FeatureAttribute::Tense);
      if (t && t->is_valued() && t->value() == FeatureValue::tense(TenseVal::Past)) {
        out.push_back({ViolationCode::PastTense, c.tp->position,
                       "imperative T resolved to past tense in conjunct " + std::to_string(c.index)});
        continue;
      }
    }
    if (c.tag) {
      const Feature* t = c.tag->asp->feats.find(FeatureAttribute::Tense);
      if (t && t->is_valued() && t->value() == FeatureValue::tense(TenseVal::Past)) {
        out.push_back({ViolationCode::PastTense, c.tag->asp->form,
                       "tag aspect " + c.tag->asp->form +
                           " carries past tense; imperatives are present or future only"});
      } else {
        deriv.log({TraceEvent::Kind::Tense,
                   "tense: tag " + c.tag->asp->form + " → " +
                       (t ? t->value().str() : "?") + " (admissible)",
                   std::nullopt,
                   {}});
      }
    }
  }
  return out;
}

void append_lf_report(Derivation& deriv) {
  std::string listing;
  for (const auto& [pos, node] : deriv.index) {
    std::string here;
    for (const auto& [attr, f] : node->head_feats) {
      if (f.interp() == Interpretability::Uninterpretable && f.is_valued())
        here += (here.empty() ? "" : " ") + f.str();
    }
    if (!here.empty()) listing += "\n    " + pos + ": " + here;
  }
  if (!listing.empty())
    deriv.log({TraceEvent::Kind::LfReport,
               "LF: uninterpretable features all valued, checked and deleted:" + listing,
               std::nullopt,
               {}});
}

}  // namespace

Judgment judge(const Lexicon& lex, const std::string& sentence) {
  Judgment j;
  j.sentence = sentence;

  Derivation deriv;
  try {
    deriv = parse_imperative(lex, sentence);
  } catch (const ParseError& err) {
    if (err.code()) {
      j.violations.push_back({*err.code(), err.locus(), err.what()});
      j.verdict = is_input_error(*err.code()) ? Judgment::Verdict::InputError
                                              : Judgment::Verdict::Ungrammatical;
      if (j.verdict == Judgment::Verdict::InputError) j.input_error = err.what();
    } else {
      j.verdict = Judgment::Verdict::InputError;
      j.input_error = err.what();
    }
    return j;
  }

  // Information questions in imperatives need discourse conditions the judge
  // does not model; a wh force element over a 1-person verb form is not taken
  // into the derivation.
  for (const Conjunct& c : deriv.structure.conjuncts) {
    if (c.forcp && c.forcp->occupant->cat == Category::WhWord && c.verb) {
      const Feature* pers = c.verb->feats.find(FeatureAttribute::Person);
      if (pers && pers->is_valued() && pers->value().person_value() == 1) {
        j.verdict = Judgment::Verdict::InputError;
        j.input_error = "information questions in imperatives are out of scope (wh element over a "
                        "1-person verb form)";
        return j;
      }
    }
  }

  j.initial_state = snapshot(deriv);
  for (const Conjunct& c : deriv.structure.conjuncts) j.brackets.push_back(bracket_string(c));

  std::vector<ProbeGoalStep> steps;
  auto collect = [&steps](std::vector<ProbeGoalStep> s) {
    steps.insert(steps.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  };

  collect(inherit_all(deriv));
  collect(agree_local_all(deriv));
  std::vector<AChain> chains = build_chains(deriv);
  StpReport stp = apply_stp(deriv, chains);
  collect(agree_across_phases(deriv, chains));

  CoreferenceMap coref = resolve_pro(deriv, chains);

  // Post-parse checks accumulate: Agree, STP, binding, tense, convergence.
  std::vector<Violation> violations = conflict_violations(steps);
  if (!stp.ok) violations.push_back(*stp.violation);
  for (Violation& v : check_binding(deriv, coref)) violations.push_back(std::move(v));
  for (Violation& v : tense_check(deriv)) violations.push_back(std::move(v));
  for (Violation& v : unvalued_features(deriv)) violations.push_back(std::move(v));

  j.final_state = snapshot(deriv);
  j.chains = std::move(chains);
  j.coreference = std::move(coref);
  j.steps = std::move(steps);
  j.violations = std::move(violations);
  j.verdict =
      j.violations.empty() ? Judgment::Verdict::Grammatical : Judgment::Verdict::Ungrammatical;
  if (j.verdict == Judgment::Verdict::Grammatical) append_lf_report(deriv);
  j.trace = std::move(deriv.trace);
  return j;
}

}  // namespace impjudge
