#include <algorithm>

#include "doctest.h"
#include "impjudge/agree.hpp"
#include "impjudge/judge.hpp"
#include "oracles.hpp"

using namespace impjudge;

namespace {

const Lexicon& seed() { return Lexicon::seed(); }

struct Ran {
  Derivation deriv;
  std::vector<AChain> chains;
  std::vector<ProbeGoalStep> local_steps;
  std::vector<ProbeGoalStep> aap_steps;
};

Ran run_pipeline(const std::string& sentence) {
  Ran r;
  r.deriv = parse_imperative(seed(), sentence);
  inherit_all(r.deriv);
  r.chains = build_chains(r.deriv);
  r.local_steps = agree_local_all(r.deriv);
  r.aap_steps = agree_across_phases(r.deriv, r.chains);
  return r;
}

const FeatureBundle& bundle(const Derivation& d, const std::string& pos) {
  const SyntacticObject* node = d.node(pos);
  REQUIRE(node != nullptr);
  return node->head_feats;
}

bool has_value(const FeatureBundle& b, FeatureAttribute attr, FeatureValue v) {
  const Feature* f = b.find(attr);
  return f && f->is_valued() && f->value() == v;
}

}  // namespace

TEST_CASE("inheritance installs phi, tense and Case on T") {
  Derivation d = parse_imperative(seed(), "ʕali ʔiftaħ l-baab");
  ProbeGoalStep step = inherit_features(d, "c1.Top", "c1.T");
  CHECK(step.probe == "c1.T");
  const FeatureBundle& t = bundle(d, "c1.T");
  CHECK(!t.find(FeatureAttribute::Person)->is_valued());
  CHECK(!t.find(FeatureAttribute::Number)->is_valued());
  CHECK(!t.find(FeatureAttribute::Gender)->is_valued());
  CHECK(has_value(t, FeatureAttribute::Tense, FeatureValue::tense(TenseVal::Pres)));
  CHECK(has_value(t, FeatureAttribute::Case, FeatureValue::case_of(CaseVal::Nom)));

  // idempotent: a second call changes nothing
  FeatureBundle before = t;
  ProbeGoalStep again = inherit_features(d, "c1.Top", "c1.T");
  for (const AttrResult& r : again.results) CHECK(r.result == MatchResult::NoChange);
  CHECK(bundle(d, "c1.T") == before);
}

TEST_CASE("inheritance across a clause boundary is a caller bug") {
  Derivation d = parse_imperative(seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura");
  CHECK_THROWS_AS(inherit_features(d, "c1.Top", "c2.T"), std::logic_error);
}

TEST_CASE("local agree values pro from the verbal morphology and T") {
  Ran r = run_pipeline("tullaab taʕaal-uu");
  const FeatureBundle& pro = bundle(r.deriv, "c1.pro");
  CHECK(has_value(pro, FeatureAttribute::Person, FeatureValue::person(2)));
  CHECK(has_value(pro, FeatureAttribute::Number, FeatureValue::number(NumberVal::Pl)));
  CHECK(has_value(pro, FeatureAttribute::Gender, FeatureValue::gender(GenderVal::M)));
  CHECK(has_value(pro, FeatureAttribute::Case, FeatureValue::case_of(CaseVal::Nom)));

  // person was intrinsic on pro, so the T->pro step reports no change for it
  bool pers_nochange = false;
  for (const ProbeGoalStep& s : r.local_steps) {
    if (s.probe != "c1.pro") continue;
    for (const AttrResult& res : s.results)
      if (res.attr == FeatureAttribute::Person) pers_nochange = res.result == MatchResult::NoChange;
  }
  CHECK(pers_nochange);
}

TEST_CASE("feminine topic over masculine verb records a gender conflict") {
  Ran r = run_pipeline("ʕaliya taʕaal");
  bool gender_conflict = false;
  for (const ProbeGoalStep& s : r.local_steps)
    if (s.first_conflict() == FeatureAttribute::Gender) gender_conflict = true;
  CHECK(gender_conflict);
  CHECK(!conflict_violations(r.local_steps).empty());
}

TEST_CASE("topic-verb pairing table: only phi-matched pairs survive") {
  const char* topics[] = {"ʕali", "ʕaliya", "tullaab", "taalibaat"};
  const char* verbs[] = {"taʕaal", "taʕaal-i", "taʕaal-uu", "taʕaal-ayn"};
  for (const char* topic : topics) {
    for (const char* verb : verbs) {
      // expectation computed from the lexicon alone
      const LexicalItem& t = *seed().lookup(topic)[0];
      const LexicalItem& v = *seed().lookup(verb)[0];
      bool compatible =
          t.feat(FeatureAttribute::Number)->value() == v.feat(FeatureAttribute::Number)->value() &&
          t.feat(FeatureAttribute::Gender)->value() == v.feat(FeatureAttribute::Gender)->value();

      Judgment j = judge(seed(), std::string(topic) + " " + verb);
      INFO(topic, " + ", verb);
      CHECK(j.grammatical() == compatible);
      if (!compatible) CHECK(j.primary_code() == "AgreementMismatch");
    }
  }
}

TEST_CASE("a single-conjunct chain needs no steps beyond local agree") {
  Ran r = run_pipeline("ʕali ʔiftaħ l-baab");
  CHECK(r.aap_steps.empty());
  CHECK(unvalued_features(r.deriv).empty());
}

TEST_CASE("coordination: the chain head values the lower phase heads") {
  Ran r = run_pipeline("ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura");
  // second conjunct fully valued, including [Adrs] on Top° and v°
  for (const char* pos : {"c2.Top", "c2.v"}) {
    const FeatureBundle& b = bundle(r.deriv, pos);
    CHECK(has_value(b, FeatureAttribute::Adrs, FeatureValue::addressee()));
    CHECK(has_value(b, FeatureAttribute::Gender, FeatureValue::gender(GenderVal::M)));
  }
  // and the steps flowed from the chain head
  bool from_head = false;
  for (const ProbeGoalStep& s : r.aap_steps)
    if (s.probe == "c2.Top" && s.goal == "c1.topic") from_head = true;
  CHECK(from_head);
  CHECK(unvalued_features(r.deriv).empty());
}

TEST_CASE("independent chains never leak values into each other") {
  Ran r = run_pipeline("ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura wa ʕaliya haat-i l-qalam");
  const FeatureBundle& pro3 = bundle(r.deriv, "c3.pro");
  CHECK(has_value(pro3, FeatureAttribute::Gender, FeatureValue::gender(GenderVal::F)));
  CHECK(has_value(pro3, FeatureAttribute::Number, FeatureValue::number(NumberVal::Sg)));
  for (const ProbeGoalStep& s : r.aap_steps) {
    // no step reaches into conjunct 3 from chain 1's head
    if (s.goal == "c1.topic") CHECK(s.probe.rfind("c3.", 0) != 0);
  }
}

TEST_CASE("chain processing order does not matter for independent chains") {
  Ran forward = run_pipeline("ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura wa ʕaliya haat-i l-qalam");

  Derivation d = parse_imperative(seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura wa ʕaliya haat-i l-qalam");
  inherit_all(d);
  std::vector<AChain> chains = build_chains(d);
  agree_local_all(d);
  std::reverse(chains.begin(), chains.end());
  agree_across_phases(d, chains);

  CHECK(snapshot(d) == snapshot(forward.deriv));
}

TEST_CASE("aap outcomes ignore inserted or deleted nonphase links") {
  auto final_phase_state = [](bool insert_aux, bool drop_t) {
    Derivation d = parse_imperative(seed(), "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura");
    inherit_all(d);
    std::vector<AChain> built = build_chains(d);
    agree_local_all(d);

    SyntacticObject aux;  // an extra nonphase head wedged between phase heads
    aux.label = SOLabel::Head;
    aux.position = "c2.aux";
    aux.head_feats.insert(
        Feature::unvalued(FeatureAttribute::Person, Interpretability::Uninterpretable));
    if (insert_aux) {
      d.index["c2.aux"] = &aux;
      for (AChain& chain : built) {
        auto it = std::find_if(chain.links.begin(), chain.links.end(), [](const ChainLink& l) {
          return l.kind == ChainLink::Kind::VHead && l.conjunct == 2;
        });
        if (it != chain.links.end())
          chain.links.insert(it, ChainLink{ChainLink::Kind::Aux, "c2.aux", 2, false});
      }
    }
    if (drop_t) {
      for (AChain& chain : built)
        std::erase_if(chain.links,
                      [](const ChainLink& l) { return l.kind == ChainLink::Kind::THead; });
    }
    agree_across_phases(d, built);

    FeatureState state;
    for (const char* pos : {"c1.Top", "c1.v", "c2.Top", "c2.v", "c2.topic", "c2.pro"})
      state.emplace(pos, d.node(pos)->head_feats);
    return state;
  };

  FeatureState base = final_phase_state(false, false);
  CHECK(final_phase_state(true, false) == base);
  CHECK(final_phase_state(false, true) == base);
  CHECK(final_phase_state(true, true) == base);
}

TEST_CASE("engine agreement equals the chain-link fixpoint oracle") {
  for (const char* sentence :
       {"ʕali ʔiftaħ l-baab", "ʔiftaħ l-baab", "ʕali biz l-masaaha wa ʔimsaħ ṣ-ṣabuura",
        "biz l-masaaha wa ʔimsaħ ṣ-ṣabuura", "ʔawlaad ʔimšuu wa banaat ʔibquu",
        "ʕaliya taʕaal", "tullaab taʕaal"}) {
    Derivation d = parse_imperative(seed(), sentence);
    inherit_all(d);
    std::vector<AChain> chains = build_chains(d);
    FeatureState start = snapshot(d);
    agree_local_all(d);
    agree_across_phases(d, chains);

    FeatureState from_oracle = oracle::fixpoint_match(start, oracle::chain_edges(chains));
    INFO(sentence);
    CHECK(snapshot(d) == from_oracle);
  }
}
