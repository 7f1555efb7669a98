#include "impjudge/agree.hpp"

#include <stdexcept>

namespace impjudge {

namespace {

constexpr FeatureAttribute phi[] = {FeatureAttribute::Person, FeatureAttribute::Number,
                                    FeatureAttribute::Gender};
constexpr FeatureAttribute phi_adrs[] = {FeatureAttribute::Person, FeatureAttribute::Number,
                                         FeatureAttribute::Gender, FeatureAttribute::Adrs};
constexpr FeatureAttribute phi_case[] = {FeatureAttribute::Person, FeatureAttribute::Number,
                                         FeatureAttribute::Gender, FeatureAttribute::Case};
constexpr FeatureAttribute num_gend[] = {FeatureAttribute::Number, FeatureAttribute::Gender};
constexpr FeatureAttribute adrs_only[] = {FeatureAttribute::Adrs};
constexpr FeatureAttribute spcty_only[] = {FeatureAttribute::Spcty};

// Attribute-wise Match with flow goal -> probe. Attributes missing on the
// goal contribute nothing; attributes missing on the probe are a caller bug.
// Conflicts are recorded and do not stop the walk (the judge reports them).
ProbeGoalStep apply_step(Derivation& deriv, const std::string& stage, const std::string& probe_pos,
                         const std::string& goal_pos, std::span<const FeatureAttribute> attrs,
                         const std::string& note = "") {
  SyntacticObject* probe = deriv.node(probe_pos);
  SyntacticObject* goal = deriv.node(goal_pos);
  if (!probe || !goal) throw std::logic_error("agree step over unknown position");

  ProbeGoalStep step;
  step.stage = stage;
  step.probe = probe_pos;
  step.goal = goal_pos;
  step.note = note;
  for (FeatureAttribute attr : attrs) {
    Feature* p = probe->head_feats.find(attr);
    if (!p)
      throw std::logic_error("agree step probes absent attribute " + to_string(attr) + " at " +
                             probe_pos);
    const Feature* g = goal->head_feats.find(attr);
    if (!g) continue;
    MatchOutcome m = match_feature(*p, *g);
    AttrResult res{attr, m.result, std::nullopt};
    if (m.result == MatchResult::Valued) {
      res.value = m.probe.value();
      *p = m.probe;
    }
    step.results.push_back(res);
  }

  TraceEvent ev;
  ev.kind = stage == "inherit" ? TraceEvent::Kind::Inherit : TraceEvent::Kind::Agree;
  std::string attrs_txt;
  for (const AttrResult& r : step.results) {
    attrs_txt += (attrs_txt.empty() ? "" : ", ") + to_string(r.attr) + ":" + to_string(r.result);
    if (r.value) attrs_txt += "(" + r.value->str() + ")";
  }
  ev.text = probe_pos + " ← " + goal_pos + "  " +
            (attrs_txt.empty() ? "(nothing to match)" : attrs_txt) +
            (note.empty() ? "" : "  — " + note);
  ev.step = step;
  deriv.log(std::move(ev));
  return step;
}

int conjunct_of(const std::string& position) {
  // positions are "c<N>.<name>"
  return std::stoi(position.substr(1, position.find('.') - 1));
}

}  // namespace

FeatureState snapshot(const Derivation& deriv) {
  FeatureState state;
  for (const auto& [pos, node] : deriv.index) state.emplace(pos, node->head_feats);
  return state;
}

ProbeGoalStep inherit_features(Derivation& deriv, const std::string& phase_head_pos,
                               const std::string& t_head_pos) {
  SyntacticObject* top = deriv.node(phase_head_pos);
  SyntacticObject* t = deriv.node(t_head_pos);
  if (!top || !t) throw std::logic_error("inheritance over unknown positions");
  if (top->label != SOLabel::TopP || t->label != SOLabel::TP)
    throw std::logic_error("inheritance needs a phase head above T");
  if (conjunct_of(phase_head_pos) != conjunct_of(t_head_pos))
    throw std::logic_error("feature inheritance across a clause boundary");

  ProbeGoalStep step;
  step.stage = "inherit";
  step.probe = t_head_pos;
  step.goal = phase_head_pos;
  step.note = "T probes with inherited features only, never on its own";

  // phi arrives unvalued; tense and Case arrive valued from the phase head.
  for (FeatureAttribute attr : phi) {
    if (!t->head_feats.has(attr))
      t->head_feats.insert(Feature::unvalued(attr, Interpretability::Uninterpretable));
    step.results.push_back({attr, MatchResult::NoChange, std::nullopt});
  }
  for (FeatureAttribute attr : {FeatureAttribute::Tense, FeatureAttribute::Case}) {
    const Feature* src = top->head_feats.find(attr);
    if (!src) continue;
    if (Feature* existing = t->head_feats.find(attr)) {
      MatchOutcome m = match_feature(*existing, *src);
      step.results.push_back({attr, m.result, std::nullopt});
    } else {
      t->head_feats.insert(Feature::valued(src->value(), Interpretability::Uninterpretable));
      step.results.push_back({attr, MatchResult::Valued, src->value()});
    }
  }

  TraceEvent ev;
  ev.kind = TraceEvent::Kind::Inherit;
  ev.text = t_head_pos + " ← " + phase_head_pos +
            "  phi (unvalued) + Tense + Case handed down in the narrow syntax";
  ev.step = step;
  deriv.log(std::move(ev));
  return step;
}

std::vector<ProbeGoalStep> inherit_all(Derivation& deriv) {
  std::vector<ProbeGoalStep> steps;
  for (Conjunct& c : deriv.structure.conjuncts) {
    if (c.verbless()) continue;
    steps.push_back(inherit_features(deriv, c.top->position, c.tp->position));
  }
  return steps;
}

std::vector<ProbeGoalStep> agree_local(Derivation& deriv, Conjunct& c) {
  std::vector<ProbeGoalStep> steps;
  const std::string cx = "c" + std::to_string(c.index) + ".";
  // A conjunct hosts its own chain top when it has an overt topic, or when it
  // opens the sentence (initial null topic). Silent non-initial slots wait
  // for Agree across phases.
  bool hosts_topic = c.topic != nullptr || c.index == 1;

  if (!c.verbless()) {
    steps.push_back(apply_step(deriv, "agree-local", cx + "T", cx + "V", phi,
                               "verb copy at T is the morphological carrier of valued phi"));
    if (hosts_topic && !c.topic)
      steps.push_back(apply_step(deriv, "agree-local", cx + "topic", cx + "T", num_gend,
                                 "null topic reads the addressee's number/gender off the verbal morphology"));
  }
  if (hosts_topic) {
    steps.push_back(apply_step(deriv, "agree-local", cx + "Top", cx + "topic", phi_adrs,
                               "topic values Top°'s [Adrs] and phi probes"));
    steps.push_back(apply_step(deriv, "agree-local", cx + "topic", cx + "Top", spcty_only,
                               "Top° imposes specificity on its topic (Spcty matched like any feature)"));
    if (!c.verbless())
      steps.push_back(apply_step(deriv, "agree-local", cx + "T", cx + "Top", phi,
                                 "chain link Top°–T°: topic phi meets verbal phi"));
  }
  if (!c.verbless()) {
    steps.push_back(apply_step(deriv, "agree-local", cx + "pro", cx + "T", phi_case,
                               "T licenses pro: phi matched, Case valued Nom"));
    steps.push_back(apply_step(deriv, "agree-local", cx + "v", cx + "pro", phi));
    if (hosts_topic)
      steps.push_back(apply_step(deriv, "agree-local", cx + "v", cx + "Top", adrs_only,
                                 "phase head v° shares the addressee feature"));
  }
  return steps;
}

std::vector<ProbeGoalStep> agree_local_all(Derivation& deriv) {
  deriv.log({TraceEvent::Kind::Note,
             "pro enters the derivation 2-person only; its remaining phi arrives through Agree "
             "with T and the topic chain",
             std::nullopt,
             {}});
  std::vector<ProbeGoalStep> steps;
  for (Conjunct& c : deriv.structure.conjuncts) {
    auto s = agree_local(deriv, c);
    steps.insert(steps.end(), s.begin(), s.end());
  }
  return steps;
}

std::vector<ProbeGoalStep> agree_across_phases(Derivation& deriv,
                                               const std::vector<AChain>& chains) {
  std::vector<ProbeGoalStep> steps;
  for (const AChain& chain : chains) {
    if (chain.locality != Locality::NonLocal) continue;  // degenerate chain: nothing to do
    const std::string head = chain.head_slot_position;
    for (const ChainLink& link : chain.links) {
      if (link.conjunct == chain.head_conjunct) continue;
      const std::string cx = "c" + std::to_string(link.conjunct) + ".";
      switch (link.kind) {
        case ChainLink::Kind::TopicSlot:
          steps.push_back(apply_step(deriv, "aap", link.position, head, phi_adrs,
                                     "silent topic valued by the chain head"));
          steps.push_back(apply_step(deriv, "aap", link.position, cx + "Top", spcty_only));
          break;
        case ChainLink::Kind::TopHead:
          steps.push_back(apply_step(deriv, "aap", link.position, head, phi_adrs,
                                     "lower phase head valued across the phase boundary"));
          break;
        case ChainLink::Kind::VHead:
          steps.push_back(apply_step(deriv, "aap", link.position, head, phi_adrs,
                                     "lower phase head valued across the phase boundary"));
          break;
        case ChainLink::Kind::Pro:
          steps.push_back(apply_step(deriv, "aap", link.position, head, phi,
                                     "chained pro matched against the chain head"));
          break;
        case ChainLink::Kind::THead:
        case ChainLink::Kind::Aux:
          deriv.log({TraceEvent::Kind::Note,
                     link.position + " skipped by Agree across phases: nonphase head, not an intervener",
                     std::nullopt,
                     {}});
          break;
      }
    }
  }
  return steps;
}

std::vector<Violation> unvalued_features(const Derivation& deriv) {
  std::vector<Violation> out;
  for (const auto& [pos, node] : deriv.index) {
    if (node->label == SOLabel::VP || node->label == SOLabel::ForcP) continue;
    if (node->label == SOLabel::DP && node->occupant &&
        node->occupant->cat != Category::ProNull && node->occupant->cat != Category::TopicNull &&
        !node->position.ends_with(".topic"))
      continue;  // object DPs carry inert lexical material
    for (const auto& [attr, f] : node->head_feats) {
      if (!f.is_valued())
        out.push_back({ViolationCode::UnvaluedFeature, pos,
                       to_string(attr) + " on " + pos + " never received a value"});
    }
  }
  return out;
}

std::vector<Violation> conflict_violations(const std::vector<ProbeGoalStep>& steps) {
  std::vector<Violation> out;
  for (const ProbeGoalStep& step : steps) {
    for (const AttrResult& r : step.results) {
      if (r.result != MatchResult::Conflict) continue;
      out.push_back({ViolationCode::AgreementMismatch, step.probe,
                     to_string(r.attr) + " clash between " + step.probe + " and " + step.goal});
    }
  }
  return out;
}

}  // namespace impjudge
