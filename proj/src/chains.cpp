#include "impjudge/chains.hpp"

#include <algorithm>

namespace impjudge {

namespace {

void push_conjunct_links(AChain& chain, const Conjunct& c) {
  chain.conjuncts.push_back(c.index);
  chain.links.push_back({ChainLink::Kind::TopicSlot, c.topic_dp->position, c.index, false});
  chain.links.push_back({ChainLink::Kind::TopHead, c.top->position, c.index, true});
  if (!c.verbless()) {
    chain.links.push_back({ChainLink::Kind::THead, c.tp->position, c.index, false});
    chain.links.push_back({ChainLink::Kind::Pro, c.pro_dp->position, c.index, false});
    chain.links.push_back({ChainLink::Kind::VHead, c.vp->position, c.index, true});
  }
}

std::string chain_diagram(const AChain& chain, const Derivation& deriv) {
  std::string s;
  for (const ChainLink& link : chain.links) {
    const SyntacticObject* node = deriv.node(link.position);
    std::string label;
    switch (link.kind) {
      case ChainLink::Kind::TopicSlot:
        label = node && node->occupant && node->occupant->cat != Category::TopicNull
                    ? node->occupant->form
                    : "⟨" + chain.head.display() + "⟩";
        break;
      case ChainLink::Kind::TopHead: label = "Top°(c" + std::to_string(link.conjunct) + ")"; break;
      case ChainLink::Kind::THead: label = "T°(c" + std::to_string(link.conjunct) + ")"; break;
      case ChainLink::Kind::Pro: label = "pro(c" + std::to_string(link.conjunct) + ")"; break;
      case ChainLink::Kind::VHead: label = "v°(c" + std::to_string(link.conjunct) + ")"; break;
      case ChainLink::Kind::Aux: label = "aux(c" + std::to_string(link.conjunct) + ")"; break;
    }
    s += (s.empty() ? "" : " — ") + label;
  }
  return s;
}

}  // namespace

std::string to_string(Locality loc) { return loc == Locality::Local ? "local" : "nonlocal"; }

std::string to_string(ChainLink::Kind kind) {
  switch (kind) {
    case ChainLink::Kind::TopicSlot: return "topic";
    case ChainLink::Kind::TopHead: return "Top°";
    case ChainLink::Kind::THead: return "T°";
    case ChainLink::Kind::Pro: return "pro";
    case ChainLink::Kind::VHead: return "v°";
    case ChainLink::Kind::Aux: return "aux";
  }
  return "?";
}

std::vector<AChain> build_chains(Derivation& deriv) {
  std::vector<AChain> chains;
  int null_ids = 0;

  for (const Conjunct& c : deriv.structure.conjuncts) {
    bool opens = c.topic != nullptr || chains.empty();
    if (opens) {
      AChain chain;
      chain.index = static_cast<int>(chains.size()) + 1;
      chain.head_conjunct = c.index;
      chain.head_slot_position = c.topic_dp->position;
      if (c.topic) {
        chain.head = {Antecedent::Kind::Overt, c.topic->form, 0};
      } else {
        chain.head = {Antecedent::Kind::NullTopic, "", ++null_ids};
      }
      push_conjunct_links(chain, c);
      chains.push_back(std::move(chain));
    } else {
      push_conjunct_links(chains.back(), c);
    }
  }

  for (AChain& chain : chains) {
    chain.locality = chain.conjuncts.size() > 1 ? Locality::NonLocal : Locality::Local;
    deriv.log({TraceEvent::Kind::Chain,
               "chain " + std::to_string(chain.index) + " (" + to_string(chain.locality) +
                   "): " + chain_diagram(chain, deriv),
               std::nullopt,
               {}});
  }
  return chains;
}

StpReport apply_stp(Derivation& deriv, const std::vector<AChain>& chains) {
  StpReport report;
  deriv.log({TraceEvent::Kind::Note,
             "STP identity is decided by (form, phi bundle); two tokens of the same form always "
             "count as the same referent",
             std::nullopt,
             {}});

  for (const AChain& chain : chains) {
    if (chain.head.kind != Antecedent::Kind::Overt || chain.head_conjunct == 1) continue;
    // A spelled topic in a non-initial conjunct: compare with the controller
    // it interrupts (the chain covering the previous conjunct).
    const AChain* prev = nullptr;
    for (const AChain& other : chains) {
      for (int cj : other.conjuncts)
        if (cj == chain.head_conjunct - 1) prev = &other;
    }
    if (!prev || prev->head.kind != Antecedent::Kind::Overt) continue;

    const Conjunct& here = deriv.structure.conjuncts[chain.head_conjunct - 1];
    const Conjunct& ctrl = deriv.structure.conjuncts[prev->head_conjunct - 1];
    if (here.topic->form == ctrl.topic->form && here.topic->feats == ctrl.topic->feats) {
      report.ok = false;
      report.violation =
          Violation{ViolationCode::StpIterationViolation,
                    "conjunct " + std::to_string(chain.head_conjunct) + ": " + here.topic->form,
                    "topic " + here.topic->form + " repeats the controller of conjunct " +
                        std::to_string(prev->head_conjunct) + " and must stay silent"};
      deriv.log({TraceEvent::Kind::Stp, "STP: " + report.violation->detail, std::nullopt, {}});
      return report;
    }
    deriv.log({TraceEvent::Kind::Stp,
               "STP: " + here.topic->form + " is distinct from " + ctrl.topic->form +
                   "; spell-out licensed, new chain opened",
               std::nullopt,
               {}});
  }
  for (const AChain& chain : chains) {
    if (chain.locality == Locality::NonLocal)
      deriv.log({TraceEvent::Kind::Stp,
                 "STP: topic of chain " + std::to_string(chain.index) +
                     " controls the silent slots of conjuncts after c" +
                     std::to_string(chain.head_conjunct),
                 std::nullopt,
                 {}});
  }
  return report;
}

CoreferenceMap resolve_pro(Derivation& deriv, const std::vector<AChain>& chains) {
  CoreferenceMap coref;
  for (const AChain& chain : chains) {
    for (const ChainLink& link : chain.links) {
      if (link.kind != ChainLink::Kind::Pro) continue;
      ProResolution res;
      res.conjunct = link.conjunct;
      res.position = link.position;
      res.antecedent = chain.head;
      res.chain_index = chain.index;
      res.discourse_dependent = chain.head.kind == Antecedent::Kind::NullTopic;
      coref.push_back(std::move(res));
    }
  }
  std::sort(coref.begin(), coref.end(),
            [](const ProResolution& a, const ProResolution& b) { return a.conjunct < b.conjunct; });
  for (std::size_t i = 0; i < coref.size(); ++i) {
    coref[i].label = "pro" + std::to_string(i + 1);
    std::string line = coref[i].label + " ⇒ " + coref[i].antecedent.display();
    if (coref[i].discourse_dependent) line += " (interpretation depends on the discourse)";
    deriv.log({TraceEvent::Kind::Coref, line, std::nullopt, {}});
  }
  return coref;
}

bool is_anaphor(const LexicalItem& item) {
  return item.cat == Category::Noun && item.gloss.rfind("self", 0) == 0;
}

bool is_reciprocal(const LexicalItem& item) {
  return item.cat == Category::Noun && item.gloss == "each";
}

std::vector<Violation> check_binding(Derivation& deriv, const CoreferenceMap& coref) {
  std::vector<Violation> out;
  for (const Conjunct& c : deriv.structure.conjuncts) {
    if (c.verbless()) continue;
    const Feature* pro_pers = c.pro_dp->head_feats.find(FeatureAttribute::Person);
    const Feature* pro_num = c.pro_dp->head_feats.find(FeatureAttribute::Number);
    bool reciprocal_seen = false;
    for (const ItemPtr& obj : c.objects) {
      if (is_anaphor(*obj)) {
        const Feature* pers = obj->feats.find(FeatureAttribute::Person);
        bool ok = pers && pers->is_valued() && pro_pers && pro_pers->is_valued() &&
                  pers->value() == pro_pers->value();
        if (!ok) {
          out.push_back({ViolationCode::PersonMismatchAnaphor, obj->form,
                         "anaphor " + obj->form + " (" + obj->gloss + ") is " +
                             (pers && pers->is_valued() ? pers->value().str() : "?") +
                             "-person; pro binds only 2-person anaphors"});
        } else {
          deriv.log({TraceEvent::Kind::Binding,
                     "binding: pro binds 2-person anaphor " + obj->form + " in c" +
                         std::to_string(c.index),
                     std::nullopt,
                     {}});
        }
      }
      if (is_reciprocal(*obj) && !reciprocal_seen) {
        reciprocal_seen = true;
        bool plural = pro_num && pro_num->is_valued() &&
                      pro_num->value() == FeatureValue::number(NumberVal::Pl);
        if (!plural) {
          out.push_back({ViolationCode::NumberMismatchReciprocal, obj->form,
                         "reciprocal needs a plural pro; pro in c" + std::to_string(c.index) +
                             " is " + (pro_num && pro_num->is_valued() ? pro_num->value().str() : "unvalued")});
        } else {
          deriv.log({TraceEvent::Kind::Binding,
                     "binding: plural pro licenses the reciprocal in c" + std::to_string(c.index),
                     std::nullopt,
                     {}});
        }
      }
    }
  }
  (void)coref;
  return out;
}

}  // namespace impjudge
