#include "impjudge/syntax.hpp"

#include <sstream>

namespace impjudge {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_forc_category(Category cat) {
  return cat == Category::Comp || cat == Category::QPart || cat == Category::WhWord;
}

// The addressee bundle carried by a topic slot: person 2 regardless of the
// nominal's lexical person (the overlay lives here, not in the lexicon),
// number/gender from the nominal when it has them, [Adrs] intrinsic, [Spcty]
// open until Top° imposes Specific.
FeatureBundle addressee_bundle(const LexicalItem* topic) {
  FeatureBundle b;
  b.insert(Feature::valued(FeatureValue::person(2), Interpretability::Interpretable));
  for (FeatureAttribute attr : {FeatureAttribute::Number, FeatureAttribute::Gender}) {
    const Feature* lexical = topic ? topic->feats.find(attr) : nullptr;
    if (lexical && lexical->is_valued()) {
      b.insert(Feature::valued(lexical->value(), Interpretability::Interpretable));
    } else {
      b.insert(Feature::unvalued(attr, Interpretability::Interpretable));
    }
  }
  b.insert(Feature::valued(FeatureValue::addressee(), Interpretability::Interpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Spcty, Interpretability::Interpretable));
  return b;
}

// Top° enters with unvalued phi and [Adrs] probes, intrinsic specificity,
// nominative Case, the clause tense, and an edge feature discharged by
// whatever lands in Spec,TopP.
FeatureBundle top_head_bundle(const LexicalItem* verb) {
  FeatureBundle b;
  b.insert(Feature::unvalued(FeatureAttribute::Person, Interpretability::Uninterpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Number, Interpretability::Uninterpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Gender, Interpretability::Uninterpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Adrs, Interpretability::Uninterpretable));
  b.insert(Feature::valued(FeatureValue::specific(), Interpretability::Uninterpretable));
  b.insert(Feature::valued(FeatureValue::case_of(CaseVal::Nom), Interpretability::Uninterpretable));
  if (verb) {
    const Feature* t = verb->feats.find(FeatureAttribute::Tense);
    b.insert(Feature::valued(t->value(), Interpretability::Uninterpretable));
  }
  b.insert(Feature::unvalued(FeatureAttribute::EdgeF, Interpretability::Uninterpretable));
  return b;
}

FeatureBundle v_head_bundle() {
  FeatureBundle b;
  b.insert(Feature::unvalued(FeatureAttribute::Person, Interpretability::Uninterpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Number, Interpretability::Uninterpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Gender, Interpretability::Uninterpretable));
  b.insert(Feature::unvalued(FeatureAttribute::Adrs, Interpretability::Uninterpretable));
  return b;
}

FeatureBundle t_head_bundle() {
  FeatureBundle b;
  b.insert(Feature::unvalued(FeatureAttribute::EPP, Interpretability::Uninterpretable));
  return b;
}

struct ScannedConjunct {
  ItemPtr topic;
  bool vocative_topic = false;
  bool postverbal_topic = false;
  ItemPtr forc;
  ItemPtr verb;
  std::vector<ItemPtr> dislocated;
  std::vector<ItemPtr> forc_residue;
  std::vector<ItemPtr> objects;
  std::optional<TagClause> tag;
};

ScannedConjunct scan_conjunct(const std::vector<ItemPtr>& items) {
  ScannedConjunct out;
  bool voc_pending = false;
  bool postverbal = false;

  for (const ItemPtr& item : items) {
    if (out.tag) {
      out.tag->tail.push_back(item);
      continue;
    }
    Category cat = item->cat;

    if (!postverbal) {
      if (cat == Category::VerbImp) {
        out.verb = item;
        postverbal = true;
        continue;
      }
      if (is_forc_category(cat)) {
        if (out.forc)
          throw ParseError(ViolationCode::ForcDoubleFill, item->form,
                           "second force element in one clause");
        out.forc = item;
        continue;
      }
      if (cat == Category::VocPart) {
        if (out.forc || voc_pending)
          throw ParseError(std::nullopt, item->form, "misplaced vocative particle");
        voc_pending = true;
        continue;
      }
      if (cat == Category::AspPart)
        throw ParseError(std::nullopt, item->form, "aspect particle before the verb");

      // nominal material
      if (out.forc) {
        if (item->person_bearing() && !out.topic)
          throw ParseError(ViolationCode::ForcBeforeTop, item->form,
                           "force element precedes the topic field; TopP is the topmost projection");
        out.forc_residue.push_back(item);
        continue;
      }
      if (item->person_bearing()) {
        if (out.topic)
          throw ParseError(ViolationCode::TopicRecursion, item->form,
                           "aboutness topics do not iterate");
        out.topic = item;
        out.vocative_topic = voc_pending;
        voc_pending = false;
        continue;
      }
      if (voc_pending)
        throw ParseError(std::nullopt, item->form,
                         "vocative particle must introduce a person-denoting nominal");
      out.dislocated.push_back(item);
      continue;
    }

    // postverbal field
    if (cat == Category::AspPart) {
      out.tag = TagClause{item, {}};
      continue;
    }
    if (cat == Category::VerbImp)
      throw ParseError(std::nullopt, item->form,
                       "unexpected second imperative verb (coordinate clauses with wa)");
    if (is_forc_category(cat))
      throw ParseError(std::nullopt, item->form, "force element after the verb");
    if (cat == Category::VocPart)
      throw ParseError(std::nullopt, item->form, "vocative particle after the verb");
    if (cat == Category::Pron && !out.topic && out.objects.empty()) {
      // V-topic order: a pronoun right after the verb is the topic,
      // normalized into Spec,TopP.
      out.topic = item;
      out.postverbal_topic = true;
      continue;
    }
    out.objects.push_back(item);
  }

  if (voc_pending)
    throw ParseError(std::nullopt, "", "vocative particle must introduce a nominal");
  if (!out.verb && !out.forc)
    throw ParseError(std::nullopt, "", "not an imperative clause: no imperative verb");
  return out;
}

std::string gloss_or_form(const ItemPtr& item) {
  return item->gloss.empty() ? item->form : item->gloss;
}

}  // namespace

std::string to_string(SOLabel label) {
  switch (label) {
    case SOLabel::TopP: return "TopP";
    case SOLabel::ForcP: return "ForcP";
    case SOLabel::FocP: return "FocP";
    case SOLabel::TP: return "TP";
    case SOLabel::vP: return "vP";
    case SOLabel::VP: return "VP";
    case SOLabel::DP: return "DP";
    case SOLabel::Head: return "Head";
  }
  return "?";
}

std::unique_ptr<SyntacticObject> make_node(SOLabel label, FeatureBundle feats, ItemPtr occupant,
                                           std::string position) {
  auto node = std::make_unique<SyntacticObject>();
  node->label = label;
  node->head_feats = std::move(feats);
  node->occupant = std::move(occupant);
  node->position = std::move(position);
  node->phase = label == SOLabel::TopP || label == SOLabel::vP;
  return node;
}

std::unique_ptr<SyntacticObject> merge(std::unique_ptr<SyntacticObject> target,
                                       std::unique_ptr<SyntacticObject> dependent) {
  if (!target || !dependent) throw StructureError("merge with empty syntactic object");
  if (!target->comp) {
    target->comp = std::move(dependent);
    return target;
  }
  if (!target->spec) {
    target->spec = std::move(dependent);
    if (Feature* ef = target->head_feats.find(FeatureAttribute::EdgeF); ef && !ef->is_valued())
      ef->assign(FeatureValue::sat(FeatureAttribute::EdgeF));
    return target;
  }
  throw StructureError("merge into a saturated projection (" + to_string(target->label) + ")");
}

SyntacticObject* Derivation::node(const std::string& position) const {
  auto it = index.find(position);
  return it == index.end() ? nullptr : it->second;
}

std::vector<Token> tokenize(const std::string& sentence) {
  std::vector<Token> out;
  std::istringstream in(sentence);
  std::string raw;
  while (in >> raw) {
    while (!raw.empty() && raw.back() == '!') raw.pop_back();
    if (raw.empty()) continue;
    Token tok;
    static const std::string marker = "/OVERRIDE.";
    if (auto pos = raw.find(marker); pos != std::string::npos) {
      tok.form = raw.substr(0, pos);
      tok.override_gloss = raw.substr(pos + marker.size());
    } else {
      tok.form = raw;
    }
    out.push_back(std::move(tok));
  }
  return out;
}

bool remerge_v_to_t(Derivation& deriv, Conjunct& conjunct) {
  if (!conjunct.tp) throw StructureError("not an imperative clause: no TP to host the verb");
  if (conjunct.tp->occupant) return false;  // already remerged
  if (!conjunct.v_base || !conjunct.v_base->occupant ||
      conjunct.v_base->occupant->cat != Category::VerbImp)
    throw StructureError("not an imperative clause: no imperative verb under TP");

  conjunct.tp->occupant = conjunct.v_base->occupant;  // same lexical token, two positions
  conjunct.tp->copies.push_back(conjunct.v_base->position);
  conjunct.v_base->copies.push_back(conjunct.tp->position);
  Feature* epp = conjunct.tp->head_feats.find(FeatureAttribute::EPP);
  if (epp && !epp->is_valued()) epp->assign(FeatureValue::sat(FeatureAttribute::EPP));

  TraceEvent ev;
  ev.kind = TraceEvent::Kind::Remerge;
  ev.text = "V-to-T: copy of " + conjunct.verb->form + " occupies " + conjunct.tp->position +
            " (base copy stays in " + conjunct.v_base->position + "); EPP: Sat";
  ev.structural_valuations.emplace_back(conjunct.tp->position, FeatureAttribute::EPP);
  deriv.log(std::move(ev));
  return true;
}

namespace {

Conjunct build_conjunct(Derivation& deriv, int idx, ScannedConjunct&& scan) {
  const std::string c = "c" + std::to_string(idx) + ".";
  Conjunct out;
  out.index = idx;
  out.topic = scan.topic;
  out.verb = scan.verb;
  out.dislocated = std::move(scan.dislocated);
  out.forc_residue = std::move(scan.forc_residue);
  out.objects = std::move(scan.objects);
  out.tag = std::move(scan.tag);
  out.postverbal_topic = scan.postverbal_topic;
  out.vocative_topic = scan.vocative_topic;

  std::unique_ptr<SyntacticObject> spine;

  if (out.verb) {
    auto vp_base = make_node(SOLabel::VP, out.verb->feats, out.verb, c + "V");
    SyntacticObject* v_base = vp_base.get();
    SyntacticObject* obj_node = nullptr;
    if (!out.objects.empty()) {
      auto obj = make_node(SOLabel::DP, out.objects.front()->feats, out.objects.front(), c + "obj");
      obj_node = obj.get();
      vp_base = merge(std::move(vp_base), std::move(obj));
    }
    auto little_v = make_node(SOLabel::vP, v_head_bundle(), nullptr, c + "v");
    auto vp = merge(std::move(little_v), std::move(vp_base));
    SyntacticObject* vp_node = vp.get();

    auto pro_item = make_pro();
    auto pro = make_node(SOLabel::DP, pro_item->feats, pro_item, c + "pro");
    SyntacticObject* pro_node = pro.get();
    vp = merge(std::move(vp), std::move(pro));
    deriv.log({TraceEvent::Kind::Insert,
               "pro (2-person, number/gender/case open) merged in Spec," + vp_node->position,
               std::nullopt,
               {}});

    auto tp = make_node(SOLabel::TP, t_head_bundle(), nullptr, c + "T");
    SyntacticObject* tp_node = tp.get();
    spine = merge(std::move(tp), std::move(vp));

    out.tp = tp_node;
    out.vp = vp_node;
    out.pro_dp = pro_node;
    out.v_base = v_base;
    if (obj_node) deriv.index[obj_node->position] = obj_node;
  }

  if (scan.forc) {
    auto forcp = make_node(SOLabel::ForcP, {}, scan.forc, c + "Forc");
    SyntacticObject* forc_node = forcp.get();
    if (spine) forcp = merge(std::move(forcp), std::move(spine));
    spine = std::move(forcp);
    out.forcp = forc_node;
  }

  auto top = make_node(SOLabel::TopP, top_head_bundle(out.verb.get()), nullptr, c + "Top");
  SyntacticObject* top_node = top.get();
  if (spine) top = merge(std::move(top), std::move(spine));

  ItemPtr slot_item = out.topic ? out.topic : make_null_topic();
  auto topic_dp = make_node(SOLabel::DP, addressee_bundle(out.topic.get()), slot_item, c + "topic");
  SyntacticObject* topic_node = topic_dp.get();
  top = merge(std::move(top), std::move(topic_dp));

  TraceEvent merge_ev;
  merge_ev.kind = out.topic ? TraceEvent::Kind::Merge : TraceEvent::Kind::Insert;
  merge_ev.text = out.topic
                      ? out.topic->form + " (" + gloss_or_form(out.topic) +
                            ") merged in Spec," + top_node->position + "; EdgeF: Sat"
                      : "null topic merged in Spec," + top_node->position +
                            " (discourse-controlled); EdgeF: Sat";
  merge_ev.structural_valuations.emplace_back(top_node->position, FeatureAttribute::EdgeF);
  deriv.log(std::move(merge_ev));

  out.root = std::move(top);
  out.top = top_node;
  out.topic_dp = topic_node;

  for (SyntacticObject* n : {out.top, out.topic_dp, out.forcp, out.tp, out.vp, out.pro_dp, out.v_base})
    if (n) deriv.index[n->position] = n;

  if (out.postverbal_topic)
    deriv.log({TraceEvent::Kind::Note,
               "postverbal topic " + out.topic->form +
                   " normalized into Spec,TopP (linearization variant; structural analysis of "
                   "postverbal topics left open)",
               std::nullopt,
               {}});
  if (out.vocative_topic)
    deriv.log({TraceEvent::Kind::Note,
               "vocative-introduced nominal parsed into the topic slot", std::nullopt, {}});
  if (!out.dislocated.empty()) {
    std::string forms;
    for (const auto& d : out.dislocated) forms += (forms.empty() ? "" : ", ") + d->form;
    deriv.log({TraceEvent::Kind::Note,
               "fronted non-aboutness material (" + forms +
                   ") held in the dislocation field; does not count against topic uniqueness",
               std::nullopt,
               {}});
  }
  if (!out.forc_residue.empty())
    deriv.log({TraceEvent::Kind::Note,
               "force-field complement left unanalyzed (" +
                   std::to_string(out.forc_residue.size()) + " token(s))",
               std::nullopt,
               {}});

  return out;
}

}  // namespace

Derivation parse_imperative(const Lexicon& lex, const std::vector<Token>& tokens) {
  Derivation deriv;
  if (tokens.empty()) throw ParseError(ViolationCode::EmptyInput, "", "empty input");

  // Resolve every token before any structure is built.
  std::vector<ItemPtr> items;
  for (const Token& tok : tokens) {
    if (tok.form == "laa" || ends_with(tok.form, "-š"))
      throw ParseError(ViolationCode::OutOfScopeNegation, tok.form,
                       "bipartite negation (laa ... -š) is out of scope");
    std::vector<ItemPtr> cands = lex.lookup(tok.form);
    if (cands.empty())
      throw ParseError(ViolationCode::UnknownForm, tok.form, "unknown form '" + tok.form + "'");
    if (!tok.override_gloss.empty()) {
      std::erase_if(cands, [&](const ItemPtr& it) { return it->gloss != tok.override_gloss; });
      if (cands.empty())
        throw ParseError(ViolationCode::UnknownForm, tok.form,
                         "no entry for '" + tok.form + "' with gloss '" + tok.override_gloss + "'");
    }
    items.push_back(cands.front());
  }

  // wa splits conjuncts.
  std::vector<std::vector<ItemPtr>> groups;
  std::vector<ItemPtr> current;
  for (const ItemPtr& item : items) {
    if (item->cat == Category::Conj) {
      if (current.empty())
        throw ParseError(std::nullopt, item->form, "conjunction without a preceding conjunct");
      groups.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(item);
    }
  }
  if (current.empty())
    throw ParseError(std::nullopt, items.back()->form, "conjunction without a following conjunct");
  groups.push_back(std::move(current));

  for (std::size_t k = 0; k < groups.size(); ++k) {
    ScannedConjunct scan = scan_conjunct(groups[k]);
    deriv.structure.conjuncts.push_back(build_conjunct(deriv, static_cast<int>(k) + 1, std::move(scan)));
  }
  for (Conjunct& conjunct : deriv.structure.conjuncts)
    if (!conjunct.verbless()) remerge_v_to_t(deriv, conjunct);

  return deriv;
}

Derivation parse_imperative(const Lexicon& lex, const std::string& sentence) {
  Derivation deriv = parse_imperative(lex, tokenize(sentence));
  deriv.sentence = sentence;
  return deriv;
}

std::string bracket_string(const Conjunct& conjunct) {
  std::string s = "[TopP " + (conjunct.topic ? conjunct.topic->form : "∅");
  if (conjunct.forcp) s += " [ForcP " + conjunct.forcp->occupant->form;
  if (conjunct.tp) {
    s += " [TP " + conjunct.verb->form + "+T°";
    s += " [vP pro [VP ⟨" + conjunct.verb->form + "⟩";
    for (const ItemPtr& obj : conjunct.objects) s += " " + obj->form;
    s += "]]]";
  }
  if (conjunct.forcp) {
    for (const ItemPtr& r : conjunct.forc_residue) s += " " + r->form;
    s += "]";
  }
  if (conjunct.tag) {
    s += " [tag " + conjunct.tag->asp->form;
    for (const ItemPtr& t : conjunct.tag->tail) s += " " + t->form;
    s += "]";
  }
  s += "]";
  return s;
}

}  // namespace impjudge
