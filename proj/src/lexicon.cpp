#include "impjudge/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace impjudge {

namespace {

struct CatTag {
  const char* tag;
  Category cat;
};

constexpr CatTag cat_tags[] = {
    {"V.IMP", Category::VerbImp}, {"N", Category::Noun},     {"PRON", Category::Pron},
    {"C", Category::Comp},        {"Q", Category::QPart},    {"WH", Category::WhWord},
    {"ASP", Category::AspPart},   {"CONJ", Category::Conj},  {"VOC", Category::VocPart},
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string to_string(Category cat) {
  switch (cat) {
    case Category::VerbImp: return "VerbImp";
    case Category::Noun: return "Noun";
    case Category::Pron: return "Pron";
    case Category::ProNull: return "ProNull";
    case Category::TopicNull: return "TopicNull";
    case Category::Comp: return "Comp";
    case Category::QPart: return "QPart";
    case Category::WhWord: return "WhWord";
    case Category::AspPart: return "AspPart";
    case Category::Conj: return "Conj";
    case Category::VocPart: return "VocPart";
  }
  return "?";
}

std::optional<Category> category_from_tag(const std::string& tag) {
  for (const auto& t : cat_tags) {
    if (tag == t.tag) return t.cat;
  }
  return std::nullopt;
}

std::string tag_for_category(Category cat) {
  for (const auto& t : cat_tags) {
    if (cat == t.cat) return t.tag;
  }
  throw std::logic_error("category has no file tag: " + to_string(cat));
}

bool LexicalItem::person_bearing() const {
  const Feature* p = feats.find(FeatureAttribute::Person);
  return p != nullptr && p->is_valued() &&
         (cat == Category::Noun || cat == Category::Pron);
}

Lexicon Lexicon::load(std::istream& in) {
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() < 2) throw LexiconError(lineno, "expected FORM CAT [KEY=VALUE...]");

    LexicalItem item;
    item.form = toks[0];
    auto cat = category_from_tag(toks[1]);
    if (!cat) throw LexiconError(lineno, "unknown category tag '" + toks[1] + "'");
    item.cat = *cat;

    bool is_verb = item.cat == Category::VerbImp;
    bool is_nominal = item.cat == Category::Noun || item.cat == Category::Pron;
    bool is_asp = item.cat == Category::AspPart;
    // Verb agreement morphology is a formal reflex; nominal phi is referential.
    Interpretability phi_interp =
        is_verb ? Interpretability::Uninterpretable : Interpretability::Interpretable;

    for (std::size_t i = 2; i < toks.size(); ++i) {
      auto eq = toks[i].find('=');
      if (eq == std::string::npos)
        throw LexiconError(lineno, "malformed field '" + toks[i] + "' (expected KEY=VALUE)");
      std::string key = toks[i].substr(0, eq);
      std::string val = toks[i].substr(eq + 1);
      if (key == "GLOSS") {
        item.gloss = val;
        continue;
      }
      FeatureAttribute attr;
      if (key == "PERS") {
        attr = FeatureAttribute::Person;
      } else if (key == "NUM") {
        attr = FeatureAttribute::Number;
      } else if (key == "GEND") {
        attr = FeatureAttribute::Gender;
      } else if (key == "TENSE") {
        attr = FeatureAttribute::Tense;
      } else {
        throw LexiconError(lineno, "unknown field key '" + key + "'");
      }
      bool phi = attr != FeatureAttribute::Tense;
      if (phi && !(is_verb || is_nominal))
        throw LexiconError(lineno, "category " + toks[1] + " takes no " + key + " field");
      if (!phi && !(is_verb || is_asp))
        throw LexiconError(lineno, "category " + toks[1] + " takes no TENSE field");
      auto parsed = value_from_string(attr, val);
      if (!parsed) throw LexiconError(lineno, "bad value '" + val + "' for " + key);
      if (item.feats.has(attr)) throw LexiconError(lineno, "duplicate field " + key);
      item.feats.insert(Feature::valued(
          *parsed, phi ? phi_interp : Interpretability::Interpretable));
    }

    if (is_verb) {
      if (!item.feats.has(FeatureAttribute::Person) || !item.feats.has(FeatureAttribute::Number))
        throw LexiconError(lineno, "imperative verb needs PERS and NUM from its suffix");
      if (!item.feats.has(FeatureAttribute::Tense))
        item.feats.insert(Feature::valued(FeatureValue::tense(TenseVal::Pres),
                                          Interpretability::Interpretable));
      if (item.feats.find(FeatureAttribute::Tense)->value().tense_value() == TenseVal::Past)
        throw LexiconError(lineno, "imperative verbs are present or future, never past");
    }
    if (is_asp && !item.feats.has(FeatureAttribute::Tense))
      throw LexiconError(lineno, "aspect particle needs TENSE");

    lex.add(std::move(item), lineno);
  }
  return lex;
}

Lexicon Lexicon::load_string(const std::string& text) {
  std::istringstream in(text);
  return load(in);
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return load(in);
}

void Lexicon::add(LexicalItem item, int line) {
  for (const ItemPtr& existing : by_form_[item.form]) {
    if (existing->gloss == item.gloss)
      throw LexiconError(line, "duplicate entry " + item.form + " GLOSS=" + item.gloss);
  }
  auto ptr = std::make_shared<const LexicalItem>(std::move(item));
  by_form_[ptr->form].push_back(ptr);
  order_.push_back(ptr);
}

std::vector<ItemPtr> Lexicon::lookup(const std::string& form) const {
  auto it = by_form_.find(form);
  if (it == by_form_.end()) return {};
  return it->second;
}

std::string Lexicon::dump() const {
  std::string out;
  for (const ItemPtr& item : order_) {
    out += item->form;
    out += ' ';
    out += tag_for_category(item->cat);
    if (!item->gloss.empty()) out += " GLOSS=" + item->gloss;
    struct KeyAttr {
      const char* key;
      FeatureAttribute attr;
    };
    constexpr KeyAttr keys[] = {{"PERS", FeatureAttribute::Person},
                                {"NUM", FeatureAttribute::Number},
                                {"GEND", FeatureAttribute::Gender},
                                {"TENSE", FeatureAttribute::Tense}};
    for (const auto& ka : keys) {
      if (const Feature* f = item->feats.find(ka.attr)) {
        out += ' ';
        out += ka.key;
        out += '=';
        out += f->value().str();
      }
    }
    out += '\n';
  }
  return out;
}

bool operator==(const Lexicon& a, const Lexicon& b) {
  if (a.order_.size() != b.order_.size()) return false;
  for (std::size_t i = 0; i < a.order_.size(); ++i) {
    const LexicalItem& x = *a.order_[i];
    const LexicalItem& y = *b.order_[i];
    if (x.form != y.form || x.gloss != y.gloss || x.cat != y.cat || !(x.feats == y.feats))
      return false;
  }
  return true;
}

ItemPtr make_pro() {
  // pro enters the derivation valued only for person (intrinsically 2) and
  // uninterpretable throughout; number/gender/case await Agree.
  LexicalItem pro;
  pro.form = "pro";
  pro.gloss = "pro";
  pro.cat = Category::ProNull;
  pro.feats.insert(
      Feature::valued(FeatureValue::person(2), Interpretability::Uninterpretable));
  pro.feats.insert(Feature::unvalued(FeatureAttribute::Number, Interpretability::Uninterpretable));
  pro.feats.insert(Feature::unvalued(FeatureAttribute::Gender, Interpretability::Uninterpretable));
  pro.feats.insert(Feature::unvalued(FeatureAttribute::Case, Interpretability::Uninterpretable));
  return std::make_shared<const LexicalItem>(std::move(pro));
}

ItemPtr make_null_topic() {
  LexicalItem top;
  top.form = "∅";
  top.gloss = "null-topic";
  top.cat = Category::TopicNull;
  return std::make_shared<const LexicalItem>(std::move(top));
}

}  // namespace impjudge
