#ifndef IMPJUDGE_LEXICON_HPP
#define IMPJUDGE_LEXICON_HPP

#include <istream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "impjudge/features.hpp"

namespace impjudge {

// ProNull and TopicNull are engine-inserted silent elements; they have no
// lexicon-file tag and cannot be defined by users.
enum class Category {
  VerbImp,
  Noun,
  Pron,
  ProNull,
  TopicNull,
  Comp,
  QPart,
  WhWord,
  AspPart,
  Conj,
  VocPart,
};

std::string to_string(Category cat);

// File tag <-> category for the nine user-definable categories.
std::optional<Category> category_from_tag(const std::string& tag);
std::string tag_for_category(Category cat);

struct LexicalItem {
  std::string form;
  std::string gloss;
  Category cat = Category::Noun;
  FeatureBundle feats;

  // Aboutness-topic candidates are the person-bearing nominals; material
  // without a person feature (l-baab, li-ʕaliya, ...) can only be dislocated
  // or sit in the object field.
  bool person_bearing() const;
  const Feature* feat(FeatureAttribute attr) const { return feats.find(attr); }
};

using ItemPtr = std::shared_ptr<const LexicalItem>;

class LexiconError : public std::runtime_error {
 public:
  LexiconError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable after load; shared freely across derivations.
class Lexicon {
 public:
  // Line format, one entry per non-comment line:
  //   FORM CAT [GLOSS=...] [PERS=1|2|3] [NUM=Sg|Pl] [GEND=M|F] [TENSE=Pres|Fut|Past]
  // '#' starts a comment. CAT in {V.IMP, N, PRON, C, Q, WH, ASP, CONJ, VOC}.
  static Lexicon load(std::istream& in);
  static Lexicon load_string(const std::string& text);
  static Lexicon load_file(const std::string& path);

  // Built-in entries covering every form in the shipped analysis corpus.
  static const Lexicon& seed();

  // Empty result iff the form is unknown; the caller decides whether that is
  // fatal.
  std::vector<ItemPtr> lookup(const std::string& form) const;

  bool has(const std::string& form) const { return by_form_.count(form) != 0; }
  std::size_t entry_count() const { return order_.size(); }

  // Serialization in the load format, in load order. load(dump()) round-trips.
  std::string dump() const;

  friend bool operator==(const Lexicon& a, const Lexicon& b);

 private:
  void add(LexicalItem item, int line);

  std::map<std::string, std::vector<ItemPtr>> by_form_;
  std::vector<ItemPtr> order_;
};

// Silent elements built by the clause assembler.
ItemPtr make_pro();
ItemPtr make_null_topic();

}  // namespace impjudge

#endif  // IMPJUDGE_LEXICON_HPP
