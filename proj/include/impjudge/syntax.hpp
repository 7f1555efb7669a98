#ifndef IMPJUDGE_SYNTAX_HPP
#define IMPJUDGE_SYNTAX_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "impjudge/lexicon.hpp"
#include "impjudge/trace.hpp"
#include "impjudge/verdict.hpp"

namespace impjudge {

enum class SOLabel { TopP, ForcP, FocP, TP, vP, VP, DP, Head };

std::string to_string(SOLabel label);

// A labeled node in the clause spine. `head_feats` is the bundle of the
// projecting head and is mutated by Agree; `occupant` is the lexical item at
// the head position (shared between copies under Move-as-Copy).
struct SyntacticObject {
  SOLabel label = SOLabel::Head;
  FeatureBundle head_feats;
  std::unique_ptr<SyntacticObject> spec;
  std::unique_ptr<SyntacticObject> comp;
  bool phase = false;  // true exactly for TopP and vP
  ItemPtr occupant;
  std::vector<std::string> copies;  // positions of other copies of `occupant`
  std::string position;
};

std::unique_ptr<SyntacticObject> make_node(SOLabel label, FeatureBundle feats = {},
                                           ItemPtr occupant = nullptr,
                                           std::string position = "");

// Head-complement first, then specifier; an EdgeF slot on the head is
// satisfied when the specifier goes in. A third merge into the same
// projection throws StructureError.
std::unique_ptr<SyntacticObject> merge(std::unique_ptr<SyntacticObject> target,
                                       std::unique_ptr<SyntacticObject> dependent);

struct TagClause {
  ItemPtr asp;                 // tense carrier (ʕa future, qa past)
  std::vector<ItemPtr> tail;   // opaque; internal syntax not built
};

struct Conjunct {
  int index = 1;
  std::unique_ptr<SyntacticObject> root;  // TopP

  // Cached pointers into `root` (stable across moves).
  SyntacticObject* top = nullptr;       // TopP node (Top° bundle)
  SyntacticObject* topic_dp = nullptr;  // Spec,TopP (overt topic or null topic)
  SyntacticObject* forcp = nullptr;
  SyntacticObject* tp = nullptr;        // absent in verbless force-only clauses
  SyntacticObject* vp = nullptr;
  SyntacticObject* pro_dp = nullptr;    // Spec,vP
  SyntacticObject* v_base = nullptr;    // VP node: base position of the verb

  ItemPtr topic;  // nullptr when the slot is silent
  ItemPtr verb;
  std::vector<ItemPtr> dislocated;    // fronted non-aboutness material
  std::vector<ItemPtr> forc_residue;  // unanalyzed force-field complement
  std::vector<ItemPtr> objects;       // postverbal nominal material
  std::optional<TagClause> tag;
  bool postverbal_topic = false;  // linearization variant, normalized to Spec,TopP
  bool vocative_topic = false;    // topic introduced by yaa

  bool verbless() const { return tp == nullptr; }
};

struct ClauseStructure {
  std::vector<Conjunct> conjuncts;

  // The leftmost topic slot opens the discourse frame that topicless
  // conjuncts continue.
  const SyntacticObject* shared_topic_slot() const {
    return conjuncts.empty() ? nullptr : conjuncts.front().topic_dp;
  }
};

// Pipeline state threaded through parse -> inherit -> agree -> chains.
struct Derivation {
  std::string sentence;
  ClauseStructure structure;
  std::map<std::string, SyntacticObject*> index;  // position -> node
  std::vector<TraceEvent> trace;

  SyntacticObject* node(const std::string& position) const;
  void log(TraceEvent ev) { trace.push_back(std::move(ev)); }
};

struct Token {
  std::string form;
  std::string override_gloss;  // from form/OVERRIDE.GLOSS, empty if none
};

// Whitespace tokenization; trailing '!' is ignored.
std::vector<Token> tokenize(const std::string& sentence);

// Deterministic assembly of the phase-annotated clause: per conjunct the
// token order is [dislocated*] [topic] [force [residue*]] verb [objects*]
// [tag], with pro inserted in Spec,vP, a null topic in every topicless
// Spec,TopP, V remerged at T for EPP, and wa splitting conjuncts. Throws
// ParseError on anything outside that shape.
Derivation parse_imperative(const Lexicon& lex, const std::vector<Token>& tokens);
Derivation parse_imperative(const Lexicon& lex, const std::string& sentence);

// Copies V to T°, satisfying EPP; records the base position in `copies`.
// No-op when already remerged; StructureError when TP lacks an imperative
// verb ("not an imperative clause").
bool remerge_v_to_t(Derivation& deriv, Conjunct& conjunct);

// Bracket rendering of one conjunct, lower copies in angle brackets.
std::string bracket_string(const Conjunct& conjunct);

}  // namespace impjudge

#endif  // IMPJUDGE_SYNTAX_HPP
