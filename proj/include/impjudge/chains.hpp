#ifndef IMPJUDGE_CHAINS_HPP
#define IMPJUDGE_CHAINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "impjudge/syntax.hpp"
#include "impjudge/verdict.hpp"

namespace impjudge {

enum class Locality { Local, NonLocal };

std::string to_string(Locality loc);

struct Antecedent {
  enum class Kind { Overt, NullTopic };
  Kind kind = Kind::Overt;
  std::string form;  // overt topic form
  int null_id = 0;   // 1-based id for null topics

  std::string display() const {
    return kind == Kind::Overt ? form : "NULLTOP#" + std::to_string(null_id);
  }
};

struct ChainLink {
  enum class Kind { TopicSlot, TopHead, THead, Pro, VHead, Aux };
  Kind kind;
  std::string position;
  int conjunct = 1;
  bool phase = false;  // Top° and v° links; T°/Aux links are non-phase
};

std::string to_string(ChainLink::Kind kind);

// Indexed topic–Top°–T°–pro–v° sequence. Local chains span one conjunct,
// nonlocal chains span two or more.
struct AChain {
  int index = 1;
  Antecedent head;
  int head_conjunct = 1;
  std::string head_slot_position;
  std::vector<int> conjuncts;
  std::vector<ChainLink> links;
  Locality locality = Locality::Local;
};

// Left-to-right scan: an overt topic opens a chain; a topicless conjunct
// attaches its pro and silent slot to the nearest preceding chain; a
// topicless prefix opens a NullTopic-headed chain. Every pro belongs to
// exactly one chain.
std::vector<AChain> build_chains(Derivation& deriv);

struct StpReport {
  bool ok = true;
  std::optional<Violation> violation;
};

// Spell-out economy: a non-initial conjunct must not spell out a topic
// identical (form and phi bundle) to the controller of the chain it would
// otherwise continue. Distinct topics open new chains freely.
StpReport apply_stp(Derivation& deriv, const std::vector<AChain>& chains);

struct ProResolution {
  std::string label;  // "pro1", "pro2", ...
  int conjunct = 1;
  std::string position;
  Antecedent antecedent;
  int chain_index = 1;
  bool discourse_dependent = false;  // NullTopic antecedents
};

using CoreferenceMap = std::vector<ProResolution>;

// Each pro maps to its chain head; NullTopic antecedents are labeled
// discourse-dependent.
CoreferenceMap resolve_pro(Derivation& deriv, const std::vector<AChain>& chains);

// Anaphors in object position must carry the pro's person (2); reciprocals
// additionally need a plural pro. Checked conjunct-internally.
std::vector<Violation> check_binding(Derivation& deriv, const CoreferenceMap& coref);

bool is_anaphor(const LexicalItem& item);
bool is_reciprocal(const LexicalItem& item);

}  // namespace impjudge

#endif  // IMPJUDGE_CHAINS_HPP
