#ifndef IMPJUDGE_TRACE_HPP
#define IMPJUDGE_TRACE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "impjudge/features.hpp"

namespace impjudge {

struct AttrResult {
  FeatureAttribute attr;
  MatchResult result;
  std::optional<FeatureValue> value;  // the flowed value when result == Valued
};

// One probe-goal interaction, recorded in derivational order. Flow direction
// is always goal -> probe.
struct ProbeGoalStep {
  std::string stage;  // "inherit" | "agree-local" | "aap"
  std::string probe;
  std::string goal;
  std::vector<AttrResult> results;
  std::string note;

  bool any_conflict() const {
    for (const auto& r : results)
      if (r.result == MatchResult::Conflict) return true;
    return false;
  }
  std::optional<FeatureAttribute> first_conflict() const {
    for (const auto& r : results)
      if (r.result == MatchResult::Conflict) return r.attr;
    return std::nullopt;
  }
};

struct TraceEvent {
  enum class Kind {
    Merge,
    Insert,   // pro / null topic insertion
    Remerge,  // V-to-T
    Inherit,
    Agree,
    Chain,
    Stp,
    Coref,
    Binding,
    Tense,
    Note,
    LfReport,
  };

  Kind kind;
  std::string text;
  std::optional<ProbeGoalStep> step;  // for Inherit / Agree
  // Valuations performed by structural operations (EdgeF at topic merge,
  // EPP at V-to-T); position/attribute pairs, used by the trace audit.
  std::vector<std::pair<std::string, FeatureAttribute>> structural_valuations;
};

std::string to_string(TraceEvent::Kind kind);

}  // namespace impjudge

#endif  // IMPJUDGE_TRACE_HPP
