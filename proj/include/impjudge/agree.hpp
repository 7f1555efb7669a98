#ifndef IMPJUDGE_AGREE_HPP
#define IMPJUDGE_AGREE_HPP

#include <map>
#include <string>
#include <vector>

#include "impjudge/chains.hpp"
#include "impjudge/syntax.hpp"
#include "impjudge/trace.hpp"
#include "impjudge/verdict.hpp"

namespace impjudge {

// Deep copy of every indexed head bundle; used for oracle comparisons and
// for the structured output.
using FeatureState = std::map<std::string, FeatureBundle>;

FeatureState snapshot(const Derivation& deriv);

// The phase head hands phi (unvalued), tense and nominative Case down to T.
// T never probes with features of its own. Idempotent; calling it across a
// clause boundary is a caller bug.
ProbeGoalStep inherit_features(Derivation& deriv, const std::string& phase_head_pos,
                               const std::string& t_head_pos);

// Runs inheritance for every verbal conjunct.
std::vector<ProbeGoalStep> inherit_all(Derivation& deriv);

// Within-conjunct valuation: the verb copy at T is the morphological carrier
// of valued phi; T values pro (phi and nominative Case); pro hands phi to v.
// Conjuncts that host their own topic slot (an overt topic, or the initial
// null topic) additionally run the topic end of the chain: slot -> Top°,
// Top° -> slot ([Spcty]), Top° -> T° (clash detection), Top° -> v° ([Adrs]).
// Conflicts are recorded and the walk continues.
std::vector<ProbeGoalStep> agree_local(Derivation& deriv, Conjunct& conjunct);

std::vector<ProbeGoalStep> agree_local_all(Derivation& deriv);

// Nonlocal chains only: the chain head values [Adrs]+phi on every lower
// phase head (Top°, v°), the silent slots, and the chained pros. T° links
// are skipped: a nonphase head is not an intervener. Local chains contribute
// zero steps beyond agree_local.
std::vector<ProbeGoalStep> agree_across_phases(Derivation& deriv,
                                               const std::vector<AChain>& chains);

// Convergence audit: any head or slot left with an unvalued feature.
std::vector<Violation> unvalued_features(const Derivation& deriv);

// One AgreementMismatch per recorded Conflict outcome.
std::vector<Violation> conflict_violations(const std::vector<ProbeGoalStep>& steps);

}  // namespace impjudge

#endif  // IMPJUDGE_AGREE_HPP
