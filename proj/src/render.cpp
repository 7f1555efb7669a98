#include "impjudge/render.hpp"

#include <sstream>

#include "json.hpp"

namespace impjudge {

namespace {

std::string coref_line(const ProResolution& r, bool single) {
  std::string label = single ? "pro" : r.label;
  std::string line = label + " ⇒ " + r.antecedent.display();
  if (r.discourse_dependent) line += " (discourse-dependent)";
  return line;
}

std::string chain_summary(const AChain& chain) {
  std::string s = "chain " + std::to_string(chain.index) + " (" + to_string(chain.locality) +
                  "): " + chain.head.display();
  for (const ChainLink& link : chain.links) {
    s += " — " + to_string(link.kind) + "(c" + std::to_string(link.conjunct) + ")";
  }
  return s;
}

}  // namespace

std::string render_text(const Judgment& j, bool with_trace) {
  std::ostringstream out;
  out << "sentence: " << j.sentence << "\n";
  out << "verdict: " << j.verdict_string() << "\n";

  if (j.verdict == Judgment::Verdict::InputError) {
    if (!j.violations.empty())
      out << "error: " << to_string(j.violations.front().code) << ": "
          << j.violations.front().detail
          << (j.violations.front().locus.empty() ? "" : " (at '" + j.violations.front().locus + "')")
          << "\n";
    else
      out << "error: " << j.input_error << "\n";
    return out.str();
  }

  if (j.verdict == Judgment::Verdict::Ungrammatical) {
    for (const Violation& v : j.violations) {
      out << "violation: " << to_string(v.code) << (v.locus.empty() ? "" : " at '" + v.locus + "'")
          << " — " << v.detail << "\n";
    }
  }

  for (std::size_t i = 0; i < j.brackets.size(); ++i)
    out << "structure c" << (i + 1) << ": " << j.brackets[i] << "\n";
  for (const AChain& chain : j.chains) out << chain_summary(chain) << "\n";
  if (j.grammatical()) {
    if (j.coreference.empty()) {
      out << "coreference: (no pro in this clause)\n";
    } else {
      bool single = j.coreference.size() == 1;
      for (const ProResolution& r : j.coreference) out << coref_line(r, single) << "\n";
    }
  }

  if (with_trace) {
    out << "derivation:\n";
    for (const TraceEvent& ev : j.trace) {
      // probe-goal events carry their own stage tag (inherit/agree-local/aap)
      std::string tag = ev.step ? ev.step->stage : to_string(ev.kind);
      out << "  [" << tag << "] " << ev.text << "\n";
    }
  }
  return out.str();
}

std::string render_structured(const Judgment& j) {
  using nlohmann::json;
  json doc;
  doc["sentence"] = j.sentence;
  doc["verdict"] = j.verdict_string();

  json violations = json::array();
  for (const Violation& v : j.violations) {
    violations.push_back({{"code", to_string(v.code)}, {"locus", v.locus}, {"detail", v.detail}});
  }
  doc["violations"] = violations;
  if (j.verdict == Judgment::Verdict::InputError) doc["input_error"] = j.input_error;

  json coref = json::array();
  for (const ProResolution& r : j.coreference) {
    coref.push_back({{"pro", r.label},
                     {"conjunct", r.conjunct},
                     {"position", r.position},
                     {"antecedent", r.antecedent.display()},
                     {"antecedent_kind",
                      r.antecedent.kind == Antecedent::Kind::Overt ? "overt" : "null_topic"},
                     {"chain", r.chain_index},
                     {"discourse_dependent", r.discourse_dependent}});
  }
  doc["coreference"] = coref;

  json chains = json::array();
  for (const AChain& chain : j.chains) {
    json links = json::array();
    for (const ChainLink& link : chain.links) {
      links.push_back({{"kind", to_string(link.kind)},
                       {"position", link.position},
                       {"conjunct", link.conjunct},
                       {"phase", link.phase}});
    }
    chains.push_back({{"index", chain.index},
                      {"locality", to_string(chain.locality)},
                      {"head", chain.head.display()},
                      {"head_conjunct", chain.head_conjunct},
                      {"links", links}});
  }
  doc["chains"] = chains;
  doc["structure"] = j.brackets;

  json steps = json::array();
  for (const ProbeGoalStep& s : j.steps) {
    json results = json::array();
    for (const AttrResult& r : s.results) {
      json rr = {{"attr", to_string(r.attr)}, {"outcome", to_string(r.result)}};
      if (r.value) rr["value"] = r.value->str();
      results.push_back(rr);
    }
    steps.push_back({{"stage", s.stage},
                     {"probe", s.probe},
                     {"goal", s.goal},
                     {"results", results},
                     {"note", s.note}});
  }
  doc["steps"] = steps;

  json trace = json::array();
  for (const TraceEvent& ev : j.trace)
    trace.push_back({{"kind", to_string(ev.kind)}, {"text", ev.text}});
  doc["trace"] = trace;

  json state = json::object();
  for (const auto& [pos, bundle] : j.final_state) state[pos] = bundle.str();
  doc["final_state"] = state;

  return doc.dump(2);
}

}  // namespace impjudge
