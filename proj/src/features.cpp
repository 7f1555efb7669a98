#include "impjudge/features.hpp"

#include <array>
#include <stdexcept>

namespace impjudge {

namespace {

const char* attr_names[] = {"Pers", "Num", "Gend", "Case", "Tense", "Adrs", "Spcty", "EPP", "EdgeF"};

[[noreturn]] void contract_violation(const std::string& what) {
  throw std::logic_error("contract violation: " + what);
}

}  // namespace

std::string to_string(FeatureAttribute attr) {
  return attr_names[static_cast<std::size_t>(attr)];
}

std::optional<FeatureAttribute> attribute_from_string(const std::string& name) {
  for (std::size_t i = 0; i < std::size(attr_names); ++i) {
    if (name == attr_names[i]) return static_cast<FeatureAttribute>(i);
  }
  return std::nullopt;
}

FeatureValue FeatureValue::person(int p) {
  if (p < 1 || p > 3) contract_violation("person value out of range");
  return {FeatureAttribute::Person, static_cast<std::uint8_t>(p)};
}

FeatureValue FeatureValue::number(NumberVal n) {
  return {FeatureAttribute::Number, static_cast<std::uint8_t>(n)};
}

FeatureValue FeatureValue::gender(GenderVal g) {
  return {FeatureAttribute::Gender, static_cast<std::uint8_t>(g)};
}

FeatureValue FeatureValue::case_of(CaseVal c) {
  return {FeatureAttribute::Case, static_cast<std::uint8_t>(c)};
}

FeatureValue FeatureValue::tense(TenseVal t) {
  return {FeatureAttribute::Tense, static_cast<std::uint8_t>(t)};
}

FeatureValue FeatureValue::addressee() { return {FeatureAttribute::Adrs, 0}; }

FeatureValue FeatureValue::specific() { return {FeatureAttribute::Spcty, 0}; }

FeatureValue FeatureValue::sat(FeatureAttribute attr) {
  if (attr != FeatureAttribute::EPP && attr != FeatureAttribute::EdgeF)
    contract_violation("Sat is only a value of EPP/EdgeF");
  return {attr, 0};
}

int FeatureValue::person_value() const {
  if (attr_ != FeatureAttribute::Person) contract_violation("not a person value");
  return code_;
}

NumberVal FeatureValue::number_value() const {
  if (attr_ != FeatureAttribute::Number) contract_violation("not a number value");
  return static_cast<NumberVal>(code_);
}

GenderVal FeatureValue::gender_value() const {
  if (attr_ != FeatureAttribute::Gender) contract_violation("not a gender value");
  return static_cast<GenderVal>(code_);
}

TenseVal FeatureValue::tense_value() const {
  if (attr_ != FeatureAttribute::Tense) contract_violation("not a tense value");
  return static_cast<TenseVal>(code_);
}

std::string FeatureValue::str() const {
  switch (attr_) {
    case FeatureAttribute::Person:
      return std::to_string(code_);
    case FeatureAttribute::Number:
      return code_ == 0 ? "Sg" : "Pl";
    case FeatureAttribute::Gender:
      return code_ == 0 ? "M" : "F";
    case FeatureAttribute::Case:
      return code_ == 0 ? "Nom" : "Acc";
    case FeatureAttribute::Tense:
      return code_ == 0 ? "Pres" : (code_ == 1 ? "Fut" : "Past");
    case FeatureAttribute::Adrs:
      return "Addressee";
    case FeatureAttribute::Spcty:
      return "Specific";
    case FeatureAttribute::EPP:
    case FeatureAttribute::EdgeF:
      return "Sat";
  }
  return "?";
}

std::optional<FeatureValue> value_from_string(FeatureAttribute attr, const std::string& text) {
  switch (attr) {
    case FeatureAttribute::Person:
      if (text == "1") return FeatureValue::person(1);
      if (text == "2") return FeatureValue::person(2);
      if (text == "3") return FeatureValue::person(3);
      return std::nullopt;
    case FeatureAttribute::Number:
      if (text == "Sg") return FeatureValue::number(NumberVal::Sg);
      if (text == "Pl") return FeatureValue::number(NumberVal::Pl);
      return std::nullopt;
    case FeatureAttribute::Gender:
      if (text == "M") return FeatureValue::gender(GenderVal::M);
      if (text == "F") return FeatureValue::gender(GenderVal::F);
      return std::nullopt;
    case FeatureAttribute::Case:
      if (text == "Nom") return FeatureValue::case_of(CaseVal::Nom);
      if (text == "Acc") return FeatureValue::case_of(CaseVal::Acc);
      return std::nullopt;
    case FeatureAttribute::Tense:
      if (text == "Pres") return FeatureValue::tense(TenseVal::Pres);
      if (text == "Fut") return FeatureValue::tense(TenseVal::Fut);
      if (text == "Past") return FeatureValue::tense(TenseVal::Past);
      return std::nullopt;
    case FeatureAttribute::Adrs:
      if (text == "Addressee") return FeatureValue::addressee();
      return std::nullopt;
    case FeatureAttribute::Spcty:
      if (text == "Specific") return FeatureValue::specific();
      return std::nullopt;
    case FeatureAttribute::EPP:
    case FeatureAttribute::EdgeF:
      if (text == "Sat") return FeatureValue::sat(attr);
      return std::nullopt;
  }
  return std::nullopt;
}

Feature Feature::unvalued(FeatureAttribute attr, Interpretability interp) {
  return {attr, std::nullopt, interp};
}

Feature Feature::valued(FeatureValue val, Interpretability interp) {
  return {val.attribute(), val, interp};
}

const FeatureValue& Feature::value() const {
  if (!val_) contract_violation("value() on unvalued feature");
  return *val_;
}

void Feature::assign(FeatureValue val) {
  if (val_) contract_violation("assign() would revalue a valued feature");
  if (val.attribute() != attr_) contract_violation("assign() across attributes");
  val_ = val;
}

std::string Feature::str() const {
  return "[" + to_string(attr_) + ": " + (val_ ? val_->str() : "__") + "]";
}

void FeatureBundle::insert(Feature f) {
  auto [it, fresh] = feats_.emplace(f.attribute(), f);
  (void)it;
  if (!fresh) contract_violation("duplicate attribute in bundle: " + to_string(f.attribute()));
}

const Feature* FeatureBundle::find(FeatureAttribute attr) const {
  auto it = feats_.find(attr);
  return it == feats_.end() ? nullptr : &it->second;
}

Feature* FeatureBundle::find(FeatureAttribute attr) {
  auto it = feats_.find(attr);
  return it == feats_.end() ? nullptr : &it->second;
}

std::string FeatureBundle::str() const {
  std::string out;
  for (const auto& [attr, f] : feats_) out += f.str();
  return out.empty() ? "[]" : out;
}

std::string to_string(MatchResult r) {
  switch (r) {
    case MatchResult::Valued:
      return "valued";
    case MatchResult::NoChange:
      return "no-change";
    case MatchResult::Conflict:
      return "conflict";
  }
  return "?";
}

MatchOutcome match_feature(const Feature& probe, const Feature& goal) {
  if (probe.attribute() != goal.attribute())
    contract_violation("match_feature across attributes");
  if (!probe.is_valued() && goal.is_valued()) {
    Feature updated = probe;
    updated.assign(goal.value());
    return {MatchResult::Valued, updated};
  }
  if (probe.is_valued() && goal.is_valued() && !(probe.value() == goal.value()))
    return {MatchResult::Conflict, probe};
  // Identical values, or an unvalued goal: nothing flows.
  return {MatchResult::NoChange, probe};
}

BundleOutcome value_bundle(const FeatureBundle& probe, const FeatureBundle& goal,
                           std::span<const FeatureAttribute> attrs) {
  BundleOutcome out{probe, std::nullopt};
  for (FeatureAttribute attr : attrs) {
    Feature* slot = out.bundle.find(attr);
    if (!slot) contract_violation("value_bundle attribute absent from probe: " + to_string(attr));
    const Feature* g = goal.find(attr);
    if (!g) continue;  // nothing to match against
    MatchOutcome m = match_feature(*slot, *g);
    if (m.result == MatchResult::Conflict) {
      out.conflict = attr;
      return out;
    }
    *slot = m.probe;
  }
  return out;
}

bool fully_valued(const FeatureBundle& b) {
  for (const auto& [attr, f] : b) {
    (void)attr;
    if (!f.is_valued()) return false;
  }
  return true;
}

}  // namespace impjudge
