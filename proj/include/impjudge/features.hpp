#ifndef IMPJUDGE_FEATURES_HPP
#define IMPJUDGE_FEATURES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace impjudge {

// Closed attribute inventory. Unknown attribute names in input files are a
// load error, never a silent extension.
enum class FeatureAttribute : std::uint8_t {
  Person,
  Number,
  Gender,
  Case,
  Tense,
  Adrs,
  Spcty,
  EPP,
  EdgeF,
};

std::string to_string(FeatureAttribute attr);
std::optional<FeatureAttribute> attribute_from_string(const std::string& name);

enum class NumberVal : std::uint8_t { Sg, Pl };
enum class GenderVal : std::uint8_t { M, F };
enum class CaseVal : std::uint8_t { Nom, Acc };
enum class TenseVal : std::uint8_t { Pres, Fut, Past };

// An attribute-scoped scalar. A value is only constructible under its own
// attribute, so a Gender value can never sit in a Tense slot.
class FeatureValue {
 public:
  static FeatureValue person(int p);  // 1..3
  static FeatureValue number(NumberVal n);
  static FeatureValue gender(GenderVal g);
  static FeatureValue case_of(CaseVal c);
  static FeatureValue tense(TenseVal t);
  static FeatureValue addressee();
  static FeatureValue specific();
  static FeatureValue sat(FeatureAttribute attr);  // EPP or EdgeF

  FeatureAttribute attribute() const { return attr_; }
  int person_value() const;
  NumberVal number_value() const;
  GenderVal gender_value() const;
  TenseVal tense_value() const;

  // Rendered as it appears in lexicon files: "2", "Pl", "F", "Nom", "Past",
  // "Addressee", "Specific", "Sat".
  std::string str() const;

  friend bool operator==(const FeatureValue& a, const FeatureValue& b) = default;

 private:
  FeatureValue(FeatureAttribute attr, std::uint8_t code) : attr_(attr), code_(code) {}
  FeatureAttribute attr_;
  std::uint8_t code_;
};

// Parses an attribute-scoped value literal ("2", "Sg", ...). Returns nullopt
// for anything out of range.
std::optional<FeatureValue> value_from_string(FeatureAttribute attr, const std::string& text);

enum class Interpretability : std::uint8_t { Interpretable, Uninterpretable };

// A single attribute slot. Valuation is monotone: once valued, no operation
// ever returns the slot to the unvalued state. Interpretability is carried
// independently of valuation and never gates it.
class Feature {
 public:
  static Feature unvalued(FeatureAttribute attr, Interpretability interp);
  static Feature valued(FeatureValue val, Interpretability interp);

  FeatureAttribute attribute() const { return attr_; }
  bool is_valued() const { return val_.has_value(); }
  const FeatureValue& value() const;  // precondition: is_valued()
  Interpretability interp() const { return interp_; }

  // Installs a value into an unvalued slot. Calling this on a valued slot is
  // a caller bug (monotonicity).
  void assign(FeatureValue val);

  std::string str() const;  // "[Num: Pl]" / "[Num: __]"

  friend bool operator==(const Feature& a, const Feature& b) = default;

 private:
  Feature(FeatureAttribute attr, std::optional<FeatureValue> val, Interpretability interp)
      : attr_(attr), val_(val), interp_(interp) {}
  FeatureAttribute attr_;
  std::optional<FeatureValue> val_;
  Interpretability interp_;
};

// At most one Feature per attribute. An absent attribute is distinguishable
// from an unvalued one: find() returns nullptr for absent slots.
class FeatureBundle {
 public:
  FeatureBundle() = default;

  // Rejects duplicate attributes (caller bug).
  void insert(Feature f);
  bool has(FeatureAttribute attr) const { return feats_.count(attr) != 0; }
  const Feature* find(FeatureAttribute attr) const;
  Feature* find(FeatureAttribute attr);
  std::size_t size() const { return feats_.size(); }
  bool empty() const { return feats_.empty(); }

  auto begin() const { return feats_.begin(); }
  auto end() const { return feats_.end(); }

  std::string str() const;

  friend bool operator==(const FeatureBundle& a, const FeatureBundle& b) = default;

 private:
  std::map<FeatureAttribute, Feature> feats_;
};

enum class MatchResult : std::uint8_t { Valued, NoChange, Conflict };

std::string to_string(MatchResult r);

struct MatchOutcome {
  MatchResult result;
  Feature probe;  // the (possibly updated) probe slot
};

// The Agree primitive: the valued goal's value is copied into the unvalued
// probe slot. Valued-vs-valued with distinct values is a Conflict; nothing
// ever flows from an unvalued goal. Attribute mismatch is a caller bug.
MatchOutcome match_feature(const Feature& probe, const Feature& goal);

struct BundleOutcome {
  FeatureBundle bundle;                        // updated probe bundle
  std::optional<FeatureAttribute> conflict;    // set iff a Conflict aborted the walk
};

// Pointwise lift of match_feature over the listed attributes. The first
// Conflict aborts and is reported with its attribute. Every listed attribute
// must exist on the probe.
BundleOutcome value_bundle(const FeatureBundle& probe, const FeatureBundle& goal,
                           std::span<const FeatureAttribute> attrs);

// True iff every slot present in the bundle is valued. Vacuously true for {}.
bool fully_valued(const FeatureBundle& b);

}  // namespace impjudge

#endif  // IMPJUDGE_FEATURES_HPP
