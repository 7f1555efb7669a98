#ifndef IMPJUDGE_VERDICT_HPP
#define IMPJUDGE_VERDICT_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace impjudge {

// Stable output contract: these exact strings appear in judgments, corpus
// files and the structured output.
enum class ViolationCode {
  PastTense,
  TopicRecursion,
  ForcBeforeTop,
  ForcDoubleFill,
  AgreementMismatch,
  PersonMismatchAnaphor,
  NumberMismatchReciprocal,
  StpIterationViolation,
  UnvaluedFeature,
  OutOfScopeNegation,
  UnknownForm,
  EmptyInput,
};

std::string to_string(ViolationCode code);
std::optional<ViolationCode> violation_from_string(const std::string& name);

// EmptyInput and UnknownForm are input rejections (CLI exit 2) rather than
// judgments about a well-formed YA string (exit 1).
bool is_input_error(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string locus;   // offending token or position
  std::string detail;  // one-line explanation
};

// Raised while assembling the clause for inputs the judge cannot take any
// further (unknown form, empty input, misplaced material, no imperative verb
// in a verb-requiring clause). `code` is empty for rejections that have no
// corpus-visible violation code.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::optional<ViolationCode> code, std::string locus, const std::string& message)
      : std::runtime_error(message), code_(code), locus_(std::move(locus)) {}

  const std::optional<ViolationCode>& code() const { return code_; }
  const std::string& locus() const { return locus_; }

 private:
  std::optional<ViolationCode> code_;
  std::string locus_;
};

// Structural misuse of the tree-building primitives (merging into a saturated
// projection, remerge without a verb under TP, ...).
class StructureError : public std::runtime_error {
 public:
  explicit StructureError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace impjudge

#endif  // IMPJUDGE_VERDICT_HPP
