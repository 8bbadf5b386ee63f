#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wpb {

/// Base of every error thrown by the library. `code()` is a stable machine
/// name used in CLI error reports; `witness()` carries optional offending values.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(std::move(code)), witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  std::vector<int> witness_;
};

#define WPB_DEFINE_ERROR(Name, Code)                                               \
  class Name : public Error {                                                      \
   public:                                                                         \
    explicit Name(const std::string& message, std::vector<int> witness = {})       \
        : Error(Code, message, std::move(witness)) {}                              \
  }

WPB_DEFINE_ERROR(CycleError, "cycle");
WPB_DEFINE_ERROR(IndexError, "index");
WPB_DEFINE_ERROR(SizeMismatchError, "size_mismatch");
WPB_DEFINE_ERROR(ContextMismatchError, "context_mismatch");
WPB_DEFINE_ERROR(BudgetError, "budget");
WPB_DEFINE_ERROR(TooSmallError, "too_small");
WPB_DEFINE_ERROR(NotChainError, "not_chain");
WPB_DEFINE_ERROR(ArityError, "arity");
WPB_DEFINE_ERROR(NotFinerError, "not_finer");
WPB_DEFINE_ERROR(LabelError, "label");
WPB_DEFINE_ERROR(NotLabeledAutomorphismError, "not_labeled_automorphism");
WPB_DEFINE_ERROR(NotIsometryError, "not_isometry");
WPB_DEFINE_ERROR(NonPrincipalError, "non_principal");
WPB_DEFINE_ERROR(DecompositionError, "decomposition");
WPB_DEFINE_ERROR(FieldRequiredError, "field_required");
WPB_DEFINE_ERROR(ParseError, "parse");
WPB_DEFINE_ERROR(ValidationError, "validation");

#undef WPB_DEFINE_ERROR

/// Violation of one of the scalar weight axioms. The witness is the pair
/// (a, b) that breaks it; for the zero and symmetry axioms b repeats a.
class AxiomError : public Error {
 public:
  enum class Axiom { zero, symmetry, triangle };

  AxiomError(Axiom which, int a, int b, const std::string& message)
      : Error("axiom", message, {a, b}), which_(which), witness_pair_(a, b) {}

  Axiom which() const noexcept { return which_; }
  std::pair<int, int> witness_pair() const noexcept { return witness_pair_; }

 private:
  Axiom which_;
  std::pair<int, int> witness_pair_;
};

inline const char* to_string(AxiomError::Axiom a) {
  switch (a) {
    case AxiomError::Axiom::zero: return "zero";
    case AxiomError::Axiom::symmetry: return "symmetry";
    case AxiomError::Axiom::triangle: return "triangle";
  }
  return "unknown";
}

}  // namespace wpb
