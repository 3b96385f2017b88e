#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dlens {

enum class ErrorCode {
  MissingComposite,
  LawViolation,
  EndpointMismatch,
  UnknownName,
  Incomplete,
  NotAFunctor,
  PreconditionViolated,
  NotSaturated,
  AxiomViolation,
  ShapeError,
  ObjectMismatch,
  PutGetViolation,
  AnchorMismatch,
  LInapplicableAtBound,
  GenerationFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failing operation throws this. `witness` names the offending
/// objects/morphisms; `axiom` is the violated axiom index for
/// AxiomViolation (0 denotes a typing failure of a table entry).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string witness = {},
        int axiom = 0);

  ErrorCode code() const noexcept { return code_; }
  int axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

  // Populated for NotSaturated / LInapplicableAtBound.
  std::size_t bound = 0;
  std::vector<std::size_t> word_counts;

 private:
  ErrorCode code_;
  std::string witness_;
  int axiom_;
};

struct Verdict {
  bool ok = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const noexcept { return ok; }
};

}  // namespace dlens
