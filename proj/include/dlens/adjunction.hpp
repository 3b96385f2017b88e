#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dlens/factorisation.hpp"
#include "dlens/pushout.hpp"
#include "dlens/span.hpp"
#include "dlens/symlens.hpp"

namespace dlens {

/// States Ob(apex); transitions and outputs read off the two puts.
SymmetricLens apply_M(const LensSpan& s);

struct RConstruction {
  LensSpan span;
  Pullback product;      // A × B
  FinCat states;         // discrete on X0
  BoffFactorisation boff;  // of <g0, f0>: X0 -> A × B
  MealySpan plus;        // forward span X+
  MealySpan minus;       // backward span X-
  Functor sigma;         // X+ -> apex
  Functor tau;           // X- -> apex
};

RConstruction apply_R_detailed(const SymmetricLens& s);
LensSpan apply_R(const SymmetricLens& s);

struct LConstruction {
  LensSpan span;
  MealySpan plus;
  MealySpan minus;
  Pushout pushout;
};

/// Throws LInapplicableAtBound (with bound and word counts) when the
/// pushout of X+ and X- does not saturate.
LConstruction apply_L_detailed(const SymmetricLens& s, std::size_t bound = kDefaultBound);
LensSpan apply_L(const SymmetricLens& s, std::size_t bound = kDefaultBound);

/// Action on 2-cells. M keeps the object map; R fills through the bo-ff
/// factorisation; L copairs the letter-wise maps.
std::vector<int> map_M(const Functor& h, const LensSpan& src, const LensSpan& tgt);
Functor map_R(const std::vector<int>& k, const SymmetricLens& src, const SymmetricLens& tgt);
Functor map_L(const std::vector<int>& k, const SymmetricLens& src, const SymmetricLens& tgt,
              std::size_t bound = kDefaultBound);

/// 2-cell s -> R(M(s)).
Functor unit_MR(const LensSpan& s);
/// 2-cell L(M(s)) -> s; throws LInapplicableAtBound.
Functor counit_LM(const LensSpan& s, std::size_t bound = kDefaultBound);

/// Whether the get-pairing <g, f>: X -> A × B is fully faithful.
bool get_pairing_fully_faithful(const LensSpan& s);

struct LImageCheck {
  /// Every morphism of the apex is a composite of put lifts.
  bool generated = false;
  /// Distinct alternating words of lifts have distinct composites.
  bool words_injective = false;
  std::string witness;
  bool holds() const { return generated && words_injective; }
};

/// Decides, inside the apex, whether the span is the pushout of its two put
/// apexes along the objects.
LImageCheck check_L_image(const LensSpan& s);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  CheckStatus status = CheckStatus::Skip;
  std::string witness;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct InstanceReport {
  std::string id;
  std::map<std::string, CheckResult> checks;
  friend bool operator==(const InstanceReport&, const InstanceReport&) = default;
};

struct AdjunctionReport {
  std::vector<InstanceReport> instances;

  /// Per check name: Fail if any instance fails, else Pass if any passes.
  std::map<std::string, CheckResult> summary() const;
  /// No evaluated check failed.
  bool all_passed() const;
  friend bool operator==(const AdjunctionReport&, const AdjunctionReport&) = default;
};

/// Check names in report order.
const std::vector<std::string>& adjunction_check_names();

/// Instance i pairs syms[i] with spans[i]; naturality uses spans[i + 1]
/// cyclically. Instances run concurrently; never throws on law failure.
AdjunctionReport verify_adjunctions(const FinCat& a, const FinCat& b,
                                    const std::vector<SymmetricLens>& syms,
                                    const std::vector<LensSpan>& spans,
                                    std::size_t bound = kDefaultBound);
/// Same report computed on the calling thread only.
AdjunctionReport verify_adjunctions_serial(const FinCat& a, const FinCat& b,
                                           const std::vector<SymmetricLens>& syms,
                                           const std::vector<LensSpan>& spans,
                                           std::size_t bound = kDefaultBound);

std::string_view to_string(CheckStatus s);

}  // namespace dlens
