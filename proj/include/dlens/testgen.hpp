#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dlens/cofunctor.hpp"
#include "dlens/fincat.hpp"
#include "dlens/lens.hpp"
#include "dlens/mealy.hpp"
#include "dlens/span.hpp"
#include "dlens/symlens.hpp"

namespace dlens {

struct GenConfig {
  std::uint64_t seed = 0;
  int max_objects = 3;
  /// Non-identity generating morphisms.
  int max_generators = 3;
  /// Longest generator chain explored while closing under composition.
  int closure_bound = 6;
  int morphism_cap = 64;
  /// States of generated transition systems, lenses and symmetric lenses.
  int max_states = 6;
};

/// Random category: objects are small finite sets, generators random
/// functions between them, closed under composition. Generators whose
/// closure breaks the cap or the chain bound are redrawn or dropped.
/// Throws GenerationFailed when even the discrete category exceeds the cap.
FinCat gen_category(const GenConfig& cfg);

/// A copresheaf over `base` presented as a transition system: states with
/// anchors and an action next[x * |Mor base| + u].
struct TransitionSystem {
  std::vector<std::string> states;
  std::vector<int> anchor;
  std::vector<int> next;
};

/// Coproduct of representables and forward-closed terminal pieces, then
/// quotiented by a random congruence. At least one state whenever `base`
/// has an object.
TransitionSystem gen_transition_system(std::mt19937_64& rng, const FinCat& base,
                                       int max_states);

/// Random lens with view `b`, read off a generated lens diagram. With
/// max_generators = 0 the source is the image of the transition system.
Lens gen_lens(const GenConfig& cfg, const FinCat& b);
/// Random cofunctor b ↛ A (the put of a generated lens).
Cofunctor gen_cofunctor(const GenConfig& cfg, const FinCat& b);
/// Random Mealy morphism a ↛ b.
MealyMorphism gen_mealy(const GenConfig& cfg, const FinCat& a, const FinCat& b);

/// Random symmetric lens between a and b. Either a generated forward Mealy
/// morphism completed by a searched backward one on the same anchored
/// states, or M of a generated span.
SymmetricLens gen_symlens(const GenConfig& cfg, const FinCat& a, const FinCat& b);
/// Random span of lenses between a and b: a composite through ONE of two
/// generated lenses, a subcategory of R of a generated symmetric lens that
/// keeps every lift, or L of one when it saturates.
LensSpan gen_span(const GenConfig& cfg, const FinCat& a, const FinCat& b);

/// The first functor dom -> cod found by a search with shuffled candidates.
std::optional<Functor> random_functor(std::mt19937_64& rng, const FinCat& dom,
                                      const FinCat& cod);

}  // namespace dlens
