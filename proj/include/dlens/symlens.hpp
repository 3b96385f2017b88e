#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dlens/lens.hpp"
#include "dlens/mealy.hpp"

namespace dlens {

/// A symmetric lens between A and B: Mealy morphisms forward: A ↛ B and
/// backward: B ↛ A on one state list, with forward.g0 = backward.f0 and
/// forward.f0 = backward.g0.
struct SymmetricLens {
  MealyMorphism forward;
  MealyMorphism backward;

  const FinCat& a() const { return forward.input(); }
  const FinCat& b() const { return forward.output(); }
  int state_count() const { return forward.state_count(); }
  const std::string& state_name(int x) const { return forward.state_name(x); }

  friend bool operator==(const SymmetricLens& s, const SymmetricLens& t) {
    return s.forward == t.forward && s.backward == t.backward;
  }
};

/// Checks both Mealy morphisms, then the shared states and anchors. The
/// backward states are reordered to the forward order. Throws
/// AxiomViolation or AnchorMismatch.
SymmetricLens symlens_validate(const MealyMorphism& forward, const MealyMorphism& backward);
void check_symlens(const SymmetricLens& s);

SymmetricLens dagger(const SymmetricLens& s);
/// States Ob(A); forward from the get functor, backward from the put.
SymmetricLens embed_lens_sym(const Lens& l);
SymmetricLens identity_symlens(const FinCat& a);

struct SymComposite {
  SymmetricLens lens;
  /// Component states (x, y) of each composite state.
  std::vector<std::pair<int, int>> parts;
};

SymComposite symlens_hcompose_detailed(const SymmetricLens& s1, const SymmetricLens& s2);
SymmetricLens symlens_hcompose(const SymmetricLens& s1, const SymmetricLens& s2);

/// A state map is a 2-cell when it is a map of both Mealy morphisms.
Verdict symlens_2cell(const std::vector<int>& k, const SymmetricLens& src,
                      const SymmetricLens& tgt);
bool is_invertible_sym_cell(const std::vector<int>& k, const SymmetricLens& src,
                            const SymmetricLens& tgt);
/// Every 2-cell src -> tgt, by propagating search over state maps.
std::vector<std::vector<int>> enumerate_sym_2cells(const SymmetricLens& src,
                                                   const SymmetricLens& tgt);
std::optional<std::vector<int>> find_sym_isomorphism(const SymmetricLens& src,
                                                     const SymmetricLens& tgt);

/// ((x, y), z) |-> (x, (y, z)).
std::vector<int> symlens_associator(const SymmetricLens& s1, const SymmetricLens& s2,
                                    const SymmetricLens& s3);
/// (a, x) |-> x on identity_symlens(A) ∘ s.
std::vector<int> symlens_left_unitor(const SymmetricLens& s);
/// (x, b) |-> x on s ∘ identity_symlens(B).
std::vector<int> symlens_right_unitor(const SymmetricLens& s);

}  // namespace dlens
