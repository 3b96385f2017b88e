#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "dlens/lens.hpp"
#include "dlens/limits.hpp"

namespace dlens {

/// A span of lenses A <=left= X =right=> B.
struct LensSpan {
  FinCat apex;
  Lens left;
  Lens right;

  const FinCat& a() const { return left.view(); }
  const FinCat& b() const { return right.view(); }

  friend bool operator==(const LensSpan& s, const LensSpan& t) {
    return s.apex == t.apex && s.left == t.left && s.right == t.right;
  }
};

/// Checks both lenses and that they share the apex; throws.
void check_span(const LensSpan& s);
LensSpan make_span(const Lens& left, const Lens& right);
LensSpan identity_span(const FinCat& a);
/// Left leg the identity lens on A, right leg l.
LensSpan embed_lens_spn(const Lens& l);

/// The lens X ⇌ ONE whose put lifts the identity to identities.
Lens terminal_lens(const FinCat& x);

struct FakePullback {
  Pullback pullback;
  /// Left leg onto A, right leg onto C.
  LensSpan span;
};

/// Canonical cone over l: A ⇌ B and r: C ⇌ B on the pullback of the gets.
FakePullback fake_pullback_detailed(const Lens& l, const Lens& r);
LensSpan fake_pullback(const Lens& l, const Lens& r);

struct LensBCheck {
  Verdict verdict;
  /// The functor between put apexes (a, u) |-> (ha, u), on success.
  std::optional<Functor> induced;
};

/// Is h: A -> C a morphism src -> tgt in Lens(B)?
LensBCheck lensB_hom_check(const Functor& h, const Lens& src, const Lens& tgt);

struct LensProduct {
  Pullback pullback;
  Lens lens;
  Functor proj0;
  Functor proj1;
};

LensProduct lensB_product(const Lens& l1, const Lens& l2);

struct SpanCellCheck {
  Verdict verdict;
  std::optional<Functor> induced_left;
  std::optional<Functor> induced_right;
};

/// h: X -> X' is a 2-cell src -> tgt when it is a Lens-morphism on both legs.
SpanCellCheck spnlens_2cell(const Functor& h, const LensSpan& src, const LensSpan& tgt);
/// An isomorphism whose inverse is also a 2-cell.
bool is_invertible_span_cell(const Functor& h, const LensSpan& src, const LensSpan& tgt);
/// Every 2-cell src -> tgt, by exhaustive functor search.
std::vector<Functor> enumerate_span_2cells(
    const LensSpan& src, const LensSpan& tgt,
    std::size_t limit = std::numeric_limits<std::size_t>::max());
std::optional<Functor> find_span_isomorphism(const LensSpan& src, const LensSpan& tgt);

struct SpanComposite {
  LensSpan span;
  FakePullback middle;
};

/// s1: A..B then s2: B..C, through the fake pullback of s1.right and s2.left.
SpanComposite spnlens_hcompose_detailed(const LensSpan& s1, const LensSpan& s2);
LensSpan spnlens_hcompose(const LensSpan& s1, const LensSpan& s2);

/// ((x1, x2), x3) |-> (x1, (x2, x3)) between the two bracketings.
Functor spnlens_associator(const LensSpan& s1, const LensSpan& s2, const LensSpan& s3);
/// Apex of identity_span(A) ∘ s onto the apex of s.
Functor spnlens_left_unitor(const LensSpan& s);
/// Apex of s ∘ identity_span(B) onto the apex of s.
Functor spnlens_right_unitor(const LensSpan& s);

}  // namespace dlens
