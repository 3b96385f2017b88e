#pragma once

#include "dlens/cofunctor.hpp"
#include "dlens/functor.hpp"

namespace dlens {

/// A delta lens A ⇌ B: a functor get: A -> B and a cofunctor put: B ↛ A
/// on the same object map with get(put(a, u)) = u.
struct Lens {
  Functor get;
  Cofunctor put;

  const FinCat& source() const { return get.dom(); }
  const FinCat& view() const { return get.cod(); }

  friend bool operator==(const Lens& a, const Lens& b) {
    return a.get == b.get && a.put == b.put;
  }
};

/// Checks the cofunctor axioms (AxiomViolation), then object agreement
/// (ObjectMismatch), then PutGet (PutGetViolation).
Lens check_lens(const Functor& get, const Cofunctor& put);
void check_lens(const Lens& l);

Lens identity_lens(const FinCat& c);
/// first: A ⇌ B then second: B ⇌ C.
Lens compose_lens(const Lens& first, const Lens& second);

/// Commuting triangle A <- Λ -> B with get: A -> B: the leg into A is
/// identity-on-objects, the leg into B a discrete opfibration, and
/// get ∘ put_leg = base_leg.
struct LensDiagram {
  FinCat apex;
  Functor put_leg;
  Functor base_leg;
  Functor get;
};

LensDiagram lens_diagram_rep(const Lens& l);
/// Throws ShapeError if a leg is of the wrong class or the triangle does
/// not commute.
Lens diagram_to_lens(const LensDiagram& d);

}  // namespace dlens
