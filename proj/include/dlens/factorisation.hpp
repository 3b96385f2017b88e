#pragma once

#include "dlens/functor.hpp"

namespace dlens {

/// Bijective-on-objects / fully-faithful factorisation F = m∘e through the
/// image. The image has the objects of dom(F) (same names, so e is
/// identity-on-objects) and morphisms (a, u, a') for u: Fa -> Fa'.
struct BoffFactorisation {
  Functor e;
  FinCat image;
  Functor m;
};

BoffFactorisation boff_factorize(const Functor& f);

/// The unique diagonal h: C -> B with h∘e = f and m∘h = g for a commuting
/// square m∘f = g∘e with e bijective-on-objects and m fully faithful.
/// Throws PreconditionViolated otherwise.
Functor boff_fill(const Functor& e, const Functor& m, const Functor& f,
                  const Functor& g);

}  // namespace dlens
