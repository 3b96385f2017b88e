#pragma once

#include <cstdint>
#include <unordered_map>

#include "dlens/functor.hpp"

namespace dlens {

/// Strict pullback P = A ×_C B of F: A -> C and G: B -> C. Objects are the
/// pairs (a, b) with Fa = Gb, morphisms the pairs agreeing in C.
class Pullback {
 public:
  Pullback(const Functor& f, const Functor& g);

  const FinCat& apex() const { return apex_; }
  const Functor& p0() const { return p0_; }
  const Functor& p1() const { return p1_; }

  /// Object / morphism of the apex with the given components, or -1.
  int object_of(int a, int b) const;
  int morphism_of(int u, int v) const;

  /// The mediating functor <h0, h1>: D -> P for a cone F∘h0 = G∘h1.
  /// Throws PreconditionViolated when the cone does not commute.
  Functor pair(const Functor& h0, const Functor& h1) const;

 private:
  FinCat left_;
  FinCat right_;
  FinCat apex_;
  Functor p0_;
  Functor p1_;
  std::unordered_map<std::int64_t, int> objects_;
  std::unordered_map<std::int64_t, int> morphisms_;
};

/// The terminal category: one object "*" with identity "1_*".
FinCat terminal_category();
Functor to_terminal(const FinCat& c);

/// Binary product A × B as the pullback over the terminal category.
Pullback product(const FinCat& a, const FinCat& b);

}  // namespace dlens
