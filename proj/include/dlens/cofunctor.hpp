#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dlens/functor.hpp"

namespace dlens {

/// A cofunctor base ↛ total: an object assignment Ob(total) -> Ob(base)
/// with a lift of every u: obj(a) -> b in base to a morphism of total out
/// of a. Lifts are stored as an explicit table.
class Cofunctor {
 public:
  Cofunctor() = default;
  /// Unchecked; see check_cofunctor.
  Cofunctor(FinCat total, FinCat base, std::vector<int> obj, std::vector<int> lift);

  const FinCat& total() const { return total_; }
  const FinCat& base() const { return base_; }
  int obj(int a) const { return obj_[a]; }
  /// Lift of u at a; -1 when u does not start at obj(a).
  int lift(int a, int u) const {
    return lift_[static_cast<std::size_t>(a) * base_.morphism_count() + u];
  }
  /// p(a, u), the codomain of the lift.
  int codomain(int a, int u) const { return total_.tgt(lift(a, u)); }
  const std::vector<int>& object_map() const { return obj_; }
  const std::vector<int>& lift_table() const { return lift_; }

  friend bool operator==(const Cofunctor& a, const Cofunctor& b);

 private:
  FinCat total_;
  FinCat base_;
  std::vector<int> obj_;
  std::vector<int> lift_;
};

struct RawCofunctor {
  std::map<std::string, std::string> obj_assign;
  /// Triples (a, u, lift).
  std::vector<std::array<std::string, 3>> lifts;
};

/// Builds and checks a cofunctor. Throws AxiomViolation with the axiom
/// index (0 for a mistyped entry) or Incomplete for a missing entry.
Cofunctor check_cofunctor(const RawCofunctor& raw, const FinCat& total,
                          const FinCat& base);
/// Re-checks the three axioms; throws AxiomViolation.
void check_cofunctor(const Cofunctor& c);
RawCofunctor to_raw(const Cofunctor& c);

Cofunctor identity_cofunctor(const FinCat& c);
/// A discrete opfibration f: A -> B as a cofunctor B ↛ A.
Cofunctor cofunctor_from_opfibration(const Functor& f);

/// g: C ↛ B after p: B ↛ A, giving C ↛ A with lift(a, u) = p(a, g(pa, u)).
Cofunctor compose_cofunctors(const Cofunctor& g, const Cofunctor& p);

/// Span B <- Λ -> A: the left leg is a discrete opfibration onto the base,
/// the right leg identity-on-objects into the total category.
struct CofunctorSpan {
  FinCat apex;
  Functor left;
  Functor right;
};

CofunctorSpan cofunctor_span_rep(const Cofunctor& c);
/// Throws ShapeError when the legs are not of the required classes.
Cofunctor span_to_cofunctor(const CofunctorSpan& s);

}  // namespace dlens
