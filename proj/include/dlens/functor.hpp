#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlens/fincat.hpp"

namespace dlens {

class Functor {
 public:
  Functor() = default;
  /// Unchecked; see validate_functor / check_functor_laws.
  Functor(FinCat dom, FinCat cod, std::vector<int> on_objects,
          std::vector<int> on_morphisms);

  const FinCat& dom() const { return dom_; }
  const FinCat& cod() const { return cod_; }
  int obj(int a) const { return on_objects_[a]; }
  int mor(int m) const { return on_morphisms_[m]; }
  const std::vector<int>& object_map() const { return on_objects_; }
  const std::vector<int>& morphism_map() const { return on_morphisms_; }

  /// Equal domains, codomains and assignments (compared by name).
  friend bool operator==(const Functor& a, const Functor& b);

 private:
  FinCat dom_;
  FinCat cod_;
  std::vector<int> on_objects_;
  std::vector<int> on_morphisms_;
};

struct RawFunctor {
  std::map<std::string, std::string> on_objects;
  std::map<std::string, std::string> on_morphisms;
};

/// Throws NotAFunctor naming the first violated law.
Functor validate_functor(const RawFunctor& raw, const FinCat& dom,
                         const FinCat& cod);
Verdict check_functor_laws(const Functor& f);
RawFunctor to_raw(const Functor& f);

Functor identity_functor(const FinCat& c);
/// The same functor re-indexed onto name-equal categories.
Functor retarget(const Functor& f, const FinCat& dom, const FinCat& cod);
/// g∘f. Throws PreconditionViolated when cod(f) != dom(g).
Functor compose(const Functor& g, const Functor& f);

/// Object map is the identity on names (dom and cod share object names).
bool is_identity_on_objects(const Functor& f);
/// Bijective on objects and on morphisms.
bool is_isomorphism(const Functor& f);
/// Throws PreconditionViolated unless is_isomorphism(f).
Functor inverse(const Functor& f);

/// Inclusion of the discrete category on Ob(c) into c.
Functor discrete_inclusion(const FinCat& c);

struct FunctorClass {
  bool is_discrete_opfibration = false;
  bool is_bijective_on_objects = false;
  bool is_fully_faithful = false;
  /// "(a, u)" with the lift count for discrete opfibrations.
  std::optional<std::string> opfibration_witness;
  std::optional<std::string> bijection_witness;
  /// "(a, a', u)" with the preimage count.
  std::optional<std::string> fully_faithful_witness;
};

FunctorClass classify_functor(const Functor& f);
bool is_discrete_opfibration(const Functor& f);
bool is_fully_faithful(const Functor& f);

/// The unique lift of u at a along a discrete opfibration, or -1 when the
/// lift is missing or ambiguous.
int unique_lift(const Functor& f, int a, int u);

}  // namespace dlens
