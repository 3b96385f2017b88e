#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dlens/functor.hpp"

namespace dlens {

/// Constraints for brute-force functor enumeration.
struct FunctorSearch {
  /// May object c of the domain go to object d of the codomain?
  std::function<bool(int c, int d)> object_ok;
  /// May morphism w of the domain go to morphism v of the codomain?
  std::function<bool(int w, int v)> morphism_ok;
  /// Only injective object and morphism maps.
  bool injective = false;
  /// Reorders candidate lists before they are tried.
  std::function<void(std::vector<int>&)> shuffle;
};

/// Calls `visit` for every functor dom -> cod satisfying the constraints,
/// in a deterministic order. Enumeration stops when `visit` returns false.
void for_each_functor(const FinCat& dom, const FinCat& cod,
                      const FunctorSearch& constraints,
                      const std::function<bool(const Functor&)>& visit);

std::vector<Functor> all_functors(const FinCat& dom, const FinCat& cod,
                                  const FunctorSearch& constraints = {});

/// An isomorphism dom -> cod, if one exists.
std::optional<Functor> find_isomorphism(const FinCat& dom, const FinCat& cod);

}  // namespace dlens
