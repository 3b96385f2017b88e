#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dlens/functor.hpp"

namespace dlens {

/// Category of elements of a transition system over `base`: objects are the
/// named states, morphisms (x, u): x -> next(x, u) for u out of anchor(x).
/// The projection (x, u) |-> u is a discrete opfibration whenever `next`
/// is an action.
struct Elements {
  FinCat category;
  Functor projection;
  /// Morphism index of (x, u), addressed as [x * |Mor base| + u]; -1 when
  /// u does not start at anchor(x).
  std::vector<int> index;

  int element(int x, int u, int base_morphisms) const {
    return index[static_cast<std::size_t>(x) * base_morphisms + u];
  }
};

Elements elements_category(const FinCat& base,
                           const std::vector<std::string>& states,
                           const std::vector<int>& anchor,
                           const std::function<int(int, int)>& next);

}  // namespace dlens
