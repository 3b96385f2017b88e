#pragma once

#include <array>
#include <string>
#include <vector>

#include "dlens/fincat.hpp"

namespace dlens {

/// Builds and validates a category from its non-identity morphisms and
/// their composites. Identities are "1_<object>"; composites with
/// identities are filled in.
FinCat make_category(const std::vector<std::string>& objects,
                     const std::vector<MorphismDecl>& morphisms,
                     const std::vector<std::array<std::string, 3>>& composites = {});

namespace fixtures {

/// One object "*", identity only.
FinCat one();
/// 0 -u-> 1.
FinCat two();
/// Discrete on {0, 1}.
FinCat disc2();
/// One object "*" with an idempotent e.
FinCat idem();
/// Parallel pair u, v: 0 -> 1.
FinCat par2();
/// 0 -u-> 1 -v-> 2 with composite w.
FinCat three();
/// i: 0 -> 1, j: 1 -> 0 mutually inverse.
FinCat iso2();
/// One object with an involution s.
FinCat z2();
/// Cospan 0 -u-> 2 <-v- 1.
FinCat cospan();

}  // namespace fixtures
}  // namespace dlens
