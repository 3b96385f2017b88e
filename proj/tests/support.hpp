#pragma once

#include <functional>

#include "doctest.h"
#include "dlens/error.hpp"
#include "dlens/fixtures.hpp"
#include "dlens/functor.hpp"
#include "dlens/testgen.hpp"

namespace support {

inline dlens::Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const dlens::Error& e) {
    return e;
  }
  FAIL("expected an error");
  return dlens::Error(dlens::ErrorCode::ParseError, "unreachable");
}

inline dlens::ErrorCode code_of(const std::function<void()>& f) { return error_of(f).code(); }

inline dlens::GenConfig small(std::uint64_t seed) {
  dlens::GenConfig cfg;
  cfg.seed = seed;
  cfg.max_objects = 3;
  cfg.max_generators = 3;
  cfg.morphism_cap = 12;
  cfg.max_states = 5;
  return cfg;
}

inline dlens::FinCat random_category(std::uint64_t seed) {
  return dlens::gen_category(small(seed * 7919 + 1));
}

inline dlens::Functor functor_by_names(const dlens::FinCat& dom, const dlens::FinCat& cod,
                                       const std::map<std::string, std::string>& objs,
                                       const std::map<std::string, std::string>& mors) {
  return dlens::validate_functor({objs, mors}, dom, cod);
}

/// The lens TWO ⇌ ONE whose put lifts identities to identities.
inline dlens::Functor two_to_one() {
  namespace fx = dlens::fixtures;
  return functor_by_names(fx::two(), fx::one(), {{"0", "*"}, {"1", "*"}},
                          {{"1_0", "1_*"}, {"1_1", "1_*"}, {"u", "1_*"}});
}

}  // namespace support
