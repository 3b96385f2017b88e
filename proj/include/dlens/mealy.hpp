#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlens/cofunctor.hpp"
#include "dlens/functor.hpp"

namespace dlens {

/// A Mealy morphism input ↛ output: named states x with anchors
/// g0(x) in input and f0(x) in output, and for each u: g0(x) -> a a next
/// state q(x, u) over a with output f(x, u): f0(x) -> f0(q(x, u)).
class MealyMorphism {
 public:
  MealyMorphism() = default;
  /// Unchecked; see check_mealy.
  MealyMorphism(FinCat input, FinCat output, std::vector<std::string> states,
                std::vector<int> g0, std::vector<int> f0, std::vector<int> next,
                std::vector<int> out);

  const FinCat& input() const { return input_; }
  const FinCat& output() const { return output_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  const std::string& state_name(int x) const { return states_[x]; }
  const std::vector<std::string>& states() const { return states_; }
  std::optional<int> find_state(const std::string& name) const;
  /// Throws UnknownName.
  int state(const std::string& name) const;

  int g0(int x) const { return g0_[x]; }
  int f0(int x) const { return f0_[x]; }
  /// -1 when u does not start at g0(x).
  int next(int x, int u) const { return next_[slot(x, u)]; }
  int out(int x, int u) const { return out_[slot(x, u)]; }
  const std::vector<int>& g0_map() const { return g0_; }
  const std::vector<int>& f0_map() const { return f0_; }

  /// Same categories, same state names, and identical tables by name.
  friend bool operator==(const MealyMorphism& a, const MealyMorphism& b);

 private:
  std::size_t slot(int x, int u) const {
    return static_cast<std::size_t>(x) * input_.morphism_count() + u;
  }

  FinCat input_;
  FinCat output_;
  std::vector<std::string> states_;
  std::map<std::string, int> state_index_;
  std::vector<int> g0_;
  std::vector<int> f0_;
  std::vector<int> next_;
  std::vector<int> out_;
};

struct RawMealy {
  std::vector<std::string> states;
  std::map<std::string, std::string> g0;
  std::map<std::string, std::string> f0;
  /// Quadruples (x, u, q(x, u), f(x, u)).
  std::vector<std::array<std::string, 4>> transitions;
};

/// Throws AxiomViolation (axiom 0 for mistyped entries) or Incomplete.
MealyMorphism check_mealy(const RawMealy& raw, const FinCat& input,
                          const FinCat& output);
void check_mealy(const MealyMorphism& m);
RawMealy to_raw(const MealyMorphism& m);

MealyMorphism identity_mealy(const FinCat& c);
/// States Ob(A), next = target, output = F(u).
MealyMorphism mealy_from_functor(const Functor& f);
/// States Ob(total) of a cofunctor base ↛ total, next = p(a, u),
/// output = lift.
MealyMorphism mealy_from_cofunctor(const Cofunctor& c);

struct MealyComposite {
  MealyMorphism mealy;
  /// Component states (x, y) of each composite state.
  std::vector<std::pair<int, int>> parts;
};

/// first: A ↛ B then second: B ↛ C. States are pairs (x, y) with
/// f0(x) = k0(y), named "(x,y)".
MealyComposite compose_mealy_detailed(const MealyMorphism& first,
                                      const MealyMorphism& second);
MealyMorphism compose_mealy(const MealyMorphism& first, const MealyMorphism& second);

/// Same tables with new state names; throws PreconditionViolated on
/// duplicates or a size mismatch.
MealyMorphism rename_states(const MealyMorphism& m, const std::vector<std::string>& names);

/// Same morphism with its states listed in the given order; throws
/// PreconditionViolated unless `order` is a permutation of the states.
MealyMorphism permute_states(const MealyMorphism& m, const std::vector<std::string>& order);

/// Checks that `h` (indexed by source state) preserves anchors, next states
/// and outputs.
Verdict check_mealy_map(const std::vector<int>& h, const MealyMorphism& src,
                        const MealyMorphism& tgt);

/// Span input <- X -> output with X the category of elements of the
/// transition system; the left leg is a discrete opfibration.
struct MealySpan {
  FinCat apex;
  Functor left;
  Functor right;
};

MealySpan mealy_span_rep(const MealyMorphism& m);
/// Throws ShapeError unless the left leg is a discrete opfibration.
MealyMorphism span_to_mealy(const MealySpan& s);

}  // namespace dlens
