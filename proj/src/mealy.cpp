#include "dlens/mealy.hpp"

#include <set>

#include "dlens/elements.hpp"

namespace dlens {

MealyMorphism::MealyMorphism(FinCat input, FinCat output,
                             std::vector<std::string> states, std::vector<int> g0,
                             std::vector<int> f0, std::vector<int> next,
                             std::vector<int> out)
    : input_(std::move(input)),
      output_(std::move(output)),
      states_(std::move(states)),
      g0_(std::move(g0)),
      f0_(std::move(f0)),
      next_(std::move(next)),
      out_(std::move(out)) {
  for (int x = 0; x < state_count(); ++x) {
    if (!state_index_.emplace(states_[x], x).second) {
      throw Error(ErrorCode::PreconditionViolated, "duplicate state name", states_[x]);
    }
  }
}

std::optional<int> MealyMorphism::find_state(const std::string& name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

int MealyMorphism::state(const std::string& name) const {
  if (auto x = find_state(name)) return *x;
  throw Error(ErrorCode::UnknownName, "unknown state", name);
}

bool operator==(const MealyMorphism& a, const MealyMorphism& b) {
  if (!(a.input_ == b.input_) || !(a.output_ == b.output_)) return false;
  if (a.state_count() != b.state_count()) return false;
  const FinCat& in = a.input_;
  const FinCat& out = a.output_;
  for (int x = 0; x < a.state_count(); ++x) {
    const auto y = b.find_state(a.states_[x]);
    if (!y) return false;
    if (in.object_name(a.g0(x)) != b.input_.object_name(b.g0(*y))) return false;
    if (out.object_name(a.f0(x)) != b.output_.object_name(b.f0(*y))) return false;
    for (int u : in.out(a.g0(x))) {
      const int v = b.input_.morphism(in.morphism_name(u));
      if (a.states_[a.next(x, u)] != b.states_[b.next(*y, v)]) return false;
      if (out.morphism_name(a.out(x, u)) != b.output_.morphism_name(b.out(*y, v))) {
        return false;
      }
    }
  }
  return true;
}

void check_mealy(const MealyMorphism& m) {
  const FinCat& a = m.input();
  const FinCat& b = m.output();
  auto fail = [](int axiom, const std::string& w) {
    throw Error(ErrorCode::AxiomViolation,
                "Mealy axiom (" + std::to_string(axiom) + ") fails", w, axiom);
  };
  for (int x = 0; x < m.state_count(); ++x) {
    for (int u : a.out(m.g0(x))) {
      const std::string w = "(" + m.state_name(x) + ", " + a.morphism_name(u) + ")";
      const int q = m.next(x, u);
      const int f = m.out(x, u);
      if (q < 0 || q >= m.state_count() || f < 0) fail(0, w);
      if (b.src(f) != m.f0(x) || b.tgt(f) != m.f0(q)) fail(0, w);
      if (m.g0(q) != a.tgt(u)) fail(1, w);
    }
    const int id = a.identity(m.g0(x));
    if (m.next(x, id) != x || m.out(x, id) != b.identity(m.f0(x))) {
      fail(2, "(" + m.state_name(x) + ", " + a.morphism_name(id) + ")");
    }
  }
  for (int x = 0; x < m.state_count(); ++x) {
    for (int u : a.out(m.g0(x))) {
      const int q = m.next(x, u);
      for (int v : a.out(a.tgt(u))) {
        const int vu = a.compose(v, u);
        if (m.next(x, vu) != m.next(q, v) ||
            m.out(x, vu) != b.compose(m.out(q, v), m.out(x, u))) {
          fail(3, "(" + m.state_name(x) + ", " + a.morphism_name(u) + ", " +
                      a.morphism_name(v) + ")");
        }
      }
    }
  }
}

MealyMorphism check_mealy(const RawMealy& raw, const FinCat& input,
                          const FinCat& output) {
  const int n = static_cast<int>(raw.states.size());
  std::map<std::string, int> index;
  for (int x = 0; x < n; ++x) {
    if (!index.emplace(raw.states[x], x).second) {
      throw Error(ErrorCode::PreconditionViolated, "duplicate state name", raw.states[x]);
    }
  }
  auto state = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorCode::UnknownName, "unknown state", s);
    return it->second;
  };
  std::vector<int> g0(n, -1), f0(n, -1);
  for (const auto& [k, v] : raw.g0) g0[state(k)] = input.object(v);
  for (const auto& [k, v] : raw.f0) f0[state(k)] = output.object(v);
  for (int x = 0; x < n; ++x) {
    if (g0[x] < 0 || f0[x] < 0) {
      throw Error(ErrorCode::Incomplete, "missing anchor", raw.states[x]);
    }
  }
  const std::size_t width = input.morphism_count();
  std::vector<int> next(n * width, -1), out(n * width, -1);
  for (const auto& [xs, us, qs, fs] : raw.transitions) {
    const int x = state(xs);
    const int u = input.morphism(us);
    if (input.src(u) != g0[x]) {
      throw Error(ErrorCode::AxiomViolation, "transition does not start at the anchor",
                  "(" + xs + ", " + us + ")", 0);
    }
    next[x * width + u] = state(qs);
    out[x * width + u] = output.morphism(fs);
  }
  for (int x = 0; x < n; ++x) {
    for (int u : input.out(g0[x])) {
      if (next[x * width + u] < 0) {
        throw Error(ErrorCode::Incomplete, "missing transition",
                    "(" + raw.states[x] + ", " + input.morphism_name(u) + ")");
      }
    }
  }
  MealyMorphism m(input, output, raw.states, std::move(g0), std::move(f0),
                  std::move(next), std::move(out));
  check_mealy(m);
  return m;
}

RawMealy to_raw(const MealyMorphism& m) {
  RawMealy raw;
  raw.states = m.states();
  const FinCat& a = m.input();
  const FinCat& b = m.output();
  for (int x = 0; x < m.state_count(); ++x) {
    raw.g0[m.state_name(x)] = a.object_name(m.g0(x));
    raw.f0[m.state_name(x)] = b.object_name(m.f0(x));
    for (int u : a.out(m.g0(x))) {
      raw.transitions.push_back({m.state_name(x), a.morphism_name(u),
                                 m.state_name(m.next(x, u)),
                                 b.morphism_name(m.out(x, u))});
    }
  }
  return raw;
}

MealyMorphism identity_mealy(const FinCat& c) {
  return mealy_from_functor(identity_functor(c));
}

MealyMorphism mealy_from_functor(const Functor& f) {
  const FinCat& a = f.dom();
  const int n = a.object_count();
  const std::size_t width = a.morphism_count();
  std::vector<int> g0(n), next(n * width, -1), out(n * width, -1);
  for (int x = 0; x < n; ++x) {
    g0[x] = x;
    for (int u : a.out(x)) {
      next[x * width + u] = a.tgt(u);
      out[x * width + u] = f.mor(u);
    }
  }
  return MealyMorphism(a, f.cod(), a.table().objects, std::move(g0), f.object_map(),
                       std::move(next), std::move(out));
}

MealyMorphism mealy_from_cofunctor(const Cofunctor& c) {
  const FinCat& a = c.total();
  const FinCat& b = c.base();
  const int n = a.object_count();
  const std::size_t width = b.morphism_count();
  std::vector<int> f0(n), next(n * width, -1), out(n * width, -1);
  for (int x = 0; x < n; ++x) {
    f0[x] = x;
    for (int u : b.out(c.obj(x))) {
      next[x * width + u] = c.codomain(x, u);
      out[x * width + u] = c.lift(x, u);
    }
  }
  return MealyMorphism(b, a, a.table().objects, c.object_map(), std::move(f0),
                       std::move(next), std::move(out));
}

MealyComposite compose_mealy_detailed(const MealyMorphism& first,
                                      const MealyMorphism& second) {
  if (!(first.output() == second.input())) {
    throw Error(ErrorCode::PreconditionViolated,
                "Mealy composite with mismatched middle category");
  }
  const FinCat& a = first.input();
  const FinCat& b = first.output();
  const FinCat& mid = second.input();
  const bool aligned = b.shares_data(mid);
  auto mid_obj = [&](int o) { return aligned ? o : mid.object(b.object_name(o)); };
  auto mid_mor = [&](int m) { return aligned ? m : mid.morphism(b.morphism_name(m)); };

  MealyComposite result;
  std::vector<std::string> names;
  std::vector<int> g0, f0;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < first.state_count(); ++x) {
    for (int y = 0; y < second.state_count(); ++y) {
      if (mid_obj(first.f0(x)) != second.g0(y)) continue;
      index[{x, y}] = static_cast<int>(names.size());
      result.parts.emplace_back(x, y);
      names.push_back(pair_name(first.state_name(x), second.state_name(y)));
      g0.push_back(first.g0(x));
      f0.push_back(second.f0(y));
    }
  }
  const std::size_t width = a.morphism_count();
  const std::size_t n = names.size();
  std::vector<int> next(n * width, -1), out(n * width, -1);
  for (std::size_t s = 0; s < n; ++s) {
    const auto [x, y] = result.parts[s];
    for (int u : a.out(first.g0(x))) {
      const int fu = mid_mor(first.out(x, u));
      next[s * width + u] = index.at({first.next(x, u), second.next(y, fu)});
      out[s * width + u] = second.out(y, fu);
    }
  }
  result.mealy = MealyMorphism(a, second.output(), std::move(names), std::move(g0),
                               std::move(f0), std::move(next), std::move(out));
  return result;
}

MealyMorphism compose_mealy(const MealyMorphism& first, const MealyMorphism& second) {
  return compose_mealy_detailed(first, second).mealy;
}

MealyMorphism rename_states(const MealyMorphism& m, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != m.state_count()) {
    throw Error(ErrorCode::PreconditionViolated, "state rename has the wrong size");
  }
  const std::size_t width = m.input().morphism_count();
  std::vector<int> next(m.state_count() * width, -1), out(m.state_count() * width, -1);
  for (int x = 0; x < m.state_count(); ++x) {
    for (int u : m.input().out(m.g0(x))) {
      next[x * width + u] = m.next(x, u);
      out[x * width + u] = m.out(x, u);
    }
  }
  return MealyMorphism(m.input(), m.output(), names, m.g0_map(), m.f0_map(),
                       std::move(next), std::move(out));
}

MealyMorphism permute_states(const MealyMorphism& m, const std::vector<std::string>& order) {
  if (static_cast<int>(order.size()) != m.state_count()) {
    throw Error(ErrorCode::PreconditionViolated, "state order has the wrong size");
  }
  const int n = m.state_count();
  std::vector<int> old_of(n), new_of(n, -1);
  for (int k = 0; k < n; ++k) {
    const auto x = m.find_state(order[k]);
    if (!x || new_of[*x] >= 0) {
      throw Error(ErrorCode::PreconditionViolated, "state order is not a permutation", order[k]);
    }
    old_of[k] = *x;
    new_of[*x] = k;
  }
  const std::size_t width = m.input().morphism_count();
  std::vector<int> g0(n), f0(n), next(n * width, -1), out(n * width, -1);
  for (int k = 0; k < n; ++k) {
    const int x = old_of[k];
    g0[k] = m.g0(x);
    f0[k] = m.f0(x);
    for (int u : m.input().out(m.g0(x))) {
      next[k * width + u] = new_of[m.next(x, u)];
      out[k * width + u] = m.out(x, u);
    }
  }
  return MealyMorphism(m.input(), m.output(), order, std::move(g0), std::move(f0),
                       std::move(next), std::move(out));
}

Verdict check_mealy_map(const std::vector<int>& h, const MealyMorphism& src,
                        const MealyMorphism& tgt) {
  if (!(src.input() == tgt.input()) || !(src.output() == tgt.output())) {
    return Verdict::fail("Mealy morphisms have different boundaries");
  }
  if (static_cast<int>(h.size()) != src.state_count()) {
    return Verdict::fail("state map has the wrong size");
  }
  const FinCat& a = src.input();
  const FinCat& b = src.output();
  const bool aligned = a.shares_data(tgt.input()) && b.shares_data(tgt.output());
  auto in_obj = [&](int o) { return aligned ? o : tgt.input().object(a.object_name(o)); };
  auto in_mor = [&](int m) { return aligned ? m : tgt.input().morphism(a.morphism_name(m)); };
  auto out_obj = [&](int o) { return aligned ? o : tgt.output().object(b.object_name(o)); };
  auto out_mor = [&](int m) { return aligned ? m : tgt.output().morphism(b.morphism_name(m)); };
  for (int x = 0; x < src.state_count(); ++x) {
    const int y = h[x];
    if (y < 0 || y >= tgt.state_count()) return Verdict::fail("state " + src.state_name(x) + " unmapped");
    if (tgt.g0(y) != in_obj(src.g0(x)) || tgt.f0(y) != out_obj(src.f0(x))) {
      return Verdict::fail("anchor of " + src.state_name(x));
    }
    for (int u : a.out(src.g0(x))) {
      const int v = in_mor(u);
      if (h[src.next(x, u)] != tgt.next(y, v) || out_mor(src.out(x, u)) != tgt.out(y, v)) {
        return Verdict::fail("(" + src.state_name(x) + ", " + a.morphism_name(u) + ")");
      }
    }
  }
  return Verdict::pass();
}

MealySpan mealy_span_rep(const MealyMorphism& m) {
  const FinCat& a = m.input();
  const FinCat& b = m.output();
  Elements el = elements_category(a, m.states(), m.g0_map(),
                                  [&](int x, int u) { return m.next(x, u); });
  std::vector<int> mors(el.category.morphism_count());
  for (int x = 0; x < m.state_count(); ++x) {
    for (int u : a.out(m.g0(x))) {
      mors[el.element(x, u, a.morphism_count())] = m.out(x, u);
    }
  }
  Functor right(el.category, b, m.f0_map(), std::move(mors));
  return {el.category, std::move(el.projection), std::move(right)};
}

MealyMorphism span_to_mealy(const MealySpan& s) {
  if (!(s.left.dom() == s.right.dom())) {
    throw Error(ErrorCode::ShapeError, "legs do not share the apex");
  }
  const FunctorClass k = classify_functor(s.left);
  if (!k.is_discrete_opfibration) {
    throw Error(ErrorCode::ShapeError, "left leg is not a discrete opfibration",
                k.opfibration_witness.value_or(""));
  }
  const FinCat& x = s.left.dom();
  const FinCat& a = s.left.cod();
  const bool aligned = s.right.dom().shares_data(x);
  auto right_mor = [&](int w) {
    return s.right.mor(aligned ? w : s.right.dom().morphism(x.morphism_name(w)));
  };
  auto right_obj = [&](int o) {
    return s.right.obj(aligned ? o : s.right.dom().object(x.object_name(o)));
  };
  const int n = x.object_count();
  const std::size_t width = a.morphism_count();
  std::vector<int> f0(n), next(n * width, -1), out(n * width, -1);
  for (int o = 0; o < n; ++o) {
    f0[o] = right_obj(o);
    for (int u : a.out(s.left.obj(o))) {
      const int w = unique_lift(s.left, o, u);
      next[o * width + u] = x.tgt(w);
      out[o * width + u] = right_mor(w);
    }
  }
  return MealyMorphism(a, s.right.cod(), x.table().objects, s.left.object_map(),
                       std::move(f0), std::move(next), std::move(out));
}

}  // namespace dlens
