#include "dlens/symlens.hpp"

#include <functional>
#include <map>
#include <tuple>

namespace dlens {

void check_symlens(const SymmetricLens& s) {
  check_mealy(s.forward);
  check_mealy(s.backward);
  const MealyMorphism& f = s.forward;
  const MealyMorphism& b = s.backward;
  if (!(f.input() == b.output()) || !(f.output() == b.input())) {
    throw Error(ErrorCode::AnchorMismatch, "forward and backward have different boundaries");
  }
  if (f.states() != b.states()) {
    throw Error(ErrorCode::AnchorMismatch, "forward and backward have different states");
  }
  for (int x = 0; x < f.state_count(); ++x) {
    const bool a_ok = f.input().object_name(f.g0(x)) == b.output().object_name(b.f0(x));
    const bool b_ok = f.output().object_name(f.f0(x)) == b.input().object_name(b.g0(x));
    if (!a_ok || !b_ok) {
      throw Error(ErrorCode::AnchorMismatch, "anchors disagree", f.state_name(x));
    }
  }
}

SymmetricLens symlens_validate(const MealyMorphism& forward, const MealyMorphism& backward) {
  check_mealy(forward);
  check_mealy(backward);
  if (forward.state_count() != backward.state_count()) {
    throw Error(ErrorCode::AnchorMismatch, "forward and backward have different states");
  }
  for (const auto& x : forward.states()) {
    if (!backward.find_state(x)) {
      throw Error(ErrorCode::AnchorMismatch, "state missing from backward", x);
    }
  }
  SymmetricLens s{forward, permute_states(backward, forward.states())};
  check_symlens(s);
  return s;
}

SymmetricLens dagger(const SymmetricLens& s) { return {s.backward, s.forward}; }

SymmetricLens embed_lens_sym(const Lens& l) {
  return {mealy_from_functor(l.get), mealy_from_cofunctor(l.put)};
}

SymmetricLens identity_symlens(const FinCat& a) { return embed_lens_sym(identity_lens(a)); }

SymComposite symlens_hcompose_detailed(const SymmetricLens& s1, const SymmetricLens& s2) {
  const MealyComposite fwd = compose_mealy_detailed(s1.forward, s2.forward);
  const MealyComposite bwd = compose_mealy_detailed(s2.backward, s1.backward);
  std::vector<std::string> names;
  for (auto [y, x] : bwd.parts) names.push_back(pair_name(s1.state_name(x), s2.state_name(y)));
  const MealyMorphism backward =
      permute_states(rename_states(bwd.mealy, names), fwd.mealy.states());
  return {{fwd.mealy, backward}, fwd.parts};
}

SymmetricLens symlens_hcompose(const SymmetricLens& s1, const SymmetricLens& s2) {
  return symlens_hcompose_detailed(s1, s2).lens;
}

Verdict symlens_2cell(const std::vector<int>& k, const SymmetricLens& src,
                      const SymmetricLens& tgt) {
  Verdict v = check_mealy_map(k, src.forward, tgt.forward);
  if (!v) return Verdict::fail("forward: " + v.witness);
  v = check_mealy_map(k, src.backward, tgt.backward);
  if (!v) return Verdict::fail("backward: " + v.witness);
  return v;
}

bool is_invertible_sym_cell(const std::vector<int>& k, const SymmetricLens& src,
                            const SymmetricLens& tgt) {
  if (src.state_count() != tgt.state_count() || !symlens_2cell(k, src, tgt)) return false;
  std::vector<int> inv(tgt.state_count(), -1);
  for (int x = 0; x < src.state_count(); ++x) {
    if (inv[k[x]] >= 0) return false;
    inv[k[x]] = x;
  }
  return static_cast<bool>(symlens_2cell(inv, tgt, src));
}

namespace {

class StateMapSearch {
 public:
  StateMapSearch(const SymmetricLens& src, const SymmetricLens& tgt, bool injective,
                 std::function<bool(const std::vector<int>&)> visit)
      : src_(src), tgt_(tgt), injective_(injective), visit_(std::move(visit)) {
    map_.assign(src.state_count(), -1);
    used_.assign(tgt.state_count(), 0);
  }

  void run() { assign(0); }

 private:
  // All constraints between x and already assigned states hold.
  bool locally_ok(int x) const {
    for (const MealyMorphism* m : {&src_.forward, &src_.backward}) {
      const MealyMorphism& t = m == &src_.forward ? tgt_.forward : tgt_.backward;
      const FinCat& in = m->input();
      for (int u : in.out(m->g0(x))) {
        const int v = transport_morphism(in, t.input(), u);
        const int q = m->next(x, u);
        const int expected = t.next(map_[x], v);
        if (map_[q] >= 0 && map_[q] != expected) return false;
        if (transport_morphism(m->output(), t.output(), m->out(x, u)) != t.out(map_[x], v)) {
          return false;
        }
      }
      for (int y = 0; y < m->state_count(); ++y) {
        if (map_[y] < 0 || y == x) continue;
        for (int u : in.out(m->g0(y))) {
          if (m->next(y, u) != x) continue;
          if (t.next(map_[y], transport_morphism(in, t.input(), u)) != map_[x]) return false;
        }
      }
    }
    return true;
  }

  bool assign(int x) {
    if (x == src_.state_count()) return visit_(map_);
    const MealyMorphism& f = src_.forward;
    const MealyMorphism& tf = tgt_.forward;
    for (int y = 0; y < tgt_.state_count(); ++y) {
      if (injective_ && used_[y]) continue;
      if (transport_object(f.input(), tf.input(), f.g0(x)) != tf.g0(y) ||
          transport_object(f.output(), tf.output(), f.f0(x)) != tf.f0(y)) {
        continue;
      }
      map_[x] = y;
      used_[y] = 1;
      bool go_on = true;
      if (locally_ok(x)) go_on = assign(x + 1);
      used_[y] = 0;
      map_[x] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const SymmetricLens& src_;
  const SymmetricLens& tgt_;
  bool injective_;
  std::function<bool(const std::vector<int>&)> visit_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_sym_2cells(const SymmetricLens& src,
                                                   const SymmetricLens& tgt) {
  std::vector<std::vector<int>> out;
  if (!(src.a() == tgt.a()) || !(src.b() == tgt.b())) return out;
  StateMapSearch(src, tgt, false, [&](const std::vector<int>& k) {
    if (symlens_2cell(k, src, tgt)) out.push_back(k);
    return true;
  }).run();
  return out;
}

std::optional<std::vector<int>> find_sym_isomorphism(const SymmetricLens& src,
                                                     const SymmetricLens& tgt) {
  if (!(src.a() == tgt.a()) || !(src.b() == tgt.b()) ||
      src.state_count() != tgt.state_count()) {
    return std::nullopt;
  }
  std::optional<std::vector<int>> found;
  StateMapSearch(src, tgt, true, [&](const std::vector<int>& k) {
    if (is_invertible_sym_cell(k, src, tgt)) found = k;
    return !found;
  }).run();
  return found;
}

std::vector<int> symlens_associator(const SymmetricLens& s1, const SymmetricLens& s2,
                                    const SymmetricLens& s3) {
  const SymComposite c12 = symlens_hcompose_detailed(s1, s2);
  const SymComposite left = symlens_hcompose_detailed(c12.lens, s3);
  const SymComposite c23 = symlens_hcompose_detailed(s2, s3);
  const SymComposite right = symlens_hcompose_detailed(s1, c23.lens);
  std::map<std::tuple<int, int, int>, int> index;
  for (int k = 0; k < right.lens.state_count(); ++k) {
    const auto [x, yz] = right.parts[k];
    const auto [y, z] = c23.parts[yz];
    index[{x, y, z}] = k;
  }
  std::vector<int> out(left.lens.state_count());
  for (int k = 0; k < left.lens.state_count(); ++k) {
    const auto [xy, z] = left.parts[k];
    const auto [x, y] = c12.parts[xy];
    out[k] = index.at({x, y, z});
  }
  return out;
}

std::vector<int> symlens_left_unitor(const SymmetricLens& s) {
  const SymComposite c = symlens_hcompose_detailed(identity_symlens(s.a()), s);
  std::vector<int> out;
  for (auto [a, x] : c.parts) out.push_back(x);
  return out;
}

std::vector<int> symlens_right_unitor(const SymmetricLens& s) {
  const SymComposite c = symlens_hcompose_detailed(s, identity_symlens(s.b()));
  std::vector<int> out;
  for (auto [x, b] : c.parts) out.push_back(x);
  return out;
}

}  // namespace dlens
