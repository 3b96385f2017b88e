#include "dlens/search.hpp"

#include <algorithm>

namespace dlens {

namespace {

class Enumerator {
 public:
  Enumerator(const FinCat& dom, const FinCat& cod, const FunctorSearch& k,
             const std::function<bool(const Functor&)>& visit)
      : dom_(dom), cod_(cod), k_(k), visit_(visit) {
    for (int m = 0; m < dom.morphism_count(); ++m) {
      if (!dom.is_identity(m)) order_.push_back(m);
    }
    // Pairs (g, f) of non-identity morphisms, grouped by composite.
    decompositions_.resize(dom.morphism_count());
    for (int g : order_) {
      for (int f : dom.into(dom.src(g))) {
        if (dom.is_identity(f)) continue;
        decompositions_[dom.compose(g, f)].emplace_back(g, f);
      }
    }
    objs_.assign(dom.object_count(), -1);
    mors_.assign(dom.morphism_count(), -1);
    obj_used_.assign(cod.object_count(), 0);
    mor_used_.assign(cod.morphism_count(), 0);
  }

  void run() { assign_object(0); }

 private:
  bool assign_object(int c) {
    if (c == dom_.object_count()) {
      for (int a = 0; a < dom_.object_count(); ++a) {
        const int id = cod_.identity(objs_[a]);
        if (k_.morphism_ok && !k_.morphism_ok(dom_.identity(a), id)) return true;
      }
      for (int a = 0; a < dom_.object_count(); ++a) {
        const int id = cod_.identity(objs_[a]);
        mors_[dom_.identity(a)] = id;
        mor_used_[id] = 1;
      }
      const bool go_on = assign_morphism(0);
      for (int a = 0; a < dom_.object_count(); ++a) {
        mor_used_[cod_.identity(objs_[a])] = 0;
        mors_[dom_.identity(a)] = -1;
      }
      return go_on;
    }
    std::vector<int> candidates(cod_.object_count());
    for (int d = 0; d < cod_.object_count(); ++d) candidates[d] = d;
    if (k_.shuffle) k_.shuffle(candidates);
    for (int d : candidates) {
      if (k_.injective && obj_used_[d]) continue;
      if (k_.object_ok && !k_.object_ok(c, d)) continue;
      objs_[c] = d;
      obj_used_[d] = 1;
      const bool go_on = assign_object(c + 1);
      obj_used_[d] = 0;
      objs_[c] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  bool consistent(int w) const {
    // Every decomposition touching w with all three parts assigned.
    for (const auto& [g, f] : decompositions_[w]) {
      if (mors_[g] >= 0 && mors_[f] >= 0 &&
          cod_.compose(mors_[g], mors_[f]) != mors_[w]) {
        return false;
      }
    }
    for (int f : dom_.into(dom_.src(w))) {
      if (mors_[f] < 0) continue;
      const int wf = dom_.compose(w, f);
      if (mors_[wf] >= 0 && cod_.compose(mors_[w], mors_[f]) != mors_[wf]) return false;
    }
    for (int g : dom_.out(dom_.tgt(w))) {
      if (mors_[g] < 0) continue;
      const int gw = dom_.compose(g, w);
      if (mors_[gw] >= 0 && cod_.compose(mors_[g], mors_[w]) != mors_[gw]) return false;
    }
    return true;
  }

  bool assign_morphism(std::size_t i) {
    if (i == order_.size()) {
      return visit_(Functor(dom_, cod_, objs_, mors_));
    }
    const int w = order_[i];
    // A composite of assigned morphisms is forced.
    int forced = -1;
    for (const auto& [g, f] : decompositions_[w]) {
      if (mors_[g] >= 0 && mors_[f] >= 0) {
        forced = cod_.compose(mors_[g], mors_[f]);
        break;
      }
    }
    auto try_value = [&](int v) {
      if (k_.injective && mor_used_[v]) return true;
      if (k_.morphism_ok && !k_.morphism_ok(w, v)) return true;
      mors_[w] = v;
      bool go_on = true;
      if (consistent(w)) {
        mor_used_[v] = 1;
        go_on = assign_morphism(i + 1);
        mor_used_[v] = 0;
      }
      mors_[w] = -1;
      return go_on;
    };
    if (forced >= 0) return try_value(forced);
    const auto hom = cod_.hom(objs_[dom_.src(w)], objs_[dom_.tgt(w)]);
    std::vector<int> candidates(hom.begin(), hom.end());
    if (k_.shuffle) k_.shuffle(candidates);
    for (int v : candidates) {
      if (!try_value(v)) return false;
    }
    return true;
  }

  const FinCat& dom_;
  const FinCat& cod_;
  const FunctorSearch& k_;
  const std::function<bool(const Functor&)>& visit_;
  std::vector<int> order_;
  std::vector<std::vector<std::pair<int, int>>> decompositions_;
  std::vector<int> objs_;
  std::vector<int> mors_;
  std::vector<char> obj_used_;
  std::vector<char> mor_used_;
};

}  // namespace

void for_each_functor(const FinCat& dom, const FinCat& cod,
                      const FunctorSearch& constraints,
                      const std::function<bool(const Functor&)>& visit) {
  if (dom.object_count() > 0 && cod.object_count() == 0) return;
  Enumerator(dom, cod, constraints, visit).run();
}

std::vector<Functor> all_functors(const FinCat& dom, const FinCat& cod,
                                  const FunctorSearch& constraints) {
  std::vector<Functor> out;
  for_each_functor(dom, cod, constraints, [&](const Functor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<Functor> find_isomorphism(const FinCat& dom, const FinCat& cod) {
  if (dom.object_count() != cod.object_count() ||
      dom.morphism_count() != cod.morphism_count()) {
    return std::nullopt;
  }
  // Hom-set sizes must match under the object bijection; prune on that.
  FunctorSearch k;
  k.injective = true;
  k.object_ok = [&](int c, int d) {
    return dom.out(c).size() == cod.out(d).size() &&
           dom.into(c).size() == cod.into(d).size() &&
           dom.hom(c, c).size() == cod.hom(d, d).size();
  };
  std::optional<Functor> found;
  for_each_functor(dom, cod, k, [&](const Functor& f) {
    found = f;
    return false;
  });
  return found;
}

}  // namespace dlens
