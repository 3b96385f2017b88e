#include "dlens/functor.hpp"

namespace dlens {

Functor::Functor(FinCat dom, FinCat cod, std::vector<int> on_objects,
                 std::vector<int> on_morphisms)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      on_objects_(std::move(on_objects)),
      on_morphisms_(std::move(on_morphisms)) {}

bool operator==(const Functor& a, const Functor& b) {
  if (!(a.dom_ == b.dom_) || !(a.cod_ == b.cod_)) return false;
  const bool same_order = a.dom_.shares_data(b.dom_) && a.cod_.shares_data(b.cod_);
  if (same_order) {
    return a.on_objects_ == b.on_objects_ && a.on_morphisms_ == b.on_morphisms_;
  }
  for (int i = 0; i < a.dom_.object_count(); ++i) {
    const int j = b.dom_.object(a.dom_.object_name(i));
    if (a.cod_.object_name(a.obj(i)) != b.cod_.object_name(b.obj(j))) return false;
  }
  for (int i = 0; i < a.dom_.morphism_count(); ++i) {
    const int j = b.dom_.morphism(a.dom_.morphism_name(i));
    if (a.cod_.morphism_name(a.mor(i)) != b.cod_.morphism_name(b.mor(j))) {
      return false;
    }
  }
  return true;
}

Verdict check_functor_laws(const Functor& f) {
  const FinCat& d = f.dom();
  const FinCat& c = f.cod();
  if (static_cast<int>(f.object_map().size()) != d.object_count() ||
      static_cast<int>(f.morphism_map().size()) != d.morphism_count()) {
    return Verdict::fail("assignment not total");
  }
  for (int a = 0; a < d.object_count(); ++a) {
    if (f.obj(a) < 0 || f.obj(a) >= c.object_count()) {
      return Verdict::fail("object " + d.object_name(a) + " unassigned");
    }
  }
  for (int m = 0; m < d.morphism_count(); ++m) {
    const int fm = f.mor(m);
    if (fm < 0 || fm >= c.morphism_count()) {
      return Verdict::fail("morphism " + d.morphism_name(m) + " unassigned");
    }
    if (c.src(fm) != f.obj(d.src(m))) {
      return Verdict::fail("source not preserved at " + d.morphism_name(m));
    }
    if (c.tgt(fm) != f.obj(d.tgt(m))) {
      return Verdict::fail("target not preserved at " + d.morphism_name(m));
    }
  }
  for (int a = 0; a < d.object_count(); ++a) {
    if (f.mor(d.identity(a)) != c.identity(f.obj(a))) {
      return Verdict::fail("identity not preserved at " + d.object_name(a));
    }
  }
  for (int g = 0; g < d.morphism_count(); ++g) {
    for (int h : d.into(d.src(g))) {
      if (f.mor(d.compose(g, h)) != c.compose(f.mor(g), f.mor(h))) {
        return Verdict::fail("composition not preserved at (" +
                             d.morphism_name(g) + ", " + d.morphism_name(h) +
                             ")");
      }
    }
  }
  return Verdict::pass();
}

Functor validate_functor(const RawFunctor& raw, const FinCat& dom,
                         const FinCat& cod) {
  std::vector<int> objs(dom.object_count(), -1);
  std::vector<int> mors(dom.morphism_count(), -1);
  for (const auto& [k, v] : raw.on_objects) objs[dom.object(k)] = cod.object(v);
  for (const auto& [k, v] : raw.on_morphisms) {
    mors[dom.morphism(k)] = cod.morphism(v);
  }
  for (int a = 0; a < dom.object_count(); ++a) {
    if (objs[a] < 0) {
      throw Error(ErrorCode::Incomplete, "object map not total",
                  dom.object_name(a));
    }
  }
  for (int m = 0; m < dom.morphism_count(); ++m) {
    if (mors[m] < 0) {
      throw Error(ErrorCode::Incomplete, "morphism map not total",
                  dom.morphism_name(m));
    }
  }
  Functor f(dom, cod, std::move(objs), std::move(mors));
  if (auto v = check_functor_laws(f); !v) {
    throw Error(ErrorCode::NotAFunctor, "functor law fails", v.witness);
  }
  return f;
}

RawFunctor to_raw(const Functor& f) {
  RawFunctor raw;
  for (int a = 0; a < f.dom().object_count(); ++a) {
    raw.on_objects[f.dom().object_name(a)] = f.cod().object_name(f.obj(a));
  }
  for (int m = 0; m < f.dom().morphism_count(); ++m) {
    raw.on_morphisms[f.dom().morphism_name(m)] = f.cod().morphism_name(f.mor(m));
  }
  return raw;
}

Functor identity_functor(const FinCat& c) {
  std::vector<int> objs(c.object_count());
  std::vector<int> mors(c.morphism_count());
  for (int i = 0; i < c.object_count(); ++i) objs[i] = i;
  for (int i = 0; i < c.morphism_count(); ++i) mors[i] = i;
  return Functor(c, c, std::move(objs), std::move(mors));
}

Functor retarget(const Functor& f, const FinCat& dom, const FinCat& cod) {
  if (f.dom().shares_data(dom) && f.cod().shares_data(cod)) return f;
  if (!(f.dom() == dom) || !(f.cod() == cod)) {
    throw Error(ErrorCode::PreconditionViolated, "retarget onto a different category");
  }
  std::vector<int> objs(dom.object_count()), mors(dom.morphism_count());
  for (int a = 0; a < dom.object_count(); ++a) {
    objs[a] = transport_object(f.cod(), cod, f.obj(transport_object(dom, f.dom(), a)));
  }
  for (int m = 0; m < dom.morphism_count(); ++m) {
    mors[m] = transport_morphism(f.cod(), cod, f.mor(transport_morphism(dom, f.dom(), m)));
  }
  return Functor(dom, cod, std::move(objs), std::move(mors));
}

Functor compose(const Functor& g, const Functor& f) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorCode::PreconditionViolated,
                "functor composite with mismatched middle category");
  }
  const bool aligned = f.cod().shares_data(g.dom());
  std::vector<int> objs(f.dom().object_count());
  std::vector<int> mors(f.dom().morphism_count());
  for (int a = 0; a < f.dom().object_count(); ++a) {
    const int mid = aligned ? f.obj(a) : g.dom().object(f.cod().object_name(f.obj(a)));
    objs[a] = g.obj(mid);
  }
  for (int m = 0; m < f.dom().morphism_count(); ++m) {
    const int mid =
        aligned ? f.mor(m) : g.dom().morphism(f.cod().morphism_name(f.mor(m)));
    mors[m] = g.mor(mid);
  }
  return Functor(f.dom(), g.cod(), std::move(objs), std::move(mors));
}

bool is_identity_on_objects(const Functor& f) {
  if (f.dom().object_count() != f.cod().object_count()) return false;
  for (int a = 0; a < f.dom().object_count(); ++a) {
    if (f.dom().object_name(a) != f.cod().object_name(f.obj(a))) return false;
  }
  return true;
}

bool is_isomorphism(const Functor& f) {
  if (f.dom().object_count() != f.cod().object_count() ||
      f.dom().morphism_count() != f.cod().morphism_count()) {
    return false;
  }
  std::vector<char> seen(f.cod().morphism_count(), 0);
  for (int m = 0; m < f.dom().morphism_count(); ++m) {
    if (seen[f.mor(m)]) return false;
    seen[f.mor(m)] = 1;
  }
  std::vector<char> seen_obj(f.cod().object_count(), 0);
  for (int a = 0; a < f.dom().object_count(); ++a) {
    if (seen_obj[f.obj(a)]) return false;
    seen_obj[f.obj(a)] = 1;
  }
  return true;
}

Functor inverse(const Functor& f) {
  if (!is_isomorphism(f)) {
    throw Error(ErrorCode::PreconditionViolated, "functor is not invertible");
  }
  std::vector<int> objs(f.cod().object_count());
  std::vector<int> mors(f.cod().morphism_count());
  for (int a = 0; a < f.dom().object_count(); ++a) objs[f.obj(a)] = a;
  for (int m = 0; m < f.dom().morphism_count(); ++m) mors[f.mor(m)] = m;
  return Functor(f.cod(), f.dom(), std::move(objs), std::move(mors));
}

Functor discrete_inclusion(const FinCat& c) {
  FinCat d = discrete_category(c.table().objects);
  std::vector<int> objs(c.object_count());
  std::vector<int> mors(c.object_count());
  for (int a = 0; a < c.object_count(); ++a) {
    objs[a] = a;
    mors[a] = c.identity(a);
  }
  return Functor(std::move(d), c, std::move(objs), std::move(mors));
}

namespace {

std::optional<std::string> opfibration_failure(const Functor& f) {
  const FinCat& d = f.dom();
  const FinCat& c = f.cod();
  for (int a = 0; a < d.object_count(); ++a) {
    for (int u : c.out(f.obj(a))) {
      int lifts = 0;
      for (int w : d.out(a)) lifts += f.mor(w) == u ? 1 : 0;
      if (lifts != 1) {
        return "(" + d.object_name(a) + ", " + c.morphism_name(u) + ") has " +
               std::to_string(lifts) + " lifts";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> fully_faithful_failure(const Functor& f) {
  const FinCat& d = f.dom();
  const FinCat& c = f.cod();
  for (int a = 0; a < d.object_count(); ++a) {
    for (int b = 0; b < d.object_count(); ++b) {
      for (int u : c.hom(f.obj(a), f.obj(b))) {
        int pre = 0;
        for (int w : d.hom(a, b)) pre += f.mor(w) == u ? 1 : 0;
        if (pre != 1) {
          return "(" + d.object_name(a) + ", " + d.object_name(b) + ", " +
                 c.morphism_name(u) + ") has " + std::to_string(pre) +
                 " preimages";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FunctorClass classify_functor(const Functor& f) {
  FunctorClass k;
  k.opfibration_witness = opfibration_failure(f);
  k.is_discrete_opfibration = !k.opfibration_witness;
  k.fully_faithful_witness = fully_faithful_failure(f);
  k.is_fully_faithful = !k.fully_faithful_witness;

  const FinCat& d = f.dom();
  const FinCat& c = f.cod();
  std::vector<int> hit(c.object_count(), -1);
  for (int a = 0; a < d.object_count(); ++a) {
    if (hit[f.obj(a)] >= 0 && !k.bijection_witness) {
      k.bijection_witness = "objects " + d.object_name(hit[f.obj(a)]) + " and " +
                            d.object_name(a) + " collide";
    }
    hit[f.obj(a)] = a;
  }
  for (int b = 0; b < c.object_count() && !k.bijection_witness; ++b) {
    if (hit[b] < 0) k.bijection_witness = "object " + c.object_name(b) + " not hit";
  }
  k.is_bijective_on_objects = !k.bijection_witness;
  return k;
}

bool is_discrete_opfibration(const Functor& f) { return !opfibration_failure(f); }
bool is_fully_faithful(const Functor& f) { return !fully_faithful_failure(f); }

int unique_lift(const Functor& f, int a, int u) {
  int found = -1;
  for (int w : f.dom().out(a)) {
    if (f.mor(w) == u) {
      if (found >= 0) return -1;
      found = w;
    }
  }
  return found;
}

}  // namespace dlens
