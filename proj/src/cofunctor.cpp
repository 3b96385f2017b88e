#include "dlens/cofunctor.hpp"

#include "dlens/elements.hpp"

namespace dlens {

Cofunctor::Cofunctor(FinCat total, FinCat base, std::vector<int> obj,
                     std::vector<int> lift)
    : total_(std::move(total)),
      base_(std::move(base)),
      obj_(std::move(obj)),
      lift_(std::move(lift)) {}

bool operator==(const Cofunctor& a, const Cofunctor& b) {
  if (!(a.total_ == b.total_) || !(a.base_ == b.base_)) return false;
  if (a.total_.shares_data(b.total_) && a.base_.shares_data(b.base_)) {
    return a.obj_ == b.obj_ && a.lift_ == b.lift_;
  }
  const FinCat& ta = a.total_;
  const FinCat& ba = a.base_;
  for (int x = 0; x < ta.object_count(); ++x) {
    const int y = b.total_.object(ta.object_name(x));
    if (ba.object_name(a.obj(x)) != b.base_.object_name(b.obj(y))) return false;
    for (int u : ba.out(a.obj(x))) {
      const int v = b.base_.morphism(ba.morphism_name(u));
      if (ta.morphism_name(a.lift(x, u)) != b.total_.morphism_name(b.lift(y, v))) {
        return false;
      }
    }
  }
  return true;
}

void check_cofunctor(const Cofunctor& c) {
  const FinCat& a = c.total();
  const FinCat& b = c.base();
  auto fail = [](int axiom, const std::string& w) {
    throw Error(ErrorCode::AxiomViolation,
                "cofunctor axiom (" + std::to_string(axiom) + ") fails", w, axiom);
  };
  for (int x = 0; x < a.object_count(); ++x) {
    for (int u : b.out(c.obj(x))) {
      const int l = c.lift(x, u);
      const std::string w = "(" + a.object_name(x) + ", " + b.morphism_name(u) + ")";
      if (l < 0 || a.src(l) != x) fail(0, w);
      if (c.obj(a.tgt(l)) != b.tgt(u)) fail(1, w);
    }
    const int id = b.identity(c.obj(x));
    if (c.lift(x, id) != a.identity(x)) fail(2, "(" + a.object_name(x) + ", " + b.morphism_name(id) + ")");
  }
  for (int x = 0; x < a.object_count(); ++x) {
    for (int u : b.out(c.obj(x))) {
      const int px = c.codomain(x, u);
      for (int v : b.out(b.tgt(u))) {
        if (c.lift(x, b.compose(v, u)) != a.compose(c.lift(px, v), c.lift(x, u))) {
          fail(3, "(" + a.object_name(x) + ", " + b.morphism_name(u) + ", " +
                      b.morphism_name(v) + ")");
        }
      }
    }
  }
}

Cofunctor check_cofunctor(const RawCofunctor& raw, const FinCat& total,
                          const FinCat& base) {
  std::vector<int> obj(total.object_count(), -1);
  for (const auto& [k, v] : raw.obj_assign) obj[total.object(k)] = base.object(v);
  for (int x = 0; x < total.object_count(); ++x) {
    if (obj[x] < 0) {
      throw Error(ErrorCode::Incomplete, "object assignment not total",
                  total.object_name(x));
    }
  }
  std::vector<int> lift(static_cast<std::size_t>(total.object_count()) * base.morphism_count(), -1);
  for (const auto& [a, u, l] : raw.lifts) {
    const int x = total.object(a);
    const int m = base.morphism(u);
    const int lm = total.morphism(l);
    if (base.src(m) != obj[x] || total.src(lm) != x) {
      throw Error(ErrorCode::AxiomViolation, "lift entry is mistyped",
                  "(" + a + ", " + u + ") -> " + l, 0);
    }
    lift[static_cast<std::size_t>(x) * base.morphism_count() + m] = lm;
  }
  for (int x = 0; x < total.object_count(); ++x) {
    for (int u : base.out(obj[x])) {
      if (lift[static_cast<std::size_t>(x) * base.morphism_count() + u] < 0) {
        throw Error(ErrorCode::Incomplete, "missing lift",
                    "(" + total.object_name(x) + ", " + base.morphism_name(u) + ")");
      }
    }
  }
  Cofunctor c(total, base, std::move(obj), std::move(lift));
  check_cofunctor(c);
  return c;
}

RawCofunctor to_raw(const Cofunctor& c) {
  RawCofunctor raw;
  const FinCat& a = c.total();
  const FinCat& b = c.base();
  for (int x = 0; x < a.object_count(); ++x) {
    raw.obj_assign[a.object_name(x)] = b.object_name(c.obj(x));
    for (int u : b.out(c.obj(x))) {
      raw.lifts.push_back({a.object_name(x), b.morphism_name(u),
                           a.morphism_name(c.lift(x, u))});
    }
  }
  return raw;
}

Cofunctor identity_cofunctor(const FinCat& c) {
  return cofunctor_from_opfibration(identity_functor(c));
}

Cofunctor cofunctor_from_opfibration(const Functor& f) {
  const FinCat& a = f.dom();
  const FinCat& b = f.cod();
  std::vector<int> lift(static_cast<std::size_t>(a.object_count()) * b.morphism_count(), -1);
  for (int x = 0; x < a.object_count(); ++x) {
    for (int u : b.out(f.obj(x))) {
      const int l = unique_lift(f, x, u);
      if (l < 0) {
        throw Error(ErrorCode::ShapeError, "functor is not a discrete opfibration",
                    "(" + a.object_name(x) + ", " + b.morphism_name(u) + ")");
      }
      lift[static_cast<std::size_t>(x) * b.morphism_count() + u] = l;
    }
  }
  return Cofunctor(a, b, f.object_map(), std::move(lift));
}

Cofunctor compose_cofunctors(const Cofunctor& g, const Cofunctor& p) {
  if (!(g.total() == p.base())) {
    throw Error(ErrorCode::PreconditionViolated,
                "cofunctor composite with mismatched middle category");
  }
  const FinCat& a = p.total();
  const FinCat& b = p.base();
  const FinCat& c = g.base();
  const bool aligned = g.total().shares_data(b);
  auto mid_obj = [&](int y) { return aligned ? y : g.total().object(b.object_name(y)); };
  auto mid_mor = [&](int m) { return aligned ? m : b.morphism(g.total().morphism_name(m)); };
  std::vector<int> obj(a.object_count());
  std::vector<int> lift(static_cast<std::size_t>(a.object_count()) * c.morphism_count(), -1);
  for (int x = 0; x < a.object_count(); ++x) {
    const int y = mid_obj(p.obj(x));
    obj[x] = g.obj(y);
    for (int u : c.out(obj[x])) {
      lift[static_cast<std::size_t>(x) * c.morphism_count() + u] =
          p.lift(x, mid_mor(g.lift(y, u)));
    }
  }
  return Cofunctor(a, c, std::move(obj), std::move(lift));
}

CofunctorSpan cofunctor_span_rep(const Cofunctor& c) {
  const FinCat& a = c.total();
  const FinCat& b = c.base();
  Elements el = elements_category(b, a.table().objects, c.object_map(),
                                  [&](int x, int u) { return c.codomain(x, u); });
  std::vector<int> objs(a.object_count());
  for (int x = 0; x < a.object_count(); ++x) objs[x] = x;
  std::vector<int> mors(el.category.morphism_count());
  for (int x = 0; x < a.object_count(); ++x) {
    for (int u : b.out(c.obj(x))) {
      mors[el.element(x, u, b.morphism_count())] = c.lift(x, u);
    }
  }
  Functor right(el.category, a, std::move(objs), std::move(mors));
  return {el.category, std::move(el.projection), std::move(right)};
}

Cofunctor span_to_cofunctor(const CofunctorSpan& s) {
  if (!(s.left.dom() == s.apex) || !(s.right.dom() == s.apex)) {
    throw Error(ErrorCode::ShapeError, "legs do not share the apex");
  }
  const FunctorClass kl = classify_functor(s.left);
  if (!kl.is_discrete_opfibration) {
    throw Error(ErrorCode::ShapeError, "left leg is not a discrete opfibration",
                kl.opfibration_witness.value_or(""));
  }
  if (!is_identity_on_objects(s.right)) {
    throw Error(ErrorCode::ShapeError, "right leg is not identity-on-objects");
  }
  const FinCat& lam = s.left.dom();
  const FinCat& a = s.right.cod();
  const FinCat& b = s.left.cod();
  std::vector<int> obj(a.object_count());
  std::vector<int> lift(static_cast<std::size_t>(a.object_count()) * b.morphism_count(), -1);
  for (int x = 0; x < a.object_count(); ++x) {
    const int lx = lam.object(a.object_name(x));
    obj[x] = s.left.obj(lx);
    for (int u : b.out(obj[x])) {
      const int w = unique_lift(s.left, lx, u);
      lift[static_cast<std::size_t>(x) * b.morphism_count() + u] =
          s.right.dom().shares_data(lam) ? s.right.mor(w)
                                         : s.right.mor(s.right.dom().morphism(lam.morphism_name(w)));
    }
  }
  return Cofunctor(a, b, std::move(obj), std::move(lift));
}

}  // namespace dlens
