#include "dlens/lens.hpp"

namespace dlens {

void check_lens(const Lens& l) {
  if (!(l.put.total() == l.get.dom()) || !(l.put.base() == l.get.cod())) {
    throw Error(ErrorCode::PreconditionViolated,
                "get and put have different boundaries");
  }
  check_cofunctor(l.put);
  const FinCat& a = l.get.dom();
  const FinCat& b = l.get.cod();
  const bool aligned = l.put.total().shares_data(a) && l.put.base().shares_data(b);
  auto put_obj = [&](int x) {
    if (aligned) return l.put.obj(x);
    return b.object(l.put.base().object_name(l.put.obj(l.put.total().object(a.object_name(x)))));
  };
  for (int x = 0; x < a.object_count(); ++x) {
    if (put_obj(x) != l.get.obj(x)) {
      throw Error(ErrorCode::ObjectMismatch, "get and put disagree on an object",
                  a.object_name(x));
    }
  }
  for (int x = 0; x < a.object_count(); ++x) {
    for (int u : b.out(l.get.obj(x))) {
      int lift;
      if (aligned) {
        lift = l.put.lift(x, u);
      } else {
        const int px = l.put.total().object(a.object_name(x));
        const int pu = l.put.base().morphism(b.morphism_name(u));
        lift = a.morphism(l.put.total().morphism_name(l.put.lift(px, pu)));
      }
      if (l.get.mor(lift) != u) {
        throw Error(ErrorCode::PutGetViolation, "get(put(a, u)) != u",
                    "(" + a.object_name(x) + ", " + b.morphism_name(u) + ")");
      }
    }
  }
}

Lens check_lens(const Functor& get, const Cofunctor& put) {
  Lens l{get, put};
  check_lens(l);
  return l;
}

Lens identity_lens(const FinCat& c) {
  return {identity_functor(c), identity_cofunctor(c)};
}

Lens compose_lens(const Lens& first, const Lens& second) {
  if (!(first.view() == second.source())) {
    throw Error(ErrorCode::PreconditionViolated,
                "lens composite with mismatched middle category");
  }
  return {compose(second.get, first.get), compose_cofunctors(second.put, first.put)};
}

LensDiagram lens_diagram_rep(const Lens& l) {
  CofunctorSpan s = cofunctor_span_rep(l.put);
  return {s.apex, s.right, s.left, l.get};
}

Lens diagram_to_lens(const LensDiagram& d) {
  if (!(compose(d.get, d.put_leg) == d.base_leg)) {
    throw Error(ErrorCode::ShapeError, "lens triangle does not commute");
  }
  Cofunctor put = span_to_cofunctor({d.apex, d.base_leg, d.put_leg});
  return check_lens(d.get, put);
}

}  // namespace dlens
