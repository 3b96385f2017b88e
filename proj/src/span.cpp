#include "dlens/span.hpp"

#include "dlens/search.hpp"

namespace dlens {

namespace {

std::string at(const FinCat& a, int x, const FinCat& b, int u) {
  return "(" + a.object_name(x) + ", " + b.morphism_name(u) + ")";
}

/// Cofunctor B ↛ P from its lift rule on the objects of P.
Cofunctor build_put(const FinCat& total, const FinCat& base, const Functor& get,
                    const std::function<int(int, int)>& lift_of) {
  std::vector<int> obj(get.object_map());
  std::vector<int> lift(static_cast<std::size_t>(total.object_count()) * base.morphism_count(), -1);
  for (int x = 0; x < total.object_count(); ++x) {
    for (int u : base.out(obj[x])) {
      lift[static_cast<std::size_t>(x) * base.morphism_count() + u] = lift_of(x, u);
    }
  }
  return Cofunctor(total, base, std::move(obj), std::move(lift));
}

}  // namespace

void check_span(const LensSpan& s) {
  if (!(s.left.source() == s.apex) || !(s.right.source() == s.apex)) {
    throw Error(ErrorCode::ShapeError, "legs do not share the apex");
  }
  check_lens(s.left);
  check_lens(s.right);
}

LensSpan make_span(const Lens& left, const Lens& right) {
  LensSpan s{left.source(), left, right};
  check_span(s);
  return s;
}

LensSpan identity_span(const FinCat& a) {
  return {a, identity_lens(a), identity_lens(a)};
}

LensSpan embed_lens_spn(const Lens& l) {
  return {l.source(), identity_lens(l.source()), l};
}

Lens terminal_lens(const FinCat& x) {
  const Functor get = to_terminal(x);
  const FinCat& one = get.cod();
  return {get, build_put(x, one, get, [&](int a, int) { return x.identity(a); })};
}

FakePullback fake_pullback_detailed(const Lens& l, const Lens& r) {
  if (!(l.view() == r.view())) {
    throw Error(ErrorCode::PreconditionViolated, "fake pullback of lenses with different views");
  }
  const Functor g = retarget(r.get, r.source(), l.view());
  Pullback pb(l.get, g);
  const FinCat& p = pb.apex();
  const FinCat& a = l.source();
  const FinCat& c = r.source();
  const FinCat& b = l.view();
  const FinCat& rb = r.put.base();
  // Left leg: (u, γ(c, f u)); right leg: (φ(a, g v), v).
  Lens left{pb.p0(), build_put(p, a, pb.p0(), [&](int x, int u) {
              const int cc = transport_object(c, r.put.total(), pb.p1().obj(x));
              const int fu = transport_morphism(b, rb, l.get.mor(u));
              return pb.morphism_of(u, transport_morphism(r.put.total(), c, r.put.lift(cc, fu)));
            })};
  Lens right{pb.p1(), build_put(p, c, pb.p1(), [&](int x, int v) {
               const int aa = transport_object(a, l.put.total(), pb.p0().obj(x));
               const int gv = transport_morphism(r.view(), l.put.base(), r.get.mor(v));
               return pb.morphism_of(transport_morphism(l.put.total(), a, l.put.lift(aa, gv)), v);
             })};
  LensSpan span{p, std::move(left), std::move(right)};
  return {std::move(pb), std::move(span)};
}

LensSpan fake_pullback(const Lens& l, const Lens& r) { return fake_pullback_detailed(l, r).span; }

LensBCheck lensB_hom_check(const Functor& h, const Lens& src, const Lens& tgt) {
  if (!(h.dom() == src.source()) || !(h.cod() == tgt.source()) || !(src.view() == tgt.view())) {
    return {Verdict::fail("morphism is not well-typed"), std::nullopt};
  }
  if (!(compose(tgt.get, h) == src.get)) {
    return {Verdict::fail("get is not preserved"), std::nullopt};
  }
  const FinCat& a = src.source();
  const FinCat& b = src.view();
  const FinCat& c = tgt.source();
  auto h_obj = [&](int x) { return transport_object(h.cod(), c, h.obj(transport_object(a, h.dom(), x))); };
  auto h_mor = [&](int m) {
    return transport_morphism(h.cod(), c, h.mor(transport_morphism(a, h.dom(), m)));
  };
  for (int x = 0; x < a.object_count(); ++x) {
    const int px = transport_object(a, src.put.total(), x);
    for (int u : src.put.base().out(src.put.obj(px))) {
      const int lifted = transport_morphism(src.put.total(), a, src.put.lift(px, u));
      const int hx = transport_object(c, tgt.put.total(), h_obj(x));
      const int tu = transport_morphism(src.put.base(), tgt.put.base(), u);
      const int expected = transport_morphism(tgt.put.total(), c, tgt.put.lift(hx, tu));
      if (h_mor(lifted) != expected) {
        return {Verdict::fail(at(a, x, src.put.base(), u)), std::nullopt};
      }
    }
  }
  const CofunctorSpan ls = cofunctor_span_rep(src.put);
  const CofunctorSpan lt = cofunctor_span_rep(tgt.put);
  std::vector<int> objs(ls.apex.object_count()), mors(ls.apex.morphism_count());
  for (int x = 0; x < ls.apex.object_count(); ++x) {
    objs[x] = lt.apex.object(c.object_name(h_obj(a.object(ls.apex.object_name(x)))));
  }
  for (int w = 0; w < ls.apex.morphism_count(); ++w) {
    const int x = ls.apex.src(w);
    const std::string& u = src.put.base().morphism_name(ls.left.mor(w));
    mors[w] = lt.apex.morphism(pair_name(lt.apex.object_name(objs[x]), u));
  }
  return {Verdict::pass(), Functor(ls.apex, lt.apex, std::move(objs), std::move(mors))};
}

LensProduct lensB_product(const Lens& l1, const Lens& l2) {
  if (!(l1.view() == l2.view())) {
    throw Error(ErrorCode::PreconditionViolated, "product of lenses with different views");
  }
  const Functor g = retarget(l2.get, l2.source(), l1.view());
  Pullback pb(l1.get, g);
  const FinCat& p = pb.apex();
  const FinCat& b = l1.view();
  const Functor get = compose(l1.get, pb.p0());
  Cofunctor put = build_put(p, b, get, [&](int x, int u) {
    const FinCat& s1 = l1.source();
    const FinCat& s2 = l2.source();
    const int a = transport_object(s1, l1.put.total(), pb.p0().obj(x));
    const int c = transport_object(s2, l2.put.total(), pb.p1().obj(x));
    const int w1 = l1.put.lift(a, transport_morphism(b, l1.put.base(), u));
    const int w2 = l2.put.lift(c, transport_morphism(b, l2.put.base(), u));
    return pb.morphism_of(transport_morphism(l1.put.total(), s1, w1),
                          transport_morphism(l2.put.total(), s2, w2));
  });
  Lens lens{get, std::move(put)};
  Functor p0 = pb.p0();
  Functor p1 = pb.p1();
  return {std::move(pb), std::move(lens), std::move(p0), std::move(p1)};
}

SpanCellCheck spnlens_2cell(const Functor& h, const LensSpan& src, const LensSpan& tgt) {
  if (!(src.a() == tgt.a()) || !(src.b() == tgt.b())) {
    return {Verdict::fail("spans have different boundaries"), std::nullopt, std::nullopt};
  }
  LensBCheck l = lensB_hom_check(h, src.left, tgt.left);
  if (!l.verdict) return {Verdict::fail("left: " + l.verdict.witness), std::nullopt, std::nullopt};
  LensBCheck r = lensB_hom_check(h, src.right, tgt.right);
  if (!r.verdict) return {Verdict::fail("right: " + r.verdict.witness), std::nullopt, std::nullopt};
  return {Verdict::pass(), std::move(l.induced), std::move(r.induced)};
}

bool is_invertible_span_cell(const Functor& h, const LensSpan& src, const LensSpan& tgt) {
  if (!spnlens_2cell(h, src, tgt).verdict || !is_isomorphism(h)) return false;
  return static_cast<bool>(spnlens_2cell(inverse(h), tgt, src).verdict);
}

namespace {

FunctorSearch get_compatible(const LensSpan& src, const LensSpan& tgt) {
  FunctorSearch k;
  k.object_ok = [&src, &tgt](int c, int d) {
    return transport_object(tgt.a(), src.a(), tgt.left.get.obj(d)) == src.left.get.obj(c) &&
           transport_object(tgt.b(), src.b(), tgt.right.get.obj(d)) == src.right.get.obj(c);
  };
  k.morphism_ok = [&src, &tgt](int w, int v) {
    return transport_morphism(tgt.a(), src.a(), tgt.left.get.mor(v)) == src.left.get.mor(w) &&
           transport_morphism(tgt.b(), src.b(), tgt.right.get.mor(v)) == src.right.get.mor(w);
  };
  return k;
}

}  // namespace

std::vector<Functor> enumerate_span_2cells(const LensSpan& src, const LensSpan& tgt,
                                           std::size_t limit) {
  std::vector<Functor> out;
  if (!(src.a() == tgt.a()) || !(src.b() == tgt.b())) return out;
  for_each_functor(src.apex, tgt.apex, get_compatible(src, tgt), [&](const Functor& h) {
    if (spnlens_2cell(h, src, tgt).verdict) out.push_back(h);
    return out.size() < limit;
  });
  return out;
}

std::optional<Functor> find_span_isomorphism(const LensSpan& src, const LensSpan& tgt) {
  if (!(src.a() == tgt.a()) || !(src.b() == tgt.b())) return std::nullopt;
  if (src.apex.object_count() != tgt.apex.object_count() ||
      src.apex.morphism_count() != tgt.apex.morphism_count()) {
    return std::nullopt;
  }
  FunctorSearch k = get_compatible(src, tgt);
  k.injective = true;
  std::optional<Functor> found;
  for_each_functor(src.apex, tgt.apex, k, [&](const Functor& h) {
    if (is_invertible_span_cell(h, src, tgt)) found = h;
    return !found;
  });
  return found;
}

SpanComposite spnlens_hcompose_detailed(const LensSpan& s1, const LensSpan& s2) {
  if (!(s1.b() == s2.a())) {
    throw Error(ErrorCode::PreconditionViolated, "span composite with mismatched middle");
  }
  FakePullback fp = fake_pullback_detailed(s1.right, s2.left);
  LensSpan span{fp.span.apex, compose_lens(fp.span.left, s1.left),
                compose_lens(fp.span.right, s2.right)};
  return {std::move(span), std::move(fp)};
}

LensSpan spnlens_hcompose(const LensSpan& s1, const LensSpan& s2) {
  return spnlens_hcompose_detailed(s1, s2).span;
}

Functor spnlens_associator(const LensSpan& s1, const LensSpan& s2, const LensSpan& s3) {
  const SpanComposite c12 = spnlens_hcompose_detailed(s1, s2);
  const SpanComposite left = spnlens_hcompose_detailed(c12.span, s3);
  const SpanComposite c23 = spnlens_hcompose_detailed(s2, s3);
  const SpanComposite right = spnlens_hcompose_detailed(s1, c23.span);
  const Pullback& inner_l = c12.middle.pullback;
  const Pullback& outer_l = left.middle.pullback;
  const Functor x1 = compose(inner_l.p0(), outer_l.p0());
  const Functor x2 = compose(inner_l.p1(), outer_l.p0());
  const Functor& x3 = outer_l.p1();
  const Functor x23 = c23.middle.pullback.pair(x2, x3);
  return right.middle.pullback.pair(x1, x23);
}

Functor spnlens_left_unitor(const LensSpan& s) {
  return spnlens_hcompose_detailed(identity_span(s.a()), s).middle.pullback.p1();
}

Functor spnlens_right_unitor(const LensSpan& s) {
  return spnlens_hcompose_detailed(s, identity_span(s.b())).middle.pullback.p0();
}

}  // namespace dlens
