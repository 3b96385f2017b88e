#include "dlens/adjunction.hpp"

#include <algorithm>

namespace dlens {

namespace {

/// Mealy morphism whose transitions follow the lifts of `through` and whose
/// outputs are the images of those lifts under `out_get`.
MealyMorphism mealy_of_leg(const FinCat& x, const Lens& through, const Functor& out_get) {
  const FinCat& in = through.view();
  const Cofunctor& put = through.put;
  const int n = x.object_count();
  const std::size_t width = in.morphism_count();
  std::vector<int> g0(n), f0(n), next(n * width, -1), out(n * width, -1);
  for (int a = 0; a < n; ++a) {
    g0[a] = transport_object(through.get.cod(), in, through.get.obj(transport_object(x, through.get.dom(), a)));
    f0[a] = out_get.obj(transport_object(x, out_get.dom(), a));
    const int pa = transport_object(x, put.total(), a);
    for (int u : in.out(g0[a])) {
      const int lift = put.lift(pa, transport_morphism(in, put.base(), u));
      next[a * width + u] = transport_object(put.total(), x, put.total().tgt(lift));
      out[a * width + u] = out_get.mor(transport_morphism(put.total(), out_get.dom(), lift));
    }
  }
  return MealyMorphism(in, out_get.cod(), x.table().objects, std::move(g0), std::move(f0),
                       std::move(next), std::move(out));
}

/// Identity-on-objects inclusion of a discrete category into c, by names.
Functor object_inclusion(const FinCat& disc, const FinCat& c) {
  std::vector<int> objs(disc.object_count()), mors(disc.morphism_count());
  for (int x = 0; x < disc.object_count(); ++x) {
    objs[x] = c.object(disc.object_name(x));
    mors[disc.identity(x)] = c.identity(objs[x]);
  }
  return Functor(disc, c, std::move(objs), std::move(mors));
}

/// (x, u) |-> (k x, u) between elements categories over the same base.
Functor elements_map(const std::vector<int>& k, const MealySpan& src, const MealySpan& tgt,
                     const SymmetricLens& t) {
  const FinCat& xs = src.apex;
  const FinCat& xt = tgt.apex;
  const FinCat& base = src.left.cod();
  std::vector<int> objs(xs.object_count()), mors(xs.morphism_count());
  for (int x = 0; x < xs.object_count(); ++x) objs[x] = xt.object(t.state_name(k[x]));
  for (int w = 0; w < xs.morphism_count(); ++w) {
    const int x = xs.src(w);
    mors[w] = xt.morphism(pair_name(xt.object_name(objs[x]), base.morphism_name(src.left.mor(w))));
  }
  return Functor(xs, xt, std::move(objs), std::move(mors));
}

/// put lifts of `leg` as a functor from the matching elements category.
Functor lifts_into_apex(const MealySpan& elements, const Lens& leg, const FinCat& apex) {
  const FinCat& e = elements.apex;
  const Cofunctor& put = leg.put;
  std::vector<int> objs(e.object_count()), mors(e.morphism_count());
  for (int x = 0; x < e.object_count(); ++x) objs[x] = apex.object(e.object_name(x));
  for (int w = 0; w < e.morphism_count(); ++w) {
    const int x = transport_object(apex, put.total(), objs[e.src(w)]);
    const int u = transport_morphism(elements.left.cod(), put.base(), elements.left.mor(w));
    mors[w] = transport_morphism(put.total(), apex, put.lift(x, u));
  }
  return Functor(e, apex, std::move(objs), std::move(mors));
}

}  // namespace

SymmetricLens apply_M(const LensSpan& s) {
  return {mealy_of_leg(s.apex, s.left, s.right.get), mealy_of_leg(s.apex, s.right, s.left.get)};
}

RConstruction apply_R_detailed(const SymmetricLens& s) {
  const FinCat& a = s.a();
  const FinCat& b = s.b();
  Pullback prod = product(a, b);
  FinCat states = discrete_category(s.forward.states());
  std::vector<int> objs(states.object_count()), mors(states.morphism_count());
  for (int x = 0; x < states.object_count(); ++x) {
    objs[x] = prod.object_of(s.forward.g0(x), s.forward.f0(x));
    mors[states.identity(x)] = prod.apex().identity(objs[x]);
  }
  BoffFactorisation boff = boff_factorize(Functor(states, prod.apex(), std::move(objs), std::move(mors)));
  MealySpan plus = mealy_span_rep(s.forward);
  MealySpan minus = mealy_span_rep(s.backward);
  Functor sigma = boff_fill(object_inclusion(states, plus.apex), boff.m, boff.e,
                            prod.pair(plus.left, plus.right));
  Functor tau = boff_fill(object_inclusion(states, minus.apex), boff.m, boff.e,
                          prod.pair(minus.right, minus.left));
  const FinCat& apex = boff.image;
  Lens left{compose(prod.p0(), boff.m), span_to_cofunctor({plus.apex, plus.left, sigma})};
  Lens right{compose(prod.p1(), boff.m), span_to_cofunctor({minus.apex, minus.left, tau})};
  LensSpan span{apex, std::move(left), std::move(right)};
  return {std::move(span), std::move(prod), std::move(states), std::move(boff),
          std::move(plus), std::move(minus), std::move(sigma), std::move(tau)};
}

LensSpan apply_R(const SymmetricLens& s) { return apply_R_detailed(s).span; }

LConstruction apply_L_detailed(const SymmetricLens& s, std::size_t bound) {
  MealySpan plus = mealy_span_rep(s.forward);
  MealySpan minus = mealy_span_rep(s.backward);
  std::optional<Pushout> po;
  try {
    po.emplace(pushout_ioo(s.forward.states(), plus.apex, minus.apex, bound));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSaturated) throw;
    Error err(ErrorCode::LInapplicableAtBound,
              "pushout of the state categories does not saturate at bound " +
                  std::to_string(bound));
    err.bound = e.bound;
    err.word_counts = e.word_counts;
    throw err;
  }
  Lens left{po->copair(plus.left, minus.right),
            span_to_cofunctor({plus.apex, plus.left, po->i0})};
  Lens right{po->copair(plus.right, minus.left),
             span_to_cofunctor({minus.apex, minus.left, po->i1})};
  LensSpan span{po->apex, std::move(left), std::move(right)};
  return {std::move(span), std::move(plus), std::move(minus), std::move(*po)};
}

LensSpan apply_L(const SymmetricLens& s, std::size_t bound) {
  return apply_L_detailed(s, bound).span;
}

std::vector<int> map_M(const Functor& h, const LensSpan& src, const LensSpan& tgt) {
  std::vector<int> k(src.apex.object_count());
  for (int x = 0; x < src.apex.object_count(); ++x) {
    k[x] = transport_object(h.cod(), tgt.apex, h.obj(transport_object(src.apex, h.dom(), x)));
  }
  return k;
}

namespace {

Functor map_R_between(const std::vector<int>& k, const RConstruction& rs, const RConstruction& rt) {
  std::vector<int> objs(rs.states.object_count()), mors(rs.states.morphism_count());
  for (int x = 0; x < rs.states.object_count(); ++x) {
    objs[x] = k[x];
    mors[rs.states.identity(x)] = rt.states.identity(k[x]);
  }
  const Functor kk(rs.states, rt.states, std::move(objs), std::move(mors));
  return boff_fill(rs.boff.e, rt.boff.m, compose(rt.boff.e, kk), rs.boff.m);
}

Functor map_L_between(const std::vector<int>& k, const LConstruction& ls, const LConstruction& lt,
                      const SymmetricLens& tgt) {
  const Functor kp = elements_map(k, ls.plus, lt.plus, tgt);
  const Functor km = elements_map(k, ls.minus, lt.minus, tgt);
  return ls.pushout.copair(compose(lt.pushout.i0, kp), compose(lt.pushout.i1, km));
}

}  // namespace

Functor map_R(const std::vector<int>& k, const SymmetricLens& src, const SymmetricLens& tgt) {
  return map_R_between(k, apply_R_detailed(src), apply_R_detailed(tgt));
}

Functor map_L(const std::vector<int>& k, const SymmetricLens& src, const SymmetricLens& tgt,
              std::size_t bound) {
  return map_L_between(k, apply_L_detailed(src, bound), apply_L_detailed(tgt, bound), tgt);
}

Functor unit_MR(const LensSpan& s) {
  const RConstruction r = apply_R_detailed(apply_M(s));
  const Functor pairing = r.product.pair(s.left.get, s.right.get);
  return boff_fill(object_inclusion(r.states, s.apex), r.boff.m, r.boff.e, pairing);
}

Functor counit_LM(const LensSpan& s, std::size_t bound) {
  const LConstruction l = apply_L_detailed(apply_M(s), bound);
  return l.pushout.copair(lifts_into_apex(l.plus, s.left, s.apex),
                          lifts_into_apex(l.minus, s.right, s.apex));
}

bool get_pairing_fully_faithful(const LensSpan& s) {
  const Pullback prod = product(s.a(), s.b());
  return is_fully_faithful(prod.pair(s.left.get, s.right.get));
}

LImageCheck check_L_image(const LensSpan& s) {
  const FinCat& x = s.apex;
  struct Letter {
    int side;
    int morphism;
  };
  std::vector<std::vector<Letter>> letters(x.object_count());
  for (int side = 0; side < 2; ++side) {
    const Lens& leg = side == 0 ? s.left : s.right;
    const FinCat& base = leg.view();
    for (int a = 0; a < x.object_count(); ++a) {
      const int pa = transport_object(x, leg.put.total(), a);
      for (int u : base.out(leg.get.obj(transport_object(x, leg.get.dom(), a)))) {
        if (base.is_identity(u)) continue;
        const int lift = leg.put.lift(pa, transport_morphism(base, leg.put.base(), u));
        letters[a].push_back({side, transport_morphism(leg.put.total(), x, lift)});
      }
    }
  }
  struct Partial {
    int end;
    int side;
    int composite;
  };
  LImageCheck result;
  std::vector<char> seen(x.morphism_count(), 0);
  std::vector<Partial> level;
  for (int a = 0; a < x.object_count(); ++a) {
    seen[x.identity(a)] = 1;
    level.push_back({a, -1, x.identity(a)});
  }
  result.words_injective = true;
  while (!level.empty() && result.words_injective) {
    std::vector<Partial> next;
    for (const Partial& w : level) {
      for (const Letter& l : letters[w.end]) {
        if (l.side == w.side) continue;
        const int comp = x.compose(l.morphism, w.composite);
        if (seen[comp]) {
          result.words_injective = false;
          result.witness = "two alternating words compose to " + x.morphism_name(comp);
          break;
        }
        seen[comp] = 1;
        next.push_back({x.tgt(l.morphism), l.side, comp});
      }
      if (!result.words_injective) break;
    }
    level = std::move(next);
  }
  result.generated = true;
  for (int m = 0; m < x.morphism_count() && result.words_injective; ++m) {
    if (!seen[m]) {
      result.generated = false;
      result.witness = x.morphism_name(m) + " is not a composite of lifts";
      break;
    }
  }
  if (!result.words_injective) {
    // Generation is decided separately from injectivity.
    std::vector<char> reach(x.morphism_count(), 0);
    for (int a = 0; a < x.object_count(); ++a) reach[x.identity(a)] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int m = 0; m < x.morphism_count(); ++m) {
        if (!reach[m]) continue;
        for (const Letter& l : letters[x.tgt(m)]) {
          const int c = x.compose(l.morphism, m);
          if (!reach[c]) reach[c] = 1, grew = true;
        }
      }
    }
    result.generated = std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
  }
  return result;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "SKIP";
}

const std::vector<std::string>& adjunction_check_names() {
  static const std::vector<std::string> names = {
      "MR-identity",     "ML-identity", "unit-is-2cell", "counit-is-2cell",
      "triangle-1",      "triangle-2",  "naturality",    "hom-bijection"};
  return names;
}

std::map<std::string, CheckResult> AdjunctionReport::summary() const {
  std::map<std::string, CheckResult> out;
  for (const auto& name : adjunction_check_names()) out[name] = {CheckStatus::Skip, ""};
  for (const auto& inst : instances) {
    for (const auto& [name, r] : inst.checks) {
      CheckResult& agg = out[name];
      if (agg.status == CheckStatus::Fail) continue;
      if (r.status == CheckStatus::Fail) {
        agg = {CheckStatus::Fail, inst.id + ": " + r.witness};
      } else if (r.status == CheckStatus::Pass) {
        agg.status = CheckStatus::Pass;
      }
    }
  }
  return out;
}

bool AdjunctionReport::all_passed() const {
  for (const auto& [name, r] : summary()) {
    if (r.status == CheckStatus::Fail) return false;
  }
  return true;
}

namespace {

/// Accumulates sub-checks: any failure fails, all skipped skips.
class Tally {
 public:
  void pass() { any_pass_ = true; }
  void fail(const std::string& w) {
    if (!failed_) witness_ = w;
    failed_ = true;
  }
  void skip(const std::string& w) {
    if (skip_witness_.empty()) skip_witness_ = w;
  }
  void expect(bool ok, const std::string& w) { ok ? pass() : fail(w); }
  template <typename F>
  void run(const std::string& label, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::LInapplicableAtBound) {
        skip(label + ": L inapplicable at bound " + std::to_string(e.bound));
      } else {
        fail(label + ": " + e.what());
      }
    } catch (const std::exception& e) {
      fail(label + ": " + e.what());
    }
  }
  CheckResult result() const {
    if (failed_) return {CheckStatus::Fail, witness_};
    if (any_pass_) return {CheckStatus::Pass, ""};
    return {CheckStatus::Skip, skip_witness_};
  }

 private:
  bool any_pass_ = false;
  bool failed_ = false;
  std::string witness_;
  std::string skip_witness_;
};

bool is_identity_state_map(const std::vector<int>& k) {
  for (std::size_t x = 0; x < k.size(); ++x) {
    if (k[x] != static_cast<int>(x)) return false;
  }
  return true;
}

void hom_bijection_LM(Tally& t, const std::string& label, const SymmetricLens& s,
                      const LensSpan& target, std::size_t bound) {
  t.run(label, [&] {
    const LensSpan ls = apply_L(s, bound);
    const SymmetricLens mt = apply_M(target);
    const Functor eps = counit_LM(target, bound);
    const LConstruction l_src = apply_L_detailed(s, bound);
    const LConstruction l_tgt = apply_L_detailed(mt, bound);
    const auto left = enumerate_span_2cells(ls, target);
    const auto right = enumerate_sym_2cells(s, mt);
    if (left.size() != right.size()) {
      t.fail(label + ": " + std::to_string(left.size()) + " span 2-cells vs " +
             std::to_string(right.size()) + " symmetric 2-cells");
      return;
    }
    for (const Functor& h : left) {
      const std::vector<int> k = map_M(h, ls, target);
      if (!symlens_2cell(k, s, mt)) return t.fail(label + ": transpose is not a 2-cell");
      if (!(compose(eps, map_L_between(k, l_src, l_tgt, mt)) == h)) {
        return t.fail(label + ": round trip from spans is not the identity");
      }
    }
    for (const auto& k : right) {
      const Functor h = compose(eps, map_L_between(k, l_src, l_tgt, mt));
      if (!spnlens_2cell(h, ls, target).verdict) return t.fail(label + ": transpose is not a 2-cell");
      if (map_M(h, ls, target) != k) {
        return t.fail(label + ": round trip from symmetric lenses is not the identity");
      }
    }
    t.pass();
  });
}

void hom_bijection_MR(Tally& t, const std::string& label, const LensSpan& s,
                      const SymmetricLens& target) {
  t.run(label, [&] {
    const SymmetricLens ms = apply_M(s);
    const LensSpan rt = apply_R(target);
    const Functor eta = unit_MR(s);
    const RConstruction r_src = apply_R_detailed(ms);
    const RConstruction r_tgt = apply_R_detailed(target);
    const auto left = enumerate_sym_2cells(ms, target);
    const auto right = enumerate_span_2cells(s, rt);
    if (left.size() != right.size()) {
      t.fail(label + ": " + std::to_string(left.size()) + " symmetric 2-cells vs " +
             std::to_string(right.size()) + " span 2-cells");
      return;
    }
    for (const auto& k : left) {
      const Functor h = compose(map_R_between(k, r_src, r_tgt), eta);
      if (!spnlens_2cell(h, s, rt).verdict) return t.fail(label + ": transpose is not a 2-cell");
      if (map_M(h, s, rt) != k) {
        return t.fail(label + ": round trip from symmetric lenses is not the identity");
      }
    }
    for (const Functor& h : right) {
      const std::vector<int> k = map_M(h, s, rt);
      if (!symlens_2cell(k, ms, target)) return t.fail(label + ": transpose is not a 2-cell");
      if (!(compose(map_R_between(k, r_src, r_tgt), eta) == h)) {
        return t.fail(label + ": round trip from spans is not the identity");
      }
    }
    t.pass();
  });
}

InstanceReport verify_instance(std::size_t i, const std::vector<SymmetricLens>& syms,
                               const std::vector<LensSpan>& spans, std::size_t bound) {
  InstanceReport rep;
  rep.id = "instance-" + std::to_string(i);
  const SymmetricLens* s = i < syms.size() ? &syms[i] : nullptr;
  const LensSpan* t = i < spans.size() ? &spans[i] : nullptr;
  const LensSpan* t_next = spans.empty() ? nullptr : &spans[(i + 1) % spans.size()];
  if (i >= spans.size()) t_next = nullptr;

  {
    Tally k;
    if (s) k.run("MR", [&] { k.expect(apply_M(apply_R(*s)) == *s, "M(R(s)) differs from s"); });
    rep.checks["MR-identity"] = k.result();
  }
  {
    Tally k;
    if (s) k.run("ML", [&] { k.expect(apply_M(apply_L(*s, bound)) == *s, "M(L(s)) differs from s"); });
    rep.checks["ML-identity"] = k.result();
  }
  {
    Tally k;
    if (t) {
      k.run("unit", [&] {
        const Verdict v = spnlens_2cell(unit_MR(*t), *t, apply_R(apply_M(*t))).verdict;
        k.expect(v.ok, v.witness);
      });
    }
    rep.checks["unit-is-2cell"] = k.result();
  }
  {
    Tally k;
    if (t) {
      k.run("counit", [&] {
        const Verdict v = spnlens_2cell(counit_LM(*t, bound), apply_L(apply_M(*t), bound), *t).verdict;
        k.expect(v.ok, v.witness);
      });
    }
    rep.checks["counit-is-2cell"] = k.result();
  }
  {
    Tally k;
    if (t) {
      k.run("M(unit)", [&] {
        k.expect(is_identity_state_map(map_M(unit_MR(*t), *t, apply_R(apply_M(*t)))),
                 "M applied to the unit is not the identity");
      });
    }
    if (s) {
      k.run("unit at R(s)", [&] {
        const LensSpan rs = apply_R(*s);
        k.expect(unit_MR(rs) == identity_functor(rs.apex), "unit at R(s) is not the identity");
      });
    }
    rep.checks["triangle-1"] = k.result();
  }
  {
    Tally k;
    if (s) {
      k.run("counit at L(s)", [&] {
        const LensSpan ls = apply_L(*s, bound);
        k.expect(counit_LM(ls, bound) == identity_functor(ls.apex),
                 "counit at L(s) is not the identity");
      });
    }
    if (t) {
      k.run("M(counit)", [&] {
        k.expect(is_identity_state_map(map_M(counit_LM(*t, bound), apply_L(apply_M(*t), bound), *t)),
                 "M applied to the counit is not the identity");
      });
    }
    rep.checks["triangle-2"] = k.result();
  }
  {
    Tally k;
    if (t && t_next) {
      for (const LensSpan* u : {t, t_next}) {
        k.run("unit naturality", [&] {
          const SymmetricLens mt = apply_M(*t);
          const SymmetricLens mu = apply_M(*u);
          const Functor eta_t = unit_MR(*t);
          const Functor eta_u = unit_MR(*u);
          const RConstruction r_t = apply_R_detailed(mt);
          const RConstruction r_u = apply_R_detailed(mu);
          for (const Functor& h : enumerate_span_2cells(*t, *u)) {
            const Functor lhs = compose(map_R_between(map_M(h, *t, *u), r_t, r_u), eta_t);
            if (!(lhs == compose(eta_u, h))) return k.fail("unit naturality square fails");
          }
          k.pass();
        });
        k.run("counit naturality", [&] {
          const SymmetricLens mt = apply_M(*t);
          const SymmetricLens mu = apply_M(*u);
          const Functor eps_t = counit_LM(*t, bound);
          const Functor eps_u = counit_LM(*u, bound);
          const LConstruction l_t = apply_L_detailed(mt, bound);
          const LConstruction l_u = apply_L_detailed(mu, bound);
          for (const Functor& h : enumerate_span_2cells(*t, *u)) {
            const Functor lhs = compose(eps_u, map_L_between(map_M(h, *t, *u), l_t, l_u, mu));
            if (!(lhs == compose(h, eps_t))) return k.fail("counit naturality square fails");
          }
          k.pass();
        });
      }
    }
    rep.checks["naturality"] = k.result();
  }
  {
    Tally k;
    if (s && t) {
      hom_bijection_LM(k, "L-|M at (s, t)", *s, *t, bound);
      k.run("L-|M at (s, L s)", [&] { hom_bijection_LM(k, "L-|M at (s, L s)", *s, apply_L(*s, bound), bound); });
      hom_bijection_LM(k, "L-|M at (M t, t)", apply_M(*t), *t, bound);
      hom_bijection_MR(k, "M-|R at (t, s)", *t, *s);
      hom_bijection_MR(k, "M-|R at (t, M t)", *t, apply_M(*t));
      hom_bijection_MR(k, "M-|R at (R s, s)", apply_R(*s), *s);
    }
    rep.checks["hom-bijection"] = k.result();
  }
  return rep;
}

void check_boundaries(const FinCat& a, const FinCat& b, const std::vector<SymmetricLens>& syms,
                      const std::vector<LensSpan>& spans) {
  for (const auto& s : syms) {
    if (!(s.a() == a) || !(s.b() == b)) {
      throw Error(ErrorCode::PreconditionViolated, "symmetric lens between other categories");
    }
  }
  for (const auto& t : spans) {
    if (!(t.a() == a) || !(t.b() == b)) {
      throw Error(ErrorCode::PreconditionViolated, "span between other categories");
    }
  }
}

}  // namespace

AdjunctionReport verify_adjunctions(const FinCat& a, const FinCat& b,
                                    const std::vector<SymmetricLens>& syms,
                                    const std::vector<LensSpan>& spans, std::size_t bound) {
  check_boundaries(a, b, syms, spans);
  const std::size_t n = std::max(syms.size(), spans.size());
  AdjunctionReport report;
  report.instances.resize(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    report.instances[i] = verify_instance(static_cast<std::size_t>(i), syms, spans, bound);
  }
  return report;
}

AdjunctionReport verify_adjunctions_serial(const FinCat& a, const FinCat& b,
                                           const std::vector<SymmetricLens>& syms,
                                           const std::vector<LensSpan>& spans,
                                           std::size_t bound) {
  check_boundaries(a, b, syms, spans);
  const std::size_t n = std::max(syms.size(), spans.size());
  AdjunctionReport report;
  for (std::size_t i = 0; i < n; ++i) {
    report.instances.push_back(verify_instance(i, syms, spans, bound));
  }
  return report;
}

}  // namespace dlens
