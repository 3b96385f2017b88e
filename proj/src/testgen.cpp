#include "dlens/testgen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dlens/adjunction.hpp"
#include "dlens/elements.hpp"
#include "dlens/factorisation.hpp"
#include "dlens/limits.hpp"
#include "dlens/search.hpp"

namespace dlens {

namespace {

int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

bool coin(std::mt19937_64& rng, int percent) { return pick(rng, 100) < percent; }

struct SetMorphism {
  int src;
  int tgt;
  std::vector<int> fn;
  auto key() const { return std::tie(src, tgt, fn); }
  friend bool operator<(const SetMorphism& a, const SetMorphism& b) { return a.key() < b.key(); }
};

struct Closure {
  std::vector<SetMorphism> morphisms;
  std::vector<std::string> names;
  bool ok = true;
};

Closure close_under_composition(const std::vector<int>& sizes,
                                const std::vector<SetMorphism>& gens, int cap,
                                int chain_bound) {
  Closure c;
  std::map<SetMorphism, int> index;
  auto add = [&](SetMorphism m, std::string name) {
    if (index.count(m)) return false;
    index.emplace(m, static_cast<int>(c.morphisms.size()));
    c.morphisms.push_back(std::move(m));
    c.names.push_back(std::move(name));
    return true;
  };
  for (int a = 0; a < static_cast<int>(sizes.size()); ++a) {
    std::vector<int> id(sizes[a]);
    std::iota(id.begin(), id.end(), 0);
    add({a, a, id}, "1_" + std::to_string(a));
  }
  std::vector<int> frontier;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (add(gens[g], "g" + std::to_string(g))) frontier.push_back(static_cast<int>(c.morphisms.size()) - 1);
  }
  for (int round = 1; !frontier.empty(); ++round) {
    if (round > chain_bound || static_cast<int>(c.morphisms.size()) > cap) {
      c.ok = false;
      return c;
    }
    std::vector<int> fresh;
    for (int m : frontier) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].src != c.morphisms[m].tgt) continue;
        SetMorphism comp{c.morphisms[m].src, gens[g].tgt, {}};
        for (int v : c.morphisms[m].fn) comp.fn.push_back(gens[g].fn[v]);
        const std::string name = "g" + std::to_string(g) + "." + c.names[m];
        if (add(std::move(comp), name)) fresh.push_back(static_cast<int>(c.morphisms.size()) - 1);
      }
    }
    frontier = std::move(fresh);
  }
  c.ok = static_cast<int>(c.morphisms.size()) <= cap;
  return c;
}

FinCat closure_to_category(const std::vector<int>& sizes, const Closure& c) {
  RawCategory raw;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    raw.objects.push_back(std::to_string(a));
    raw.identities[std::to_string(a)] = "1_" + std::to_string(a);
  }
  std::map<SetMorphism, int> index;
  for (std::size_t i = 0; i < c.morphisms.size(); ++i) {
    index.emplace(c.morphisms[i], static_cast<int>(i));
    raw.morphisms.push_back({c.names[i], std::to_string(c.morphisms[i].src),
                             std::to_string(c.morphisms[i].tgt)});
  }
  for (const auto& f : c.morphisms) {
    for (const auto& g : c.morphisms) {
      if (f.tgt != g.src) continue;
      SetMorphism gf{f.src, g.tgt, {}};
      for (int v : f.fn) gf.fn.push_back(g.fn[v]);
      raw.composition.push_back({c.names[index.at(g)], c.names[index.at(f)],
                                 c.names[index.at(gf)]});
    }
  }
  return validate_category(raw);
}

/// Subcategory of `p` on the morphisms generated by `seed_morphisms`, with
/// objects renamed along the bijective-on-objects `e: lam -> p`. Returns
/// the subcategory, e corestricted, and the inclusion into p.
struct Sub {
  FinCat cat;
  Functor corestriction;
  Functor inclusion;
};

void close_chosen(const FinCat& p, std::vector<char>& chosen) {
  for (bool grew = true; grew;) {
    grew = false;
    for (int g = 0; g < p.morphism_count(); ++g) {
      if (!chosen[g]) continue;
      for (int f : p.into(p.src(g))) {
        if (!chosen[f]) continue;
        const int gf = p.compose(g, f);
        if (!chosen[gf]) chosen[gf] = 1, grew = true;
      }
    }
  }
}

/// `extras` are added one by one while the closure stays within `cap`.
Sub generated_subcategory(const Functor& e, const std::vector<int>& extras, int cap) {
  const FinCat& lam = e.dom();
  const FinCat& p = e.cod();
  std::vector<char> chosen(p.morphism_count(), 0);
  for (int w = 0; w < lam.morphism_count(); ++w) chosen[e.mor(w)] = 1;
  for (int a = 0; a < p.object_count(); ++a) chosen[p.identity(a)] = 1;
  close_chosen(p, chosen);
  for (int m : extras) {
    if (chosen[m]) continue;
    std::vector<char> trial = chosen;
    trial[m] = 1;
    close_chosen(p, trial);
    if (std::count(trial.begin(), trial.end(), 1) <= cap) chosen = std::move(trial);
  }
  std::vector<int> object_of(p.object_count(), -1);
  for (int x = 0; x < lam.object_count(); ++x) object_of[e.obj(x)] = x;
  FinCat::Table t;
  t.objects = lam.table().objects;
  std::vector<int> sub_of(p.morphism_count(), -1), incl_m;
  for (int m = 0; m < p.morphism_count(); ++m) {
    if (!chosen[m]) continue;
    sub_of[m] = static_cast<int>(t.morphisms.size());
    incl_m.push_back(m);
    t.morphisms.push_back(p.morphism_name(m));
    t.src.push_back(object_of[p.src(m)]);
    t.tgt.push_back(object_of[p.tgt(m)]);
  }
  for (int x = 0; x < lam.object_count(); ++x) t.identity.push_back(sub_of[p.identity(e.obj(x))]);
  const std::size_t n = incl_m.size();
  t.compose.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      const int gf = p.compose(incl_m[g], incl_m[f]);
      if (gf >= 0) t.compose[g * n + f] = sub_of[gf];
    }
  }
  FinCat cat = FinCat::from_table(std::move(t));
  std::vector<int> co_m(lam.morphism_count());
  for (int w = 0; w < lam.morphism_count(); ++w) co_m[w] = sub_of[e.mor(w)];
  std::vector<int> co_o(lam.object_count());
  std::iota(co_o.begin(), co_o.end(), 0);
  Functor corestriction(lam, cat, co_o, std::move(co_m));
  std::vector<int> incl_o(lam.object_count());
  for (int x = 0; x < lam.object_count(); ++x) incl_o[x] = e.obj(x);
  Functor inclusion(cat, p, std::move(incl_o), std::move(incl_m));
  return {std::move(cat), std::move(corestriction), std::move(inclusion)};
}

FinCat random_monoid(std::mt19937_64& rng) {
  GenConfig k;
  k.seed = rng();
  k.max_objects = 1;
  k.max_generators = 1;
  k.morphism_cap = 3;
  return gen_category(k);
}

}  // namespace

FinCat gen_category(const GenConfig& cfg) {
  if (cfg.max_objects < 1 || cfg.closure_bound < 1 || cfg.max_generators < 0) {
    throw Error(ErrorCode::GenerationFailed, "generator bounds must be positive");
  }
  std::mt19937_64 rng(cfg.seed);
  const int n = 1 + pick(rng, cfg.max_objects);
  if (n > cfg.morphism_cap) {
    throw Error(ErrorCode::GenerationFailed, "identities alone exceed the morphism cap");
  }
  std::vector<int> sizes(n);
  for (auto& s : sizes) s = 1 + pick(rng, 3);
  const int k = cfg.max_generators == 0 ? 0 : pick(rng, cfg.max_generators + 1);
  std::vector<SetMorphism> gens;
  Closure current = close_under_composition(sizes, gens, cfg.morphism_cap, cfg.closure_bound);
  for (int g = 0; g < k; ++g) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      SetMorphism m{pick(rng, n), pick(rng, n), {}};
      for (int v = 0; v < sizes[m.src]; ++v) m.fn.push_back(pick(rng, sizes[m.tgt]));
      if (m.src == m.tgt && std::is_sorted(m.fn.begin(), m.fn.end()) &&
          std::adjacent_find(m.fn.begin(), m.fn.end()) == m.fn.end()) {
        continue;  // an identity function adds nothing
      }
      gens.push_back(m);
      Closure next = close_under_composition(sizes, gens, cfg.morphism_cap, cfg.closure_bound);
      if (next.ok) {
        current = std::move(next);
        break;
      }
      gens.pop_back();
    }
  }
  return closure_to_category(sizes, current);
}

TransitionSystem gen_transition_system(std::mt19937_64& rng, const FinCat& base,
                                       int max_states) {
  const int nb = base.morphism_count();
  std::vector<int> anchor, next;
  auto grow = [&] { next.resize(anchor.size() * nb, -1); };
  if (base.object_count() == 0) return {};
  bool first = true;
  while (first || coin(rng, 60)) {
    const int b = pick(rng, base.object_count());
    const int offset = static_cast<int>(anchor.size());
    const bool fits = offset + static_cast<int>(base.out(b).size()) <= max_states;
    if (coin(rng, 60) && fits) {
      // Representable at b: elements are the morphisms out of b.
      const auto outs = base.out(b);
      std::map<int, int> local;
      for (int f : outs) {
        const int x = offset + static_cast<int>(local.size());
        local.emplace(f, x);
        anchor.push_back(base.tgt(f));
      }
      grow();
      for (int f : outs) {
        for (int u : base.out(base.tgt(f))) {
          next[static_cast<std::size_t>(local[f]) * nb + u] = local.at(base.compose(u, f));
        }
      }
    } else {
      // One element over each object reachable from b.
      std::vector<int> reach;
      std::vector<int> where(base.object_count(), -1);
      for (int f : base.out(b)) {
        const int t = base.tgt(f);
        if (where[t] < 0) {
          where[t] = offset + static_cast<int>(reach.size());
          reach.push_back(t);
        }
      }
      if (!first && offset + static_cast<int>(reach.size()) > max_states) break;
      for (int t : reach) anchor.push_back(t);
      grow();
      for (int t : reach) {
        for (int u : base.out(t)) next[static_cast<std::size_t>(where[t]) * nb + u] = where[base.tgt(u)];
      }
    }
    first = false;
  }
  // Random congruence.
  const int n = static_cast<int>(anchor.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int x, int y) {
    x = find(x), y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };
  const int merges = pick(rng, 3);
  for (int k = 0; k < merges && n > 1; ++k) {
    const int x = pick(rng, n);
    std::vector<int> same;
    for (int y = 0; y < n; ++y) if (y != x && anchor[y] == anchor[x]) same.push_back(y);
    if (same.empty()) continue;
    unite(x, same[pick(rng, static_cast<int>(same.size()))]);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      for (int u : base.out(anchor[x])) {
        const int a = next[static_cast<std::size_t>(x) * nb + u];
        const int b = next[static_cast<std::size_t>(find(x)) * nb + u];
        changed = unite(a, b) || changed;
      }
    }
  }
  std::vector<int> renumber(n, -1);
  TransitionSystem ts;
  for (int x = 0; x < n; ++x) {
    if (find(x) != x) continue;
    renumber[x] = static_cast<int>(ts.states.size());
    ts.states.push_back("x" + std::to_string(ts.states.size()));
    ts.anchor.push_back(anchor[x]);
  }
  ts.next.assign(ts.states.size() * nb, -1);
  for (int x = 0; x < n; ++x) {
    if (find(x) != x) continue;
    for (int u : base.out(anchor[x])) {
      ts.next[static_cast<std::size_t>(renumber[x]) * nb + u] =
          renumber[find(next[static_cast<std::size_t>(x) * nb + u])];
    }
  }
  return ts;
}

Lens gen_lens(const GenConfig& cfg, const FinCat& b) {
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  const TransitionSystem ts = gen_transition_system(rng, b, cfg.max_states);
  const int nb = b.morphism_count();
  Elements el = elements_category(b, ts.states, ts.anchor, [&](int x, int u) {
    return ts.next[static_cast<std::size_t>(x) * nb + u];
  });
  const BoffFactorisation fac = boff_factorize(el.projection);
  Functor into = fac.e;
  Functor down = fac.m;
  const bool extend = cfg.max_generators > 0;
  if (extend && coin(rng, 30) && fac.image.morphism_count() * 3 <= cfg.morphism_cap) {
    const FinCat k = random_monoid(rng);
    const Pullback prod = product(fac.image, k);
    const int star = 0;
    std::vector<int> objs(el.category.object_count(), star);
    std::vector<int> mors(el.category.morphism_count(), k.identity(star));
    const Functor trivial(el.category, k, std::move(objs), std::move(mors));
    into = prod.pair(fac.e, trivial);
    down = compose(fac.m, prod.p0());
  }
  const FinCat& p = into.cod();
  std::vector<int> extras(extend ? pick(rng, 4) : 0);
  for (int& m : extras) m = pick(rng, p.morphism_count());
  Sub sub = generated_subcategory(into, extras, cfg.morphism_cap);
  const Functor get = compose(down, sub.inclusion);
  return diagram_to_lens({el.category, sub.corestriction, el.projection, get});
}

Cofunctor gen_cofunctor(const GenConfig& cfg, const FinCat& b) {
  return gen_lens(cfg, b).put;
}

std::optional<Functor> random_functor(std::mt19937_64& rng, const FinCat& dom,
                                      const FinCat& cod) {
  FunctorSearch k;
  k.shuffle = [&](std::vector<int>& v) { std::shuffle(v.begin(), v.end(), rng); };
  std::optional<Functor> found;
  for_each_functor(dom, cod, k, [&](const Functor& f) {
    found = f;
    return false;
  });
  return found;
}

MealyMorphism gen_mealy(const GenConfig& cfg, const FinCat& a, const FinCat& b) {
  std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995ULL);
  const TransitionSystem ts = gen_transition_system(rng, a, cfg.max_states);
  const int na = a.morphism_count();
  Elements el = elements_category(a, ts.states, ts.anchor, [&](int x, int u) {
    return ts.next[static_cast<std::size_t>(x) * na + u];
  });
  auto out = random_functor(rng, el.category, b);
  if (!out) throw Error(ErrorCode::GenerationFailed, "no functor from the elements into the output");
  return span_to_mealy({el.category, el.projection, *out});
}

namespace {

/// Transition system over b on fixed anchored states, by backtracking.
/// Gives up after `budget` assignments.
std::optional<std::vector<int>> search_action(std::mt19937_64& rng, const FinCat& b,
                                              const std::vector<int>& anchor, int budget) {
  const int n = static_cast<int>(anchor.size());
  const int nb = b.morphism_count();
  std::vector<int> next(static_cast<std::size_t>(n) * nb, -1);
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x) {
    for (int v : b.out(anchor[x])) {
      if (b.is_identity(v)) {
        next[static_cast<std::size_t>(x) * nb + v] = x;
      } else {
        slots.emplace_back(x, v);
      }
    }
  }
  auto at = [&](int x, int v) -> int& { return next[static_cast<std::size_t>(x) * nb + v]; };
  auto consistent = [&] {
    for (int x = 0; x < n; ++x) {
      for (int v : b.out(anchor[x])) {
        const int y = at(x, v);
        if (y < 0) continue;
        for (int w : b.out(b.tgt(v))) {
          const int z = at(y, w);
          const int direct = at(x, b.compose(w, v));
          if (z >= 0 && direct >= 0 && z != direct) return false;
        }
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> fill = [&](std::size_t i) {
    if (i == slots.size()) return true;
    const auto [x, v] = slots[i];
    std::vector<int> candidates;
    for (int y = 0; y < n; ++y) if (anchor[y] == b.tgt(v)) candidates.push_back(y);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (int y : candidates) {
      if (--budget < 0) return false;
      at(x, v) = y;
      if (consistent() && fill(i + 1)) return true;
      at(x, v) = -1;
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  return next;
}

/// Completes `forward` with a backward Mealy morphism on the same states.
std::optional<SymmetricLens> complete_symlens(std::mt19937_64& rng, const MealyMorphism& forward) {
  const FinCat& a = forward.input();
  const FinCat& b = forward.output();
  const int n = forward.state_count();
  std::vector<int> f0(n), g0(n);
  for (int x = 0; x < n; ++x) f0[x] = forward.f0(x), g0[x] = forward.g0(x);
  const auto next = search_action(rng, b, f0, 4096);
  if (!next) return std::nullopt;
  const int nb = b.morphism_count();
  Elements el = elements_category(b, forward.states(), f0, [&](int x, int v) {
    return (*next)[static_cast<std::size_t>(x) * nb + v];
  });
  FunctorSearch k;
  k.object_ok = [&](int c, int d) { return d == g0[c]; };
  k.shuffle = [&](std::vector<int>& v) { std::shuffle(v.begin(), v.end(), rng); };
  std::optional<Functor> out;
  for_each_functor(el.category, a, k, [&](const Functor& f) {
    out = f;
    return false;
  });
  if (!out) return std::nullopt;
  return symlens_validate(forward, span_to_mealy({el.category, el.projection, *out}));
}

/// A ⇐ X1 ⇒ ONE composed with ONE ⇐ X2 ⇒ B.
LensSpan product_span(const GenConfig& cfg, const FinCat& a, const FinCat& b) {
  GenConfig half = cfg;
  half.max_states = std::max(1, cfg.max_states / 3);
  const Lens l1 = gen_lens(half, a);
  half.seed = cfg.seed * 0x2545f4914f6cdd1dULL + 1;
  const Lens l2 = gen_lens(half, b);
  const LensSpan s1{l1.source(), l1, terminal_lens(l1.source())};
  const LensSpan s2{l2.source(), terminal_lens(l2.source()), l2};
  return spnlens_hcompose(s1, s2);
}

/// `f` with its codomain cut down to the subcategory `sub`, by names.
Functor corestrict(const Functor& f, const FinCat& sub) {
  std::vector<int> objs(f.dom().object_count()), mors(f.dom().morphism_count());
  for (int x = 0; x < f.dom().object_count(); ++x) objs[x] = sub.object(f.cod().object_name(f.obj(x)));
  for (int w = 0; w < f.dom().morphism_count(); ++w) mors[w] = sub.morphism(f.cod().morphism_name(f.mor(w)));
  return Functor(f.dom(), sub, std::move(objs), std::move(mors));
}

/// A subcategory of R(s) containing both lift images and some extras.
LensSpan r_subspan(std::mt19937_64& rng, const SymmetricLens& s, bool extend) {
  const RConstruction r = apply_R_detailed(s);
  const FinCat& full = r.span.apex;
  std::vector<int> extras;
  for (int w = 0; w < r.tau.dom().morphism_count(); ++w) extras.push_back(r.tau.mor(w));
  const int nx = extend ? pick(rng, 3) : 0;
  for (int i = 0; i < nx; ++i) extras.push_back(pick(rng, full.morphism_count()));
  const Sub sub = generated_subcategory(r.sigma, extras, std::numeric_limits<int>::max());
  const Lens left{compose(r.span.left.get, sub.inclusion),
                  span_to_cofunctor({r.plus.apex, r.plus.left, sub.corestriction})};
  const Lens right{compose(r.span.right.get, sub.inclusion),
                   span_to_cofunctor({r.minus.apex, r.minus.left, corestrict(r.tau, sub.cat)})};
  return make_span(left, right);
}

}  // namespace

SymmetricLens gen_symlens(const GenConfig& cfg, const FinCat& a, const FinCat& b) {
  std::mt19937_64 rng(cfg.seed ^ 0x61c8864680b583ebULL);
  if (coin(rng, 60)) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      GenConfig c = cfg;
      c.seed = rng();
      if (auto s = complete_symlens(rng, gen_mealy(c, a, b))) return *s;
    }
  }
  return apply_M(product_span(cfg, a, b));
}

LensSpan gen_span(const GenConfig& cfg, const FinCat& a, const FinCat& b) {
  std::mt19937_64 rng(cfg.seed ^ 0x94d049bb133111ebULL);
  const int mode = pick(rng, 3);
  if (mode == 0) return product_span(cfg, a, b);
  GenConfig c = cfg;
  c.seed = rng();
  const SymmetricLens s = gen_symlens(c, a, b);
  if (mode == 2) {
    try {
      return apply_L(s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LInapplicableAtBound) throw;
    }
  }
  return r_subspan(rng, s, cfg.max_generators > 0);
}

}  // namespace dlens
