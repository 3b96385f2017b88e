#include "dlens/factorisation.hpp"

#include <unordered_map>

namespace dlens {

BoffFactorisation boff_factorize(const Functor& f) {
  const FinCat& d = f.dom();
  const FinCat& c = f.cod();
  const int n_obj = d.object_count();

  FinCat::Table t;
  t.objects = d.table().objects;
  // key (a, a', u) -> morphism index of the image
  std::unordered_map<long long, int> index;
  auto key = [&](int a, int b, int u) {
    return (static_cast<long long>(a) * n_obj + b) * c.morphism_count() + u;
  };
  for (int a = 0; a < n_obj; ++a) {
    for (int b = 0; b < n_obj; ++b) {
      for (int u : c.hom(f.obj(a), f.obj(b))) {
        index.emplace(key(a, b, u), static_cast<int>(t.morphisms.size()));
        t.morphisms.push_back(
            triple_name(d.object_name(a), c.morphism_name(u), d.object_name(b)));
        t.src.push_back(a);
        t.tgt.push_back(b);
      }
    }
  }
  // Remember (a, a', u) per image morphism for composition.
  std::vector<int> comp_u(t.morphisms.size());
  for (const auto& [k, i] : index) comp_u[i] = static_cast<int>(k % c.morphism_count());
  t.identity.resize(n_obj);
  for (int a = 0; a < n_obj; ++a) {
    t.identity[a] = index.at(key(a, a, c.identity(f.obj(a))));
  }
  const auto n = t.morphisms.size();
  t.compose.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (t.tgt[h] != t.src[g]) continue;
      const int u = c.compose(comp_u[g], comp_u[h]);
      t.compose[g * n + h] = index.at(key(t.src[h], t.tgt[g], u));
    }
  }
  FinCat image = FinCat::from_table(std::move(t));

  std::vector<int> e_obj(n_obj), e_mor(d.morphism_count());
  for (int a = 0; a < n_obj; ++a) e_obj[a] = a;
  for (int w = 0; w < d.morphism_count(); ++w) {
    e_mor[w] = index.at(key(d.src(w), d.tgt(w), f.mor(w)));
  }
  std::vector<int> m_obj(n_obj), m_mor(image.morphism_count());
  for (int a = 0; a < n_obj; ++a) m_obj[a] = f.obj(a);
  for (int i = 0; i < image.morphism_count(); ++i) m_mor[i] = comp_u[i];

  return {Functor(d, image, std::move(e_obj), std::move(e_mor)), image,
          Functor(image, c, std::move(m_obj), std::move(m_mor))};
}

Functor boff_fill(const Functor& e, const Functor& m, const Functor& f,
                  const Functor& g) {
  if (!(e.dom() == f.dom()) || !(e.cod() == g.dom()) || !(f.cod() == m.dom()) ||
      !(g.cod() == m.cod())) {
    throw Error(ErrorCode::PreconditionViolated, "square is not well-typed");
  }
  if (!(compose(m, f) == compose(g, e))) {
    throw Error(ErrorCode::PreconditionViolated, "square does not commute");
  }
  const FunctorClass ke = classify_functor(e);
  if (!ke.is_bijective_on_objects) {
    throw Error(ErrorCode::PreconditionViolated,
                "left functor is not bijective-on-objects",
                ke.bijection_witness.value_or(""));
  }
  if (!is_fully_faithful(m)) {
    throw Error(ErrorCode::PreconditionViolated,
                "right functor is not fully faithful");
  }
  const FinCat& c = e.cod();
  const FinCat& b = m.dom();
  // f and e share a domain up to names; index through e.dom().
  const FinCat& a = e.dom();
  std::vector<int> preimage(c.object_count());
  for (int x = 0; x < a.object_count(); ++x) preimage[e.obj(x)] = x;

  auto f_obj = [&](int x) {
    return f.dom().shares_data(a) ? f.obj(x) : f.obj(f.dom().object(a.object_name(x)));
  };
  auto g_mor = [&](int w) {
    return g.dom().shares_data(c) ? g.mor(w) : g.mor(g.dom().morphism(c.morphism_name(w)));
  };
  auto m_codom = [&](int u) {  // m.cod() index of g's image
    return g.cod().shares_data(m.cod()) ? u : m.cod().morphism(g.cod().morphism_name(u));
  };

  std::vector<int> objs(c.object_count());
  for (int x = 0; x < c.object_count(); ++x) objs[x] = f_obj(preimage[x]);
  std::vector<int> mors(c.morphism_count());
  for (int w = 0; w < c.morphism_count(); ++w) {
    const int target = m_codom(g_mor(w));
    int found = -1;
    for (int v : b.hom(objs[c.src(w)], objs[c.tgt(w)])) {
      if (m.mor(v) == target) found = v;
    }
    if (found < 0) {
      throw Error(ErrorCode::PreconditionViolated, "no preimage under m",
                  c.morphism_name(w));
    }
    mors[w] = found;
  }
  return Functor(c, b, std::move(objs), std::move(mors));
}

}  // namespace dlens
