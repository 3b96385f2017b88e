#include "dlens/limits.hpp"

namespace dlens {

namespace {
std::int64_t key(int x, int y, int width) {
  return static_cast<std::int64_t>(x) * width + y;
}
}  // namespace

Pullback::Pullback(const Functor& f, const Functor& g)
    : left_(f.dom()), right_(g.dom()) {
  if (!(f.cod() == g.cod())) {
    throw Error(ErrorCode::PreconditionViolated,
                "pullback legs have different codomains");
  }
  const FinCat& a = f.dom();
  const FinCat& b = g.dom();
  const FinCat& c = f.cod();
  // Compare in f.cod()'s indexing.
  auto g_obj = [&](int y) {
    return g.cod().shares_data(c) ? g.obj(y) : c.object(g.cod().object_name(g.obj(y)));
  };
  auto g_mor = [&](int v) {
    return g.cod().shares_data(c) ? g.mor(v)
                                  : c.morphism(g.cod().morphism_name(g.mor(v)));
  };

  FinCat::Table t;
  std::vector<std::pair<int, int>> obj_parts;
  for (int x = 0; x < a.object_count(); ++x) {
    for (int y = 0; y < b.object_count(); ++y) {
      if (f.obj(x) != g_obj(y)) continue;
      objects_.emplace(key(x, y, b.object_count()),
                       static_cast<int>(t.objects.size()));
      t.objects.push_back(pair_name(a.object_name(x), b.object_name(y)));
      obj_parts.emplace_back(x, y);
    }
  }
  std::vector<std::pair<int, int>> mor_parts;
  for (int u = 0; u < a.morphism_count(); ++u) {
    for (int v = 0; v < b.morphism_count(); ++v) {
      if (f.mor(u) != g_mor(v)) continue;
      morphisms_.emplace(key(u, v, b.morphism_count()),
                         static_cast<int>(t.morphisms.size()));
      t.morphisms.push_back(pair_name(a.morphism_name(u), b.morphism_name(v)));
      t.src.push_back(object_of(a.src(u), b.src(v)));
      t.tgt.push_back(object_of(a.tgt(u), b.tgt(v)));
      mor_parts.emplace_back(u, v);
    }
  }
  for (const auto& [x, y] : obj_parts) {
    t.identity.push_back(morphism_of(a.identity(x), b.identity(y)));
  }
  const auto n = t.morphisms.size();
  t.compose.assign(n * n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (t.tgt[q] != t.src[p]) continue;
      t.compose[p * n + q] =
          morphism_of(a.compose(mor_parts[p].first, mor_parts[q].first),
                      b.compose(mor_parts[p].second, mor_parts[q].second));
    }
  }
  apex_ = FinCat::from_table(std::move(t));

  std::vector<int> o0, o1, m0, m1;
  for (const auto& [x, y] : obj_parts) {
    o0.push_back(x);
    o1.push_back(y);
  }
  for (const auto& [u, v] : mor_parts) {
    m0.push_back(u);
    m1.push_back(v);
  }
  p0_ = Functor(apex_, a, std::move(o0), std::move(m0));
  p1_ = Functor(apex_, b, std::move(o1), std::move(m1));
}

int Pullback::object_of(int a, int b) const {
  auto it = objects_.find(key(a, b, right_.object_count()));
  return it == objects_.end() ? -1 : it->second;
}

int Pullback::morphism_of(int u, int v) const {
  auto it = morphisms_.find(key(u, v, right_.morphism_count()));
  return it == morphisms_.end() ? -1 : it->second;
}

Functor Pullback::pair(const Functor& h0, const Functor& h1) const {
  if (!(h0.dom() == h1.dom()) || !(h0.cod() == left_) || !(h1.cod() == right_)) {
    throw Error(ErrorCode::PreconditionViolated, "cone is not well-typed");
  }
  const FinCat& d = h0.dom();
  auto left_obj = [&](int x) {
    return h0.cod().shares_data(left_) ? h0.obj(x)
                                       : left_.object(h0.cod().object_name(h0.obj(x)));
  };
  auto right_obj = [&](int x) {
    const int xx = h1.dom().shares_data(d) ? x : h1.dom().object(d.object_name(x));
    return h1.cod().shares_data(right_)
               ? h1.obj(xx)
               : right_.object(h1.cod().object_name(h1.obj(xx)));
  };
  auto left_mor = [&](int w) {
    return h0.cod().shares_data(left_)
               ? h0.mor(w)
               : left_.morphism(h0.cod().morphism_name(h0.mor(w)));
  };
  auto right_mor = [&](int w) {
    const int ww = h1.dom().shares_data(d) ? w : h1.dom().morphism(d.morphism_name(w));
    return h1.cod().shares_data(right_)
               ? h1.mor(ww)
               : right_.morphism(h1.cod().morphism_name(h1.mor(ww)));
  };
  std::vector<int> objs(d.object_count()), mors(d.morphism_count());
  for (int x = 0; x < d.object_count(); ++x) {
    objs[x] = object_of(left_obj(x), right_obj(x));
    if (objs[x] < 0) {
      throw Error(ErrorCode::PreconditionViolated, "cone does not commute",
                  d.object_name(x));
    }
  }
  for (int w = 0; w < d.morphism_count(); ++w) {
    mors[w] = morphism_of(left_mor(w), right_mor(w));
    if (mors[w] < 0) {
      throw Error(ErrorCode::PreconditionViolated, "cone does not commute",
                  d.morphism_name(w));
    }
  }
  return Functor(d, apex_, std::move(objs), std::move(mors));
}

FinCat terminal_category() {
  static const FinCat one = discrete_category({"*"});
  return one;
}

Functor to_terminal(const FinCat& c) {
  return Functor(c, terminal_category(), std::vector<int>(c.object_count(), 0),
                 std::vector<int>(c.morphism_count(), 0));
}

Pullback product(const FinCat& a, const FinCat& b) {
  return Pullback(to_terminal(a), to_terminal(b));
}

}  // namespace dlens
