#include "dlens/fincat.hpp"

#include <unordered_map>

namespace dlens {

FinCat::FinCat() : d_(std::make_shared<Data>()) {}

FinCat FinCat::from_table(Table table) {
  const auto n_obj = table.objects.size();
  const auto n_mor = table.morphisms.size();
  if (table.src.size() != n_mor || table.tgt.size() != n_mor ||
      table.identity.size() != n_obj || table.compose.size() != n_mor * n_mor) {
    throw Error(ErrorCode::LawViolation, "malformed category table");
  }
  auto d = std::make_shared<Data>();
  for (std::size_t i = 0; i < n_obj; ++i) {
    if (!d->object_index.emplace(table.objects[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::LawViolation, "duplicate object name",
                  table.objects[i]);
    }
  }
  for (std::size_t i = 0; i < n_mor; ++i) {
    if (!d->morphism_index.emplace(table.morphisms[i], static_cast<int>(i))
             .second) {
      throw Error(ErrorCode::LawViolation, "duplicate morphism name",
                  table.morphisms[i]);
    }
  }
  d->homs.assign(n_obj * n_obj, {});
  d->outs.assign(n_obj, {});
  d->ins.assign(n_obj, {});
  for (std::size_t m = 0; m < n_mor; ++m) {
    const int s = table.src[m];
    const int t = table.tgt[m];
    d->homs[static_cast<std::size_t>(s) * n_obj + t].push_back(static_cast<int>(m));
    d->outs[s].push_back(static_cast<int>(m));
    d->ins[t].push_back(static_cast<int>(m));
  }
  d->t = std::move(table);
  FinCat c;
  c.d_ = std::move(d);
  return c;
}

std::optional<int> FinCat::find_object(std::string_view name) const {
  auto it = d_->object_index.find(std::string(name));
  if (it == d_->object_index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCat::find_morphism(std::string_view name) const {
  auto it = d_->morphism_index.find(std::string(name));
  if (it == d_->morphism_index.end()) return std::nullopt;
  return it->second;
}

int FinCat::object(std::string_view name) const {
  if (auto i = find_object(name)) return *i;
  throw Error(ErrorCode::UnknownName, "unknown object", std::string(name));
}

int FinCat::morphism(std::string_view name) const {
  if (auto i = find_morphism(name)) return *i;
  throw Error(ErrorCode::UnknownName, "unknown morphism", std::string(name));
}

bool operator==(const FinCat& a, const FinCat& b) {
  if (a.d_ == b.d_) return true;
  if (a.object_count() != b.object_count() ||
      a.morphism_count() != b.morphism_count()) {
    return false;
  }
  std::vector<int> obj(a.object_count());
  for (int i = 0; i < a.object_count(); ++i) {
    auto j = b.find_object(a.object_name(i));
    if (!j) return false;
    obj[i] = *j;
  }
  std::vector<int> mor(a.morphism_count());
  for (int i = 0; i < a.morphism_count(); ++i) {
    auto j = b.find_morphism(a.morphism_name(i));
    if (!j) return false;
    mor[i] = *j;
    if (obj[a.src(i)] != b.src(*j) || obj[a.tgt(i)] != b.tgt(*j)) return false;
  }
  for (int i = 0; i < a.object_count(); ++i) {
    if (mor[a.identity(i)] != b.identity(obj[i])) return false;
  }
  for (int g = 0; g < a.morphism_count(); ++g) {
    for (int f : a.into(a.src(g))) {
      if (mor[a.compose(g, f)] != b.compose(mor[g], mor[f])) return false;
    }
  }
  return true;
}

Verdict check_category_laws(const FinCat& c) {
  const int n = c.morphism_count();
  for (int a = 0; a < c.object_count(); ++a) {
    const int id = c.identity(a);
    if (id < 0 || id >= n || c.src(id) != a || c.tgt(id) != a) {
      return Verdict::fail("identity endpoints at " + c.object_name(a));
    }
  }
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      const int gf = c.compose(g, f);
      const bool composable = c.tgt(f) == c.src(g);
      if (composable != (gf >= 0)) {
        return Verdict::fail("composability of (" + c.morphism_name(g) + ", " +
                             c.morphism_name(f) + ")");
      }
      if (gf >= 0 && (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))) {
        return Verdict::fail("endpoints of " + c.morphism_name(g) + "∘" +
                             c.morphism_name(f));
      }
    }
  }
  for (int f = 0; f < n; ++f) {
    if (c.compose(c.identity(c.tgt(f)), f) != f ||
        c.compose(f, c.identity(c.src(f))) != f) {
      return Verdict::fail("unit law at " + c.morphism_name(f));
    }
  }
  for (int f = 0; f < n; ++f) {
    for (int g : c.out(c.tgt(f))) {
      const int gf = c.compose(g, f);
      for (int h : c.out(c.tgt(g))) {
        if (c.compose(h, gf) != c.compose(c.compose(h, g), f)) {
          return Verdict::fail("associativity at (" + c.morphism_name(h) +
                               ", " + c.morphism_name(g) + ", " +
                               c.morphism_name(f) + ")");
        }
      }
    }
  }
  return Verdict::pass();
}

FinCat validate_category(const RawCategory& raw) {
  FinCat::Table t;
  t.objects = raw.objects;
  std::unordered_map<std::string, int> obj;
  for (std::size_t i = 0; i < raw.objects.size(); ++i) {
    if (!obj.emplace(raw.objects[i], static_cast<int>(i)).second) {
      throw Error(ErrorCode::LawViolation, "duplicate object", raw.objects[i]);
    }
  }
  auto find_obj = [&](const std::string& name) {
    auto it = obj.find(name);
    if (it == obj.end()) {
      throw Error(ErrorCode::UnknownName, "unknown object", name);
    }
    return it->second;
  };
  std::unordered_map<std::string, int> mor;
  for (const auto& m : raw.morphisms) {
    if (!mor.emplace(m.name, static_cast<int>(t.morphisms.size())).second) {
      throw Error(ErrorCode::LawViolation, "duplicate morphism", m.name);
    }
    t.morphisms.push_back(m.name);
    t.src.push_back(find_obj(m.src));
    t.tgt.push_back(find_obj(m.tgt));
  }
  auto find_mor = [&](const std::string& name) {
    auto it = mor.find(name);
    if (it == mor.end()) {
      throw Error(ErrorCode::UnknownName, "unknown morphism", name);
    }
    return it->second;
  };
  const auto n = t.morphisms.size();
  t.identity.assign(t.objects.size(), -1);
  for (const auto& [o, m] : raw.identities) {
    const int a = find_obj(o);
    const int i = find_mor(m);
    if (t.src[i] != a || t.tgt[i] != a) {
      throw Error(ErrorCode::EndpointMismatch, "identity has wrong endpoints",
                  o + " -> " + m);
    }
    t.identity[a] = i;
  }
  for (std::size_t a = 0; a < t.objects.size(); ++a) {
    if (t.identity[a] < 0) {
      throw Error(ErrorCode::Incomplete, "missing identity", t.objects[a]);
    }
  }
  t.compose.assign(n * n, -1);
  for (const auto& [gname, fname, gfname] : raw.composition) {
    const int g = find_mor(gname);
    const int f = find_mor(fname);
    const int gf = find_mor(gfname);
    const std::string w = "(" + gname + ", " + fname + ") = " + gfname;
    if (t.tgt[f] != t.src[g]) {
      throw Error(ErrorCode::EndpointMismatch, "composite of non-composable pair",
                  w);
    }
    if (t.src[gf] != t.src[f] || t.tgt[gf] != t.tgt[g]) {
      throw Error(ErrorCode::EndpointMismatch, "composite has wrong endpoints",
                  w);
    }
    auto& slot = t.compose[static_cast<std::size_t>(g) * n + f];
    if (slot >= 0 && slot != gf) {
      throw Error(ErrorCode::LawViolation, "conflicting composition entries", w);
    }
    slot = gf;
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (t.tgt[f] == t.src[g] && t.compose[g * n + f] < 0) {
        throw Error(ErrorCode::MissingComposite, "composable pair has no entry",
                    "(" + t.morphisms[g] + ", " + t.morphisms[f] + ")");
      }
    }
  }
  FinCat c = FinCat::from_table(std::move(t));
  if (auto v = check_category_laws(c); !v) {
    throw Error(ErrorCode::LawViolation, "category law fails", v.witness);
  }
  return c;
}

RawCategory to_raw(const FinCat& c) {
  RawCategory raw;
  raw.objects = c.table().objects;
  for (int m = 0; m < c.morphism_count(); ++m) {
    raw.morphisms.push_back({c.morphism_name(m), c.object_name(c.src(m)),
                             c.object_name(c.tgt(m))});
  }
  for (int a = 0; a < c.object_count(); ++a) {
    raw.identities[c.object_name(a)] = c.morphism_name(c.identity(a));
  }
  for (int g = 0; g < c.morphism_count(); ++g) {
    for (int f : c.into(c.src(g))) {
      raw.composition.push_back({c.morphism_name(g), c.morphism_name(f),
                                 c.morphism_name(c.compose(g, f))});
    }
  }
  return raw;
}

FinCat discrete_category(const std::vector<std::string>& objects) {
  FinCat::Table t;
  t.objects = objects;
  const auto n = objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    t.morphisms.push_back("1_" + objects[i]);
    t.src.push_back(static_cast<int>(i));
    t.tgt.push_back(static_cast<int>(i));
    t.identity.push_back(static_cast<int>(i));
  }
  t.compose.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) t.compose[i * n + i] = static_cast<int>(i);
  return FinCat::from_table(std::move(t));
}

std::string pair_name(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

std::string triple_name(std::string_view a, std::string_view b,
                        std::string_view c) {
  std::string s = "(";
  s += a;
  s += ',';
  s += b;
  s += ',';
  s += c;
  s += ')';
  return s;
}

}  // namespace dlens
