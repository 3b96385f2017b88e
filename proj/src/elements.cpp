#include "dlens/elements.hpp"

namespace dlens {

Elements elements_category(const FinCat& base,
                           const std::vector<std::string>& states,
                           const std::vector<int>& anchor,
                           const std::function<int(int, int)>& next) {
  const int n_base = base.morphism_count();
  const int n_states = static_cast<int>(states.size());
  FinCat::Table t;
  t.objects = states;
  std::vector<int> index(static_cast<std::size_t>(n_states) * n_base, -1);
  std::vector<int> state_of, morph_of;
  for (int x = 0; x < n_states; ++x) {
    for (int u : base.out(anchor[x])) {
      index[static_cast<std::size_t>(x) * n_base + u] = static_cast<int>(t.morphisms.size());
      t.morphisms.push_back(pair_name(states[x], base.morphism_name(u)));
      t.src.push_back(x);
      t.tgt.push_back(next(x, u));
      state_of.push_back(x);
      morph_of.push_back(u);
    }
  }
  for (int x = 0; x < n_states; ++x) {
    t.identity.push_back(index[static_cast<std::size_t>(x) * n_base + base.identity(anchor[x])]);
  }
  const auto n = t.morphisms.size();
  t.compose.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (t.tgt[f] != t.src[g]) continue;
      const int vu = base.compose(morph_of[g], morph_of[f]);
      t.compose[g * n + f] = index[static_cast<std::size_t>(state_of[f]) * n_base + vu];
    }
  }
  FinCat cat = FinCat::from_table(std::move(t));
  std::vector<int> objs(anchor.begin(), anchor.end());
  Functor projection(cat, base, std::move(objs), morph_of);
  return {std::move(cat), std::move(projection), std::move(index)};
}

}  // namespace dlens
