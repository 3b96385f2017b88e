#include "dlens/fixtures.hpp"

#include <map>
#include <set>

namespace dlens {

FinCat make_category(const std::vector<std::string>& objects,
                     const std::vector<MorphismDecl>& morphisms,
                     const std::vector<std::array<std::string, 3>>& composites) {
  RawCategory raw;
  raw.objects = objects;
  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const auto& o : objects) {
    const std::string id = "1_" + o;
    raw.morphisms.push_back({id, o, o});
    raw.identities[o] = id;
    ends[id] = {o, o};
  }
  for (const auto& m : morphisms) {
    raw.morphisms.push_back(m);
    ends[m.name] = {m.src, m.tgt};
  }
  for (const auto& [name, st] : ends) {
    raw.composition.push_back({"1_" + st.second, name, name});
    if (st.first != st.second || name != "1_" + st.first) {
      raw.composition.push_back({name, "1_" + st.first, name});
    }
  }
  for (const auto& c : composites) raw.composition.push_back(c);
  return validate_category(raw);
}

namespace fixtures {

FinCat one() { return make_category({"*"}, {}); }

FinCat two() { return make_category({"0", "1"}, {{"u", "0", "1"}}); }

FinCat disc2() { return make_category({"0", "1"}, {}); }

FinCat idem() { return make_category({"*"}, {{"e", "*", "*"}}, {{{"e", "e", "e"}}}); }

FinCat par2() {
  return make_category({"0", "1"}, {{"u", "0", "1"}, {"v", "0", "1"}});
}

FinCat three() {
  return make_category({"0", "1", "2"},
                       {{"u", "0", "1"}, {"v", "1", "2"}, {"w", "0", "2"}},
                       {{{"v", "u", "w"}}});
}

FinCat iso2() {
  return make_category({"0", "1"}, {{"i", "0", "1"}, {"j", "1", "0"}},
                       {{{"j", "i", "1_0"}}, {{"i", "j", "1_1"}}});
}

FinCat z2() { return make_category({"*"}, {{"s", "*", "*"}}, {{{"s", "s", "1_*"}}}); }

FinCat cospan() {
  return make_category({"0", "1", "2"}, {{"u", "0", "2"}, {"v", "1", "2"}});
}

}  // namespace fixtures
}  // namespace dlens
