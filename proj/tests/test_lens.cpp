#include <numeric>

#include "support.hpp"
#include "dlens/cofunctor.hpp"
#include "dlens/lens.hpp"
#include "dlens/limits.hpp"
#include "dlens/mealy.hpp"
#include "dlens/search.hpp"

using namespace dlens;
using namespace support;
namespace fx = dlens::fixtures;

namespace {

Cofunctor one_to_two() {
  RawCofunctor raw;
  raw.obj_assign = {{"0", "*"}, {"1", "*"}};
  raw.lifts = {{"0", "1_*", "1_0"}, {"1", "1_*", "1_1"}};
  return check_cofunctor(raw, fx::two(), fx::one());
}

Lens two_one_lens() { return check_lens(two_to_one(), one_to_two()); }

MealyMorphism two_state() {
  RawMealy raw;
  raw.states = {"x", "y"};
  raw.g0 = {{"x", "0"}, {"y", "1"}};
  raw.f0 = {{"x", "0"}, {"y", "1"}};
  raw.transitions = {{"x", "1_0", "x", "1_0"}, {"x", "u", "y", "u"}, {"y", "1_1", "y", "1_1"}};
  return check_mealy(raw, fx::two(), fx::two());
}

std::vector<Functor> discrete_opfibrations_between_gallery() {
  std::vector<FinCat> cats = {fx::one(), fx::two(), fx::disc2(), fx::idem(), fx::par2(),
                              fx::z2(), make_category({"1"}, {})};
  std::vector<Functor> out;
  for (const auto& a : cats)
    for (const auto& b : cats)
      for (const auto& f : all_functors(a, b))
        if (is_discrete_opfibration(f)) out.push_back(f);
  return out;
}

/// States of a composite with an identity Mealy renamed to the states of
/// the other factor.
MealyMorphism strip_identity(const MealyComposite& c, bool identity_first, const MealyMorphism& m) {
  std::vector<std::string> names;
  for (auto [x, y] : c.parts) names.push_back(m.state_name(identity_first ? y : x));
  return rename_states(c.mealy, names);
}

}  // namespace

TEST_CASE("check_cofunctor examples") {
  CHECK_NOTHROW(check_cofunctor(identity_cofunctor(fx::two())));
  CHECK_NOTHROW(check_cofunctor(to_raw(identity_cofunctor(fx::two())), fx::two(), fx::two()));
  CHECK_NOTHROW(one_to_two());

  RawCofunctor bad = to_raw(identity_cofunctor(fx::two()));
  for (auto& l : bad.lifts)
    if (l[0] == "0" && l[1] == "u") l[2] = "1_0";
  const Error e = error_of([&] { check_cofunctor(bad, fx::two(), fx::two()); });
  CHECK(e.code() == ErrorCode::AxiomViolation);
  CHECK(e.axiom() == 1);
  CHECK(e.witness() == "(0, u)");

  RawCofunctor not_identity = to_raw(identity_cofunctor(fx::idem()));
  for (auto& l : not_identity.lifts)
    if (l[1] == "1_*") l[2] = "e";
  CHECK(error_of([&] { check_cofunctor(not_identity, fx::idem(), fx::idem()); }).axiom() == 2);

  // Lifting e to the identity breaks composition: e∘e = e must lift to 1∘1.
  RawCofunctor bad_comp;
  bad_comp.obj_assign = {{"*", "*"}};
  bad_comp.lifts = {{"*", "1_*", "1_*"}, {"*", "e", "s"}};
  CHECK(error_of([&] { check_cofunctor(bad_comp, fx::z2(), fx::idem()); }).axiom() == 3);

  RawCofunctor missing = to_raw(identity_cofunctor(fx::two()));
  missing.lifts.pop_back();
  CHECK(code_of([&] { check_cofunctor(missing, fx::two(), fx::two()); }) == ErrorCode::Incomplete);
}

TEST_CASE("compose_cofunctors") {
  const Cofunctor c = one_to_two();
  CHECK(compose_cofunctors(identity_cofunctor(fx::one()), c) == c);
  CHECK(compose_cofunctors(c, identity_cofunctor(fx::two())) == c);

  SUBCASE("composite of opfibration cofunctors is the cofunctor of the composite") {
    const auto fs = discrete_opfibrations_between_gallery();
    int pairs = 0;
    for (const auto& f : fs) {      // f: A -> B
      for (const auto& g : fs) {    // g: B -> C
        if (!(f.cod() == g.dom())) continue;
        const Cofunctor lhs = compose_cofunctors(cofunctor_from_opfibration(g),
                                                 cofunctor_from_opfibration(f));
        CHECK(lhs == cofunctor_from_opfibration(compose(g, f)));
        ++pairs;
      }
    }
    CHECK(pairs > 10);
  }

  SUBCASE("associativity on generated triples") {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const FinCat c = random_category(s);
      const Cofunctor c1 = gen_cofunctor(small(s), c);
      const Cofunctor c2 = gen_cofunctor(small(s + 100), c1.total());
      const Cofunctor c3 = gen_cofunctor(small(s + 200), c2.total());
      const Cofunctor left = compose_cofunctors(compose_cofunctors(c1, c2), c3);
      const Cofunctor right = compose_cofunctors(c1, compose_cofunctors(c2, c3));
      CHECK(left == right);
      CHECK_NOTHROW(check_cofunctor(left));
    }
  }
}

TEST_CASE("cofunctor span representation") {
  const CofunctorSpan id = cofunctor_span_rep(identity_cofunctor(fx::two()));
  CHECK(find_isomorphism(id.apex, fx::two()).has_value());
  CHECK(is_isomorphism(id.left));
  CHECK(is_isomorphism(id.right));

  const CofunctorSpan s = cofunctor_span_rep(one_to_two());
  CHECK(find_isomorphism(s.apex, fx::disc2()).has_value());
  CHECK(is_discrete_opfibration(s.left));
  CHECK(is_identity_on_objects(s.right));
  CHECK(span_to_cofunctor(s) == one_to_two());

  CHECK(span_to_cofunctor({fx::two(), identity_functor(fx::two()), identity_functor(fx::two())}) ==
        identity_cofunctor(fx::two()));
  CHECK(code_of([] {
          span_to_cofunctor({fx::two(), two_to_one(), identity_functor(fx::two())});
        }) == ErrorCode::ShapeError);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Cofunctor c = gen_cofunctor(small(seed), random_category(seed));
    const CofunctorSpan rep = cofunctor_span_rep(c);
    CHECK(classify_functor(rep.left).is_discrete_opfibration);
    CHECK(is_identity_on_objects(rep.right));
    CHECK(check_category_laws(rep.apex).ok);
    CHECK(span_to_cofunctor(rep) == c);
  }
}

TEST_CASE("check_mealy examples") {
  CHECK_NOTHROW(check_mealy(identity_mealy(fx::two())));
  CHECK_NOTHROW(two_state());

  RawMealy bad = to_raw(two_state());
  for (auto& t : bad.transitions)
    if (t[1] == "u") t[3] = "1_0";
  const Error e = error_of([&] { check_mealy(bad, fx::two(), fx::two()); });
  CHECK(e.code() == ErrorCode::AxiomViolation);
  CHECK(e.axiom() == 0);

  RawMealy wrong_state = to_raw(two_state());
  for (auto& t : wrong_state.transitions)
    if (t[1] == "u") t[2] = "x", t[3] = "1_0";
  CHECK(error_of([&] { check_mealy(wrong_state, fx::two(), fx::two()); }).axiom() == 1);

  RawMealy moved = to_raw(identity_mealy(fx::idem()));
  moved.states = {"*", "o"};
  moved.g0["o"] = "*";
  moved.f0["o"] = "*";
  moved.transitions = {{"*", "1_*", "o", "1_*"}, {"*", "e", "*", "e"},
                       {"o", "1_*", "o", "1_*"}, {"o", "e", "o", "e"}};
  CHECK(error_of([&] { check_mealy(moved, fx::idem(), fx::idem()); }).axiom() == 2);

  RawMealy noncomp;
  noncomp.states = {"*"};
  noncomp.g0 = {{"*", "*"}};
  noncomp.f0 = {{"*", "*"}};
  noncomp.transitions = {{"*", "1_*", "*", "1_*"}, {"*", "e", "*", "s"}};
  CHECK(error_of([&] { check_mealy(noncomp, fx::idem(), fx::z2()); }).axiom() == 3);
}

TEST_CASE("compose_mealy") {
  const MealyMorphism m = two_state();
  const MealyComposite left = compose_mealy_detailed(identity_mealy(fx::two()), m);
  CHECK(strip_identity(left, true, m) == m);
  const MealyComposite right = compose_mealy_detailed(m, identity_mealy(fx::two()));
  CHECK(strip_identity(right, false, m) == m);

  const MealyMorphism mm = compose_mealy(m, m);
  CHECK(mm.states() == std::vector<std::string>{"(x,x)", "(y,y)"});
  CHECK(rename_states(mm, {"x", "y"}) == m);

  for (std::uint64_t s = 0; s < 30; ++s) {
    const FinCat a = random_category(s), b = random_category(s + 1),
                 c = random_category(s + 2), d = random_category(s + 3);
    const MealyMorphism m1 = gen_mealy(small(s), a, b);
    const MealyMorphism m2 = gen_mealy(small(s + 50), b, c);
    const MealyMorphism m3 = gen_mealy(small(s + 90), c, d);
    const MealyComposite m12 = compose_mealy_detailed(m1, m2);
    const MealyComposite l = compose_mealy_detailed(m12.mealy, m3);
    const MealyComposite m23 = compose_mealy_detailed(m2, m3);
    const MealyComposite r = compose_mealy_detailed(m1, m23.mealy);
    CHECK_NOTHROW(check_mealy(l.mealy));
    CHECK_NOTHROW(check_mealy(r.mealy));
    REQUIRE(l.mealy.state_count() == r.mealy.state_count());
    std::map<std::tuple<int, int, int>, int> right_index;
    for (int k = 0; k < r.mealy.state_count(); ++k) {
      const auto [x, yz] = r.parts[k];
      const auto [y, z] = m23.parts[yz];
      right_index[{x, y, z}] = k;
    }
    std::vector<int> assoc(l.mealy.state_count());
    for (int k = 0; k < l.mealy.state_count(); ++k) {
      const auto [xy, z] = l.parts[k];
      const auto [x, y] = m12.parts[xy];
      assoc[k] = right_index.at({x, y, z});
    }
    CHECK(check_mealy_map(assoc, l.mealy, r.mealy).ok);
  }
}

TEST_CASE("Mealy span representation") {
  const MealySpan id = mealy_span_rep(identity_mealy(fx::two()));
  CHECK(find_isomorphism(id.apex, fx::two()).has_value());
  const MealySpan two = mealy_span_rep(two_state());
  CHECK(find_isomorphism(two.apex, fx::two()).has_value());
  CHECK(two.apex.morphism_name(two.apex.hom(0, 1)[0]) == "(x,u)");

  for (std::uint64_t s = 0; s < 50; ++s) {
    const MealyMorphism m = gen_mealy(small(s), random_category(s), random_category(s + 7));
    CHECK_NOTHROW(check_mealy(m));
    const MealySpan rep = mealy_span_rep(m);
    CHECK(classify_functor(rep.left).is_discrete_opfibration);
    CHECK(check_functor_laws(rep.right).ok);
    CHECK(span_to_mealy(rep) == m);
  }
}

TEST_CASE("embeddings into Mealy morphisms commute with composition") {
  std::vector<FinCat> cats = {fx::one(), fx::two(), fx::idem(), fx::par2(), fx::z2()};
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      for (const auto& f : all_functors(a, b)) {
        for (const auto& c : cats) {
          for (const auto& g : all_functors(b, c)) {
            const MealyComposite comp =
                compose_mealy_detailed(mealy_from_functor(f), mealy_from_functor(g));
            std::vector<std::string> names;
            for (auto [x, y] : comp.parts) names.push_back(a.object_name(x));
            CHECK(rename_states(comp.mealy, names) == mealy_from_functor(compose(g, f)));
          }
        }
      }
    }
  }
  for (const auto& f : discrete_opfibrations_between_gallery()) {
    for (const auto& g : discrete_opfibrations_between_gallery()) {
      if (!(f.cod() == g.dom())) continue;
      // Cofunctors C ↛ B ↛ A from g: B -> C and f: A -> B.
      const Cofunctor cg = cofunctor_from_opfibration(g);
      const Cofunctor cf = cofunctor_from_opfibration(f);
      const MealyComposite comp = compose_mealy_detailed(mealy_from_cofunctor(cg),
                                                         mealy_from_cofunctor(cf));
      std::vector<std::string> names;
      for (auto [y, x] : comp.parts) names.push_back(f.dom().object_name(x));
      CHECK(rename_states(comp.mealy, names) ==
            mealy_from_cofunctor(compose_cofunctors(cg, cf)));
    }
  }
}

TEST_CASE("check_lens examples") {
  CHECK_NOTHROW(check_lens(identity_lens(fx::two())));
  CHECK_NOTHROW(two_one_lens());

  RawCofunctor idem_put;
  idem_put.obj_assign = {{"*", "*"}};
  idem_put.lifts = {{"*", "1_*", "e"}};
  const Cofunctor unchecked(fx::idem(), fx::one(), {0}, {fx::idem().morphism("e")});
  const Functor idem_get = functor_by_names(fx::idem(), fx::one(), {{"*", "*"}},
                                            {{"1_*", "1_*"}, {"e", "1_*"}});
  const Error e = error_of([&] { check_lens(idem_get, unchecked); });
  CHECK(e.code() == ErrorCode::AxiomViolation);
  CHECK(e.axiom() == 2);

  const Functor to_one_end = functor_by_names(fx::two(), fx::two(), {{"0", "1"}, {"1", "1"}},
                                              {{"1_0", "1_1"}, {"1_1", "1_1"}, {"u", "1_1"}});
  CHECK(code_of([&] { check_lens(to_one_end, identity_cofunctor(fx::two())); }) ==
        ErrorCode::ObjectMismatch);

  const Functor into_par = functor_by_names(fx::two(), fx::par2(), {{"0", "0"}, {"1", "1"}},
                                            {{"1_0", "1_0"}, {"1_1", "1_1"}, {"u", "u"}});
  RawCofunctor collapse;
  collapse.obj_assign = {{"0", "0"}, {"1", "1"}};
  collapse.lifts = {{"0", "1_0", "1_0"}, {"0", "u", "u"}, {"0", "v", "u"}, {"1", "1_1", "1_1"}};
  const Cofunctor put = check_cofunctor(collapse, fx::two(), fx::par2());
  const Error pg = error_of([&] { check_lens(into_par, put); });
  CHECK(pg.code() == ErrorCode::PutGetViolation);
  CHECK(pg.witness() == "(0, v)");
}

TEST_CASE("compose_lens") {
  const Lens l = two_one_lens();
  CHECK(compose_lens(identity_lens(fx::two()), l) == l);
  CHECK(compose_lens(l, identity_lens(fx::one())) == l);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const FinCat c = random_category(s);
    const Lens l2 = gen_lens(small(s), c);
    const Lens l1 = gen_lens(small(s + 1000), l2.source());
    const Lens comp = compose_lens(l1, l2);
    CHECK_NOTHROW(check_lens(comp));
    const LensDiagram d1 = lens_diagram_rep(l1);
    const LensDiagram d2 = lens_diagram_rep(l2);
    const Pullback pb(d1.base_leg, d2.put_leg);
    CHECK(find_isomorphism(lens_diagram_rep(comp).apex, pb.apex()).has_value());
  }
}

TEST_CASE("lens diagram representation") {
  const LensDiagram id = lens_diagram_rep(identity_lens(fx::two()));
  CHECK(is_isomorphism(id.put_leg));
  CHECK(is_isomorphism(id.base_leg));

  const LensDiagram d = lens_diagram_rep(two_one_lens());
  CHECK(find_isomorphism(d.apex, fx::disc2()).has_value());
  CHECK(diagram_to_lens(d) == two_one_lens());

  LensDiagram broken = d;
  broken.get = functor_by_names(fx::two(), fx::one(), {{"0", "*"}, {"1", "*"}},
                                {{"1_0", "1_*"}, {"1_1", "1_*"}, {"u", "1_*"}});
  broken.base_leg = identity_functor(d.apex);
  CHECK(code_of([&] { diagram_to_lens(broken); }) == ErrorCode::ShapeError);

  for (std::uint64_t s = 0; s < 50; ++s) {
    const Lens l = gen_lens(small(s), random_category(s));
    CHECK_NOTHROW(check_lens(l));
    const LensDiagram rep = lens_diagram_rep(l);
    CHECK(is_identity_on_objects(rep.put_leg));
    CHECK(is_discrete_opfibration(rep.base_leg));
    CHECK(compose(rep.get, rep.put_leg) == rep.base_leg);
    CHECK(diagram_to_lens(rep) == l);
    CHECK(cofunctor_span_rep(l.put).left == rep.base_leg);
  }
}
