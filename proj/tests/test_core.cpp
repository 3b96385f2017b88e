#include <algorithm>
#include <random>

#include "doctest.h"
#include "dlens/factorisation.hpp"
#include "dlens/fixtures.hpp"
#include "dlens/limits.hpp"
#include "dlens/pushout.hpp"
#include "dlens/search.hpp"

using namespace dlens;
namespace fx = dlens::fixtures;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

RawCategory raw_two() { return to_raw(fx::two()); }

Functor functor_by_names(const FinCat& dom, const FinCat& cod,
                         const std::map<std::string, std::string>& objs,
                         const std::map<std::string, std::string>& mors) {
  return validate_functor({objs, mors}, dom, cod);
}

Functor two_to_one() {
  return functor_by_names(fx::two(), fx::one(), {{"0", "*"}, {"1", "*"}},
                          {{"1_0", "1_*"}, {"1_1", "1_*"}, {"u", "1_*"}});
}

Functor incl_one_into_two() {
  FinCat pt = make_category({"1"}, {});
  return functor_by_names(pt, fx::two(), {{"1", "1"}}, {{"1_1", "1_1"}});
}

std::vector<FinCat> gallery() {
  return {fx::one(),   fx::two(),  fx::disc2(), fx::idem(),   fx::par2(),
          fx::three(), fx::iso2(), fx::z2(),    fx::cospan()};
}

}  // namespace

TEST_CASE("validate_category accepts fixtures and rejects broken tables") {
  for (const auto& c : gallery()) CHECK(check_category_laws(c).ok);

  RawCategory missing = raw_two();
  std::erase_if(missing.composition,
                [](const auto& t) { return t[0] == "u" && t[1] == "1_0"; });
  CHECK(code_of([&] { validate_category(missing); }) == ErrorCode::MissingComposite);

  RawCategory bad_ends = raw_two();
  bad_ends.composition.push_back({"u", "1_1", "u"});
  CHECK(code_of([&] { validate_category(bad_ends); }) == ErrorCode::EndpointMismatch);

  RawCategory bad_law = to_raw(fx::idem());
  for (auto& t : bad_law.composition) {
    if (t[0] == "e" && t[1] == "1_*") t[2] = "1_*";
  }
  CHECK(code_of([&] { validate_category(bad_law); }) == ErrorCode::LawViolation);
}

TEST_CASE("validate_functor") {
  CHECK(check_functor_laws(identity_functor(fx::two())).ok);
  CHECK(check_functor_laws(two_to_one()).ok);
  CHECK(code_of([] {
          functor_by_names(fx::two(), fx::two(), {{"0", "0"}, {"1", "1"}},
                           {{"1_0", "1_0"}, {"1_1", "1_1"}, {"u", "1_0"}});
        }) == ErrorCode::NotAFunctor);
}

TEST_CASE("classify_functor on the documented examples") {
  const auto id = classify_functor(identity_functor(fx::two()));
  CHECK(id.is_discrete_opfibration);
  CHECK(id.is_bijective_on_objects);
  CHECK(id.is_fully_faithful);

  const auto bang = classify_functor(two_to_one());
  CHECK_FALSE(bang.is_discrete_opfibration);
  CHECK_FALSE(bang.is_bijective_on_objects);
  CHECK_FALSE(bang.is_fully_faithful);
  REQUIRE(bang.opfibration_witness);
  CHECK(bang.opfibration_witness->find("(0, 1_*)") != std::string::npos);
  CHECK(bang.fully_faithful_witness.has_value());

  const auto incl = classify_functor(incl_one_into_two());
  CHECK(incl.is_discrete_opfibration);
  CHECK(incl.is_fully_faithful);
  CHECK_FALSE(incl.is_bijective_on_objects);
}

TEST_CASE("classification flags agree with direct lift counting") {
  auto cats = gallery();
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      for (const auto& f : all_functors(a, b)) {
        bool dopf = true;
        for (int x = 0; x < a.object_count(); ++x) {
          for (int u : b.out(f.obj(x))) {
            int lifts = 0;
            for (int w : a.out(x)) lifts += f.mor(w) == u;
            dopf = dopf && lifts == 1;
          }
        }
        bool ff = true;
        for (int x = 0; x < a.object_count(); ++x) {
          for (int y = 0; y < a.object_count(); ++y) {
            for (int u : b.hom(f.obj(x), f.obj(y))) {
              int pre = 0;
              for (int w : a.hom(x, y)) pre += f.mor(w) == u;
              ff = ff && pre == 1;
            }
          }
        }
        std::vector<int> objs = f.object_map();
        std::sort(objs.begin(), objs.end());
        const bool bij = a.object_count() == b.object_count() &&
                         std::adjacent_find(objs.begin(), objs.end()) == objs.end();
        const auto k = classify_functor(f);
        CHECK(k.is_discrete_opfibration == dopf);
        CHECK(k.is_fully_faithful == ff);
        CHECK(k.is_bijective_on_objects == bij);
        CHECK(k.opfibration_witness.has_value() == !dopf);
        CHECK(k.fully_faithful_witness.has_value() == !ff);
      }
    }
  }
}

TEST_CASE("boff_factorize examples") {
  const auto id = boff_factorize(identity_functor(fx::two()));
  CHECK(id.image.morphism_count() == 3);
  CHECK(find_isomorphism(id.image, fx::two()).has_value());

  const auto bang = boff_factorize(two_to_one());
  CHECK(bang.image.object_count() == 2);
  CHECK(bang.image.morphism_count() == 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(bang.image.hom(a, b).size() == 1);

  const auto incl = boff_factorize(incl_one_into_two());
  CHECK(incl.image.object_count() == 1);
  CHECK(incl.image.morphism_count() == 1);
  CHECK(incl.image.morphism_name(0) == "(1,1_1,1)");
  CHECK(compose(incl.m, incl.e) == incl_one_into_two());
  CHECK(incl.m.cod() == fx::two());
}

TEST_CASE("boff_factorize invariants over all gallery functors") {
  auto cats = gallery();
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      for (const auto& f : all_functors(a, b)) {
        const auto fac = boff_factorize(f);
        CHECK(check_category_laws(fac.image).ok);
        CHECK(compose(fac.m, fac.e) == f);
        CHECK(is_identity_on_objects(fac.e));
        CHECK(is_fully_faithful(fac.m));
        CHECK(check_functor_laws(fac.e).ok);
        CHECK(check_functor_laws(fac.m).ok);
      }
    }
  }
}

TEST_CASE("boff_fill returns the unique diagonal") {
  SUBCASE("trivial cases") {
    const Functor f = two_to_one();
    const Functor id2 = identity_functor(fx::two());
    const Functor id1 = identity_functor(fx::one());
    CHECK(boff_fill(id2, id1, f, f) == f);
    const Functor incl = incl_one_into_two();
    CHECK(boff_fill(identity_functor(incl.dom()), incl, identity_functor(incl.dom()), incl) ==
          identity_functor(incl.dom()));
    const auto fac = boff_factorize(f);
    CHECK(boff_fill(fac.e, id1, f, fac.m) == fac.m);
  }
  SUBCASE("TWO -> indiscrete pair against {1} -> TWO, exhaustively") {
    const auto fac = boff_factorize(two_to_one());
    const Functor& e = fac.e;
    const FinCat& ind = fac.image;
    const Functor m = incl_one_into_two();
    const FinCat& pt = m.dom();
    int squares = 0;
    for (const auto& f : all_functors(fx::two(), pt)) {
      for (const auto& g : all_functors(ind, fx::two())) {
        if (!(compose(m, f) == compose(g, e))) continue;
        ++squares;
        const Functor h = boff_fill(e, m, f, g);
        int fillers = 0;
        for (const auto& k : all_functors(ind, pt)) {
          if (compose(k, e) == f && compose(m, k) == g) {
            ++fillers;
            CHECK(k == h);
          }
        }
        CHECK(fillers == 1);
      }
    }
    CHECK(squares > 0);
  }
  SUBCASE("non-commuting square is rejected") {
    const Functor id2 = identity_functor(fx::two());
    const Functor bang = two_to_one();
    const Functor idone = identity_functor(fx::one());
    const Functor other = validate_functor(
        {{{"*", "0"}}, {{"1_*", "1_0"}}}, fx::one(), fx::two());
    CHECK(code_of([&] { boff_fill(id2, id2, id2, compose(other, bang)); }) ==
          ErrorCode::PreconditionViolated);
    CHECK(code_of([&] { boff_fill(bang, idone, bang, bang); }) ==
          ErrorCode::PreconditionViolated);
  }
}

TEST_CASE("boff_fill uniqueness over every square of gallery boff factorisations") {
  auto cats = gallery();
  int checked = 0;
  for (const auto& c : cats) {
    for (const auto& b : cats) {
      for (const auto& target : all_functors(c, b)) {
        const auto fac = boff_factorize(target);
        // Square with e = fac.e, m = fac.m, f = fac.e, g = fac.m.
        const Functor h = boff_fill(fac.e, fac.m, fac.e, fac.m);
        int fillers = 0;
        for (const auto& k : all_functors(fac.image, fac.image)) {
          fillers += compose(k, fac.e) == fac.e && compose(fac.m, k) == fac.m;
        }
        CHECK(fillers == 1);
        CHECK(h == identity_functor(fac.image));
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("pullback examples") {
  const Pullback diag(identity_functor(fx::two()), identity_functor(fx::two()));
  CHECK(find_isomorphism(diag.apex(), fx::two()).has_value());

  const Pullback sq(two_to_one(), two_to_one());
  CHECK(sq.apex().object_count() == 4);
  CHECK(sq.apex().morphism_count() == 9);
  CHECK(check_category_laws(sq.apex()).ok);

  const Functor bang = two_to_one();
  const Pullback one_leg(bang, identity_functor(fx::one()));
  CHECK(find_isomorphism(one_leg.apex(), fx::two()).has_value());
}

TEST_CASE("pullback universal property by brute force") {
  const std::vector<std::pair<Functor, Functor>> cospans = {
      {two_to_one(), two_to_one()},
      {incl_one_into_two(), identity_functor(fx::two())},
      {validate_functor({{{"*", "*"}}, {{"1_*", "1_*"}, {"e", "e"}}}, fx::idem(), fx::idem()),
       validate_functor({{{"*", "*"}}, {{"1_*", "1_*"}}}, fx::one(), fx::idem())},
      {validate_functor({{{"0", "0"}, {"1", "1"}}, {{"1_0", "1_0"}, {"1_1", "1_1"}, {"u", "u"}, {"v", "u"}}},
                        fx::par2(), fx::two()),
       identity_functor(fx::two())},
  };
  const std::vector<FinCat> tests = {fx::one(), fx::two(), fx::disc2(), fx::idem(),
                                     fx::par2()};
  for (const auto& [f, g] : cospans) {
    const Pullback pb(f, g);
    CHECK(check_category_laws(pb.apex()).ok);
    for (const auto& d : tests) {
      const auto candidates = all_functors(d, pb.apex());
      for (const auto& h0 : all_functors(d, f.dom())) {
        for (const auto& h1 : all_functors(d, g.dom())) {
          if (!(compose(f, h0) == compose(g, h1))) continue;
          int mediators = 0;
          for (const auto& h : candidates) {
            mediators += compose(pb.p0(), h) == h0 && compose(pb.p1(), h) == h1;
          }
          CHECK(mediators == 1);
          CHECK(compose(pb.p0(), pb.pair(h0, h1)) == h0);
          CHECK(compose(pb.p1(), pb.pair(h0, h1)) == h1);
        }
      }
    }
  }
}

TEST_CASE("pushout examples") {
  const std::vector<std::string> objs = {"0", "1"};
  SUBCASE("TWO with DISC2 is TWO, saturated at bound 1") {
    const Pushout p = pushout_ioo(objs, fx::two(), fx::disc2(), 1);
    CHECK(p.presented.saturated());
    CHECK(p.apex.morphism_count() == 3);
    CHECK(find_isomorphism(p.apex, fx::two()).has_value());
  }
  SUBCASE("TWO with TWO gives a parallel pair") {
    const Pushout p = pushout_ioo(objs, fx::two(), fx::two());
    CHECK(p.apex.morphism_count() == 4);
    CHECK(p.apex.hom(p.apex.object("0"), p.apex.object("1")).size() == 2);
    CHECK(find_isomorphism(p.apex, fx::par2()).has_value());
    CHECK(check_category_laws(p.apex).ok);
  }
  SUBCASE("IDEM with IDEM never saturates") {
    std::size_t previous_total = 0;
    for (std::size_t bound = 1; bound <= 8; ++bound) {
      try {
        pushout_ioo({"*"}, fx::idem(), fx::idem(), bound);
        FAIL("expected NotSaturated");
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::NotSaturated);
        CHECK(e.bound == bound);
        REQUIRE(e.word_counts.size() == bound + 1);
        std::size_t total = 0;
        for (std::size_t k = 0; k <= bound; ++k) {
          // Exactly two alternating words of each positive length.
          CHECK(e.word_counts[k] == (k == 0 ? 1u : 2u));
          total += e.word_counts[k];
        }
        CHECK(total > previous_total);
        previous_total = total;
      }
    }
  }
}

TEST_CASE("pushout universal property against small targets") {
  struct Case {
    std::vector<std::string> objs;
    FinCat plus, minus;
  };
  const std::vector<Case> cases = {
      {{"0", "1"}, fx::two(), fx::disc2()},
      {{"0", "1"}, fx::two(), fx::two()},
      {{"*"}, fx::idem(), fx::one()},
      {{"*"}, fx::z2(), fx::one()},
      {{"0", "1"}, fx::iso2(), fx::disc2()},
  };
  const std::vector<FinCat> targets = {fx::one(), fx::two(), fx::par2(), fx::idem(),
                                       fx::z2(), fx::iso2()};
  for (const auto& c : cases) {
    const Pushout p = pushout_ioo(c.objs, c.plus, c.minus);
    CHECK(check_category_laws(p.apex).ok);
    CHECK(is_identity_on_objects(p.i0));
    CHECK(is_identity_on_objects(p.i1));
    for (const auto& y : targets) {
      const auto cands = all_functors(p.apex, y);
      for (const auto& hp : all_functors(c.plus, y)) {
        for (const auto& hm : all_functors(c.minus, y)) {
          bool agree = true;
          for (const auto& o : c.objs) {
            agree = agree && hp.obj(c.plus.object(o)) == hm.obj(c.minus.object(o));
          }
          if (!agree) continue;
          int mediators = 0;
          for (const auto& h : cands) {
            mediators += compose(h, p.i0) == hp && compose(h, p.i1) == hm;
          }
          CHECK(mediators == 1);
          CHECK(compose(p.copair(hp, hm), p.i0) == hp);
          CHECK(compose(p.copair(hp, hm), p.i1) == hm);
        }
      }
    }
  }
}

TEST_CASE("normal-form reduction is confluent under random merge orders") {
  std::mt19937_64 rng(11);
  const PresentedCategory pc =
      enumerate_words({"0", "1"}, fx::iso2(), fx::iso2(), 4);
  const auto& words = pc.words();
  for (int trial = 0; trial < 400; ++trial) {
    // Random composable letter sequence of length up to 7.
    int at = static_cast<int>(rng() % 2);
    const int source = at;
    std::vector<Letter> letters;
    const int len = static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) {
      const Side s = rng() % 2 ? Side::Plus : Side::Minus;
      const FinCat& c = pc.summand(s);
      const auto outs = c.out(c.object(pc.objects()[at]));
      const int m = outs[rng() % outs.size()];
      letters.push_back({s, m});
      at = pc.shared_object(s, c.tgt(m));
    }
    const Word first = pc.normalize(source, letters, [](std::size_t) { return 0; });
    CHECK(pc.is_normal(first));
    for (int r = 0; r < 5; ++r) {
      const Word w = pc.normalize(source, letters, [&](std::size_t n) { return rng() % n; });
      CHECK(w == first);
    }
  }
  CHECK(!words.empty());
}
