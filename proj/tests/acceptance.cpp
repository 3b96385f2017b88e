// Acceptance run: one PASS/FAIL line per criterion, each within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "suite.hpp"
#include "dlens/limits.hpp"

using namespace dlens;
namespace fx = dlens::fixtures;

namespace {

/// Collects failure descriptions; empty means the criterion holds.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && messages_.size() < 5) messages_.push_back(what);
    failed_ |= !ok;
  }
  bool ok() const { return !failed_; }
  std::string str() const {
    std::string out;
    for (const auto& m : messages_) out += (out.empty() ? "" : "; ") + m;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> messages_;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<std::string(Failures&)> body;  // returns a short note
};

GenConfig small(std::uint64_t seed) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_objects = 3;
  cfg.max_generators = 3;
  cfg.morphism_cap = 12;
  cfg.max_states = 5;
  return cfg;
}

FinCat random_category(std::uint64_t seed) { return gen_category(small(seed * 7919 + 1)); }

/// Runs f and reports the thrown error, if any.
std::optional<Error> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return std::nullopt;
}

bool axiom_is(const std::function<void()>& f, int axiom) {
  const auto e = error_of(f);
  return e && e->code() == ErrorCode::AxiomViolation && e->axiom() == axiom;
}

bool code_is(const std::function<void()>& f, ErrorCode code) {
  const auto e = error_of(f);
  return e && e->code() == code;
}

Functor by_names(const FinCat& dom, const FinCat& cod, const std::map<std::string, std::string>& objs,
                 const std::map<std::string, std::string>& mors) {
  return validate_functor({objs, mors}, dom, cod);
}

MealyMorphism two_state() {
  RawMealy raw;
  raw.states = {"x", "y"};
  raw.g0 = {{"x", "0"}, {"y", "1"}};
  raw.f0 = {{"x", "0"}, {"y", "1"}};
  raw.transitions = {{"x", "1_0", "x", "1_0"}, {"x", "u", "y", "u"}, {"y", "1_1", "y", "1_1"}};
  return check_mealy(raw, fx::two(), fx::two());
}

void violating_fixtures(Failures& f) {
  RawCofunctor bad = to_raw(identity_cofunctor(fx::two()));
  for (auto& l : bad.lifts)
    if (l[0] == "0" && l[1] == "u") l[2] = "1_0";
  f.expect(axiom_is([&] { check_cofunctor(bad, fx::two(), fx::two()); }, 1), "cofunctor axiom 1");

  RawCofunctor not_identity = to_raw(identity_cofunctor(fx::idem()));
  for (auto& l : not_identity.lifts)
    if (l[1] == "1_*") l[2] = "e";
  f.expect(axiom_is([&] { check_cofunctor(not_identity, fx::idem(), fx::idem()); }, 2),
           "cofunctor axiom 2");

  RawCofunctor bad_comp;
  bad_comp.obj_assign = {{"*", "*"}};
  bad_comp.lifts = {{"*", "1_*", "1_*"}, {"*", "e", "s"}};
  f.expect(axiom_is([&] { check_cofunctor(bad_comp, fx::z2(), fx::idem()); }, 3),
           "cofunctor axiom 3");

  RawCofunctor missing = to_raw(identity_cofunctor(fx::two()));
  missing.lifts.pop_back();
  f.expect(code_is([&] { check_cofunctor(missing, fx::two(), fx::two()); }, ErrorCode::Incomplete),
           "cofunctor incomplete");

  RawMealy mistyped = to_raw(two_state());
  for (auto& t : mistyped.transitions)
    if (t[1] == "u") t[3] = "1_0";
  f.expect(axiom_is([&] { check_mealy(mistyped, fx::two(), fx::two()); }, 0), "mealy axiom 0");

  RawMealy wrong_state = to_raw(two_state());
  for (auto& t : wrong_state.transitions)
    if (t[1] == "u") t[2] = "x", t[3] = "1_0";
  f.expect(axiom_is([&] { check_mealy(wrong_state, fx::two(), fx::two()); }, 1), "mealy axiom 1");

  RawMealy moved = to_raw(identity_mealy(fx::idem()));
  moved.states = {"*", "o"};
  moved.g0["o"] = "*";
  moved.f0["o"] = "*";
  moved.transitions = {{"*", "1_*", "o", "1_*"}, {"*", "e", "*", "e"},
                       {"o", "1_*", "o", "1_*"}, {"o", "e", "o", "e"}};
  f.expect(axiom_is([&] { check_mealy(moved, fx::idem(), fx::idem()); }, 2), "mealy axiom 2");

  RawMealy noncomp;
  noncomp.states = {"*"};
  noncomp.g0 = {{"*", "*"}};
  noncomp.f0 = {{"*", "*"}};
  noncomp.transitions = {{"*", "1_*", "*", "1_*"}, {"*", "e", "*", "s"}};
  f.expect(axiom_is([&] { check_mealy(noncomp, fx::idem(), fx::z2()); }, 3), "mealy axiom 3");

  const Cofunctor unchecked(fx::idem(), fx::one(), {0}, {fx::idem().morphism("e")});
  const Functor idem_get = by_names(fx::idem(), fx::one(), {{"*", "*"}}, {{"1_*", "1_*"}, {"e", "1_*"}});
  f.expect(axiom_is([&] { check_lens(idem_get, unchecked); }, 2), "lens put axiom 2");

  const Functor to_one_end = by_names(fx::two(), fx::two(), {{"0", "1"}, {"1", "1"}},
                                      {{"1_0", "1_1"}, {"1_1", "1_1"}, {"u", "1_1"}});
  f.expect(code_is([&] { check_lens(to_one_end, identity_cofunctor(fx::two())); },
                   ErrorCode::ObjectMismatch),
           "lens object mismatch");

  const Functor into_par = by_names(fx::two(), fx::par2(), {{"0", "0"}, {"1", "1"}},
                                    {{"1_0", "1_0"}, {"1_1", "1_1"}, {"u", "u"}});
  RawCofunctor collapse;
  collapse.obj_assign = {{"0", "0"}, {"1", "1"}};
  collapse.lifts = {{"0", "1_0", "1_0"}, {"0", "u", "u"}, {"0", "v", "u"}, {"1", "1_1", "1_1"}};
  const Cofunctor put = check_cofunctor(collapse, fx::two(), fx::par2());
  const auto pg = error_of([&] { check_lens(into_par, put); });
  f.expect(pg && pg->code() == ErrorCode::PutGetViolation && pg->witness() == "(0, v)",
           "lens put-get violation");

  const SymmetricLens id = embed_lens_sym(identity_lens(fx::two()));
  RawMealy swapped;
  swapped.states = {"0", "1"};
  swapped.g0 = {{"0", "1"}, {"1", "0"}};
  swapped.f0 = {{"0", "1"}, {"1", "0"}};
  swapped.transitions = {{"0", "1_1", "0", "1_1"}, {"1", "1_0", "1", "1_0"}, {"1", "u", "0", "u"}};
  const MealyMorphism backward = check_mealy(swapped, fx::two(), fx::two());
  f.expect(code_is([&] { symlens_validate(id.forward, backward); }, ErrorCode::AnchorMismatch),
           "symlens anchor mismatch");
}

std::string law_suites(Failures& f) {
  const auto pairs = suite::adjunction_pairs();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::string at = " seed " + std::to_string(seed);
    const FinCat b = random_category(seed);
    const FinCat c = gen_category(small(seed));
    const auto& [x, y] = pairs[seed % pairs.size()];
    const GenConfig cfg = suite::adjunction_config(seed);
    f.expect(!error_of([&] { check_cofunctor(gen_cofunctor(small(seed), b)); }), "cofunctor" + at);
    f.expect(!error_of([&] { check_mealy(gen_mealy(small(seed), c, b)); }), "mealy" + at);
    f.expect(!error_of([&] { check_lens(gen_lens(small(seed), b)); }), "lens" + at);
    f.expect(!error_of([&] { check_span(gen_span(cfg, x, y)); }), "span" + at);
    f.expect(!error_of([&] { check_symlens(gen_symlens(cfg, x, y)); }), "symlens" + at);
  }
  violating_fixtures(f);
  return "500 generated, 14 violating fixtures";
}

std::string round_trips(Failures& f) {
  int dopf = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::string at = " seed " + std::to_string(seed);
    const FinCat b = random_category(seed);

    const Cofunctor c = gen_cofunctor(small(seed), b);
    const CofunctorSpan cs = cofunctor_span_rep(c);
    const CofunctorSpan cs2 = cofunctor_span_rep(span_to_cofunctor(cs));
    f.expect(span_to_cofunctor(cs) == c, "cofunctor inverse" + at);
    f.expect(cs2.apex == cs.apex && cs2.left == cs.left && cs2.right == cs.right, "cofunctor rep" + at);

    const MealyMorphism m = gen_mealy(small(seed), gen_category(small(seed)), b);
    const MealySpan ms = mealy_span_rep(m);
    const MealySpan ms2 = mealy_span_rep(span_to_mealy(ms));
    f.expect(span_to_mealy(ms) == m, "mealy inverse" + at);
    f.expect(ms2.apex == ms.apex && ms2.left == ms.left && ms2.right == ms.right, "mealy rep" + at);

    const Lens l = gen_lens(small(seed), b);
    const LensDiagram d = lens_diagram_rep(l);
    const LensDiagram d2 = lens_diagram_rep(diagram_to_lens(d));
    f.expect(diagram_to_lens(d) == l, "lens inverse" + at);
    f.expect(d2.apex == d.apex && d2.put_leg == d.put_leg && d2.base_leg == d.base_leg &&
                 d2.get == d.get,
             "lens rep" + at);

    for (const Functor* leg : {&cs.left, &ms.left, &d.base_leg}) {
      const bool ok = classify_functor(*leg).is_discrete_opfibration;
      f.expect(ok, "left leg not a discrete opfibration" + at);
      dopf += ok;
    }
  }
  return std::to_string(dopf) + "/300 left legs discrete opfibrations";
}

std::string lens_product(Failures& f) {
  const auto cospans = suite::lens_cospans();
  f.expect(cospans.size() >= 10, "fewer than 10 cospans");
  std::size_t cones = 0;
  for (const auto& [l1, l2] : cospans) {
    f.expect(l1.source().object_count() <= 3 && l2.source().object_count() <= 3, "fixture too large");
    try {
      const LensProduct p = lensB_product(l1, l2);
      f.expect(suite::lensB_morphism(p.proj0, p.lens, l1) && suite::lensB_morphism(p.proj1, p.lens, l2),
               "projection is not a morphism over the view");
      for (const Lens& d : suite::lenses_over(l1.view())) {
        for (const Functor& g1 : suite::lensB_morphisms(d, l1)) {
          for (const Functor& g2 : suite::lensB_morphisms(d, l2)) {
            int mediators = 0;
            for (const Functor& m : all_functors(d.source(), p.lens.source())) {
              if (suite::lensB_morphism(m, d, p.lens) && compose(p.proj0, m) == g1 &&
                  compose(p.proj1, m) == g2) {
                ++mediators;
              }
            }
            f.expect(mediators == 1, std::to_string(mediators) + " mediators");
            ++cones;
          }
        }
      }
    } catch (const Error& e) {
      f.expect(false, std::string("exception: ") + e.what());
    }
  }
  return std::to_string(cospans.size()) + " cospans, " + std::to_string(cones) + " cones";
}

std::string fake_pullback_forgets(Failures& f) {
  const std::vector<FinCat> views = {fx::one(), fx::two(), fx::idem()};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const FinCat& b = views[seed % views.size()];
    GenConfig c1 = small(seed);
    GenConfig c2 = small(seed + 1000);
    c1.max_states = c2.max_states = 3;
    const Lens l = gen_lens(c1, b);
    const Lens r = gen_lens(c2, b);
    const LensSpan s = fake_pullback(l, r);
    const Pullback pb(l.get, r.get);
    f.expect(s.apex == pb.apex() && s.left.get == pb.p0() && s.right.get == pb.p1(),
             "seed " + std::to_string(seed));
  }
  return "50 cospans";
}

std::string adjoint_triple(Failures& f) {
  std::size_t total = 0, saturated = 0;
  for (const auto& [a, b] : suite::adjunction_pairs()) {
    std::vector<SymmetricLens> syms;
    std::vector<LensSpan> spans;
    for (int i = 0; i < 50; ++i) {
      const GenConfig cfg = suite::adjunction_config(5000 + i);
      syms.push_back(gen_symlens(cfg, a, b));
      spans.push_back(gen_span(cfg, a, b));
    }
    const AdjunctionReport r = verify_adjunctions(a, b, syms, spans);
    std::size_t pair_saturated = 0;
    for (const auto& inst : r.instances) {
      for (const auto& [name, check] : inst.checks) {
        f.expect(check.status != CheckStatus::Fail, inst.id + " " + name + ": " + check.witness);
      }
      pair_saturated += inst.checks.at("ML-identity").status != CheckStatus::Skip;
    }
    for (const auto& [name, check] : r.summary()) {
      f.expect(check.status == CheckStatus::Pass, name + " never evaluated");
    }
    f.expect(pair_saturated * 5 >= r.instances.size() * 4, "under 80% saturate");
    total += r.instances.size();
    saturated += pair_saturated;
  }
  return std::to_string(saturated) + "/" + std::to_string(total) + " saturated";
}

std::vector<LensSpan> characterisation_suite() {
  std::vector<LensSpan> out;
  for (const auto& [a, b] : suite::adjunction_pairs()) {
    out.push_back(identity_span(a));
    for (int i = 0; i < 50; ++i) out.push_back(gen_span(suite::adjunction_config(7000 + i), a, b));
  }
  for (const FinCat& b : {fx::one(), fx::two()}) {
    for (const Lens& l : suite::lenses_over(b)) out.push_back(embed_lens_spn(l));
  }
  for (const auto& [l1, l2] : suite::lens_cospans()) out.push_back(fake_pullback(l1, l2));
  return out;
}

std::string characterisations(Failures& f) {
  int units = 0, counits = 0, skipped = 0, counterexamples = 0;
  for (const LensSpan& t : characterisation_suite()) {
    const SymmetricLens m = apply_M(t);
    const bool unit_iso = is_invertible_span_cell(unit_MR(t), t, apply_R(m));
    const bool ff = get_pairing_fully_faithful(t);
    counterexamples += unit_iso != ff;
    units += !unit_iso;
    const bool image = check_L_image(t).holds();
    try {
      const bool counit_iso = is_invertible_span_cell(counit_LM(t), apply_L(m), t);
      counterexamples += counit_iso != image;
      counits += !counit_iso;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LInapplicableAtBound) throw;
      // No finite L(M t) exists, so t cannot be an L-image.
      counterexamples += image;
      ++skipped;
    }
  }
  f.expect(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
  return std::to_string(units) + " non-invertible units, " + std::to_string(counits) +
         " non-invertible counits, " + std::to_string(skipped) + " unsaturated";
}

std::string bicategory(Failures& f) {
  const std::vector<FinCat> g = {fx::one(), fx::two(), fx::idem(), fx::disc2()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::string at = " seed " + std::to_string(seed);
    auto cfg = [&](std::uint64_t k) {
      GenConfig c = suite::adjunction_config(seed * 10 + k);
      c.max_states = 3;
      return c;
    };
    const FinCat& a = g[seed % 4];
    const FinCat& b = g[(seed + 1) % 4];
    const FinCat& c = g[(seed / 2) % 4];
    const FinCat& d = g[(seed + 3) % 4];

    const LensSpan s1 = gen_span(cfg(1), a, b), s2 = gen_span(cfg(2), b, c), s3 = gen_span(cfg(3), c, d);
    f.expect(is_invertible_span_cell(spnlens_associator(s1, s2, s3),
                                     spnlens_hcompose(spnlens_hcompose(s1, s2), s3),
                                     spnlens_hcompose(s1, spnlens_hcompose(s2, s3))),
             "span associator" + at);
    f.expect(is_invertible_span_cell(spnlens_left_unitor(s1), spnlens_hcompose(identity_span(a), s1), s1),
             "span left unitor" + at);
    f.expect(is_invertible_span_cell(spnlens_right_unitor(s1), spnlens_hcompose(s1, identity_span(b)), s1),
             "span right unitor" + at);

    const SymmetricLens y1 = gen_symlens(cfg(4), a, b), y2 = gen_symlens(cfg(5), b, c),
                        y3 = gen_symlens(cfg(6), c, d);
    f.expect(is_invertible_sym_cell(symlens_associator(y1, y2, y3),
                                    symlens_hcompose(symlens_hcompose(y1, y2), y3),
                                    symlens_hcompose(y1, symlens_hcompose(y2, y3))),
             "symlens associator" + at);
    f.expect(is_invertible_sym_cell(symlens_left_unitor(y1), symlens_hcompose(identity_symlens(a), y1), y1),
             "symlens left unitor" + at);
    f.expect(is_invertible_sym_cell(symlens_right_unitor(y1), symlens_hcompose(y1, identity_symlens(b)), y1),
             "symlens right unitor" + at);
  }
  return "20 triples and pairs each";
}

std::string pushout_infinite(Failures& f) {
  std::size_t previous = 0;
  std::ostringstream totals;
  for (std::size_t bound = 1; bound <= 8; ++bound) {
    const auto e = error_of([&] { pushout_ioo({"*"}, fx::idem(), fx::idem(), bound); });
    if (!e || e->code() != ErrorCode::NotSaturated) {
      f.expect(false, "bound " + std::to_string(bound) + " did not report NotSaturated");
      continue;
    }
    std::size_t total = 0;
    for (std::size_t n : e->word_counts) total += n;
    f.expect(e->bound == bound, "wrong bound reported");
    f.expect(total > previous, "word count did not grow at bound " + std::to_string(bound));
    totals << (bound == 1 ? "" : ",") << total;
    previous = total;
  }
  return "word counts " + totals.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "law suites", 10, law_suites},
      {2, "representation round-trips", 10, round_trips},
      {3, "lens product universal property", 60, lens_product},
      {4, "fake pullback forgets to pullback", 10, fake_pullback_forgets},
      {5, "adjoint triple", 120, adjoint_triple},
      {6, "reflective and coreflective characterisations", 60, characterisations},
      {7, "associators and unitors", 60, bicategory},
      {8, "pushout non-saturation", 5, pushout_infinite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Failures f;
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    try {
      note = c.body(f);
    } catch (const std::exception& e) {
      f.expect(false, std::string("uncaught: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    f.expect(secs < c.limit_s, "over time limit");
    const bool pass = f.ok();
    failed += !pass;
    std::printf("CRITERION %d %s %s (%.2fs / %.0fs) %s\n", c.id, pass ? "PASS" : "FAIL",
                c.name.c_str(), secs, c.limit_s, pass ? note.c_str() : f.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
