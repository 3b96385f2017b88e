#include "dlens/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "dlens/io.hpp"
#include "dlens/testgen.hpp"

namespace dlens::cli {

namespace {

using io::Json;
using io::Node;

struct Options {
  std::size_t bound = kDefaultBound;
  std::uint64_t seed = 0;
  int count = -1;
  std::string out;
  std::string format = "json";
};

/// A command's result: the document and whether every check it made passed.
struct Outcome {
  Json doc;
  int status = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void need(const std::vector<std::string>& in, std::size_t n, const std::string& verb) {
  if (in.size() != n) {
    throw UsageError(verb + " takes " + std::to_string(n) + " input file" + (n == 1 ? "" : "s"));
  }
}

Outcome verdict(const Verdict& v) { return {io::to_json(v), v.ok ? kOk : kCheckFailed}; }

Outcome failed(const Error& e) {
  return {{{"kind", "verdict"}, {"ok", false}, {"witness", e.what()}}, kCheckFailed};
}

Json functor_span_json(const std::string& kind, const FinCat& apex, const Functor& left,
                       const Functor& right) {
  return {{"kind", kind}, {"apex", io::to_json(apex)}, {"left", io::to_json(left)},
          {"right", io::to_json(right)}};
}

/// Loads a document of any kind and re-checks it.
Outcome validate(const Node& n) {
  const std::string kind = n.kind();
  try {
    if (kind == "category") read_category(n);
    else if (kind == "functor") read_functor(n);
    else if (kind == "cofunctor") read_cofunctor(n);
    else if (kind == "mealy") read_mealy(n);
    else if (kind == "lens") read_lens(n);
    else if (kind == "lens-span") read_span(n);
    else if (kind == "symmetric-lens") read_symlens(n);
    else n.fail("unknown document kind '" + kind + "'");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    return failed(e);
  }
  return {{{"kind", "verdict"}, {"ok", true}, {"witness", ""}}, kOk};
}

Outcome compose_docs(const Node& first, const Node& second) {
  const std::string kind = first.kind();
  if (second.kind() != kind) second.fail("cannot compose a " + kind + " with a " + second.kind());
  if (kind == "functor") {
    const Functor f = read_functor(first);
    return {io::to_json(compose(read_functor(second), f))};
  }
  if (kind == "cofunctor") {
    const Cofunctor c = read_cofunctor(first);
    return {io::to_json(compose_cofunctors(c, read_cofunctor(second)))};
  }
  if (kind == "mealy") {
    const MealyMorphism m = read_mealy(first);
    return {io::to_json(compose_mealy(m, read_mealy(second)))};
  }
  if (kind == "lens") {
    const Lens l = read_lens(first);
    return {io::to_json(compose_lens(l, read_lens(second)))};
  }
  if (kind == "lens-span") {
    const LensSpan t = read_span(first);
    return {io::to_json(spnlens_hcompose(t, read_span(second)))};
  }
  if (kind == "symmetric-lens") {
    const SymmetricLens s = read_symlens(first);
    return {io::to_json(symlens_hcompose(s, read_symlens(second)))};
  }
  first.fail("cannot compose documents of kind '" + kind + "'");
}

Outcome span_rep(const Node& n) {
  const std::string kind = n.kind();
  if (kind == "cofunctor") {
    const CofunctorSpan s = cofunctor_span_rep(read_cofunctor(n));
    return {functor_span_json("cofunctor-span", s.apex, s.left, s.right)};
  }
  if (kind == "mealy") {
    const MealySpan s = mealy_span_rep(read_mealy(n));
    return {functor_span_json("mealy-span", s.apex, s.left, s.right)};
  }
  if (kind == "lens") {
    const LensDiagram d = lens_diagram_rep(read_lens(n));
    return {{{"kind", "lens-diagram"},
             {"apex", io::to_json(d.apex)},
             {"putLeg", io::to_json(d.put_leg)},
             {"baseLeg", io::to_json(d.base_leg)},
             {"get", io::to_json(d.get)}}};
  }
  n.fail("span-rep takes a cofunctor, mealy or lens document");
}

Outcome check_2cell(const Node& n) {
  const std::string kind = n.kind();
  if (kind == "span-2cell") {
    const LensSpan src = read_span(n["source"]);
    const LensSpan tgt = read_span(n["target"]);
    Functor h;
    try {
      h = read_functor(n["h"], &src.apex, &tgt.apex);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      return failed(e);
    }
    return verdict(spnlens_2cell(h, src, tgt).verdict);
  }
  if (kind == "sym-2cell") {
    const SymmetricLens src = read_symlens(n["source"]);
    const SymmetricLens tgt = read_symlens(n["target"]);
    return verdict(symlens_2cell(io::read_state_map(n, src, tgt), src, tgt));
  }
  n.fail("check-2cell takes a span-2cell or sym-2cell document");
}

GenConfig gen_config(const Options& o, int offset) {
  GenConfig cfg;
  cfg.seed = o.seed + static_cast<std::uint64_t>(offset);
  cfg.max_states = 4;
  cfg.morphism_cap = 24;
  return cfg;
}

Outcome generate(const std::vector<std::string>& in, const Options& o) {
  if (in.empty()) throw UsageError("gen takes a kind: category|lens|cofunctor|mealy|symlens|span");
  const std::string& what = in[0];
  const std::vector<std::string> files(in.begin() + 1, in.end());
  std::function<Json(const GenConfig&)> one;
  if (what == "category") {
    need(files, 0, "gen category");
    one = [](const GenConfig& c) { return io::to_json(gen_category(c)); };
  } else if (what == "lens" || what == "cofunctor") {
    need(files, 1, "gen " + what);
    const FinCat b = read_category(Node::load(files[0]));
    if (what == "lens") one = [b](const GenConfig& c) { return io::to_json(gen_lens(c, b)); };
    else one = [b](const GenConfig& c) { return io::to_json(gen_cofunctor(c, b)); };
  } else if (what == "mealy" || what == "symlens" || what == "span") {
    need(files, 2, "gen " + what);
    const FinCat a = read_category(Node::load(files[0]));
    const FinCat b = read_category(Node::load(files[1]));
    if (what == "mealy") one = [a, b](const GenConfig& c) { return io::to_json(gen_mealy(c, a, b)); };
    else if (what == "symlens") one = [a, b](const GenConfig& c) { return io::to_json(gen_symlens(c, a, b)); };
    else one = [a, b](const GenConfig& c) { return io::to_json(gen_span(c, a, b)); };
  } else {
    throw UsageError("unknown generator kind '" + what + "'");
  }
  if (o.count < 0) return {one(gen_config(o, 0))};
  Json items = Json::array();
  for (int i = 0; i < o.count; ++i) items.push_back(one(gen_config(o, i)));
  return {{{"kind", "collection"}, {"items", std::move(items)}}};
}

Outcome check_adjunction(const std::vector<std::string>& in, const Options& o) {
  need(in, 2, "check-adjunction");
  const FinCat a = read_category(Node::load(in[0]));
  const FinCat b = read_category(Node::load(in[1]));
  const int count = o.count < 0 ? 50 : o.count;
  std::vector<SymmetricLens> syms;
  std::vector<LensSpan> spans;
  for (int i = 0; i < count; ++i) {
    const GenConfig cfg = gen_config(o, i);
    syms.push_back(gen_symlens(cfg, a, b));
    spans.push_back(gen_span(cfg, a, b));
  }
  const AdjunctionReport report = verify_adjunctions(a, b, syms, spans, o.bound);
  return {io::to_json(report), report.all_passed() ? kOk : kCheckFailed};
}

Outcome pushout_of(const std::vector<std::string>& in, const Options& o) {
  if (in.size() == 1) {
    const SymmetricLens s = read_symlens(Node::load(in[0]));
    const MealySpan plus = mealy_span_rep(s.forward);
    const MealySpan minus = mealy_span_rep(s.backward);
    return {io::to_json(pushout_ioo(s.forward.states(), plus.apex, minus.apex, o.bound))};
  }
  need(in, 2, "pushout");
  const FinCat plus = read_category(Node::load(in[0]));
  const FinCat minus = read_category(Node::load(in[1]));
  return {io::to_json(pushout_ioo(plus.table().objects, plus, minus, o.bound))};
}

Outcome dispatch(const std::string& verb, const std::vector<std::string>& in, const Options& o) {
  auto load = [&](std::size_t i) { return Node::load(in.at(i)); };
  if (verb == "validate") {
    need(in, 1, verb);
    return validate(load(0));
  }
  if (verb == "classify") {
    need(in, 1, verb);
    return {io::to_json(classify_functor(read_functor(load(0))))};
  }
  if (verb == "factor") {
    need(in, 1, verb);
    return {io::to_json(boff_factorize(read_functor(load(0))))};
  }
  if (verb == "compose") {
    need(in, 2, verb);
    return compose_docs(load(0), load(1));
  }
  if (verb == "span-rep") {
    need(in, 1, verb);
    return span_rep(load(0));
  }
  if (verb == "fake-pullback") {
    need(in, 2, verb);
    const Lens l = read_lens(load(0));
    return {io::to_json(fake_pullback(l, read_lens(load(1))))};
  }
  if (verb == "product") {
    need(in, 2, verb);
    const Lens l = read_lens(load(0));
    const LensProduct p = lensB_product(l, read_lens(load(1)));
    return {{{"kind", "lens-product"},
             {"lens", io::to_json(p.lens)},
             {"proj0", io::to_json(p.proj0)},
             {"proj1", io::to_json(p.proj1)}}};
  }
  if (verb == "apply") {
    need(in, 2, verb);
    if (in[0] == "M") return {io::to_json(apply_M(read_span(load(1))))};
    if (in[0] == "R") return {io::to_json(apply_R(read_symlens(load(1))))};
    if (in[0] == "L") return {io::to_json(apply_L(read_symlens(load(1)), o.bound))};
    throw UsageError("apply takes M, R or L");
  }
  if (verb == "dagger") {
    need(in, 1, verb);
    return {io::to_json(dagger(read_symlens(load(0))))};
  }
  if (verb == "embed") {
    need(in, 2, verb);
    if (in[0] == "spn") return {io::to_json(embed_lens_spn(read_lens(load(1))))};
    if (in[0] == "sym") return {io::to_json(embed_lens_sym(read_lens(load(1))))};
    throw UsageError("embed takes spn or sym");
  }
  if (verb == "check-2cell") {
    need(in, 1, verb);
    return check_2cell(load(0));
  }
  if (verb == "check-adjunction") return check_adjunction(in, o);
  if (verb == "gen") return generate(in, o);
  if (verb == "pullback") {
    need(in, 2, verb);
    const Functor f = read_functor(load(0));
    return {io::to_json(Pullback(f, read_functor(load(1))))};
  }
  if (verb == "pushout") return pushout_of(in, o);
  if (verb == "fill") {
    need(in, 4, verb);
    std::vector<Functor> fs;
    for (std::size_t i = 0; i < 4; ++i) fs.push_back(read_functor(load(i)));
    return {io::to_json(boff_fill(fs[0], fs[1], fs[2], fs[3]))};
  }
  throw UsageError("unknown verb '" + verb + "'");
}

std::string summary(const Json& doc) {
  std::string out;
  const std::string kind = doc.value("kind", "");
  if (kind == "adjunction-report") {
    for (const auto& [name, c] : doc["summary"].items()) {
      out += "CHECK " + name + " " + c["status"].get<std::string>() + "\n";
    }
  } else if (kind == "verdict") {
    out += std::string("CHECK verdict ") + (doc["ok"].get<bool>() ? "PASS" : "FAIL") + "\n";
  } else if (kind == "error") {
    out += "ERROR " + doc["code"].get<std::string>() + "\n";
  } else {
    out += "OK " + kind + "\n";
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& verbs() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"validate", "Check a document against its laws"},
      {"classify", "Classify a functor"},
      {"factor", "Bijective-on-objects / fully faithful factorisation of a functor"},
      {"compose", "Compose functors, cofunctors, Mealy morphisms, lenses, spans or symmetric lenses"},
      {"span-rep", "Span or diagram representation of a cofunctor, Mealy morphism or lens"},
      {"fake-pullback", "Fake pullback of a cospan of lenses"},
      {"product", "Product of two lenses over a common view"},
      {"apply", "Apply M, R or L"},
      {"dagger", "Reverse a symmetric lens"},
      {"embed", "Embed a lens as a span (spn) or a symmetric lens (sym)"},
      {"check-2cell", "Check a 2-cell between spans or symmetric lenses"},
      {"check-adjunction", "Verify the adjoint triple on generated or given instances"},
      {"gen", "Generate a random structure"},
      {"pullback", "Pullback of a cospan of functors"},
      {"pushout", "Pushout of two categories along their objects, or of the state categories of a symmetric lens"},
      {"fill", "Diagonal filler for a commuting square"}};
  return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite categories, delta lenses, spans and symmetric lenses"};
  app.require_subcommand(1, 1);
  Options o;
  std::vector<std::string> inputs;
  std::string verb;
  for (const auto& [v, about] : verbs()) {
    CLI::App* sub = app.add_subcommand(v, about);
    sub->add_option("inputs", inputs, "Input documents (and selectors)");
    sub->add_option("--bound", o.bound, "Word-length bound for pushouts")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Generator seed");
    sub->add_option("--count", o.count, "Number of generated instances")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", o.out, "Write the result document here");
    sub->add_option("--format", o.format, "json or summary")->check(CLI::IsMember({"json", "summary"}));
    sub->callback([&verb, v] { verb = v; });
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsageError;
  }

  Outcome result;
  try {
    result = dispatch(verb, inputs, o);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    result.doc = io::error_json(e);
    switch (e.code()) {
      case ErrorCode::ParseError: result.status = kUsageError; break;
      case ErrorCode::NotSaturated:
      case ErrorCode::LInapplicableAtBound: result.status = kNotSaturated; break;
      default: result.status = kCheckFailed; break;
    }
  }
  const std::string text = o.format == "summary" ? summary(result.doc) : io::dump(result.doc);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "cannot write " << o.out << "\n";
      return kUsageError;
    }
    f << text;
  }
  return result.status;
}

}  // namespace dlens::cli
