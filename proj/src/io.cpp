#include "dlens/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dlens::io {

namespace {

template <std::size_t N>
Json sorted_tuples(std::vector<std::array<std::string, N>> rows) {
  std::sort(rows.begin(), rows.end());
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

}  // namespace

Json to_json(const FinCat& c) {
  RawCategory raw = to_raw(c);
  std::sort(raw.morphisms.begin(), raw.morphisms.end(),
            [](const MorphismDecl& a, const MorphismDecl& b) { return a.name < b.name; });
  Json morphisms = Json::array();
  for (const auto& m : raw.morphisms) {
    morphisms.push_back({{"name", m.name}, {"src", m.src}, {"tgt", m.tgt}});
  }
  return {{"kind", "category"},
          {"objects", raw.objects},
          {"morphisms", std::move(morphisms)},
          {"identities", raw.identities},
          {"composition", sorted_tuples(raw.composition)}};
}

Json to_json(const Functor& f) {
  const RawFunctor raw = to_raw(f);
  return {{"kind", "functor"},
          {"dom", to_json(f.dom())},
          {"cod", to_json(f.cod())},
          {"onObjects", raw.on_objects},
          {"onMorphisms", raw.on_morphisms}};
}

Json to_json(const Cofunctor& c) {
  const RawCofunctor raw = to_raw(c);
  return {{"kind", "cofunctor"},
          {"total", to_json(c.total())},
          {"base", to_json(c.base())},
          {"objAssign", raw.obj_assign},
          {"lifts", sorted_tuples(raw.lifts)}};
}

Json to_json(const MealyMorphism& m) {
  const RawMealy raw = to_raw(m);
  return {{"kind", "mealy"},
          {"input", to_json(m.input())},
          {"output", to_json(m.output())},
          {"states", raw.states},
          {"g0", raw.g0},
          {"f0", raw.f0},
          {"transitions", sorted_tuples(raw.transitions)}};
}

Json to_json(const Lens& l) {
  return {{"kind", "lens"}, {"get", to_json(l.get)}, {"put", to_json(l.put)}};
}

Json to_json(const LensSpan& s) {
  return {{"kind", "lens-span"},
          {"apex", to_json(s.apex)},
          {"left", to_json(s.left)},
          {"right", to_json(s.right)}};
}

Json to_json(const SymmetricLens& s) {
  return {{"kind", "symmetric-lens"},
          {"states", s.forward.states()},
          {"forward", to_json(s.forward)},
          {"backward", to_json(s.backward)}};
}

Json to_json(const Verdict& v) {
  return {{"kind", "verdict"}, {"ok", v.ok}, {"witness", v.witness}};
}

Json to_json(const FunctorClass& k) {
  return {{"kind", "classification"},
          {"discreteOpfibration", k.is_discrete_opfibration},
          {"bijectiveOnObjects", k.is_bijective_on_objects},
          {"fullyFaithful", k.is_fully_faithful},
          {"opfibrationWitness", k.opfibration_witness.value_or("")},
          {"bijectionWitness", k.bijection_witness.value_or("")},
          {"fullyFaithfulWitness", k.fully_faithful_witness.value_or("")}};
}

Json to_json(const BoffFactorisation& f) {
  return {{"kind", "factorisation"}, {"e", to_json(f.e)}, {"image", to_json(f.image)},
          {"m", to_json(f.m)}};
}

Json to_json(const Pullback& p) {
  return {{"kind", "pullback"}, {"apex", to_json(p.apex())}, {"p0", to_json(p.p0())},
          {"p1", to_json(p.p1())}};
}

Json to_json(const Pushout& p) {
  return {{"kind", "pushout"},
          {"apex", to_json(p.apex)},
          {"i0", to_json(p.i0)},
          {"i1", to_json(p.i1)},
          {"bound", p.presented.bound()},
          {"wordCounts", p.presented.word_counts()}};
}

namespace {

Json check_json(const CheckResult& r) {
  return {{"status", std::string(to_string(r.status))}, {"witness", r.witness}};
}

}  // namespace

Json to_json(const AdjunctionReport& r) {
  Json instances = Json::array();
  for (const auto& inst : r.instances) {
    Json checks = Json::object();
    for (const auto& [name, c] : inst.checks) checks[name] = check_json(c);
    instances.push_back({{"id", inst.id}, {"checks", std::move(checks)}});
  }
  Json summary = Json::object();
  for (const auto& [name, c] : r.summary()) summary[name] = check_json(c);
  return {{"kind", "adjunction-report"},
          {"instances", std::move(instances)},
          {"summary", std::move(summary)},
          {"allPassed", r.all_passed()}};
}

Json span_cell_json(const Functor& h, const LensSpan& src, const LensSpan& tgt) {
  const RawFunctor raw = to_raw(h);
  return {{"kind", "span-2cell"},
          {"source", to_json(src)},
          {"target", to_json(tgt)},
          {"h", {{"onObjects", raw.on_objects}, {"onMorphisms", raw.on_morphisms}}}};
}

Json sym_cell_json(const std::vector<int>& k, const SymmetricLens& src, const SymmetricLens& tgt) {
  Json map = Json::object();
  for (int x = 0; x < src.state_count(); ++x) map[src.state_name(x)] = tgt.state_name(k[x]);
  return {{"kind", "sym-2cell"},
          {"source", to_json(src)},
          {"target", to_json(tgt)},
          {"stateMap", std::move(map)}};
}

Json error_json(const Error& e) {
  Json j = {{"kind", "error"},
            {"code", std::string(to_string(e.code()))},
            {"message", e.what()},
            {"witness", e.witness()}};
  if (e.code() == ErrorCode::NotSaturated || e.code() == ErrorCode::LInapplicableAtBound) {
    j["bound"] = e.bound;
    j["wordCounts"] = e.word_counts;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct SourceText {
  std::string file;
  std::string text;
  Json root;

  std::size_t line_at(std::size_t offset) const {
    const std::size_t end = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
  }
};

Node Node::parse(const std::string& text, const std::string& file) {
  auto src = std::make_shared<SourceText>();
  src->file = file;
  src->text = text;
  try {
    src->root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::ParseError,
                file + ":" + std::to_string(src->line_at(at)) + ": malformed JSON");
  }
  Node n;
  n.src_ = std::move(src);
  n.value_ = &n.src_->root;
  return n;
}

Node Node::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot read file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

const std::string& Node::file() const { return src_->file; }

std::string Node::kind() const {
  if (value_->is_object() && value_->contains("kind") && (*value_)["kind"].is_string()) {
    return (*value_)["kind"].get<std::string>();
  }
  return {};
}

bool Node::has(const std::string& key) const {
  return value_->is_object() && value_->contains(key);
}

Node Node::operator[](const std::string& key) const {
  if (!value_->is_object()) fail("expected an object");
  if (!value_->contains(key)) fail("missing key '" + key + "'");
  Node child = *this;
  child.value_ = &(*value_)[key];
  const std::size_t at = src_->text.find("\"" + key + "\"", offset_);
  if (at != std::string::npos) child.offset_ = at;
  child.path_ = path_.empty() ? key : path_ + "." + key;
  return child;
}

Node Node::resolve() const {
  if (!value_->is_string()) return *this;
  const std::filesystem::path base = std::filesystem::path(src_->file).parent_path();
  const std::string target = (base / value_->get<std::string>()).string();
  try {
    return load(target);
  } catch (const Error& e) {
    fail(std::string("in referenced file: ") + e.what());
  }
}

void Node::fail(const std::string& message) const {
  const std::string where = path_.empty() ? "" : " key '" + path_ + "':";
  throw Error(ErrorCode::ParseError,
              src_->file + ":" + std::to_string(src_->line_at(offset_)) + ":" + where + " " + message);
}

namespace {

void expect_kind(const Node& n, const std::string& kind) {
  const std::string k = n.kind();
  if (!k.empty() && k != kind) n.fail("expected a " + kind + " document, found " + k);
  if (!n.json().is_object()) n.fail("expected a " + kind + " document");
}

std::string string_of(const Node& n) {
  if (!n.json().is_string()) n.fail("expected a string");
  return n.json().get<std::string>();
}

std::vector<std::string> strings_of(const Node& n) {
  if (!n.json().is_array()) n.fail("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& v : n.json()) {
    if (!v.is_string()) n.fail("expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map_of(const Node& n) {
  if (!n.json().is_object()) n.fail("expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : n.json().items()) {
    if (!v.is_string()) n.fail("value of '" + k + "' is not a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

template <std::size_t N>
std::vector<std::array<std::string, N>> tuples_of(const Node& n) {
  if (!n.json().is_array()) n.fail("expected an array of " + std::to_string(N) + "-tuples");
  std::vector<std::array<std::string, N>> out;
  for (const auto& row : n.json()) {
    if (!row.is_array() || row.size() != N) {
      n.fail("expected an array of " + std::to_string(N) + "-tuples, found " + row.dump());
    }
    std::array<std::string, N> t;
    for (std::size_t i = 0; i < N; ++i) {
      if (!row[i].is_string()) n.fail("tuple entries must be strings, found " + row.dump());
      t[i] = row[i].get<std::string>();
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

FinCat read_category(const Node& node) {
  const Node n = node.resolve();
  expect_kind(n, "category");
  RawCategory raw;
  raw.objects = strings_of(n["objects"]);
  const Node ms = n["morphisms"];
  if (!ms.json().is_array()) ms.fail("expected an array of morphisms");
  for (const auto& m : ms.json()) {
    if (!m.is_object() || !m.contains("name") || !m.contains("src") || !m.contains("tgt") ||
        !m["name"].is_string() || !m["src"].is_string() || !m["tgt"].is_string()) {
      ms.fail("each morphism needs string fields name, src, tgt; found " + m.dump());
    }
    raw.morphisms.push_back({m["name"].get<std::string>(), m["src"].get<std::string>(),
                             m["tgt"].get<std::string>()});
  }
  raw.identities = string_map_of(n["identities"]);
  raw.composition = tuples_of<3>(n["composition"]);
  return validate_category(raw);
}

Functor read_functor(const Node& node, const FinCat* dom, const FinCat* cod) {
  const Node n = node.resolve();
  expect_kind(n, "functor");
  const FinCat d = n.has("dom") || !dom ? read_category(n["dom"]) : *dom;
  const FinCat c = n.has("cod") || !cod ? read_category(n["cod"]) : *cod;
  return validate_functor({string_map_of(n["onObjects"]), string_map_of(n["onMorphisms"])}, d, c);
}

Cofunctor read_cofunctor(const Node& node) {
  const Node n = node.resolve();
  expect_kind(n, "cofunctor");
  const FinCat total = read_category(n["total"]);
  const FinCat base = read_category(n["base"]);
  return check_cofunctor({string_map_of(n["objAssign"]), tuples_of<3>(n["lifts"])}, total, base);
}

MealyMorphism read_mealy(const Node& node) {
  const Node n = node.resolve();
  expect_kind(n, "mealy");
  const FinCat input = read_category(n["input"]);
  const FinCat output = read_category(n["output"]);
  RawMealy raw;
  raw.states = strings_of(n["states"]);
  raw.g0 = string_map_of(n["g0"]);
  raw.f0 = string_map_of(n["f0"]);
  raw.transitions = tuples_of<4>(n["transitions"]);
  return check_mealy(raw, input, output);
}

Lens read_lens(const Node& node) {
  const Node n = node.resolve();
  expect_kind(n, "lens");
  const Functor get = read_functor(n["get"]);
  return check_lens(get, read_cofunctor(n["put"]));
}

LensSpan read_span(const Node& node) {
  const Node n = node.resolve();
  expect_kind(n, "lens-span");
  const Lens left = read_lens(n["left"]);
  const Lens right = read_lens(n["right"]);
  if (n.has("apex") && !(read_category(n["apex"]) == left.source())) {
    n["apex"].fail("apex differs from the source of the left lens");
  }
  return make_span(left, right);
}

SymmetricLens read_symlens(const Node& node) {
  const Node n = node.resolve();
  expect_kind(n, "symmetric-lens");
  const MealyMorphism forward = read_mealy(n["forward"]);
  SymmetricLens s = symlens_validate(forward, read_mealy(n["backward"]));
  if (n.has("states")) {
    auto listed = strings_of(n["states"]);
    auto actual = s.forward.states();
    std::sort(listed.begin(), listed.end());
    std::sort(actual.begin(), actual.end());
    if (listed != actual) n["states"].fail("states differ from the Mealy morphisms' states");
  }
  return s;
}

std::vector<int> read_state_map(const Node& node, const SymmetricLens& src, const SymmetricLens& tgt) {
  const Node n = node.resolve();
  const Node m = n["stateMap"];
  const auto map = string_map_of(m);
  std::vector<int> k(src.state_count(), -1);
  const auto& tgt_states = tgt.forward.states();
  for (int x = 0; x < src.state_count(); ++x) {
    const auto it = map.find(src.state_name(x));
    if (it == map.end()) m.fail("no image for state '" + src.state_name(x) + "'");
    const auto pos = std::find(tgt_states.begin(), tgt_states.end(), it->second);
    if (pos == tgt_states.end()) m.fail("unknown target state '" + it->second + "'");
    k[x] = static_cast<int>(pos - tgt_states.begin());
  }
  return k;
}

}  // namespace dlens::io
