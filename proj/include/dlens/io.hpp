#pragma once

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "dlens/adjunction.hpp"
#include "dlens/cofunctor.hpp"
#include "dlens/factorisation.hpp"
#include "dlens/functor.hpp"
#include "dlens/lens.hpp"
#include "dlens/limits.hpp"
#include "dlens/mealy.hpp"
#include "dlens/pushout.hpp"
#include "dlens/span.hpp"
#include "dlens/symlens.hpp"

namespace dlens::io {

using Json = nlohmann::json;

// Serialisation. Every document carries a "kind". Object and state lists
// keep their order; tables are sorted, and object keys are sorted by Json.
Json to_json(const FinCat& c);
Json to_json(const Functor& f);
Json to_json(const Cofunctor& c);
Json to_json(const MealyMorphism& m);
Json to_json(const Lens& l);
Json to_json(const LensSpan& s);
Json to_json(const SymmetricLens& s);
Json to_json(const Verdict& v);
Json to_json(const FunctorClass& k);
Json to_json(const BoffFactorisation& f);
Json to_json(const Pullback& p);
Json to_json(const Pushout& p);
Json to_json(const AdjunctionReport& r);
Json span_cell_json(const Functor& h, const LensSpan& src, const LensSpan& tgt);
Json sym_cell_json(const std::vector<int>& k, const SymmetricLens& src, const SymmetricLens& tgt);
/// NotSaturated / LInapplicableAtBound as a document.
Json error_json(const Error& e);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

struct SourceText;

/// A JSON value together with where it was read from. String values in
/// reference positions are paths relative to the file that holds them.
class Node {
 public:
  Node() = default;
  /// Parses `text`; `file` names it in errors and anchors relative paths.
  static Node parse(const std::string& text, const std::string& file);
  static Node load(const std::string& path);

  const Json& json() const { return *value_; }
  const std::string& file() const;
  /// "kind" when present, else empty.
  std::string kind() const;
  bool has(const std::string& key) const;
  /// Throws ParseError naming file, line and key when absent.
  Node operator[](const std::string& key) const;
  /// A reference: loads the file when the value is a string.
  Node resolve() const;
  /// Throws ParseError naming file, line and key.
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::shared_ptr<const SourceText> src_;
  const Json* value_ = nullptr;
  std::size_t offset_ = 0;
  std::string path_;
};

FinCat read_category(const Node& n);
/// dom and cod default to the given categories when the document omits them.
Functor read_functor(const Node& n, const FinCat* dom = nullptr, const FinCat* cod = nullptr);
Cofunctor read_cofunctor(const Node& n);
MealyMorphism read_mealy(const Node& n);
Lens read_lens(const Node& n);
LensSpan read_span(const Node& n);
SymmetricLens read_symlens(const Node& n);
/// A state map {"stateMap": {x: y}} between two symmetric lenses.
std::vector<int> read_state_map(const Node& n, const SymmetricLens& src, const SymmetricLens& tgt);

}  // namespace dlens::io
