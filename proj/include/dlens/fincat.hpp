#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dlens/error.hpp"

namespace dlens {

struct MorphismDecl {
  std::string name;
  std::string src;
  std::string tgt;
};

/// A category as it appears in a document: names only, nothing checked.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, std::string> identities;
  /// Triples (g, f, g∘f).
  std::vector<std::array<std::string, 3>> composition;
};

/// A finite category with an explicit total composition table. Objects and
/// morphisms are addressed by dense indices; names are the identity used
/// for equality and serialisation. Immutable and cheap to copy.
class FinCat {
 public:
  struct Table {
    std::vector<std::string> objects;
    std::vector<std::string> morphisms;
    std::vector<int> src;
    std::vector<int> tgt;
    std::vector<int> identity;  // indexed by object
    std::vector<int> compose;   // [g * n + f], -1 where tgt(f) != src(g)
  };

 private:
  struct Data {
    Table t;
    std::unordered_map<std::string, int> object_index;
    std::unordered_map<std::string, int> morphism_index;
    std::vector<std::vector<int>> homs;
    std::vector<std::vector<int>> outs;
    std::vector<std::vector<int>> ins;
  };

 public:

  FinCat();

  /// Wraps a table produced by a construction. Only name uniqueness and
  /// table shape are checked; use check_category_laws for the full laws.
  static FinCat from_table(Table table);

  int object_count() const { return static_cast<int>(d_->t.objects.size()); }
  int morphism_count() const {
    return static_cast<int>(d_->t.morphisms.size());
  }
  const std::string& object_name(int a) const { return d_->t.objects[a]; }
  const std::string& morphism_name(int m) const { return d_->t.morphisms[m]; }
  int src(int m) const { return d_->t.src[m]; }
  int tgt(int m) const { return d_->t.tgt[m]; }
  int identity(int a) const { return d_->t.identity[a]; }
  bool is_identity(int m) const { return d_->t.identity[src(m)] == m; }

  /// g∘f, or -1 when tgt(f) != src(g).
  int compose(int g, int f) const {
    return d_->t.compose[static_cast<std::size_t>(g) * d_->t.morphisms.size() +
                         f];
  }

  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;
  /// Throws UnknownName.
  int object(std::string_view name) const;
  int morphism(std::string_view name) const;

  std::span<const int> hom(int a, int b) const {
    return d_->homs[static_cast<std::size_t>(a) * d_->t.objects.size() + b];
  }
  std::span<const int> out(int a) const { return d_->outs[a]; }
  std::span<const int> into(int b) const { return d_->ins[b]; }

  const Table& table() const { return d_->t; }
  bool shares_data(const FinCat& o) const { return d_ == o.d_; }

  /// Table equality up to index order: same names, endpoints, identities
  /// and composites.
  friend bool operator==(const FinCat& a, const FinCat& b);

 private:
  std::shared_ptr<const Data> d_;
};

/// Builds a FinCat from a document after exhaustively checking endpoints,
/// totality, unit and associativity laws.
FinCat validate_category(const RawCategory& raw);

/// Re-checks every category law on an existing value.
Verdict check_category_laws(const FinCat& c);

RawCategory to_raw(const FinCat& c);

/// Discrete category on the given object names; identities are "1_<name>".
FinCat discrete_category(const std::vector<std::string>& objects);

/// Index in `to` of object/morphism x of `from`; the two categories are
/// equal by name.
inline int transport_object(const FinCat& from, const FinCat& to, int x) {
  return from.shares_data(to) ? x : to.object(from.object_name(x));
}
inline int transport_morphism(const FinCat& from, const FinCat& to, int m) {
  return from.shares_data(to) ? m : to.morphism(from.morphism_name(m));
}

std::string pair_name(std::string_view a, std::string_view b);
std::string triple_name(std::string_view a, std::string_view b,
                        std::string_view c);

}  // namespace dlens
