#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dlens/functor.hpp"

namespace dlens {

enum class Side : std::uint8_t { Plus, Minus };

struct Letter {
  Side side;
  int morphism;  // index into the summand named by side
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A composable sequence of letters in diagrammatic order (first letter is
/// applied first). `source` matters only for the empty word.
struct Word {
  int source = 0;
  int target = 0;
  std::vector<Letter> letters;
  friend bool operator==(const Word&, const Word&) = default;
};

/// The pushout of two categories along their shared discrete category of
/// objects, presented by alternating normal-form words of bounded length.
class PresentedCategory {
 public:
  PresentedCategory(std::vector<std::string> objects, FinCat plus, FinCat minus);

  const std::vector<std::string>& objects() const { return objects_; }
  const FinCat& plus() const { return plus_; }
  const FinCat& minus() const { return minus_; }
  const FinCat& summand(Side s) const { return s == Side::Plus ? plus_ : minus_; }

  /// Object of the shared set (index into objects()) for a summand object.
  int shared_object(Side s, int summand_object) const {
    return s == Side::Plus ? plus_objects_[summand_object]
                           : minus_objects_[summand_object];
  }
  int letter_source(const Letter& l) const {
    return shared_object(l.side, summand(l.side).src(l.morphism));
  }
  int letter_target(const Letter& l) const {
    return shared_object(l.side, summand(l.side).tgt(l.morphism));
  }

  std::size_t bound() const { return bound_; }
  bool saturated() const { return saturated_; }
  const std::vector<Word>& words() const { return words_; }
  /// Number of normal-form words of each length 0..bound.
  const std::vector<std::size_t>& word_counts() const { return counts_; }
  std::size_t total_words() const { return words_.size(); }
  /// Index of a listed word, or -1.
  int find(const Word& w) const;

  Word empty_word(int object) const;
  /// One-letter word, or the empty word when the morphism is an identity.
  Word letter_word(Side s, int morphism) const;
  /// g∘f by concatenation and merging at the junction.
  Word compose(const Word& g, const Word& f) const;
  /// Reduces an arbitrary composable letter sequence; `pick(n)` chooses
  /// which of the n currently reducible positions is reduced next.
  Word normalize(int source, std::vector<Letter> letters,
                 const std::function<std::size_t(std::size_t)>& pick) const;
  bool is_normal(const Word& w) const;
  std::string word_name(const Word& w) const;

  /// Requires saturated(); throws NotSaturated otherwise.
  FinCat to_fincat() const;

 private:
  friend PresentedCategory enumerate_words(std::vector<std::string>, FinCat,
                                           FinCat, std::size_t, std::size_t);
  std::vector<int> key(const Word& w) const;

  std::vector<std::string> objects_;
  FinCat plus_;
  FinCat minus_;
  std::vector<int> plus_objects_;
  std::vector<int> minus_objects_;
  std::size_t bound_ = 0;
  bool saturated_ = false;
  std::vector<Word> words_;
  std::vector<std::size_t> counts_;
  std::map<std::vector<int>, int> index_;
};

inline constexpr std::size_t kDefaultBound = 8;
inline constexpr std::size_t kDefaultWordCap = 200000;

/// Lists all normal-form words up to `bound` and decides saturation: every
/// composite of two listed words is listed. Never throws on non-saturation.
PresentedCategory enumerate_words(std::vector<std::string> objects, FinCat plus,
                                  FinCat minus, std::size_t bound = kDefaultBound,
                                  std::size_t cap = kDefaultWordCap);

struct Pushout {
  PresentedCategory presented;
  FinCat apex;
  Functor i0;  // plus -> apex
  Functor i1;  // minus -> apex

  /// The unique functor apex -> Y restricting to hp along i0 and hm along i1.
  /// Throws PreconditionViolated when hp, hm disagree on shared objects.
  Functor copair(const Functor& hp, const Functor& hm) const;
};

/// Throws NotSaturated (with bound and word counts) when the bounded
/// enumeration does not close under composition.
Pushout pushout_ioo(const std::vector<std::string>& objects, const FinCat& plus,
                    const FinCat& minus, std::size_t bound = kDefaultBound);

}  // namespace dlens
