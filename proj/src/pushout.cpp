#include "dlens/pushout.hpp"

#include <unordered_map>

namespace dlens {

namespace {

std::vector<int> object_alignment(const std::vector<std::string>& objects,
                                  const FinCat& c, const char* which) {
  if (static_cast<int>(objects.size()) != c.object_count()) {
    throw Error(ErrorCode::PreconditionViolated,
                std::string(which) + " summand does not have the shared objects");
  }
  std::unordered_map<std::string, int> pos;
  for (std::size_t i = 0; i < objects.size(); ++i) pos.emplace(objects[i], static_cast<int>(i));
  std::vector<int> align(c.object_count());
  for (int a = 0; a < c.object_count(); ++a) {
    auto it = pos.find(c.object_name(a));
    if (it == pos.end()) {
      throw Error(ErrorCode::PreconditionViolated,
                  std::string(which) + " summand has a foreign object",
                  c.object_name(a));
    }
    align[a] = it->second;
  }
  return align;
}

}  // namespace

PresentedCategory::PresentedCategory(std::vector<std::string> objects,
                                     FinCat plus, FinCat minus)
    : objects_(std::move(objects)), plus_(std::move(plus)), minus_(std::move(minus)) {
  plus_objects_ = object_alignment(objects_, plus_, "plus");
  minus_objects_ = object_alignment(objects_, minus_, "minus");
}

std::vector<int> PresentedCategory::key(const Word& w) const {
  std::vector<int> k;
  k.reserve(w.letters.size() + 1);
  k.push_back(w.source);
  for (const auto& l : w.letters) {
    k.push_back(l.side == Side::Plus ? l.morphism
                                     : plus_.morphism_count() + l.morphism);
  }
  return k;
}

int PresentedCategory::find(const Word& w) const {
  auto it = index_.find(key(w));
  return it == index_.end() ? -1 : it->second;
}

Word PresentedCategory::empty_word(int object) const { return {object, object, {}}; }

Word PresentedCategory::letter_word(Side s, int morphism) const {
  const FinCat& c = summand(s);
  if (c.is_identity(morphism)) return empty_word(shared_object(s, c.src(morphism)));
  Letter l{s, morphism};
  return {letter_source(l), letter_target(l), {l}};
}

Word PresentedCategory::compose(const Word& g, const Word& f) const {
  if (f.target != g.source) {
    throw Error(ErrorCode::PreconditionViolated, "words are not composable");
  }
  Word r{f.source, g.target, f.letters};
  for (Letter next : g.letters) {
    bool keep = true;
    while (!r.letters.empty() && r.letters.back().side == next.side) {
      const FinCat& c = summand(next.side);
      const int merged = c.compose(next.morphism, r.letters.back().morphism);
      r.letters.pop_back();
      if (c.is_identity(merged)) {
        keep = false;
        break;
      }
      next.morphism = merged;
    }
    if (keep) r.letters.push_back(next);
  }
  return r;
}

Word PresentedCategory::normalize(
    int source, std::vector<Letter> letters,
    const std::function<std::size_t(std::size_t)>& pick) const {
  int target = source;
  if (!letters.empty()) target = letter_target(letters.back());
  for (;;) {
    std::vector<std::size_t> reducible;  // 2i: identity at i, 2i+1: merge i,i+1
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (summand(letters[i].side).is_identity(letters[i].morphism)) {
        reducible.push_back(2 * i);
      }
      if (i + 1 < letters.size() && letters[i].side == letters[i + 1].side) {
        reducible.push_back(2 * i + 1);
      }
    }
    if (reducible.empty()) break;
    const std::size_t choice = reducible[pick(reducible.size()) % reducible.size()];
    const std::size_t i = choice / 2;
    if (choice % 2 == 0) {
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      const FinCat& c = summand(letters[i].side);
      letters[i].morphism = c.compose(letters[i + 1].morphism, letters[i].morphism);
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i + 1));
    }
  }
  return {source, target, std::move(letters)};
}

bool PresentedCategory::is_normal(const Word& w) const {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (summand(w.letters[i].side).is_identity(w.letters[i].morphism)) return false;
    if (i + 1 < w.letters.size() && w.letters[i].side == w.letters[i + 1].side) {
      return false;
    }
  }
  return true;
}

std::string PresentedCategory::word_name(const Word& w) const {
  if (w.letters.empty()) return "1<" + objects_[w.source] + ">";
  std::string s = "<";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ';';
    const Letter& l = w.letters[i];
    s += summand(l.side).morphism_name(l.morphism);
    s += l.side == Side::Plus ? '+' : '-';
  }
  s += '>';
  return s;
}

PresentedCategory enumerate_words(std::vector<std::string> objects, FinCat plus,
                                  FinCat minus, std::size_t bound,
                                  std::size_t cap) {
  PresentedCategory p(std::move(objects), std::move(plus), std::move(minus));
  p.bound_ = bound;
  auto add = [&](Word w) {
    p.index_.emplace(p.key(w), static_cast<int>(p.words_.size()));
    p.words_.push_back(std::move(w));
  };
  for (int x = 0; x < static_cast<int>(p.objects_.size()); ++x) add(p.empty_word(x));
  p.counts_.push_back(p.objects_.size());

  std::size_t layer_begin = p.words_.size();
  for (Side s : {Side::Plus, Side::Minus}) {
    if (bound == 0) break;
    const FinCat& c = p.summand(s);
    for (int m = 0; m < c.morphism_count(); ++m) {
      if (!c.is_identity(m)) add(p.letter_word(s, m));
    }
  }
  bool capped = false;
  if (bound >= 1) p.counts_.push_back(p.words_.size() - layer_begin);
  for (std::size_t len = 2; len <= bound && !capped; ++len) {
    const std::size_t prev_begin = layer_begin;
    const std::size_t prev_end = p.words_.size();
    layer_begin = prev_end;
    for (std::size_t i = prev_begin; i < prev_end && !capped; ++i) {
      const Word w = p.words_[i];
      const Side next = w.letters.back().side == Side::Plus ? Side::Minus : Side::Plus;
      const FinCat& c = p.summand(next);
      for (int m = 0; m < c.morphism_count(); ++m) {
        if (c.is_identity(m)) continue;
        Letter l{next, m};
        if (p.letter_source(l) != w.target) continue;
        Word ext = w;
        ext.letters.push_back(l);
        ext.target = p.letter_target(l);
        add(std::move(ext));
        if (p.words_.size() > cap) {
          capped = true;
          break;
        }
      }
    }
    p.counts_.push_back(p.words_.size() - layer_begin);
  }
  if (capped) {
    p.saturated_ = false;
    return p;
  }

  // Saturation: composites of listed words stay listed. Composites of total
  // length <= bound are normal words of length <= bound, hence listed.
  p.saturated_ = true;
  std::vector<std::vector<int>> by_source(p.objects_.size());
  for (std::size_t i = 0; i < p.words_.size(); ++i) {
    by_source[p.words_[i].source].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < p.words_.size() && p.saturated_; ++i) {
    const Word& f = p.words_[i];
    for (int j : by_source[f.target]) {
      const Word& g = p.words_[j];
      if (f.letters.size() + g.letters.size() <= bound) continue;
      if (p.find(p.compose(g, f)) < 0) {
        p.saturated_ = false;
        break;
      }
    }
  }
  return p;
}

FinCat PresentedCategory::to_fincat() const {
  if (!saturated_) {
    Error e(ErrorCode::NotSaturated, "pushout did not saturate",
            "bound " + std::to_string(bound_));
    e.bound = bound_;
    e.word_counts = counts_;
    throw e;
  }
  FinCat::Table t;
  t.objects = objects_;
  t.identity.assign(objects_.size(), -1);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    t.morphisms.push_back(word_name(w));
    t.src.push_back(w.source);
    t.tgt.push_back(w.target);
    if (w.letters.empty()) t.identity[w.source] = static_cast<int>(i);
  }
  const auto n = words_.size();
  t.compose.assign(n * n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (words_[f].target != words_[g].source) continue;
      t.compose[g * n + f] = find(compose(words_[g], words_[f]));
    }
  }
  return FinCat::from_table(std::move(t));
}

Functor Pushout::copair(const Functor& hp, const Functor& hm) const {
  const FinCat& plus = presented.plus();
  const FinCat& minus = presented.minus();
  if (!(hp.dom() == plus) || !(hm.dom() == minus) || !(hp.cod() == hm.cod())) {
    throw Error(ErrorCode::PreconditionViolated, "copairing is not well-typed");
  }
  const FinCat& y = hp.cod();
  auto hp_mor = [&](int m) {
    return hp.dom().shares_data(plus) ? hp.mor(m) : hp.mor(hp.dom().morphism(plus.morphism_name(m)));
  };
  auto hm_mor = [&](int m) {
    const int mm = hm.dom().shares_data(minus) ? m : hm.dom().morphism(minus.morphism_name(m));
    return hm.cod().shares_data(y) ? hm.mor(mm) : y.morphism(hm.cod().morphism_name(hm.mor(mm)));
  };
  std::vector<int> objs(apex.object_count());
  for (int x = 0; x < apex.object_count(); ++x) {
    const std::string& name = apex.object_name(x);
    const int via_plus = hp.obj(hp.dom().object(name));
    const int via_minus_raw = hm.obj(hm.dom().object(name));
    const int via_minus = hm.cod().shares_data(y)
                              ? via_minus_raw
                              : y.object(hm.cod().object_name(via_minus_raw));
    if (via_plus != via_minus) {
      throw Error(ErrorCode::PreconditionViolated,
                  "summand functors disagree on a shared object", name);
    }
    objs[x] = via_plus;
  }
  std::vector<int> mors(apex.morphism_count());
  const auto& words = presented.words();
  for (int i = 0; i < apex.morphism_count(); ++i) {
    const Word& w = words[i];
    int acc = y.identity(objs[w.source]);
    for (const Letter& l : w.letters) {
      const int image = l.side == Side::Plus ? hp_mor(l.morphism) : hm_mor(l.morphism);
      acc = y.compose(image, acc);
      if (acc < 0) {
        throw Error(ErrorCode::PreconditionViolated, "copairing is not functorial");
      }
    }
    mors[i] = acc;
  }
  return Functor(apex, y, std::move(objs), std::move(mors));
}

Pushout pushout_ioo(const std::vector<std::string>& objects, const FinCat& plus,
                    const FinCat& minus, std::size_t bound) {
  PresentedCategory p = enumerate_words(objects, plus, minus, bound);
  FinCat apex = p.to_fincat();
  auto injection = [&](Side s) {
    const FinCat& c = p.summand(s);
    std::vector<int> objs(c.object_count()), mors(c.morphism_count());
    for (int a = 0; a < c.object_count(); ++a) objs[a] = p.shared_object(s, a);
    for (int m = 0; m < c.morphism_count(); ++m) mors[m] = p.find(p.letter_word(s, m));
    return Functor(c, apex, std::move(objs), std::move(mors));
  };
  Functor i0 = injection(Side::Plus);
  Functor i1 = injection(Side::Minus);
  return {std::move(p), std::move(apex), std::move(i0), std::move(i1)};
}

}  // namespace dlens
