#include "ramsey/coding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ramsey {

Word phi(const Poset& p, int j) {
  if (j < 0 || j >= p.size()) throw std::invalid_argument("phi: vertex out of range");
  std::string rep;
  rep.reserve(2 * static_cast<std::size_t>(j) + 2);
  for (int i = 0; i < j; ++i) {
    Letter c = Letter::X;
    if (p.less(j, i)) c = Letter::L;
    else if (p.less(i, j)) c = Letter::R;
    rep.push_back(static_cast<char>(c));
    rep.push_back(static_cast<char>(c));
  }
  rep.push_back(static_cast<char>(Letter::L));
  rep.push_back(static_cast<char>(Letter::R));
  return Word::from_raw(std::move(rep));
}

WordSet phi_tree(const Poset& p) {
  WordSet leaves;
  for (int j = 0; j < p.size(); ++j) leaves.push_back(phi(p, j));
  return closure(leaves);
}

namespace {

// One step of the compression: apply a diary event to the image level and
// push the new letters onto every image.  `images` maps source-level words
// (sorted) to their current image words.
struct ImageLevel {
  WordSet sources;  // sorted source words of the current source level
  std::vector<Word> images;  // parallel to sources

  WordSet distinct_images() const { return normalized(images); }

  void apply(const Event& e) {
    WordSet level = distinct_images();
    auto ext = event_extensions(level, e);
    std::map<Word, Letter> by_word;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (ext[i].count != 1)
        throw std::logic_error("diarize: leaf/split events are handled separately");
      by_word[level[i]] = ext[i].letters[0];
    }
    for (Word& img : images) img = img.append(by_word.at(img));
  }

  // Rule for non-injective images: the lex-least source word colliding with
  // another gets X together with everything lex-at-or-below it; the rest get R.
  bool apply_split_if_needed() {
    std::size_t least = sources.size();
    for (std::size_t i = 0; i < sources.size() && least == sources.size(); ++i)
      for (std::size_t j = 0; j < sources.size(); ++j)
        if (i != j && images[i] == images[j]) {
          least = i;
          break;
        }
    if (least == sources.size()) return false;
    for (std::size_t i = 0; i < sources.size(); ++i)
      images[i] = images[i].append(i <= least ? Letter::X : Letter::R);
    return true;
  }
};

}  // namespace

LabeledDiary diarize(const Poset& p, int max_size) {
  if (p.size() > max_size)
    throw std::invalid_argument("diarize: poset size " + std::to_string(p.size()) +
                                " exceeds bound " + std::to_string(max_size));
  LabeledDiary out;
  if (p.size() == 0) return out;

  WordSet tree = phi_tree(p);
  std::size_t maxlen = max_length(tree);
  std::vector<Word> final_image(static_cast<std::size_t>(p.size()));
  std::vector<Word> leaf_words(static_cast<std::size_t>(p.size()));
  for (int j = 0; j < p.size(); ++j) leaf_words[static_cast<std::size_t>(j)] = phi(p, j);

  ImageLevel cur;
  cur.sources = level_of(tree, 0);
  cur.images = {Word{}};

  for (std::size_t l = 1; l <= maxlen; ++l) {
    WordSet next_sources = level_of(tree, l);
    // a member of the tree ended at level l-1 exactly when phi(j) has length l-1
    std::optional<Word> dead;
    for (std::size_t j = 0; j < leaf_words.size(); ++j)
      if (leaf_words[j].size() == l - 1) dead = leaf_words[j];
    if (dead) {
      auto it = std::find(cur.sources.begin(), cur.sources.end(), *dead);
      Word dead_image = cur.images[static_cast<std::size_t>(it - cur.sources.begin())];
      WordSet level = cur.distinct_images();
      auto ext = event_extensions(level, Event{EventKind::Leaf, dead_image, {}});
      (void)ext;  // side conditions checked; survivors all get X
      ImageLevel next;
      for (std::size_t i = 0; i < cur.sources.size(); ++i) {
        if (cur.sources[i] == *dead) continue;
        next.sources.push_back(cur.sources[i]);
        next.images.push_back(cur.images[i].append(Letter::X));
      }
      cur = std::move(next);
    }
    // re-root the images at the new source level
    ImageLevel stepped;
    stepped.sources = next_sources;
    for (const Word& src : next_sources) {
      Word parent = src.prefix(l - 1);
      auto it = std::find(cur.sources.begin(), cur.sources.end(), parent);
      if (it == cur.sources.end()) throw std::logic_error("diarize: missing parent image");
      stepped.images.push_back(cur.images[static_cast<std::size_t>(it - cur.sources.begin())]);
    }
    cur = std::move(stepped);

    // apply the first applicable rule until the image level is isomorphic
    std::size_t guard = 0;
    const std::size_t guard_limit =
        16 * (cur.sources.size() + 1) * (cur.sources.size() + 1) + 64;
    while (true) {
      if (++guard > guard_limit)
        throw std::logic_error("diarize: compression failed to converge");
      if (cur.apply_split_if_needed()) continue;
      // injective now; look for a missing perp, then a missing prec,
      // scanning source pairs in lex-lex order
      bool applied = false;
      for (std::size_t i = 0; i < cur.sources.size() && !applied; ++i)
        for (std::size_t j = i + 1; j < cur.sources.size() && !applied; ++j) {
          if (!perp(cur.sources[i], cur.sources[j])) continue;
          if (perp(cur.images[i], cur.images[j])) continue;
          Event e{EventKind::NewPerp, cur.images[i], cur.images[j]};
          try {
            cur.apply(e);
            applied = true;
          } catch (const DiaryError&) {
          }
        }
      if (applied) continue;
      for (std::size_t i = 0; i < cur.sources.size() && !applied; ++i)
        for (std::size_t j = i + 1; j < cur.sources.size() && !applied; ++j) {
          if (!precedes(cur.sources[i], cur.sources[j])) continue;
          if (precedes(cur.images[i], cur.images[j])) continue;
          Event e{EventKind::NewPrec, cur.images[i], cur.images[j]};
          try {
            cur.apply(e);
            applied = true;
          } catch (const DiaryError&) {
          }
        }
      if (!applied) break;
    }

    // images must now mirror the source level structure
    for (std::size_t i = 0; i < cur.sources.size(); ++i)
      for (std::size_t j = i + 1; j < cur.sources.size(); ++j) {
        bool src_prec = precedes(cur.sources[i], cur.sources[j]).has_value();
        bool src_perp = perp(cur.sources[i], cur.sources[j]);
        if (cur.images[i] == cur.images[j] ||
            src_prec != precedes(cur.images[i], cur.images[j]).has_value() ||
            src_perp != perp(cur.images[i], cur.images[j]))
          throw std::logic_error("diarize: image level is not isomorphic to the source level");
      }

    for (std::size_t j = 0; j < leaf_words.size(); ++j)
      if (leaf_words[j].size() == l) {
        auto it = std::find(cur.sources.begin(), cur.sources.end(), leaf_words[j]);
        final_image[j] = cur.images[static_cast<std::size_t>(it - cur.sources.begin())];
      }
  }

  out.label = final_image;
  out.words = normalized(final_image);
  auto check = validate_diary(out.words);
  if (!check.valid) throw std::logic_error("diarize: produced invalid diary: " + check.error);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (a != b && p.less(a, b) != precedes(out.label[static_cast<std::size_t>(a)],
                                             out.label[static_cast<std::size_t>(b)]).has_value())
        throw std::logic_error("diarize: labeling is not an isomorphism");
  return out;
}

TypeWords type_words(const Poset& p, int n) {
  if (n < 0 || n > p.size()) throw std::invalid_argument("type_words: level out of range");
  TypeWords out;
  for (const Word& w : all_words_of_length(static_cast<std::size_t>(n))) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i == j) continue;
        if (p.less(i, j) && w[static_cast<std::size_t>(j)] == Letter::R &&
            w[static_cast<std::size_t>(i)] != Letter::R)
          ok = false;
        if (p.less(i, j) && w[static_cast<std::size_t>(i)] == Letter::L &&
            w[static_cast<std::size_t>(j)] != Letter::L)
          ok = false;
        if (w[static_cast<std::size_t>(i)] == Letter::R &&
            w[static_cast<std::size_t>(j)] == Letter::L && !p.less(i, j))
          ok = false;
      }
    if (ok) out.words.push_back(w);
  }
  if (n < p.size()) {
    std::string rep;
    for (int j = 0; j < n; ++j) {
      Letter c = Letter::X;
      if (p.less(n, j)) c = Letter::L;
      else if (p.less(j, n)) c = Letter::R;
      rep.push_back(static_cast<char>(c));
    }
    out.coding = Word::from_raw(std::move(rep));
  }
  return out;
}

}  // namespace ramsey
