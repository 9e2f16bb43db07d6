#include "ramsey/envelopes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

bool levels_isomorphic(const WordSet& a, const WordSet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (precedes(a[i], a[j]).has_value() != precedes(b[i], b[j]).has_value()) return false;
      if (dominated(a[i], a[j]) != dominated(b[i], b[j])) return false;
    }
  return true;
}

std::vector<std::size_t> interesting_levels(const WordSet& s) {
  std::vector<std::size_t> out;
  WordSet words = normalized(s);
  if (words.empty()) return out;
  std::size_t maxlen = max_length(words);
  WordSet cur = level_of(words, 0);
  for (std::size_t i = 0; i <= maxlen; ++i) {
    WordSet next = level_of(words, i + 1);
    bool interesting = !levels_isomorphic(cur, next);
    if (!interesting) {
      // compatible prefixes, incompatible extensions
      for (std::size_t a = 0; a < next.size() && !interesting; ++a)
        for (std::size_t b = a + 1; b < next.size(); ++b)
          if (!compatible(next[a], next[b]) &&
              compatible(next[a].prefix(i), next[b].prefix(i))) {
            interesting = true;
            break;
          }
    }
    if (!interesting)
      for (const Word& w : words)
        if (w.size() == i) {
          interesting = true;
          break;
        }
    if (interesting) out.push_back(i);
    cur = std::move(next);
  }
  return out;
}

Word delete_boring(const Word& w, const std::vector<std::size_t>& levels) {
  std::string rep;
  for (std::size_t i : levels) {
    if (i >= w.size()) break;
    rep.push_back(static_cast<char>(w[i]));
  }
  return Word::from_raw(std::move(rep));
}

EmbeddingType tau(const WordSet& s) {
  EmbeddingType out;
  WordSet words = normalized(s);
  out.levels = interesting_levels(words);
  for (const Word& w : words) {
    Word img = delete_boring(w, out.levels);
    out.map.emplace_back(w, img);
    out.type.push_back(std::move(img));
  }
  out.type = normalized(std::move(out.type));
  return out;
}

bool is_boring_extension(const WordSet& level, const Word& e) {
  if (level.empty()) throw std::invalid_argument("is_boring_extension: empty level");
  std::size_t len = level.front().size();
  if (len == 0) throw std::invalid_argument("is_boring_extension: word length must be positive");
  WordSet extended = append_level(level, e);
  auto levels = interesting_levels(extended);
  return !std::binary_search(levels.begin(), levels.end(), len);
}

static void check_compatible_level(const WordSet& level, const char* what) {
  for (std::size_t i = 0; i < level.size(); ++i)
    for (std::size_t j = i + 1; j < level.size(); ++j)
      if (!compatible(level[i], level[j]))
        throw std::invalid_argument(std::string(what) + ": level words " + level[i].str() +
                                    ", " + level[j].str() + " are incompatible");
}

std::vector<Word> boring_extensions(const WordSet& level) {
  if (level.empty() || !is_normalized(level))
    throw std::invalid_argument("boring_extensions: level must be nonempty and lex-sorted");
  if (level.front().size() == 0)
    throw std::invalid_argument("boring_extensions: word length must be positive");
  if (level.size() > 12)
    throw std::invalid_argument("boring_extensions: bound |A| <= 12 exceeded");
  // No compatibility requirement: incompatible pairs keep their structure
  // under any extension, and full levels (needed by lift_boring) contain
  // incompatible pairs from length 2 on.
  std::vector<Word> out;
  for (const Word& e : all_words_of_length(level.size()))
    if (is_boring_extension(level, e)) out.push_back(e);
  return out;
}

namespace {

// Two-word level structure plus compatibility must be unchanged by the
// extension pair.
bool pair_preserved(const Word& u, const Word& v, Letter cu, Letter cv) {
  Word u2 = u.append(cu), v2 = v.append(cv);
  if (precedes(u, v).has_value() != precedes(u2, v2).has_value()) return false;
  if (precedes(v, u).has_value() != precedes(v2, u2).has_value()) return false;
  if (dominated(u, v) != dominated(u2, v2)) return false;
  if (dominated(v, u) != dominated(v2, u2)) return false;
  if (compatible(u, v) && !compatible(u2, v2)) return false;
  return true;
}

}  // namespace

Word extend_boring(const WordSet& s, const Word& e) {
  if (s.empty()) throw std::invalid_argument("extend_boring: empty set");
  std::size_t len = s.front().size();
  if (len == 0 || len > 4)
    throw std::invalid_argument("extend_boring: level length must be in 1..4");
  check_compatible_level(s, "extend_boring");
  if (!is_boring_extension(s, e))
    throw std::invalid_argument("extend_boring: e is not boring for the given set");

  WordSet full = all_words_of_length(len);
  std::string rep(full.size(), '\0');
  for (std::size_t i = 0; i < full.size(); ++i) {
    auto it = std::lower_bound(s.begin(), s.end(), full[i]);
    if (it != s.end() && *it == full[i]) {
      rep[i] = static_cast<char>(e[static_cast<std::size_t>(it - s.begin())]);
      continue;
    }
    // first safe character in the order X, L, R
    Letter chosen = Letter::X;
    bool found = false;
    for (Letter c : {Letter::X, Letter::L, Letter::R}) {
      bool safe = true;
      for (std::size_t j = 0; j < s.size() && safe; ++j) {
        if (!compatible(s[j], full[i])) continue;
        if (!pair_preserved(s[j], full[i], e[j], c)) safe = false;
      }
      if (safe) {
        chosen = c;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("extend_boring: no safe character for " + full[i].str());
    rep[i] = static_cast<char>(chosen);
  }
  Word out = Word::from_raw(std::move(rep));
  if (!is_boring_extension(full, out))
    throw std::logic_error("extend_boring: constructed extension failed the boring check");
  return out;
}

Word lift_boring(const Word& e, std::size_t l, std::size_t l2) {
  if (l == 0 || l > l2 || l2 > 4)
    throw std::invalid_argument("lift_boring: need 0 < l <= l2 <= 4");
  WordSet small = all_words_of_length(l);
  if (e.size() != small.size())
    throw std::invalid_argument("lift_boring: |e| must be 3^l");
  if (!is_boring_extension(small, e))
    throw std::invalid_argument("lift_boring: e is not boring for the full level");
  WordSet big = all_words_of_length(l2);
  std::string rep(big.size(), '\0');
  for (std::size_t i = 0; i < big.size(); ++i) {
    Word pre = big[i].prefix(l);
    auto it = std::lower_bound(small.begin(), small.end(), pre);
    rep[i] = static_cast<char>(e[static_cast<std::size_t>(it - small.begin())]);
  }
  Word out = Word::from_raw(std::move(rep));
  if (!is_boring_extension(big, out))
    throw std::logic_error("lift_boring: lifted extension failed the boring check");
  return out;
}

bool is_shape_preserving(const std::vector<std::pair<Word, Word>>& f) {
  WordSet domain, image;
  for (const auto& [from, to] : f) {
    domain.push_back(from);
    image.push_back(to);
  }
  auto dom_levels = interesting_levels(normalized(domain));
  auto img_levels = interesting_levels(normalized(image));
  for (const auto& [from, to] : f)
    if (delete_boring(from, dom_levels) != delete_boring(to, img_levels)) return false;
  return true;
}

Word triple(const Word& w) {
  std::string rep;
  rep.reserve(3 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (int k = 0; k < 3; ++k) rep.push_back(static_cast<char>(w[i]));
  return Word::from_raw(std::move(rep));
}

}  // namespace ramsey
