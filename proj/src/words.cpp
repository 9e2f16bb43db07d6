#include "ramsey/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

char to_char(Letter c) {
  switch (c) {
    case Letter::L: return 'L';
    case Letter::X: return 'X';
    case Letter::R: return 'R';
  }
  return '?';
}

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'L': return Letter::L;
    case 'X': return Letter::X;
    case 'R': return Letter::R;
    default: return std::nullopt;
  }
}

Word::Word(std::initializer_list<Letter> letters) {
  rep_.reserve(letters.size());
  for (Letter c : letters) rep_.push_back(static_cast<char>(c));
}

Word Word::parse(std::string_view text) {
  auto w = try_parse(text);
  if (!w) throw std::invalid_argument("not a word over {L,X,R}: '" + std::string(text) + "'");
  return *w;
}

std::optional<Word> Word::try_parse(std::string_view text) {
  if (text == "-") return Word{};
  if (text.empty()) return std::nullopt;
  Word w;
  w.rep_.reserve(text.size());
  for (char ch : text) {
    auto c = letter_from_char(ch);
    if (!c) return std::nullopt;
    w.rep_.push_back(static_cast<char>(*c));
  }
  return w;
}

Word Word::from_raw(std::string rep) {
  Word w;
  w.rep_ = std::move(rep);
  return w;
}

Word Word::prefix(std::size_t len) const {
  Word w;
  w.rep_ = rep_.substr(0, std::min(len, rep_.size()));
  return w;
}

Word Word::append(Letter c) const {
  Word w = *this;
  w.rep_.push_back(static_cast<char>(c));
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return rep_.size() <= other.rep_.size() &&
         other.rep_.compare(0, rep_.size(), rep_) == 0;
}

std::string Word::str() const {
  if (rep_.empty()) return "-";
  std::string out;
  out.reserve(rep_.size());
  for (char b : rep_) out.push_back(to_char(static_cast<Letter>(b)));
  return out;
}

std::optional<std::size_t> precedes(const Word& u, const Word& v) {
  std::size_t m = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (u[i] == Letter::L && v[i] == Letter::R) return i;
    if (u[i] > v[i]) return std::nullopt;  // domination broken before any witness
  }
  return std::nullopt;
}

bool precedes_eq(const Word& u, const Word& v) {
  return u == v || precedes(u, v).has_value();
}

static void require_same_length(const Word& u, const Word& v, const char* what) {
  if (u.size() != v.size())
    throw std::invalid_argument(std::string(what) + ": length mismatch (" +
                                u.str() + ", " + v.str() + ")");
}

bool dominated(const Word& u, const Word& v) {
  require_same_length(u, v, "dominated");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

bool perp(const Word& u, const Word& v) {
  require_same_length(u, v, "perp");
  bool up = false, down = false;
  for (std::size_t i = 0; i < u.size() && !(up && down); ++i) {
    if (u[i] > v[i]) up = true;
    if (u[i] < v[i]) down = true;
  }
  return up && down;
}

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Unrelated: return "unrelated";
    case PairRelation::Prec: return "prec";
    case PairRelation::Succ: return "succ";
    case PairRelation::PerpOnly: return "perp-only";
    case PairRelation::PrecAndPerp: return "prec-and-perp";
    case PairRelation::SuccAndPerp: return "succ-and-perp";
  }
  return "?";
}

PairRelation relation_summary(const Word& u, const Word& v) {
  require_same_length(u, v, "relation_summary");
  bool p = precedes(u, v).has_value();
  bool s = precedes(v, u).has_value();
  bool x = perp(u, v);
  if (p) return x ? PairRelation::PrecAndPerp : PairRelation::Prec;
  if (s) return x ? PairRelation::SuccAndPerp : PairRelation::Succ;
  if (x) return PairRelation::PerpOnly;
  return PairRelation::Unrelated;
}

bool related(const Word& u, const Word& v) {
  return relation_summary(u, v) != PairRelation::Unrelated;
}

bool compatible(const Word& u, const Word& v) {
  const Word& a = (u <= v) ? u : v;
  const Word& b = (u <= v) ? v : u;
  std::size_t m = std::min(a.size(), b.size());
  bool has_lr = false, dominates = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == Letter::R && b[i] == Letter::L) return false;
    if (a[i] == Letter::L && b[i] == Letter::R) has_lr = true;
    if (a[i] > b[i]) dominates = false;
  }
  return !has_lr || dominates;
}

WordSet normalized(WordSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_normalized(const WordSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i - 1] < s[i])) return false;
  return true;
}

WordSet closure(const WordSet& s) {
  WordSet out;
  for (const Word& w : s)
    for (std::size_t i = 0; i <= w.size(); ++i) out.push_back(w.prefix(i));
  return normalized(std::move(out));
}

WordSet level_of(const WordSet& s, std::size_t l) {
  WordSet out;
  for (const Word& w : s)
    if (w.size() >= l) out.push_back(w.prefix(l));
  return normalized(std::move(out));
}

std::size_t max_length(const WordSet& s) {
  std::size_t m = 0;
  for (const Word& w : s) m = std::max(m, w.size());
  return m;
}

bool is_prefix_antichain(const WordSet& s) {
  for (const Word& u : s)
    for (const Word& v : s)
      if (u != v && u.is_prefix_of(v)) return false;
  return true;
}

WordSet append_level(const WordSet& level, const Word& e) {
  if (level.size() != e.size())
    throw std::invalid_argument("append_level: extension length " +
                                std::to_string(e.size()) + " != level size " +
                                std::to_string(level.size()));
  if (!is_normalized(level))
    throw std::invalid_argument("append_level: level not lex-sorted");
  for (std::size_t i = 1; i < level.size(); ++i)
    if (level[i].size() != level[0].size())
      throw std::invalid_argument("append_level: words of unequal length");
  WordSet out;
  out.reserve(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) out.push_back(level[i].append(e[i]));
  return out;  // appending preserves lex order of distinct words
}

WordSet all_words_of_length(std::size_t len) {
  WordSet out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= 3;
  out.reserve(total);
  std::string rep(len, '\0');
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = len; i-- > 0;) {
      rep[i] = static_cast<char>(c % 3);
      c /= 3;
    }
    out.push_back(Word::from_raw(rep));
  }
  return out;
}

ParameterWord ParameterWord::parse(std::string_view text) {
  std::vector<int> syms;
  if (text != "-") {
    for (std::size_t i = 0; i < text.size();) {
      if (text[i] == '$') {
        std::size_t j = i + 1;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i + 1) throw std::invalid_argument("parameter word: bare '$'");
        syms.push_back(3 + std::stoi(std::string(text.substr(i + 1, j - i - 1))));
        i = j;
      } else {
        auto c = letter_from_char(text[i]);
        if (!c) throw std::invalid_argument("parameter word: bad character '" +
                                            std::string(1, text[i]) + "'");
        syms.push_back(static_cast<int>(*c));
        ++i;
      }
    }
  }
  return from_symbols(std::move(syms));
}

ParameterWord ParameterWord::from_word(const Word& w) {
  std::vector<int> syms;
  syms.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) syms.push_back(static_cast<int>(w[i]));
  return from_symbols(std::move(syms));
}

ParameterWord ParameterWord::from_symbols(std::vector<int> syms) {
  ParameterWord pw;
  pw.syms_ = std::move(syms);
  int maxp = -1;
  for (int s : pw.syms_) maxp = std::max(maxp, s - 3);
  pw.params_ = static_cast<std::size_t>(maxp + 1);
  if (!pw.valid()) throw std::invalid_argument("invalid parameter word: " + pw.str());
  return pw;
}

bool ParameterWord::valid() const {
  std::vector<long> first(params_, -1);
  for (std::size_t i = 0; i < syms_.size(); ++i) {
    if (syms_[i] >= 3) {
      std::size_t p = static_cast<std::size_t>(syms_[i] - 3);
      if (first[p] < 0) first[p] = static_cast<long>(i);
    }
  }
  for (std::size_t p = 0; p < params_; ++p) {
    if (first[p] < 0) return false;
    if (p > 0 && first[p] < first[p - 1]) return false;
  }
  return true;
}

std::optional<Word> ParameterWord::to_word() const {
  if (params_ != 0) return std::nullopt;
  Word w;
  std::string rep;
  rep.reserve(syms_.size());
  for (int s : syms_) rep.push_back(static_cast<char>(s));
  return Word::from_raw(std::move(rep));
}

std::string ParameterWord::str() const {
  if (syms_.empty()) return "-";
  std::string out;
  for (int s : syms_) {
    if (s < 3)
      out.push_back(to_char(static_cast<Letter>(s)));
    else
      out += "$" + std::to_string(s - 3);
  }
  return out;
}

ParameterWord substitute(const ParameterWord& w, const ParameterWord& u) {
  std::size_t k = u.size();
  if (k > w.param_count())
    throw std::invalid_argument("substitute: |U| = " + std::to_string(k) +
                                " exceeds parameter count " +
                                std::to_string(w.param_count()));
  // Truncate just before the first occurrence of $k (absent when k = n).
  std::size_t limit = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w.is_letter(i) && w.param_at(i) == k) {
      limit = i;
      break;
    }
  }
  std::vector<int> syms;
  syms.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) {
    if (w.is_letter(i)) {
      syms.push_back(static_cast<int>(w.letter_at(i)));
    } else {
      std::size_t p = w.param_at(i);  // p < k: later parameters first occur at/after limit
      if (u.is_letter(p))
        syms.push_back(static_cast<int>(u.letter_at(p)));
      else
        syms.push_back(3 + static_cast<int>(u.param_at(p)));
    }
  }
  return ParameterWord::from_symbols(std::move(syms));
}

}  // namespace ramsey
