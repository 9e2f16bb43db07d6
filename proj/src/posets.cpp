#include "ramsey/posets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ramsey {

Poset::Poset(int n) : n_(n), below_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("poset size must be nonnegative");
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& below) {
  Poset p(n);
  for (auto [a, b] : below) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("relation vertex out of range");
    if (a == b) throw std::invalid_argument("poset relation must be irreflexive");
    p.below_[static_cast<std::size_t>(a) * n + b] = 1;
  }
  // Floyd-Warshall style closure.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (p.less(a, k))
        for (int b = 0; b < n; ++b)
          if (p.less(k, b)) p.below_[static_cast<std::size_t>(a) * n + b] = 1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.less(a, b) && p.less(b, a))
        throw std::invalid_argument("cycle detected: " + std::to_string(a) +
                                    " < " + std::to_string(b) + " < " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    if (p.less(a, a)) throw std::invalid_argument("cycle detected at vertex " + std::to_string(a));
  return p;
}

Poset Poset::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<std::pair<int, int>> rels;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!n) {
      int v;
      if (ls >> v) {
        std::string rest;
        if (ls >> rest)
          throw std::invalid_argument("line " + std::to_string(lineno) +
                                      ": expected vertex count only");
        if (v < 0) throw std::invalid_argument("line " + std::to_string(lineno) +
                                               ": negative vertex count");
        n = v;
      } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected vertex count");
      }
      continue;
    }
    int a, b;
    std::string op;
    if (ls >> a) {
      if (!(ls >> op >> b) || op != "<")
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'i < j'");
      std::string rest;
      if (ls >> rest)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
      if (a < 0 || a >= *n || b < 0 || b >= *n)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": vertex out of range");
      rels.emplace_back(a, b);
    } else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'i < j'");
    }
  }
  if (!n) throw std::invalid_argument("poset text: missing vertex count");
  return from_relations(*n, rels);
}

std::optional<Poset> Poset::builtin(std::string_view name) {
  auto colon = name.find(':');
  std::string_view head = name.substr(0, colon);
  if (head == "chain" || head == "antichain") {
    if (colon == std::string_view::npos) return std::nullopt;
    int n;
    try {
      n = std::stoi(std::string(name.substr(colon + 1)));
    } catch (...) {
      return std::nullopt;
    }
    if (n < 0) return std::nullopt;
    std::vector<std::pair<int, int>> rels;
    if (head == "chain")
      for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
    return from_relations(n, rels);
  }
  if (name == "diamond") return from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  if (name == "vee") return from_relations(3, {{0, 1}, {0, 2}});
  if (name == "wedge") return from_relations(3, {{0, 2}, {1, 2}});
  if (name == "chain+point") return from_relations(3, {{0, 1}});
  return std::nullopt;
}

int Poset::comparable_pair_count() const {
  int c = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (comparable(a, b)) ++c;
  return c;
}

namespace {

// Backtracking vertex mapper; img[a] in target preserving both directions.
bool extend_map(const Poset& p, const Poset& q, std::vector<int>& img,
                std::vector<bool>& used, int a) {
  int n = p.size();
  if (a == n) return true;
  for (int b = 0; b < n; ++b) {
    if (used[b]) continue;
    bool ok = true;
    for (int c = 0; c < a && ok; ++c) {
      if (p.less(a, c) != q.less(b, img[c])) ok = false;
      if (p.less(c, a) != q.less(img[c], b)) ok = false;
    }
    if (!ok) continue;
    img[a] = b;
    used[b] = true;
    if (extend_map(p, q, img, used, a + 1)) return true;
    used[b] = false;
  }
  return false;
}

void count_maps(const Poset& p, const Poset& q, std::vector<int>& img,
                std::vector<bool>& used, int a, std::uint64_t& count) {
  int n = p.size();
  if (a == n) {
    ++count;
    return;
  }
  for (int b = 0; b < n; ++b) {
    if (used[b]) continue;
    bool ok = true;
    for (int c = 0; c < a && ok; ++c) {
      if (p.less(a, c) != q.less(b, img[c])) ok = false;
      if (p.less(c, a) != q.less(img[c], b)) ok = false;
    }
    if (!ok) continue;
    img[a] = b;
    used[b] = true;
    count_maps(p, q, img, used, a + 1, count);
    used[b] = false;
  }
}

void collect_maps(const Poset& p, const Poset& q, std::vector<int>& img,
                  std::vector<bool>& used, int a, std::vector<std::vector<int>>& out) {
  int n = p.size();
  if (a == n) {
    out.push_back(img);
    return;
  }
  for (int b = 0; b < n; ++b) {
    if (used[b]) continue;
    bool ok = true;
    for (int c = 0; c < a && ok; ++c) {
      if (p.less(a, c) != q.less(b, img[c])) ok = false;
      if (p.less(c, a) != q.less(img[c], b)) ok = false;
    }
    if (!ok) continue;
    img[a] = b;
    used[b] = true;
    collect_maps(p, q, img, used, a + 1, out);
    used[b] = false;
  }
}

}  // namespace

std::optional<std::vector<int>> Poset::isomorphism_to(const Poset& other) const {
  if (n_ != other.n_) return std::nullopt;
  if (comparable_pair_count() != other.comparable_pair_count()) return std::nullopt;
  std::vector<int> img(n_);
  std::vector<bool> used(n_, false);
  if (extend_map(*this, other, img, used, 0)) return img;
  return std::nullopt;
}

std::uint64_t Poset::automorphism_count() const {
  if (n_ > 10)
    throw std::invalid_argument("automorphism_count: exhaustive search bound n <= 10 exceeded");
  std::uint64_t count = 0;
  std::vector<int> img(n_);
  std::vector<bool> used(n_, false);
  count_maps(*this, *this, img, used, 0, count);
  return count;
}

std::vector<std::vector<int>> Poset::automorphisms() const {
  if (n_ > 10)
    throw std::invalid_argument("automorphisms: exhaustive search bound n <= 10 exceeded");
  std::vector<std::vector<int>> out;
  std::vector<int> img(n_);
  std::vector<bool> used(n_, false);
  collect_maps(*this, *this, img, used, 0, out);
  return out;
}

std::string Poset::canonical_key() const {
  if (n_ > 8) throw std::invalid_argument("canonical_key: bound n <= 8 exceeded");
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur(static_cast<std::size_t>(n_) * n_, '0');
  do {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        cur[static_cast<std::size_t>(a) * n_ + b] = less(perm[a], perm[b]) ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Poset> Poset::catalog(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("catalog: bound n <= 5 exceeded");
  if (n == 0) return {Poset(0)};
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;

  std::vector<std::pair<std::string, Poset>> reps;  // key -> representative
  std::vector<std::string> seen;
  for (std::size_t code = 0; code < total; ++code) {
    Poset p(n);
    std::size_t c = code;
    for (auto [a, b] : pairs) {
      int state = static_cast<int>(c % 3);
      c /= 3;
      if (state == 1) p.below_[static_cast<std::size_t>(a) * n + b] = 1;
      if (state == 2) p.below_[static_cast<std::size_t>(b) * n + a] = 1;
    }
    // keep only transitive assignments
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        if (a != b && p.less(a, b))
          for (int d = 0; d < n; ++d)
            if (d != a && d != b && p.less(b, d) && !p.less(a, d)) {
              ok = false;
              break;
            }
    if (!ok) continue;
    std::string key = p.canonical_key();
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      reps.emplace_back(std::move(key), std::move(p));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& x, const auto& y) {
    int cx = x.second.comparable_pair_count();
    int cy = y.second.comparable_pair_count();
    if (cx != cy) return cx < cy;
    return x.first < y.first;
  });
  std::vector<Poset> out;
  out.reserve(reps.size());
  for (auto& [k, p] : reps) out.push_back(std::move(p));
  return out;
}

std::string Poset::to_text() const {
  std::string out = std::to_string(n_) + "\n";
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (less(a, b)) out += std::to_string(a) + " < " + std::to_string(b) + "\n";
  return out;
}

Poset Poset::relabeled(const std::vector<int>& img) const {
  if (static_cast<int>(img.size()) != n_)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  Poset p(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (less(a, b)) p.below_[static_cast<std::size_t>(img[a]) * n_ + img[b]] = 1;
  return p;
}

Poset poset_from_spec(std::string_view spec) {
  if (auto b = Poset::builtin(spec)) return *b;
  return Poset::parse(spec);
}

std::pair<Poset, std::vector<Word>> word_poset(const WordSet& s) {
  WordSet words = normalized(s);
  int n = static_cast<int>(words.size());
  std::vector<std::pair<int, int>> rels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && precedes(words[a], words[b])) rels.emplace_back(a, b);
  return {Poset::from_relations(n, rels), words};
}

}  // namespace ramsey
