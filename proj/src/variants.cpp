#include "ramsey/variants.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramsey {

bool is_binary_lr(const WordSet& s) {
  for (const Word& w : s)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == Letter::X) return false;
  return true;
}

namespace {

WordSet devlin_leaf(const WordSet& level, const Word& w) {
  WordSet out;
  for (const Word& z : level)
    if (z != w) out.push_back(z.append(Letter::L));
  return out;
}

WordSet devlin_split(const WordSet& level, const Word& w) {
  WordSet out;
  for (const Word& z : level) {
    if (z < w)
      out.push_back(z.append(Letter::L));
    else if (z == w) {
      out.push_back(z.append(Letter::L));
      out.push_back(z.append(Letter::R));
    } else
      out.push_back(z.append(Letter::R));
  }
  return out;
}

}  // namespace

DiaryValidation devlin_validate(const WordSet& s) {
  DiaryValidation result;
  WordSet words = normalized(s);
  if (words.empty()) {
    result.error = "empty word set";
    return result;
  }
  if (!is_binary_lr(words)) {
    result.error = "Devlin words must be over {L, R}";
    return result;
  }
  if (!is_prefix_antichain(words)) {
    result.error = "not a prefix-antichain";
    return result;
  }
  std::size_t maxlen = max_length(words);
  std::size_t maximal = 0;
  for (const Word& w : words)
    if (w.size() == maxlen) ++maximal;
  if (maximal != 1) {
    result.error = "expected exactly one word of maximal length, found " +
                   std::to_string(maximal);
    return result;
  }
  WordSet cur = level_of(words, 0);
  for (std::size_t l = 0; l < maxlen; ++l) {
    WordSet next = level_of(words, l + 1);
    std::vector<Event> matches;
    for (const Word& w : cur) {
      if (devlin_leaf(cur, w) == next) matches.push_back({EventKind::Leaf, w, {}});
      if (devlin_split(cur, w) == next) matches.push_back({EventKind::Split, w, {}});
    }
    if (matches.size() != 1) {
      result.error = "level " + std::to_string(l) + ": " +
                     (matches.empty() ? "no event shape matches" : "ambiguous event");
      result.events.clear();
      return result;
    }
    result.events.push_back(matches.front());
    cur = std::move(next);
  }
  result.valid = true;
  return result;
}

namespace {

void devlin_dfs(const WordSet& level, WordSet& members, int n,
                std::vector<WordSet>& out) {
  int leafs = static_cast<int>(members.size());
  int splits = static_cast<int>(level.size()) - 1 + leafs;
  if (level.size() == 1 && leafs == n - 1) {
    WordSet diary = members;
    diary.push_back(level.front());
    diary = normalized(diary);
    if (!devlin_validate(diary).valid)
      throw std::logic_error("devlin_enumerate produced an invalid type");
    out.push_back(std::move(diary));
    return;
  }
  if (leafs < n - 1 && level.size() > 1) {
    for (const Word& w : level) {
      members.push_back(w);
      devlin_dfs(devlin_leaf(level, w), members, n, out);
      members.pop_back();
    }
  }
  if (splits < n - 1)
    for (const Word& w : level) devlin_dfs(devlin_split(level, w), members, n, out);
}

}  // namespace

std::vector<WordSet> devlin_enumerate(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("devlin_enumerate: bound 1 <= n <= 5");
  std::vector<WordSet> out;
  WordSet members;
  devlin_dfs({Word{}}, members, n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- triangle-free variant ---

bool is_bits(std::string_view s) {
  if (s.empty()) return false;
  if (s == "-") return true;
  return s.find_first_not_of("01") == std::string_view::npos;
}

bool tri_adjacent(const Bits& u, const Bits& v) {
  if (u.size() == v.size())
    throw std::invalid_argument("tri_adjacent: equal-length words are never adjacent");
  const Bits& s = u.size() < v.size() ? u : v;
  const Bits& t = u.size() < v.size() ? v : u;
  if (t[s.size()] != '1') return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '1' && t[i] == '1') return false;
  return true;
}

bool tri_perp(const Bits& u, const Bits& v) {
  const Bits& s = u.size() <= v.size() ? u : v;
  const Bits& t = u.size() <= v.size() ? v : u;
  bool common = false, t_has_one = false, s_has_one = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1' && t[i] == '1') common = true;
    if (t[i] == '1') t_has_one = true;
    if (s[i] == '1') s_has_one = true;
  }
  return common || !t_has_one || !s_has_one;
}

Graph::Graph(int size) : n(size), adj(static_cast<std::size_t>(size) * size, 0) {
  if (size < 0) throw std::invalid_argument("graph size must be nonnegative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("bad edge");
    g.adj[static_cast<std::size_t>(a) * n + b] = 1;
    g.adj[static_cast<std::size_t>(b) * n + a] = 1;
  }
  return g;
}

Graph Graph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<int> n;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (!n) {
      int v;
      if (ls >> v) {
        if (v < 0) throw std::invalid_argument("line " + std::to_string(lineno) +
                                               ": negative vertex count");
        n = v;
      } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected vertex count");
      }
      continue;
    }
    int a, b;
    std::string op;
    if (ls >> a) {
      if (!(ls >> op >> b) || op != "-")
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'i - j'");
      if (a < 0 || a >= *n || b < 0 || b >= *n)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": vertex out of range");
      edges.emplace_back(a, b);
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'i - j'");
    }
  }
  if (!n) throw std::invalid_argument("graph text: missing vertex count");
  return from_edges(*n, edges);
}

bool Graph::has_triangle() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge(a, b))
        for (int c = b + 1; c < n; ++c)
          if (edge(a, c) && edge(b, c)) return true;
  return false;
}

namespace {

bool extend_graph_map(const Graph& p, const Graph& q, std::vector<int>& img,
                      std::vector<bool>& used, int a, std::uint64_t* count) {
  if (a == p.n) {
    if (count) ++*count;
    return !count;
  }
  bool found = false;
  for (int b = 0; b < p.n; ++b) {
    if (used[b]) continue;
    bool ok = true;
    for (int c = 0; c < a && ok; ++c)
      if (p.edge(a, c) != q.edge(b, img[c])) ok = false;
    if (!ok) continue;
    img[a] = b;
    used[b] = true;
    if (extend_graph_map(p, q, img, used, a + 1, count)) found = true;
    used[b] = false;
    if (found && !count) return true;
  }
  return found;
}

}  // namespace

std::optional<std::vector<int>> Graph::isomorphism_to(const Graph& other) const {
  if (n != other.n) return std::nullopt;
  std::vector<int> img(n);
  std::vector<bool> used(n, false);
  if (extend_graph_map(*this, other, img, used, 0, nullptr)) return img;
  return std::nullopt;
}

std::uint64_t Graph::automorphism_count() const {
  std::uint64_t count = 0;
  std::vector<int> img(n);
  std::vector<bool> used(n, false);
  extend_graph_map(*this, *this, img, used, 0, &count);
  return count;
}

std::string_view to_string(TriEventKind k) {
  switch (k) {
    case TriEventKind::Leaf: return "leaf";
    case TriEventKind::Split: return "split";
    case TriEventKind::FirstNeighbour: return "first-neighbour";
    case TriEventKind::NewPerp: return "new-perp";
  }
  return "?";
}

std::string TriEvent::str() const {
  std::string out{to_string(kind)};
  if (kind == TriEventKind::FirstNeighbour) return out;
  auto show = [](const Bits& w) { return w.empty() ? std::string("-") : w; };
  out += "(" + show(a);
  if (kind == TriEventKind::NewPerp) out += ", " + show(b);
  out += ")";
  return out;
}

namespace {

using BitsSet = std::vector<Bits>;

BitsSet bits_normalized(BitsSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

BitsSet bits_level(const BitsSet& s, std::size_t l) {
  BitsSet out;
  for (const Bits& w : s)
    if (w.size() >= l) out.push_back(w.substr(0, l));
  return bits_normalized(std::move(out));
}

// Matches the formulas with the closure level read for S_i.
std::optional<BitsSet> tri_apply(const BitsSet& level, const TriEvent& e, std::size_t i) {
  Bits zeros(i, '0');
  auto contains = [&](const Bits& w) {
    return std::binary_search(level.begin(), level.end(), w);
  };
  BitsSet out;
  switch (e.kind) {
    case TriEventKind::Leaf: {
      if (e.a == zeros || !contains(e.a)) return std::nullopt;
      BitsSet neighbours;
      for (const Bits& z : level)
        if (z != e.a && !tri_perp(z, e.a)) neighbours.push_back(z);
      for (std::size_t x = 0; x < neighbours.size(); ++x)
        for (std::size_t y = x + 1; y < neighbours.size(); ++y)
          if (!tri_perp(neighbours[x], neighbours[y])) return std::nullopt;
      for (const Bits& z : level) {
        if (z == e.a) continue;
        out.push_back(z + (tri_perp(z, e.a) ? '0' : '1'));
      }
      break;
    }
    case TriEventKind::Split: {
      if (!contains(e.a)) return std::nullopt;
      for (const Bits& z : level) out.push_back(z + '0');
      out.push_back(e.a + '1');
      break;
    }
    case TriEventKind::FirstNeighbour: {
      if (!contains(zeros)) return std::nullopt;
      for (const Bits& z : level)
        if (z != zeros) out.push_back(z + '0');
      out.push_back(zeros + '1');
      break;
    }
    case TriEventKind::NewPerp: {
      if (e.a == e.b || e.a == zeros || e.b == zeros) return std::nullopt;
      if (!contains(e.a) || !contains(e.b)) return std::nullopt;
      if (tri_perp(e.a, e.b)) return std::nullopt;
      for (const Bits& z : level) out.push_back(z + ((z == e.a || z == e.b) ? '1' : '0'));
      break;
    }
  }
  return bits_normalized(std::move(out));
}

std::vector<TriEvent> tri_candidates(const BitsSet& level, std::size_t i) {
  std::vector<TriEvent> out;
  Bits zeros(i, '0');
  for (const Bits& w : level) {
    if (w != zeros) out.push_back({TriEventKind::Leaf, w, {}});
    out.push_back({TriEventKind::Split, w, {}});
  }
  if (std::binary_search(level.begin(), level.end(), zeros))
    out.push_back({TriEventKind::FirstNeighbour, {}, {}});
  for (std::size_t x = 0; x < level.size(); ++x)
    for (std::size_t y = x + 1; y < level.size(); ++y)
      out.push_back({TriEventKind::NewPerp, level[x], level[y]});
  return out;
}

}  // namespace

TriValidation tri_validate(const std::vector<Bits>& s) {
  TriValidation result;
  BitsSet words;
  for (const Bits& w : s) words.push_back(w == "-" ? Bits{} : w);
  words = bits_normalized(std::move(words));
  if (words.empty()) {
    result.error = "empty word set";
    return result;
  }
  for (const Bits& w : words)
    if (w.find_first_not_of("01") != Bits::npos) {
      result.error = "words must be over {0, 1}";
      return result;
    }
  for (const Bits& u : words)
    for (const Bits& v : words)
      if (u != v && u.size() <= v.size() && v.compare(0, u.size(), u) == 0) {
        result.error = "not a prefix-antichain";
        return result;
      }
  std::size_t maxlen = 0;
  for (const Bits& w : words) maxlen = std::max(maxlen, w.size());
  std::size_t maximal = 0;
  for (const Bits& w : words)
    if (w.size() == maxlen) ++maximal;
  if (maximal != 1) {
    result.error = "expected exactly one word of maximal length, found " +
                   std::to_string(maximal);
    return result;
  }
  BitsSet cur = bits_level(words, 0);
  for (std::size_t l = 0; l < maxlen; ++l) {
    BitsSet next = bits_level(words, l + 1);
    std::vector<TriEvent> matches;
    for (const TriEvent& e : tri_candidates(cur, l))
      if (auto succ = tri_apply(cur, e, l); succ && *succ == next) matches.push_back(e);
    if (matches.size() != 1) {
      result.error = "level " + std::to_string(l) + ": " +
                     (matches.empty() ? "no event shape matches" : "ambiguous event");
      result.events.clear();
      return result;
    }
    result.events.push_back(matches.front());
    cur = std::move(next);
  }
  result.valid = true;
  return result;
}

Graph leaf_graph(const std::vector<Bits>& leaves) {
  Graph g(static_cast<int>(leaves.size()));
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) {
      if (leaves[static_cast<std::size_t>(a)].size() == leaves[static_cast<std::size_t>(b)].size())
        continue;
      if (tri_adjacent(leaves[static_cast<std::size_t>(a)], leaves[static_cast<std::size_t>(b)])) {
        g.adj[static_cast<std::size_t>(a) * g.n + b] = 1;
        g.adj[static_cast<std::size_t>(b) * g.n + a] = 1;
      }
    }
  return g;
}

namespace {

void tri_dfs(const BitsSet& level, BitsSet& members, std::size_t depth, int max_levels,
             const Graph& h, int splits, int leafs, std::set<BitsSet>& out) {
  int n = h.n;
  if (level.size() == 1 && leafs == n - 1) {
    BitsSet diary = members;
    diary.push_back(level.front());
    diary = bits_normalized(std::move(diary));
    if (static_cast<int>(diary.size()) == n && tri_validate(diary).valid) {
      Graph g = leaf_graph(diary);
      if (g.isomorphism_to(h).has_value()) out.insert(diary);
    }
  }
  if (depth >= static_cast<std::size_t>(max_levels)) return;
  for (const TriEvent& e : tri_candidates(level, depth)) {
    int ns = splits + (e.kind == TriEventKind::Split ? 1 : 0);
    int nl = leafs + (e.kind == TriEventKind::Leaf ? 1 : 0);
    if (ns > n - 1 || nl > n - 1) continue;
    auto succ = tri_apply(level, e, depth);
    if (!succ) continue;
    if (e.kind == TriEventKind::Leaf) members.push_back(e.a);
    tri_dfs(*succ, members, depth + 1, max_levels, h, ns, nl, out);
    if (e.kind == TriEventKind::Leaf) members.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Bits>> tri_enumerate(const Graph& h, int max_levels) {
  if (h.has_triangle()) throw std::invalid_argument("tri_enumerate: graph has a triangle");
  if (h.n < 1) throw std::invalid_argument("tri_enumerate: graph must be nonempty");
  if (max_levels < 0) throw std::invalid_argument("tri_enumerate: negative depth");
  std::set<BitsSet> out;
  BitsSet members;
  tri_dfs({Bits{}}, members, 0, max_levels, h, 0, 0, out);
  return {out.begin(), out.end()};
}

std::uint64_t tri_degree_lower_bound(const Graph& h, int max_levels) {
  return tri_enumerate(h, max_levels).size() * h.automorphism_count();
}

}  // namespace ramsey
