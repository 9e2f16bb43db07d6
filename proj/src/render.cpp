#include "ramsey/render.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey {

namespace {

std::string ascii_rows(const std::vector<std::vector<std::string>>& levels,
                       const std::vector<std::string>& notes) {
  std::size_t width = 0;
  std::vector<std::string> rows;
  for (const auto& lv : levels) {
    std::string row;
    for (const auto& w : lv) {
      if (!row.empty()) row += "  ";
      row += w;
    }
    width = std::max(width, row.size());
    rows.push_back(std::move(row));
  }
  std::ostringstream out;
  for (std::size_t l = 0; l < rows.size(); ++l) {
    out << "level " << l << ": " << rows[l];
    if (l < notes.size() && !notes[l].empty())
      out << std::string(width - rows[l].size() + 2, ' ') << "[" << notes[l] << "]";
    out << "\n";
  }
  return out.str();
}

std::string dot_tree(const std::vector<std::string>& nodes,
                     const std::vector<std::pair<std::string, std::string>>& edges,
                     const std::vector<std::string>& members) {
  std::ostringstream out;
  out << "digraph diary {\n";
  out << "  rankdir=TB;\n  node [shape=circle, fontsize=10];\n";
  for (const auto& v : nodes) {
    out << "  \"" << v << "\"";
    if (std::find(members.begin(), members.end(), v) != members.end())
      out << " [shape=doublecircle, style=filled, fillcolor=lightgrey]";
    out << ";\n";
  }
  for (const auto& [a, b] : edges) out << "  \"" << a << "\" -> \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string render_ascii(const WordSet& diary, const std::vector<Event>& events) {
  WordSet words = normalized(diary);
  std::size_t maxlen = max_length(words);
  std::vector<std::vector<std::string>> levels;
  for (std::size_t l = 0; l <= maxlen; ++l) {
    std::vector<std::string> row;
    for (const Word& w : level_of(words, l)) row.push_back(w.str());
    levels.push_back(std::move(row));
  }
  std::vector<std::string> notes;
  for (const Event& e : events) notes.push_back(e.str());
  return ascii_rows(levels, notes);
}

std::string render_dot(const WordSet& diary, const std::vector<Event>& events) {
  (void)events;
  WordSet words = normalized(diary);
  WordSet closed = closure(words);
  std::vector<std::string> nodes, members;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Word& w : closed) {
    nodes.push_back(w.str());
    if (!w.empty()) edges.emplace_back(w.prefix(w.size() - 1).str(), w.str());
  }
  for (const Word& w : words) members.push_back(w.str());
  return dot_tree(nodes, edges, members);
}

std::string render_ascii_devlin(const WordSet& diary, const std::vector<Event>& events) {
  return render_ascii(diary, events);
}

std::string render_dot_devlin(const WordSet& diary) { return render_dot(diary, {}); }

std::string render_ascii_tri(const std::vector<Bits>& diary, const std::vector<TriEvent>& events) {
  std::vector<Bits> words;
  for (const Bits& w : diary) words.push_back(w == "-" ? Bits{} : w);
  std::sort(words.begin(), words.end());
  std::size_t maxlen = 0;
  for (const Bits& w : words) maxlen = std::max(maxlen, w.size());
  std::vector<std::vector<std::string>> levels;
  for (std::size_t l = 0; l <= maxlen; ++l) {
    std::vector<std::string> row;
    std::vector<Bits> lv;
    for (const Bits& w : words)
      if (w.size() >= l) lv.push_back(w.substr(0, l));
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
    for (const Bits& w : lv) row.push_back(w.empty() ? "-" : w);
    levels.push_back(std::move(row));
  }
  std::vector<std::string> notes;
  for (const TriEvent& e : events) notes.push_back(e.str());
  return ascii_rows(levels, notes);
}

std::string render_dot_tri(const std::vector<Bits>& diary) {
  std::vector<Bits> words;
  for (const Bits& w : diary) words.push_back(w == "-" ? Bits{} : w);
  std::sort(words.begin(), words.end());
  std::vector<Bits> closed;
  for (const Bits& w : words)
    for (std::size_t i = 0; i <= w.size(); ++i) closed.push_back(w.substr(0, i));
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  std::vector<std::string> nodes, members;
  std::vector<std::pair<std::string, std::string>> edges;
  auto show = [](const Bits& w) { return w.empty() ? std::string("-") : w; };
  for (const Bits& w : closed) {
    nodes.push_back(show(w));
    if (!w.empty()) edges.emplace_back(show(w.substr(0, w.size() - 1)), show(w));
  }
  for (const Bits& w : words) members.push_back(show(w));
  return dot_tree(nodes, edges, members);
}

}  // namespace ramsey
