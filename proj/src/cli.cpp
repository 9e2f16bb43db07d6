#include "ramsey/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/coding.hpp"
#include "ramsey/diaries.hpp"
#include "ramsey/envelopes.hpp"
#include "ramsey/posets.hpp"
#include "ramsey/render.hpp"
#include "ramsey/variants.hpp"
#include "ramsey/words.hpp"

namespace ramsey::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --poset accepts a builtin name or a file path.
Poset resolve_poset(const std::string& spec) {
  if (auto b = Poset::builtin(spec)) return *b;
  return Poset::parse(read_file(spec));
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

json event_json(std::size_t level, const Event& e) {
  json words = json::array();
  words.push_back(e.a.str());
  if (e.kind == EventKind::NewPerp || e.kind == EventKind::NewPrec) words.push_back(e.b.str());
  return {{"level", level}, {"kind", std::string(to_string(e.kind))}, {"words", words}};
}

json tri_event_json(std::size_t level, const TriEvent& e) {
  json words = json::array();
  auto show = [](const Bits& w) { return w.empty() ? std::string("-") : w; };
  if (e.kind != TriEventKind::FirstNeighbour) {
    words.push_back(show(e.a));
    if (e.kind == TriEventKind::NewPerp) words.push_back(show(e.b));
  }
  return {{"level", level}, {"kind", std::string(to_string(e.kind))}, {"words", words}};
}

std::string diary_line(const WordSet& words) {
  std::string out;
  for (const Word& w : words) {
    if (!out.empty()) out += " ";
    out += w.str();
  }
  return out;
}

std::string labeled_line(const LabeledDiary& d) {
  std::string out;
  for (std::size_t v = 0; v < d.label.size(); ++v) {
    if (!out.empty()) out += " ";
    out += std::to_string(v) + ":" + d.label[v].str();
  }
  return out;
}

struct ValidateArgs {
  std::string file;
  std::string variant = "poset";
  bool as_json = false;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  auto lines = data_lines(read_file(a.file));
  if (a.variant == "triangle") {
    std::vector<Bits> words;
    for (const auto& ln : lines) {
      std::string w = ln.substr(ln.find('\t') + 1);
      if (!is_bits(w)) throw std::runtime_error("not a binary word: '" + ln + "'");
      words.push_back(w == "-" ? Bits{} : w);
    }
    auto res = tri_validate(words);
    if (!res.valid) {
      err << "invalid: " << res.error << "\n";
      return 1;
    }
    if (a.as_json) {
      json ev = json::array();
      for (std::size_t l = 0; l < res.events.size(); ++l)
        ev.push_back(tri_event_json(l, res.events[l]));
      out << ev.dump() << "\n";
    } else {
      for (std::size_t l = 0; l < res.events.size(); ++l)
        out << "level " << l << ": " << res.events[l].str() << "\n";
      out << "valid\n";
    }
    return 0;
  }
  LabeledDiary d = parse_diary_text(read_file(a.file));
  DiaryValidation res =
      a.variant == "devlin" ? devlin_validate(d.words) : validate_diary(d.words);
  if (!res.valid) {
    err << "invalid: " << res.error << "\n";
    return 1;
  }
  if (a.as_json) {
    json ev = json::array();
    for (std::size_t l = 0; l < res.events.size(); ++l) ev.push_back(event_json(l, res.events[l]));
    out << ev.dump() << "\n";
  } else {
    for (std::size_t l = 0; l < res.events.size(); ++l)
      out << "level " << l << ": " << res.events[l].str() << "\n";
    out << "valid\n";
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"poset-diary combinatorics of big Ramsey degrees"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "check a diary file and print its event log");
  validate->add_option("file", va.file, "diary file (one word per line)")->required();
  validate->add_option("--variant", va.variant, "poset|devlin|triangle")
      ->check(CLI::IsMember({"poset", "devlin", "triangle"}));
  validate->add_flag("--json", va.as_json, "emit the event log as JSON");

  std::string poset_spec;
  bool labeled = false, count_only = false, as_json = false, allow_large = false;
  int threads = default_threads();
  auto* enumerate = app.add_subcommand("enumerate", "list the diaries coding a poset");
  enumerate->add_option("--poset", poset_spec, "builtin name or poset file")->required();
  enumerate->add_flag("--labeled", labeled, "emit labeled diaries");
  enumerate->add_flag("--count-only", count_only, "print counts only");
  enumerate->add_flag("--json", as_json);
  enumerate->add_flag("--allow-large", allow_large, "lift the size bound");
  enumerate->add_option("--threads", threads, "worker threads");

  auto* degree = app.add_subcommand("degree", "big Ramsey degree of a poset");
  degree->add_option("--poset", poset_spec)->required();
  degree->add_flag("--json", as_json);
  degree->add_flag("--allow-large", allow_large);
  degree->add_option("--threads", threads);

  int size_n = 0;
  auto* sum = app.add_subcommand("sum", "total diary count over isomorphism classes of a size");
  sum->add_option("--size", size_n)->required();
  sum->add_flag("--json", as_json);
  sum->add_flag("--allow-large", allow_large);
  sum->add_option("--threads", threads);

  auto* diarize_cmd = app.add_subcommand("diarize", "construct a labeled diary coding a poset");
  diarize_cmd->add_option("--poset", poset_spec)->required();

  std::string wordset_file;
  auto* tau_cmd = app.add_subcommand("tau", "embedding type of a word set");
  tau_cmd->add_option("file", wordset_file, "word-set file")->required();
  tau_cmd->add_flag("--json", as_json);

  auto* phi_cmd = app.add_subcommand("phi", "straight word embedding of a poset");
  phi_cmd->add_option("--poset", poset_spec)->required();

  int level_n = 0;
  auto* types_cmd = app.add_subcommand("types", "1-type words of an enumerated poset level");
  types_cmd->add_option("--poset", poset_spec)->required();
  types_cmd->add_option("--level", level_n)->required();

  std::string graph_file;
  int max_levels = 0;
  auto* tri_cmd = app.add_subcommand("triangle", "depth-bounded triangle-free diaries of a graph");
  tri_cmd->add_option("--graph", graph_file)->required();
  tri_cmd->add_option("--max-levels", max_levels)->required();
  tri_cmd->add_flag("--json", as_json);
  tri_cmd->add_flag("--count-only", count_only);

  int devlin_n = 0;
  auto* devlin_cmd = app.add_subcommand("devlin", "Devlin embedding types with n leaves");
  devlin_cmd->add_option("--n", devlin_n)->required();
  devlin_cmd->add_flag("--json", as_json);
  devlin_cmd->add_flag("--count-only", count_only);

  std::string render_file, format = "ascii", render_variant = "poset";
  auto* render_cmd = app.add_subcommand("render", "draw a diary");
  render_cmd->add_option("file", render_file)->required();
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "dot"}));
  render_cmd->add_option("--variant", render_variant)
      ->check(CLI::IsMember({"poset", "devlin", "triangle"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(va, out, err);

    if (app.got_subcommand(enumerate)) {
      auto t0 = Clock::now();
      Poset q = resolve_poset(poset_spec);
      EnumerateOptions opts;
      opts.threads = threads;
      opts.allow_large = allow_large;
      if (count_only) {
        DiaryCounts c = count_diaries(q, opts);
        if (as_json) {
          out << json{{"poset", poset_spec},
                      {"labeled", c.labeled},
                      {"unlabeled", c.unlabeled},
                      {"aut", c.aut},
                      {"elapsed_ms", ms_since(t0)}}
                     .dump()
              << "\n";
        } else {
          out << (labeled ? c.labeled : c.unlabeled) << "\n";
        }
        return 0;
      }
      auto auts = q.automorphisms();
      std::uint64_t emitted = 0;
      enumerate_labeled_diaries(q, [&](const LabeledDiary& d) {
        if (labeled) {
          out << labeled_line(d) << "\n";
          ++emitted;
        } else if (is_canonical_labeling(d, auts)) {
          out << diary_line(d.words) << "\n";
          ++emitted;
        }
        return true;
      }, opts);
      (void)emitted;
      return 0;
    }

    if (app.got_subcommand(degree)) {
      auto t0 = Clock::now();
      Poset q = resolve_poset(poset_spec);
      EnumerateOptions opts;
      opts.threads = threads;
      opts.allow_large = allow_large;
      DiaryCounts c = count_diaries(q, opts);
      if (as_json) {
        out << json{{"poset", poset_spec},
                    {"labeled", c.labeled},
                    {"unlabeled", c.unlabeled},
                    {"aut", c.aut},
                    {"elapsed_ms", ms_since(t0)}}
                   .dump()
            << "\n";
      } else {
        out << "labeled " << c.labeled << "\nunlabeled " << c.unlabeled << "\naut " << c.aut
            << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(sum)) {
      auto t0 = Clock::now();
      EnumerateOptions opts;
      opts.threads = threads;
      opts.allow_large = allow_large;
      opts.max_size = std::max(opts.max_size, size_n);
      std::uint64_t total = sum_over_size(size_n, opts);
      if (as_json)
        out << json{{"size", size_n}, {"total", total}, {"elapsed_ms", ms_since(t0)}}.dump()
            << "\n";
      else
        out << total << "\n";
      return 0;
    }

    if (app.got_subcommand(diarize_cmd)) {
      Poset p = resolve_poset(poset_spec);
      out << labeled_diary_to_text(diarize(p));
      return 0;
    }

    if (app.got_subcommand(tau_cmd)) {
      WordSet s;
      for (const auto& ln : data_lines(read_file(wordset_file)))
        s.push_back(Word::parse(ln.substr(ln.find('\t') + 1)));
      auto et = tau(normalized(s));
      if (as_json) {
        json m = json::array();
        for (const auto& [from, to] : et.map) m.push_back({from.str(), to.str()});
        json t = json::array();
        for (const Word& w : et.type) t.push_back(w.str());
        out << json{{"levels", et.levels}, {"type", t}, {"map", m}}.dump() << "\n";
      } else {
        for (const auto& [from, to] : et.map) out << from.str() << "\t" << to.str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(phi_cmd)) {
      Poset p = resolve_poset(poset_spec);
      for (int v = 0; v < p.size(); ++v) out << v << "\t" << phi(p, v).str() << "\n";
      return 0;
    }

    if (app.got_subcommand(types_cmd)) {
      Poset p = resolve_poset(poset_spec);
      TypeWords tw = type_words(p, level_n);
      for (const Word& w : tw.words) out << w.str() << "\n";
      if (tw.coding) out << "coding\t" << tw.coding->str() << "\n";
      return 0;
    }

    if (app.got_subcommand(tri_cmd)) {
      auto t0 = Clock::now();
      Graph h = Graph::parse(read_file(graph_file));
      auto found = tri_enumerate(h, max_levels);
      std::uint64_t aut = h.automorphism_count();
      std::uint64_t lower = found.size() * aut;
      if (as_json) {
        json ds = json::array();
        for (const auto& d : found) {
          json words = json::array();
          for (const Bits& w : d) words.push_back(w.empty() ? "-" : w);
          ds.push_back(words);
        }
        json j{{"count", found.size()},
               {"aut", aut},
               {"degree_lower_bound", lower},
               {"max_levels", max_levels},
               {"elapsed_ms", ms_since(t0)}};
        if (!count_only) j["diaries"] = ds;
        out << j.dump() << "\n";
      } else {
        if (!count_only)
          for (const auto& d : found) {
            std::string line;
            for (const Bits& w : d) {
              if (!line.empty()) line += " ";
              line += w.empty() ? "-" : w;
            }
            out << line << "\n";
          }
        out << "count " << found.size() << "\n";
        out << "degree-lower-bound " << lower << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(devlin_cmd)) {
      auto t0 = Clock::now();
      auto types = devlin_enumerate(devlin_n);
      if (as_json) {
        json ds = json::array();
        for (const auto& d : types) {
          json words = json::array();
          for (const Word& w : d) words.push_back(w.str());
          ds.push_back(words);
        }
        json j{{"n", devlin_n}, {"count", types.size()}, {"elapsed_ms", ms_since(t0)}};
        if (!count_only) j["types"] = ds;
        out << j.dump() << "\n";
      } else {
        if (!count_only)
          for (const auto& d : types) out << diary_line(d) << "\n";
        out << "count " << types.size() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(render_cmd)) {
      if (render_variant == "triangle") {
        std::vector<Bits> words;
        for (const auto& ln : data_lines(read_file(render_file))) {
          std::string w = ln.substr(ln.find('\t') + 1);
          if (!is_bits(w)) throw std::runtime_error("not a binary word: '" + ln + "'");
          words.push_back(w == "-" ? Bits{} : w);
        }
        auto res = tri_validate(words);
        if (!res.valid) {
          err << "invalid: " << res.error << "\n";
          return 1;
        }
        out << (format == "dot" ? render_dot_tri(words) : render_ascii_tri(words, res.events));
        return 0;
      }
      LabeledDiary d = parse_diary_text(read_file(render_file));
      DiaryValidation res =
          render_variant == "devlin" ? devlin_validate(d.words) : validate_diary(d.words);
      if (!res.valid) {
        err << "invalid: " << res.error << "\n";
        return 1;
      }
      out << (format == "dot" ? render_dot(d.words, res.events)
                              : render_ascii(d.words, res.events));
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace ramsey::cli
