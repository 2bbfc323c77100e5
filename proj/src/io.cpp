#include "modmotif/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "modmotif/errors.hpp"

namespace modmotif {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls fn(line_number, tokens) for each non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

template <typename Int>
bool parse_int(std::string_view s, Int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_bar(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto bar = s.find('|', pos);
    out.push_back(s.substr(pos, bar == std::string_view::npos ? s.npos : bar - pos));
    if (bar == std::string_view::npos) break;
    pos = bar + 1;
  }
  return out;
}

}  // namespace

VertexColoredGraph parse_graph(std::string_view text) {
  auto universe = std::make_shared<ColorUniverse>();
  std::vector<std::string> names;
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::vector<ColorId>> lists;
  bool list_mode = false;
  struct PendingEdge {
    std::size_t line;
    std::string u, v;
  };
  std::vector<PendingEdge> pending;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok[0] == "v") {
      if (tok.size() != 3) throw ParseError(line, "expected 'v <id> <color>'");
      std::string id(tok[1]);
      if (index.count(id) != 0) throw ParseError(line, "duplicate vertex id '" + id + "'");
      std::vector<ColorId> colors;
      auto parts = split_bar(tok[2]);
      if (parts.size() > 1) list_mode = true;
      for (auto p : parts) {
        if (p.empty()) throw ParseError(line, "empty color name");
        colors.push_back(universe->intern(p));
      }
      std::sort(colors.begin(), colors.end());
      if (std::adjacent_find(colors.begin(), colors.end()) != colors.end()) {
        throw ParseError(line, "repeated color in list");
      }
      index.emplace(id, static_cast<VertexId>(names.size()));
      names.push_back(std::move(id));
      lists.push_back(std::move(colors));
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      pending.push_back({line, std::string(tok[1]), std::string(tok[2])});
    } else {
      throw ParseError(line, "unknown record '" + std::string(tok[0]) + "'");
    }
  });

  std::vector<Edge> edges;
  std::set<Edge> seen;
  edges.reserve(pending.size());
  for (const auto& e : pending) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end()) throw ParseError(e.line, "edge endpoint '" + e.u + "' undeclared");
    if (iv == index.end()) throw ParseError(e.line, "edge endpoint '" + e.v + "' undeclared");
    if (iu->second == iv->second) throw ParseError(e.line, "self-loop on '" + e.u + "'");
    Edge edge{std::min(iu->second, iv->second), std::max(iu->second, iv->second)};
    if (!seen.insert(edge).second) {
      throw ParseError(e.line, "duplicate edge " + e.u + " " + e.v);
    }
    edges.push_back(edge);
  }

  ColorUniversePtr frozen = universe;
  if (list_mode) {
    return VertexColoredGraph::list_colored(frozen, std::move(names), std::move(lists),
                                            std::move(edges));
  }
  std::vector<ColorId> colors;
  colors.reserve(lists.size());
  for (const auto& l : lists) colors.push_back(l.front());
  return VertexColoredGraph::simple(frozen, std::move(names), std::move(colors),
                                    std::move(edges));
}

std::string serialize_graph(const VertexColoredGraph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    // Lists by name, so the text does not depend on interning order.
    std::vector<std::string_view> names;
    for (auto c : g.colors(v)) names.push_back(g.universe().name(c));
    std::sort(names.begin(), names.end());
    out << "v " << g.name(v) << ' ';
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "|" : "") << names[i];
    out << '\n';
  }
  for (auto [u, v] : g.edges()) {
    out << "e " << g.name(u) << ' ' << g.name(v) << '\n';
  }
  return out.str();
}

ColorMultiset parse_motif(std::string_view text, const ColorUniversePtr& base) {
  auto universe = std::make_shared<ColorUniverse>(base ? *base : ColorUniverse{});
  std::map<ColorId, std::uint32_t> counts;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok.size() != 2) throw ParseError(line, "expected '<color> <count>'");
    long long count = 0;
    if (!parse_int(tok[1], count)) throw ParseError(line, "count is not an integer");
    if (count <= 0) throw ParseError(line, "count must be positive");
    if (count > 1'000'000'000LL) throw ParseError(line, "count too large");
    auto c = universe->intern(tok[0]);
    if (!counts.emplace(c, static_cast<std::uint32_t>(count)).second) {
      throw ParseError(line, "duplicate color line '" + std::string(tok[0]) + "'");
    }
  });
  std::vector<std::uint32_t> occ(universe->size(), 0);
  for (auto [c, n] : counts) occ[c] = n;
  return ColorMultiset(universe, std::move(occ));
}

std::string serialize_motif(const ColorMultiset& m) {
  std::ostringstream out;
  for (ColorId c = 0; c < m.counts().size(); ++c) {
    if (m.occ(c) > 0) out << m.universe().name(c) << ' ' << m.occ(c) << '\n';
  }
  return out.str();
}

SetSystem parse_set_system(std::string_view text, bool triples_header) {
  SetSystem s;
  bool header = false;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (!header) {
      std::size_t value = 0;
      if (tok.size() != 1 || !parse_int(tok[0], value)) {
        throw ParseError(line, triples_header ? "expected q" : "expected |X|");
      }
      s.universe_size = triples_header ? 3 * value : value;
      header = true;
      return;
    }
    std::vector<std::size_t> set;
    if (!(tok.size() == 1 && tok[0] == "-")) {
      for (auto t : tok) {
        std::size_t x = 0;
        if (!parse_int(t, x)) throw ParseError(line, "element is not an integer");
        if (x < 1 || x > s.universe_size) {
          throw ParseError(line, "element " + std::string(t) + " outside 1.." +
                                     std::to_string(s.universe_size));
        }
        set.push_back(x - 1);
      }
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw ParseError(line, "repeated element in set");
    }
    s.sets.push_back(std::move(set));
  });
  if (!header) throw ParseError(1, "missing header line");
  return s;
}

std::string serialize_set_system(const SetSystem& s, bool triples_header) {
  std::ostringstream out;
  out << (triples_header ? s.universe_size / 3 : s.universe_size) << '\n';
  for (const auto& set : s.sets) {
    if (set.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
      out << (i ? " " : "") << set[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace modmotif
