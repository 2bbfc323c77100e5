#include "modmotif/graph.hpp"

#include <algorithm>
#include <sstream>

#include "modmotif/errors.hpp"

namespace modmotif {

namespace {

// Above this many vertices the adjacency bitmap is skipped and adjacency
// queries fall back to binary search (20000^2 bits is 50 MB).
constexpr std::size_t kMatrixLimit = 20000;

}  // namespace

ColorUniverse::ColorUniverse(std::vector<std::string> names) {
  for (auto& n : names) {
    if (ids_.count(n) != 0) {
      throw InputError("duplicate color name '" + n + "'");
    }
    intern(n);
  }
}

ColorId ColorUniverse::intern(std::string_view name) {
  std::string key(name);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  auto id = static_cast<ColorId>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<ColorId> ColorUniverse::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool ColorUniverse::extends(const ColorUniverse& prefix) const {
  if (&prefix == this) return true;
  if (prefix.size() > size()) return false;
  return std::equal(prefix.names_.begin(), prefix.names_.end(), names_.begin());
}

void require_compatible(const ColorUniverse& a, const ColorUniverse& b) {
  if (!a.extends(b) && !b.extends(a)) {
    throw InputError("color multisets are over mismatched color universes");
  }
}

ColorMultiset::ColorMultiset(ColorUniversePtr universe)
    : ColorMultiset(universe, std::vector<std::uint32_t>(universe->size(), 0)) {}

ColorMultiset::ColorMultiset(ColorUniversePtr universe,
                             std::vector<std::uint32_t> occ)
    : universe_(std::move(universe)), occ_(std::move(occ)) {
  if (!universe_) throw InputError("color multiset needs a universe");
  if (occ_.size() > universe_->size()) {
    throw InputError("occurrence vector longer than its color universe");
  }
  occ_.resize(universe_->size(), 0);
  for (auto c : occ_) size_ += c;
}

bool ColorMultiset::colorful() const noexcept {
  return std::all_of(occ_.begin(), occ_.end(), [](auto c) { return c <= 1; });
}

std::size_t ColorMultiset::distinct() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(occ_.begin(), occ_.end(), [](auto c) { return c > 0; }));
}

ColorMultiset ColorMultiset::operator+(const ColorMultiset& other) const {
  require_compatible(universe(), other.universe());
  const auto& wider =
      universe().size() >= other.universe().size() ? universe_ : other.universe_;
  std::vector<std::uint32_t> sum(wider->size(), 0);
  for (std::size_t c = 0; c < sum.size(); ++c) {
    sum[c] = occ(static_cast<ColorId>(c)) + other.occ(static_cast<ColorId>(c));
  }
  return ColorMultiset(wider, std::move(sum));
}

bool ColorMultiset::operator==(const ColorMultiset& other) const {
  if (!universe().extends(other.universe()) &&
      !other.universe().extends(universe())) {
    return false;
  }
  auto width = std::max(occ_.size(), other.occ_.size());
  for (std::size_t c = 0; c < width; ++c) {
    if (occ(static_cast<ColorId>(c)) != other.occ(static_cast<ColorId>(c))) {
      return false;
    }
  }
  return true;
}

std::string ColorMultiset::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t c = 0; c < occ_.size(); ++c) {
    if (occ_[c] == 0) continue;
    if (!first) out << ", ";
    first = false;
    out << universe_->name(static_cast<ColorId>(c)) << ':' << occ_[c];
  }
  out << '}';
  return out.str();
}

bool multiset_subset(const ColorMultiset& a, const ColorMultiset& b) {
  require_compatible(a.universe(), b.universe());
  auto width = std::max(a.counts().size(), b.counts().size());
  for (std::size_t c = 0; c < width; ++c) {
    if (a.occ(static_cast<ColorId>(c)) > b.occ(static_cast<ColorId>(c))) {
      return false;
    }
  }
  return true;
}

VertexColoredGraph VertexColoredGraph::simple(ColorUniversePtr universe,
                                              std::vector<std::string> names,
                                              std::vector<ColorId> colors,
                                              std::vector<Edge> edges) {
  if (colors.size() != names.size()) {
    throw InputError("one color per vertex required");
  }
  std::vector<std::vector<ColorId>> lists;
  lists.reserve(colors.size());
  for (auto c : colors) lists.push_back({c});
  auto g = list_colored(std::move(universe), std::move(names), std::move(lists),
                        std::move(edges));
  g.mode_ = ColoringMode::Simple;
  return g;
}

VertexColoredGraph VertexColoredGraph::list_colored(
    ColorUniversePtr universe, std::vector<std::string> names,
    std::vector<std::vector<ColorId>> color_lists, std::vector<Edge> edges) {
  if (!universe) throw InputError("graph needs a color universe");
  if (color_lists.size() != names.size()) {
    throw InputError("one color list per vertex required");
  }
  VertexColoredGraph g;
  g.universe_ = std::move(universe);
  g.mode_ = ColoringMode::ListColored;
  g.names_ = std::move(names);
  for (std::size_t v = 0; v < g.names_.size(); ++v) {
    if (!g.name_index_.emplace(g.names_[v], static_cast<VertexId>(v)).second) {
      throw InputError("duplicate vertex id '" + g.names_[v] + "'");
    }
  }
  g.color_offset_.reserve(g.names_.size() + 1);
  g.color_offset_.push_back(0);
  for (std::size_t v = 0; v < color_lists.size(); ++v) {
    auto& list = color_lists[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (list.empty()) {
      throw InputError("vertex '" + g.names_[v] + "' has no color");
    }
    if (list.back() >= g.universe_->size()) {
      throw InputError("vertex '" + g.names_[v] + "' has an unknown color id");
    }
    g.color_data_.insert(g.color_data_.end(), list.begin(), list.end());
    g.color_offset_.push_back(g.color_data_.size());
  }
  g.build(std::move(edges));
  return g;
}

void VertexColoredGraph::build(std::vector<Edge> edges) {
  const std::size_t n = names_.size();
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop on vertex '" + names_[u] + "'");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw InputError("duplicate edge " + names_[dup->first] + " " +
                     names_[dup->second]);
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges_) {
    ++degree[u];
    ++degree[v];
  }
  adjacency_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    adjacency_offset_[v + 1] = adjacency_offset_[v] + degree[v];
  }
  adjacency_.resize(adjacency_offset_[n]);
  std::vector<std::size_t> fill(adjacency_offset_.begin(),
                                adjacency_offset_.end() - 1);
  for (auto [u, v] : edges_) {
    adjacency_[fill[u]++] = v;
    adjacency_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_offset_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(adjacency_offset_[v + 1]));
  }

  if (n <= kMatrixLimit) {
    words_per_row_ = (n + 63) / 64;
    matrix_.assign(n * words_per_row_, 0);
    for (auto [u, v] : edges_) {
      matrix_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
      matrix_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

ColorId VertexColoredGraph::color(VertexId v) const {
  if (mode_ != ColoringMode::Simple) {
    throw InputError("single vertex color requested on a list-colored graph");
  }
  return color_data_[color_offset_[v]];
}

bool VertexColoredGraph::adjacent(VertexId u, VertexId v) const {
  if (!matrix_.empty()) {
    return (matrix_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  }
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<VertexId> VertexColoredGraph::find_vertex(std::string_view name) const {
  auto it = name_index_.find(std::string(name));
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

bool VertexColoredGraph::operator==(const VertexColoredGraph& other) const {
  if (mode_ != other.mode_ || names_ != other.names_ || edges_ != other.edges_) {
    return false;
  }
  for (VertexId v = 0; v < names_.size(); ++v) {
    auto a = colors(v);
    auto b = other.colors(v);
    std::vector<std::string> na, nb;
    for (auto c : a) na.push_back(universe_->name(c));
    for (auto c : b) nb.push_back(other.universe_->name(c));
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;
  }
  return true;
}

ColorMultiset color_multiset_of(const VertexColoredGraph& g,
                                std::span<const VertexId> s) {
  if (g.mode() != ColoringMode::Simple) {
    throw InputError(
        "color_multiset_of needs a simple-mode graph; list-colored vertices "
        "are matched with bijection_feasible");
  }
  std::vector<std::uint32_t> occ(g.universe().size(), 0);
  for (auto v : s) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range");
    ++occ[g.color(v)];
  }
  return ColorMultiset(g.universe_ptr(), std::move(occ));
}

VertexSet make_vertex_set(std::vector<VertexId> ids, std::size_t n) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && ids.back() >= n) throw InputError("vertex id out of range");
  return ids;
}

bool induces_connected(const VertexColoredGraph& g, std::span<const VertexId> s) {
  if (s.empty()) return false;
  std::vector<char> inside(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (auto v : s) inside[v] = 1;
  std::vector<VertexId> stack{s.front()};
  seen[s.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(u)) {
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

}  // namespace modmotif
