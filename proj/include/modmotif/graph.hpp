#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modmotif {

using VertexId = std::uint32_t;
using ColorId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

struct Color {
  ColorId id;
  std::string name;
};

/// Interned color names. Ids are dense and assigned in insertion order.
class ColorUniverse {
 public:
  ColorUniverse() = default;
  explicit ColorUniverse(std::vector<std::string> names);

  ColorId intern(std::string_view name);
  std::optional<ColorId> find(std::string_view name) const;

  const std::string& name(ColorId id) const { return names_.at(id); }
  Color color(ColorId id) const { return {id, name(id)}; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// True when `prefix` lists the same names as the first ids of this one.
  bool extends(const ColorUniverse& prefix) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ColorId> ids_;
};

using ColorUniversePtr = std::shared_ptr<const ColorUniverse>;

/// A multiset over a color universe, stored as an occurrence vector.
///
/// Two multisets are comparable when one universe extends the other; the
/// shorter occurrence vector is read as zero-padded.
class ColorMultiset {
 public:
  explicit ColorMultiset(ColorUniversePtr universe);
  ColorMultiset(ColorUniversePtr universe, std::vector<std::uint32_t> occ);

  std::uint32_t occ(ColorId c) const noexcept {
    return c < occ_.size() ? occ_[c] : 0;
  }
  std::span<const std::uint32_t> counts() const noexcept { return occ_; }

  /// Total number of elements, k.
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Every color occurs at most once.
  bool colorful() const noexcept;

  /// Number of colors with a nonzero count.
  std::size_t distinct() const noexcept;

  const ColorUniverse& universe() const noexcept { return *universe_; }
  const ColorUniversePtr& universe_ptr() const noexcept { return universe_; }

  ColorMultiset operator+(const ColorMultiset& other) const;
  bool operator==(const ColorMultiset& other) const;

  /// `{a:2, b:1}` in color-id order; zero counts omitted.
  std::string to_string() const;

 private:
  ColorUniversePtr universe_;
  std::vector<std::uint32_t> occ_;
  std::size_t size_ = 0;
};

/// Throws InputError unless one universe extends the other.
void require_compatible(const ColorUniverse& a, const ColorUniverse& b);

/// Occurrence-wise a <= b.
bool multiset_subset(const ColorMultiset& a, const ColorMultiset& b);

enum class ColoringMode { Simple, ListColored };

/// Undirected simple graph with one color (simple mode) or a nonempty color
/// list (list-colored mode) per vertex. Immutable once built.
class VertexColoredGraph {
 public:
  /// One color per vertex. `names` are the user-facing vertex ids.
  static VertexColoredGraph simple(ColorUniversePtr universe,
                                   std::vector<std::string> names,
                                   std::vector<ColorId> colors,
                                   std::vector<Edge> edges);

  static VertexColoredGraph list_colored(
      ColorUniversePtr universe, std::vector<std::string> names,
      std::vector<std::vector<ColorId>> color_lists, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  ColoringMode mode() const noexcept { return mode_; }

  /// The single color of v. Throws InputError in list-colored mode.
  ColorId color(VertexId v) const;

  /// Sorted color list of v; a single element in simple mode.
  std::span<const ColorId> colors(VertexId v) const {
    return {color_data_.data() + color_offset_[v],
            color_data_.data() + color_offset_[v + 1]};
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + adjacency_offset_[v],
            adjacency_.data() + adjacency_offset_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return adjacency_offset_[v + 1] - adjacency_offset_[v];
  }

  bool adjacent(VertexId u, VertexId v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  const ColorUniverse& universe() const noexcept { return *universe_; }
  const ColorUniversePtr& universe_ptr() const noexcept { return universe_; }

  /// Same vertex names, per-vertex color names, edge set and mode.
  bool operator==(const VertexColoredGraph& other) const;

 private:
  VertexColoredGraph() = default;
  void build(std::vector<Edge> edges);

  ColorUniversePtr universe_;
  ColoringMode mode_ = ColoringMode::Simple;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> name_index_;
  std::vector<std::size_t> color_offset_;
  std::vector<ColorId> color_data_;
  std::vector<std::size_t> adjacency_offset_;
  std::vector<VertexId> adjacency_;
  std::vector<Edge> edges_;
  // Row-major adjacency bitmap, only kept for graphs small enough to afford it.
  std::vector<std::uint64_t> matrix_;
  std::size_t words_per_row_ = 0;
};

/// Occurrence vector of the colors of `s`. Simple mode only.
ColorMultiset color_multiset_of(const VertexColoredGraph& g,
                                std::span<const VertexId> s);

/// Sorts and deduplicates; throws InputError on ids >= n.
VertexSet make_vertex_set(std::vector<VertexId> ids, std::size_t n);

/// True when G[s] is connected. The empty set counts as disconnected.
bool induces_connected(const VertexColoredGraph& g, std::span<const VertexId> s);

}  // namespace modmotif
