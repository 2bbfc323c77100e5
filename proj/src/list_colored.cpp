#include <algorithm>
#include <map>

#include "modmotif/errors.hpp"
#include "modmotif/solvers.hpp"

namespace modmotif {

namespace {

// Kuhn's augmenting paths from vertices into the k color slots of `m`.
// Colors are tried in ascending id order, so the result is deterministic.
// Every vertex must be matched; lists.size() may be below m.size().
class SlotMatcher {
 public:
  explicit SlotMatcher(const ColorMultiset& m) {
    for (ColorId c = 0; c < m.counts().size(); ++c) {
      for (std::uint32_t i = 0; i < m.occ(c); ++i) slot_color_.push_back(c);
    }
    first_slot_.assign(m.counts().size() + 1, 0);
    for (ColorId c = 0; c < m.counts().size(); ++c) {
      first_slot_[c + 1] = first_slot_[c] + m.occ(c);
    }
  }

  std::optional<std::vector<ColorId>> match(std::span<const std::vector<ColorId>> lists) {
    if (lists.size() > slot_color_.size()) return std::nullopt;
    lists_ = lists;
    owner_.assign(slot_color_.size(), kFree);
    for (std::size_t v = 0; v < lists.size(); ++v) {
      seen_.assign(slot_color_.size(), false);
      if (!augment(v)) return std::nullopt;
    }
    std::vector<ColorId> out(lists.size());
    for (std::size_t s = 0; s < owner_.size(); ++s) {
      if (owner_[s] != kFree) out[owner_[s]] = slot_color_[s];
    }
    return out;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool augment(std::size_t v) {
    for (auto c : lists_[v]) {
      if (c + 1 >= first_slot_.size()) continue;
      for (auto s = first_slot_[c]; s < first_slot_[c + 1]; ++s) {
        if (seen_[s]) continue;
        seen_[s] = true;
        if (owner_[s] == kFree || augment(owner_[s])) {
          owner_[s] = v;
          return true;
        }
      }
    }
    return false;
  }

  std::vector<ColorId> slot_color_;
  std::vector<std::size_t> first_slot_;
  std::span<const std::vector<ColorId>> lists_;
  std::vector<std::size_t> owner_;
  std::vector<bool> seen_;
};

// Color list of v with the colors m does not use dropped.
std::vector<ColorId> useful_colors(const VertexColoredGraph& g, VertexId v,
                                   const ColorMultiset& m) {
  std::vector<ColorId> out;
  for (auto c : g.colors(v)) {
    if (m.occ(c) > 0) out.push_back(c);
  }
  return out;
}

struct ProfileGroup {
  std::vector<std::vector<ColorId>> lists;  // sorted per-vertex lists of one child
  std::vector<std::size_t> children;       // tree nodes sharing the profile
  std::size_t child_size = 0;
  std::size_t max_take = 0;
};

class UnionSearch {
 public:
  UnionSearch(std::vector<ProfileGroup> groups, const ColorMultiset& m, std::size_t k)
      : groups_(std::move(groups)), matcher_(m), k_(k) {
    suffix_capacity_.assign(groups_.size() + 1, 0);
    for (std::size_t i = groups_.size(); i-- > 0;) {
      suffix_capacity_[i] =
          suffix_capacity_[i + 1] + groups_[i].max_take * groups_[i].child_size;
    }
    take_.assign(groups_.size(), 0);
  }

  bool run() { return search(0, k_, 0); }

  std::vector<std::size_t> chosen_children() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
      for (std::size_t j = 0; j < take_[i]; ++j) out.push_back(groups_[i].children[j]);
    }
    return out;
  }

 private:
  bool search(std::size_t i, std::size_t remaining, std::size_t taken) {
    if (remaining == 0) return taken >= 2;
    if (i == groups_.size() || suffix_capacity_[i] < remaining) return false;
    const auto& g = groups_[i];
    const auto most = std::min(g.max_take, remaining / g.child_size);
    for (std::size_t c = most + 1; c-- > 0;) {
      const auto before = lists_.size();
      for (std::size_t j = 0; j < c; ++j) {
        lists_.insert(lists_.end(), g.lists.begin(), g.lists.end());
      }
      // Partial Hall check: the vertices chosen so far must fit into M.
      bool ok = c == 0 || matcher_.match(lists_).has_value();
      if (ok) {
        take_[i] = c;
        if (search(i + 1, remaining - c * g.child_size, taken + c)) return true;
      }
      lists_.resize(before);
    }
    take_[i] = 0;
    return false;
  }

  std::vector<ProfileGroup> groups_;
  SlotMatcher matcher_;
  std::size_t k_;
  std::vector<std::size_t> suffix_capacity_;
  std::vector<std::size_t> take_;
  std::vector<std::vector<ColorId>> lists_;
};

}  // namespace

std::optional<std::vector<ColorId>> bijection_feasible(
    std::span<const std::vector<ColorId>> lists, const ColorMultiset& m) {
  if (lists.size() != m.size()) {
    throw InputError("bijection needs " + std::to_string(m.size()) + " vertices, got " +
                     std::to_string(lists.size()));
  }
  return SlotMatcher(m).match(lists);
}

std::optional<std::vector<ColorId>> bijection_feasible(const VertexColoredGraph& g,
                                                       std::span<const VertexId> vertices,
                                                       const ColorMultiset& m) {
  require_compatible(g.universe(), m.universe());
  std::vector<std::vector<ColorId>> lists;
  lists.reserve(vertices.size());
  for (auto v : vertices) {
    if (v >= g.vertex_count()) throw InputError("vertex id out of range");
    auto cs = g.colors(v);
    lists.emplace_back(cs.begin(), cs.end());
  }
  return bijection_feasible(lists, m);
}

std::optional<MotifSolution> solve_list_colored(const VertexColoredGraph& g,
                                                const ModularDecompositionTree& t,
                                                const ColorMultiset& m, std::size_t k) {
  require_compatible(g.universe(), m.universe());
  if (k != m.size()) {
    throw InputError("k = " + std::to_string(k) + " but the motif has size " +
                     std::to_string(m.size()));
  }
  if (k == 0) throw InputError("the motif must be nonempty");

  SlotMatcher matcher(m);
  std::vector<std::vector<ColorId>> lists;
  // Children that hold a vertex with no usable color can never take part.
  std::vector<char> usable(t.size(), 1);
  for (std::size_t i = t.size(); i-- > 0;) {
    const auto& node = t.node(i);
    if (node.kind == NodeKind::Leaf) {
      usable[i] = !useful_colors(g, node.vertices.front(), m).empty();
    } else {
      for (auto c : node.children) usable[i] = usable[i] && usable[c];
    }
  }

  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& node = t.node(i);
    if (node.vertices.size() == k) {
      if (!usable[i]) continue;
      lists.clear();
      for (auto v : node.vertices) lists.push_back(useful_colors(g, v, m));
      if (auto f = matcher.match(lists)) {
        return MotifSolution{node.vertices, std::move(f), i, node.kind};
      }
      continue;
    }
    if (node.vertices.size() < k || !t.is_degenerate(i)) continue;

    std::vector<ProfileGroup> groups;
    std::map<std::vector<std::vector<ColorId>>, std::size_t> group_of;
    for (auto c : node.children) {
      const auto& vs = t.node(c).vertices;
      if (!usable[c] || vs.size() >= k) continue;
      std::vector<std::vector<ColorId>> profile;
      for (auto v : vs) profile.push_back(useful_colors(g, v, m));
      std::sort(profile.begin(), profile.end());
      auto [it, fresh] = group_of.try_emplace(profile, groups.size());
      if (fresh) {
        groups.push_back({std::move(profile), {}, vs.size(), 0});
      }
      auto& grp = groups[it->second];
      // No union of size k holds more than k / |child| copies.
      if (grp.children.size() < k / vs.size()) grp.children.push_back(c);
      grp.max_take = grp.children.size();
    }
    if (groups.empty()) continue;

    UnionSearch search(std::move(groups), m, k);
    if (!search.run()) continue;
    MotifSolution s;
    for (auto c : search.chosen_children()) {
      const auto& vs = t.node(c).vertices;
      s.vertices.insert(s.vertices.end(), vs.begin(), vs.end());
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    lists.clear();
    for (auto v : s.vertices) lists.push_back(useful_colors(g, v, m));
    s.assignment = matcher.match(lists);
    s.tree_node = i;
    s.tree_node_kind = node.kind;
    return s;
  }
  return std::nullopt;
}

}  // namespace modmotif
