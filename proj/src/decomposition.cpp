#include "modmotif/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "modmotif/errors.hpp"

namespace modmotif {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Series: return "series";
    case NodeKind::Parallel: return "parallel";
    case NodeKind::Prime: return "prime";
    case NodeKind::Leaf: return "leaf";
  }
  return "?";
}

bool is_module(const VertexColoredGraph& g, std::span<const VertexId> s) {
  if (s.empty()) throw InputError("the empty set is not a module");
  const std::size_t n = g.vertex_count();
  std::vector<char> inside(n, 0);
  std::size_t size = 0;
  for (auto v : s) {
    if (v >= n) throw InputError("vertex id out of range");
    if (!inside[v]) ++size;
    inside[v] = 1;
  }
  std::vector<std::uint32_t> hits(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!inside[v]) continue;
    for (auto w : g.neighbors(v)) {
      if (!inside[w]) ++hits[w];
    }
  }
  for (VertexId x = 0; x < n; ++x) {
    if (!inside[x] && hits[x] != 0 && hits[x] != size) return false;
  }
  return true;
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Scratch state for splitting one strong module S at a time. Local indices
// are positions in the sorted vertex list of S.
class ModuleSplitter {
 public:
  explicit ModuleSplitter(const VertexColoredGraph& g)
      : g_(g), local_(g.vertex_count(), kNone) {}

  // Returns the kind of S and fills `parts` with its maximal strong
  // submodules, each sorted, ordered by minimum vertex.
  NodeKind split(const VertexSet& s, std::vector<VertexSet>& parts) {
    parts.clear();
    if (s.size() == 1) return NodeKind::Leaf;
    enter(s);
    NodeKind kind;
    if (components(parts) > 1) {
      kind = NodeKind::Parallel;
    } else if (co_components(parts) > 1) {
      kind = NodeKind::Series;
    } else {
      prime_children(parts);
      kind = NodeKind::Prime;
    }
    leave();
    for (auto& p : parts) std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    if (parts.size() < 2) throw std::logic_error("strong module with fewer than two children");
    return kind;
  }

 private:
  void enter(const VertexSet& s) {
    members_ = &s;
    for (std::uint32_t i = 0; i < s.size(); ++i) local_[s[i]] = i;
    offset_.assign(s.size() + 1, 0);
    adj_.clear();
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      for (auto w : g_.neighbors(s[i])) {
        if (local_[w] != kNone) adj_.push_back(local_[w]);
      }
      offset_[i + 1] = adj_.size();
    }
  }

  void leave() {
    for (auto v : *members_) local_[v] = kNone;
    members_ = nullptr;
  }

  std::span<const std::uint32_t> local_neighbors(std::uint32_t i) const {
    return {adj_.data() + offset_[i], adj_.data() + offset_[i + 1]};
  }

  bool local_adjacent(std::uint32_t a, std::uint32_t b) const {
    return g_.adjacent((*members_)[a], (*members_)[b]);
  }

  std::size_t components(std::vector<VertexSet>& parts) {
    const auto& s = *members_;
    std::vector<char> seen(s.size(), 0);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t start = 0; start < s.size(); ++start) {
      if (seen[start]) continue;
      VertexSet comp;
      seen[start] = 1;
      stack.push_back(start);
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        comp.push_back(s[u]);
        for (auto w : local_neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
      parts.push_back(std::move(comp));
    }
    if (parts.size() == 1) parts.clear();
    return std::max<std::size_t>(parts.size(), 1);
  }

  // Connected components of the complement of G[S]. Each membership test
  // that keeps a vertex unvisited is charged to an edge of G[S].
  std::size_t co_components(std::vector<VertexSet>& parts) {
    const auto& s = *members_;
    std::vector<std::uint32_t> unvisited(s.size());
    for (std::uint32_t i = 0; i < s.size(); ++i) unvisited[i] = i;
    std::vector<std::uint32_t> stack, keep;
    while (!unvisited.empty()) {
      VertexSet comp;
      stack.push_back(unvisited.back());
      unvisited.pop_back();
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        comp.push_back(s[u]);
        keep.clear();
        for (auto w : unvisited) {
          if (local_adjacent(u, w)) {
            keep.push_back(w);
          } else {
            stack.push_back(w);
          }
        }
        unvisited.swap(keep);
      }
      parts.push_back(std::move(comp));
    }
    if (parts.size() == 1) parts.clear();
    return std::max<std::size_t>(parts.size(), 1);
  }

  // Both G[S] and its complement are connected. With v the first vertex of
  // S, refine S - {v} into its maximal modules avoiding v. Parts that are
  // children of S reach every other part in the forcing digraph, where
  // X -> Y when Y distinguishes v from X; they form its unique source
  // component. The remaining parts, together with v, make up the child
  // that contains v.
  void prime_children(std::vector<VertexSet>& parts) {
    const auto& s = *members_;
    const auto n = static_cast<std::uint32_t>(s.size());
    const std::uint32_t v = 0;

    // Parts are contiguous ranges of `order`.
    std::vector<std::uint32_t> order, where(n), part_of(n, kNone);
    std::vector<std::uint32_t> start, end, marked;
    order.reserve(n - 1);
    std::vector<char> is_neighbor(n, 0);
    for (auto w : local_neighbors(v)) is_neighbor[w] = 1;
    for (std::uint32_t i = 1; i < n; ++i) if (is_neighbor[i]) order.push_back(i);
    auto near = static_cast<std::uint32_t>(order.size());
    for (std::uint32_t i = 1; i < n; ++i) if (!is_neighbor[i]) order.push_back(i);
    auto add_part = [&](std::uint32_t b, std::uint32_t e) {
      auto id = static_cast<std::uint32_t>(start.size());
      start.push_back(b);
      end.push_back(e);
      marked.push_back(0);
      for (auto k = b; k < e; ++k) part_of[order[k]] = id;
      return id;
    };
    for (std::uint32_t k = 0; k < order.size(); ++k) where[order[k]] = k;
    if (near > 0) add_part(0, near);
    if (near < order.size()) add_part(near, static_cast<std::uint32_t>(order.size()));

    std::vector<std::uint32_t> queue;
    std::vector<char> queued(n, 0);
    for (std::uint32_t i = 1; i < n; ++i) {
      queue.push_back(i);
      queued[i] = 1;
    }
    std::vector<std::uint32_t> touched;
    while (!queue.empty()) {
      auto x = queue.back();
      queue.pop_back();
      queued[x] = 0;
      for (auto y : local_neighbors(x)) {
        if (y == v) continue;
        auto p = part_of[y];
        if (p == part_of[x]) continue;
        if (marked[p] == 0) touched.push_back(p);
        // Move y into the marked prefix of its range.
        auto slot = start[p] + marked[p]++;
        auto other = order[slot];
        std::swap(order[slot], order[where[y]]);
        where[other] = where[y];
        where[y] = slot;
      }
      for (auto p : touched) {
        auto m = marked[p];
        marked[p] = 0;
        if (m == end[p] - start[p]) continue;
        auto b = start[p];
        start[p] += m;
        add_part(b, b + m);
        for (auto k = b; k < end[p]; ++k) {
          auto w = order[k];
          if (!queued[w]) {
            queued[w] = 1;
            queue.push_back(w);
          }
        }
      }
      touched.clear();
    }

    const auto p = static_cast<std::uint32_t>(start.size());
    std::vector<std::uint32_t> rep(p);
    std::vector<char> rep_sees_v(p);
    for (std::uint32_t i = 0; i < p; ++i) {
      rep[i] = order[start[i]];
      rep_sees_v[i] = is_neighbor[rep[i]];
    }
    // Edge a -> b of the forcing digraph.
    auto forces = [&](std::uint32_t a, std::uint32_t b) {
      return a != b && rep_sees_v[b] != static_cast<char>(local_adjacent(rep[a], rep[b]));
    };

    // Kosaraju: finishing order on the digraph, then one search on the
    // transpose from the last finished part yields the source component.
    std::vector<std::uint32_t> finish;
    finish.reserve(p);
    std::vector<char> seen(p, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> dfs;
    for (std::uint32_t root = 0; root < p; ++root) {
      if (seen[root]) continue;
      seen[root] = 1;
      dfs.emplace_back(root, 0);
      while (!dfs.empty()) {
        auto& [a, next] = dfs.back();
        while (next < p && (seen[next] || !forces(a, next))) ++next;
        if (next == p) {
          finish.push_back(a);
          dfs.pop_back();
        } else {
          auto b = next++;
          seen[b] = 1;
          dfs.emplace_back(b, 0);
        }
      }
    }
    std::vector<char> top(p, 0);
    std::vector<std::uint32_t> stack{finish.back()};
    top[finish.back()] = 1;
    while (!stack.empty()) {
      auto b = stack.back();
      stack.pop_back();
      for (std::uint32_t a = 0; a < p; ++a) {
        if (!top[a] && forces(a, b)) {
          top[a] = 1;
          stack.push_back(a);
        }
      }
    }

    VertexSet with_v{s[v]};
    for (std::uint32_t i = 0; i < p; ++i) {
      if (top[i]) {
        VertexSet part;
        for (auto k = start[i]; k < end[i]; ++k) part.push_back(s[order[k]]);
        parts.push_back(std::move(part));
      } else {
        for (auto k = start[i]; k < end[i]; ++k) with_v.push_back(s[order[k]]);
      }
    }
    parts.push_back(std::move(with_v));
  }

  const VertexColoredGraph& g_;
  std::vector<std::uint32_t> local_;
  const VertexSet* members_ = nullptr;
  std::vector<std::size_t> offset_;
  std::vector<std::uint32_t> adj_;
};

}  // namespace

ModularDecompositionTree decompose(const VertexColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("cannot decompose the empty graph");

  ModularDecompositionTree tree;
  tree.leaf_.assign(n, 0);
  ModuleSplitter splitter(g);

  struct Work {
    VertexSet vertices;
    std::size_t parent;
  };
  VertexSet all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  std::vector<Work> work;
  work.push_back({std::move(all), 0});
  std::vector<VertexSet> parts;

  // Popping from a stack with children pushed in reverse gives pre-order.
  while (!work.empty()) {
    Work item = std::move(work.back());
    work.pop_back();
    const std::size_t id = tree.nodes_.size();
    TreeNode node;
    node.parent = tree.nodes_.empty() ? id : item.parent;
    node.kind = splitter.split(item.vertices, parts);
    node.vertices = std::move(item.vertices);
    if (node.kind == NodeKind::Leaf) tree.leaf_[node.vertices.front()] = id;
    if (id != node.parent) tree.nodes_[node.parent].children.push_back(id);
    tree.nodes_.push_back(std::move(node));
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      work.push_back({std::move(*it), id});
    }
  }
  return tree;
}

std::vector<VertexSet> strong_modules(const ModularDecompositionTree& t) {
  std::vector<VertexSet> out;
  out.reserve(t.size());
  for (const auto& node : t.nodes()) out.push_back(node.vertices);
  return out;
}

NodeKind classify(const VertexColoredGraph& g, std::span<const VertexId> s) {
  if (!is_module(g, s)) throw InputError("vertex set is not a module");
  VertexSet set = make_vertex_set({s.begin(), s.end()}, g.vertex_count());
  if (set.size() == 1) return NodeKind::Leaf;
  if (!induces_connected(g, set)) return NodeKind::Parallel;

  // Complement connectivity by search over non-neighbors.
  std::vector<VertexId> unvisited(set.begin() + 1, set.end()), keep;
  std::vector<VertexId> stack{set.front()};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    keep.clear();
    for (auto w : unvisited) {
      if (g.adjacent(u, w)) {
        keep.push_back(w);
      } else {
        stack.push_back(w);
      }
    }
    unvisited.swap(keep);
  }
  return unvisited.empty() ? NodeKind::Prime : NodeKind::Series;
}

}  // namespace modmotif
