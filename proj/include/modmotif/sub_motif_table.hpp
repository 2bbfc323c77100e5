#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "modmotif/graph.hpp"

namespace modmotif {

/// Encodes sub-multisets M' of a target motif M in two forms at once:
///
///  - `index`: mixed-radix number over the colors of M, first color most
///    significant, so numeric order is lexicographic order of occurrence
///    vectors. Ranges over [0, key_space()).
///  - `packed`: one bit field per color with a guard bit above it. Adding
///    two packed keys never carries across fields, and a field exceeding
///    its bound shows up in the guard bit, so the test "M'+M'' is still a
///    sub-multiset of M" costs one add and one mask.
///
/// Throws InputError when the fields do not fit in 64 bits.
class MotifKeyCodec {
 public:
  struct Key {
    std::uint64_t index = 0;
    std::uint64_t packed = 0;
    bool operator==(const Key&) const = default;
  };

  explicit MotifKeyCodec(const ColorMultiset& target);

  /// Key of a multiset, or nullopt when it is not a sub-multiset of M.
  std::optional<Key> encode(const ColorMultiset& m) const;

  /// Key of a single color, or nullopt when the color is absent from M.
  std::optional<Key> unit(ColorId c) const {
    return c < unit_.size() && unit_[c] ? std::optional<Key>(*unit_[c]) : std::nullopt;
  }

  std::optional<Key> add(Key a, Key b) const {
    std::uint64_t sum = a.packed + b.packed;
    if ((sum + bias_) & guard_) return std::nullopt;
    return Key{a.index + b.index, sum};
  }

  /// a - b when b <= a occurrence-wise.
  std::optional<Key> subtract(Key a, Key b) const {
    std::uint64_t diff = (a.packed | guard_) - b.packed;
    if ((diff & guard_) != guard_) return std::nullopt;
    return Key{a.index - b.index, diff & ~guard_};
  }

  ColorMultiset decode(std::uint64_t index) const;

  Key target() const noexcept { return target_; }
  Key zero() const noexcept { return {}; }

  /// Number of sub-multisets of M, the product of (occ+1).
  std::uint64_t key_space() const noexcept { return key_space_; }
  std::size_t motif_size() const noexcept { return k_; }
  const ColorUniversePtr& universe() const noexcept { return universe_; }

 private:
  ColorUniversePtr universe_;
  std::vector<ColorId> support_;
  std::vector<std::uint32_t> limit_;
  std::vector<std::uint64_t> weight_;
  std::vector<unsigned> shift_;
  std::vector<std::optional<Key>> unit_;
  std::uint64_t bias_ = 0;
  std::uint64_t guard_ = 0;
  std::uint64_t key_space_ = 1;
  std::size_t k_ = 0;
  Key target_;
};

/// The DP table D(i, M') with the child dimension rolled: one entry per
/// reachable sub-multiset, with a back pointer to the entry it was extended
/// from and the child that extended it.
class SubMotifTable {
 public:
  static constexpr std::uint32_t kNoChild = std::numeric_limits<std::uint32_t>::max();

  explicit SubMotifTable(std::shared_ptr<const MotifKeyCodec> codec);

  /// Folds in child `child` with sub-multiset key `key`: every entry that
  /// was reachable before the call is also reachable plus `key`. Returns
  /// true once the target is reachable.
  bool add_child(MotifKeyCodec::Key key, std::uint32_t child);

  /// Back to the state with only the empty multiset reachable. Costs
  /// O(size()), so one table can serve many tree nodes.
  void reset();

  bool reachable(MotifKeyCodec::Key key) const { return seen(key.index); }
  bool reachable(const ColorMultiset& m) const;
  bool target_reachable() const { return reachable(codec_->target()); }

  /// Child indices (ascending) whose multisets sum to `m`, or nullopt.
  std::optional<std::vector<std::uint32_t>> witness(const ColorMultiset& m) const;
  std::optional<std::vector<std::uint32_t>> witness(MotifKeyCodec::Key key) const;

  /// Reachable sub-multisets in lexicographic order of occurrence vectors.
  std::vector<ColorMultiset> reachable_multisets() const;

  std::size_t size() const noexcept { return keys_.size(); }

  /// min(2^k, prod(occ+1)); size() never exceeds it.
  std::uint64_t size_bound() const noexcept;

  const MotifKeyCodec& codec() const noexcept { return *codec_; }

 private:
  static constexpr std::uint32_t kNoEntry = std::numeric_limits<std::uint32_t>::max();

  struct Link {
    std::uint32_t child;
    std::uint32_t prev;
  };

  std::uint32_t find(std::uint64_t index) const;
  bool seen(std::uint64_t index) const;
  void insert(std::uint64_t index, std::uint32_t entry);

  std::shared_ptr<const MotifKeyCodec> codec_;
  // Entry e: keys_[e] and the link it was extended along.
  std::vector<MotifKeyCodec::Key> keys_;
  std::vector<Link> links_;
  // Small key spaces keep one reachability bit per key and look entries up
  // by scanning; larger ones map key index to entry.
  std::vector<std::uint64_t> bits_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
  // Per child key, the entry count below which that key was already added.
  // A repeated key only has to extend entries created since.
  std::unordered_map<std::uint64_t, std::uint32_t> applied_;
};

/// Fills the table over `children` (each a sub-multiset of `m`, as the
/// caller prunes). A sub-multiset is reachable iff some sub-collection of
/// the children sums to it exactly.
SubMotifTable dp_fill(std::span<const ColorMultiset> children, const ColorMultiset& m);

}  // namespace modmotif
