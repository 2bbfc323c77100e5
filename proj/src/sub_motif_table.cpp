#include "modmotif/sub_motif_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "modmotif/errors.hpp"

namespace modmotif {

namespace {

// Tables over at most this many keys use a flat bitset (64 MB of bits).
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 29;

}  // namespace

MotifKeyCodec::MotifKeyCodec(const ColorMultiset& target)
    : universe_(target.universe_ptr()), k_(target.size()) {
  for (ColorId c = 0; c < target.counts().size(); ++c) {
    if (target.occ(c) > 0) {
      support_.push_back(c);
      limit_.push_back(target.occ(c));
    }
  }
  const std::size_t d = support_.size();
  weight_.assign(d, 1);
  for (std::size_t i = d; i-- > 0;) {
    std::uint64_t radix = std::uint64_t{limit_[i]} + 1;
    if (key_space_ > std::numeric_limits<std::uint64_t>::max() / radix) {
      throw InputError("motif " + target.to_string() + " has too many sub-multisets to index");
    }
    weight_[i] = key_space_;
    key_space_ *= radix;
  }
  unsigned bits = 0;
  shift_.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto width = static_cast<unsigned>(std::bit_width(limit_[i]));
    if (bits + width + 1 > 64) {
      throw InputError("motif " + target.to_string() +
                       " is too large for the 64-bit sub-motif key");
    }
    shift_[i] = bits;
    bias_ |= ((std::uint64_t{1} << width) - 1 - limit_[i]) << bits;
    guard_ |= std::uint64_t{1} << (bits + width);
    bits += width + 1;
  }
  unit_.resize(universe_->size());
  for (std::size_t i = 0; i < d; ++i) {
    unit_[support_[i]] = Key{weight_[i], std::uint64_t{1} << shift_[i]};
  }
  for (std::size_t i = 0; i < d; ++i) {
    target_.index += weight_[i] * limit_[i];
    target_.packed |= std::uint64_t{limit_[i]} << shift_[i];
  }
}

std::optional<MotifKeyCodec::Key> MotifKeyCodec::encode(const ColorMultiset& m) const {
  require_compatible(*universe_, m.universe());
  for (ColorId c = 0; c < m.counts().size(); ++c) {
    if (m.occ(c) > 0 && !unit(c)) return std::nullopt;
  }
  Key key;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    auto n = m.occ(support_[i]);
    if (n > limit_[i]) return std::nullopt;
    key.index += weight_[i] * n;
    key.packed |= std::uint64_t{n} << shift_[i];
  }
  return key;
}

ColorMultiset MotifKeyCodec::decode(std::uint64_t index) const {
  std::vector<std::uint32_t> occ(universe_->size(), 0);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    occ[support_[i]] = static_cast<std::uint32_t>(index / weight_[i]);
    index %= weight_[i];
  }
  return ColorMultiset(universe_, std::move(occ));
}

SubMotifTable::SubMotifTable(std::shared_ptr<const MotifKeyCodec> codec)
    : codec_(std::move(codec)) {
  if (codec_->key_space() <= kDenseLimit) bits_.assign((codec_->key_space() + 63) / 64, 0);
  const auto reserve = static_cast<std::size_t>(std::min<std::uint64_t>(size_bound(), std::uint64_t{1} << 22));
  keys_.reserve(reserve);
  links_.reserve(reserve);
  keys_.push_back(codec_->zero());
  links_.push_back({kNoChild, kNoEntry});
  insert(0, 0);
}

bool SubMotifTable::seen(std::uint64_t index) const {
  if (!bits_.empty()) return index / 64 < bits_.size() && (bits_[index / 64] >> (index % 64) & 1);
  return sparse_.count(index) != 0;
}

std::uint32_t SubMotifTable::find(std::uint64_t index) const {
  if (!seen(index)) return kNoEntry;
  if (!bits_.empty()) {
    for (std::uint32_t e = 0; e < keys_.size(); ++e) {
      if (keys_[e].index == index) return e;
    }
    return kNoEntry;
  }
  return sparse_.at(index);
}

void SubMotifTable::insert(std::uint64_t index, std::uint32_t entry) {
  if (!bits_.empty()) {
    bits_[index / 64] |= std::uint64_t{1} << (index % 64);
  } else {
    sparse_.emplace(index, entry);
  }
}

bool SubMotifTable::add_child(MotifKeyCodec::Key key, std::uint32_t child) {
  const auto target = codec_->target().index;
  const auto before = static_cast<std::uint32_t>(keys_.size());
  bool hit = seen(target);
  auto& done = applied_[key.index];
  const std::uint32_t from = done;
  done = before;
  for (std::uint32_t e = from; e < before; ++e) {
    auto sum = codec_->add(keys_[e], key);
    if (!sum || seen(sum->index)) continue;
    auto id = static_cast<std::uint32_t>(keys_.size());
    keys_.push_back(*sum);
    links_.push_back({child, e});
    insert(sum->index, id);
    hit = hit || sum->index == target;
  }
  if (keys_.size() > size_bound()) {
    throw std::logic_error("sub-motif table exceeded its size bound");
  }
  return hit;
}

void SubMotifTable::reset() {
  if (!bits_.empty()) {
    for (const auto& k : keys_) bits_[k.index / 64] = 0;
  } else {
    sparse_.clear();
  }
  applied_.clear();
  keys_.resize(1);
  links_.resize(1);
  insert(0, 0);
}

bool SubMotifTable::reachable(const ColorMultiset& m) const {
  auto key = codec_->encode(m);
  return key && reachable(*key);
}

std::optional<std::vector<std::uint32_t>> SubMotifTable::witness(MotifKeyCodec::Key key) const {
  auto e = find(key.index);
  if (e == kNoEntry) return std::nullopt;
  std::vector<std::uint32_t> children;
  while (links_[e].child != kNoChild) {
    children.push_back(links_[e].child);
    e = links_[e].prev;
  }
  std::reverse(children.begin(), children.end());
  return children;
}

std::optional<std::vector<std::uint32_t>> SubMotifTable::witness(const ColorMultiset& m) const {
  auto key = codec_->encode(m);
  if (!key) return std::nullopt;
  return witness(*key);
}

std::vector<ColorMultiset> SubMotifTable::reachable_multisets() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(keys_.size());
  for (const auto& k : keys_) keys.push_back(k.index);
  std::sort(keys.begin(), keys.end());
  std::vector<ColorMultiset> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(codec_->decode(k));
  return out;
}

std::uint64_t SubMotifTable::size_bound() const noexcept {
  auto k = codec_->motif_size();
  std::uint64_t pow2 = k >= 64 ? std::numeric_limits<std::uint64_t>::max()
                               : (std::uint64_t{1} << k);
  return std::min(pow2, codec_->key_space());
}

SubMotifTable dp_fill(std::span<const ColorMultiset> children, const ColorMultiset& m) {
  auto codec = std::make_shared<const MotifKeyCodec>(m);
  SubMotifTable table(codec);
  for (std::size_t i = 0; i < children.size(); ++i) {
    auto key = codec->encode(children[i]);
    if (!key) {
      throw InputError("child " + std::to_string(i) + " " + children[i].to_string() +
                       " is not a sub-multiset of " + m.to_string());
    }
    table.add_child(*key, static_cast<std::uint32_t>(i));
  }
  return table;
}

}  // namespace modmotif
