// Set partitions of a labeled index set.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cmpart/error.hpp"

namespace cmpart {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

/// Partition of labels[0..N) into blocks. Blocks are stored with sorted members
/// and ordered by their least member, so equal partitions compare equal.
template <typename Label>
class BlockPartition {
 public:
  BlockPartition() = default;

  /// Block ids are arbitrary; equal ids mean same block.
  BlockPartition(std::vector<Label> labels, const std::vector<std::size_t>& block_ids) : labels_(std::move(labels)) {
    if (block_ids.size() != labels_.size()) throw Error("one block id per label required");
    std::map<std::size_t, std::size_t> renumber;
    block_of_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, fresh] = renumber.try_emplace(block_ids[i], blocks_.size());
      if (fresh) blocks_.emplace_back();
      blocks_[it->second].push_back(i);
      block_of_[i] = it->second;
    }
  }

  template <typename Key>
  static BlockPartition from_keys(std::vector<Label> labels, const std::vector<Key>& keys) {
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> block_ids;
    block_ids.reserve(keys.size());
    for (const auto& k : keys) block_ids.push_back(ids.try_emplace(k, ids.size()).first->second);
    return BlockPartition(std::move(labels), block_ids);
  }

  static BlockPartition from_union_find(std::vector<Label> labels, UnionFind& uf) {
    std::vector<std::size_t> ids(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) ids[i] = uf.find(i);
    return BlockPartition(std::move(labels), ids);
  }

  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  std::size_t block_of(std::size_t label_index) const { return block_of_.at(label_index); }
  std::optional<std::size_t> index_of(const Label& l) const {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  bool same_block(std::size_t a, std::size_t b) const { return block_of_.at(a) == block_of_.at(b); }

  /// Index of the first block of *this that is not contained in a block of `coarser`.
  std::optional<std::size_t> first_non_refining_block(const BlockPartition& coarser) const {
    require_same_labels(coarser);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      const auto target = coarser.block_of(blocks_[b].front());
      for (auto i : blocks_[b])
        if (coarser.block_of(i) != target) return b;
    }
    return std::nullopt;
  }
  bool refines(const BlockPartition& coarser) const { return !first_non_refining_block(coarser).has_value(); }

  friend bool operator==(const BlockPartition& a, const BlockPartition& b) {
    return a.labels_ == b.labels_ && a.blocks_ == b.blocks_;
  }

 private:
  void require_same_labels(const BlockPartition& o) const {
    if (o.labels_ != labels_) throw Error("partitions are over different label sets");
  }
  std::vector<Label> labels_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

}  // namespace cmpart
