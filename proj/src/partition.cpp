#include "hypertrans/partition.hpp"

#include <algorithm>
#include <sstream>

namespace hypertrans {

VertexPartition VertexPartition::from_blocks(VertexSet universe,
                                             const std::vector<VertexSet>& declared) {
  VertexPartition p;
  p.universe_ = std::move(universe);
  VertexSet seen;
  std::vector<VertexSet> blocks;
  for (const auto& block : declared) {
    if (block.empty()) {
      throw DomainError(ErrorCode::InvalidFamily, "empty partition block");
    }
    for (const auto& v : block) {
      if (!p.universe_.count(v)) {
        throw DomainError(ErrorCode::UniverseMismatch,
                          "partition block vertex '" + v + "' outside the universe");
      }
      if (!seen.insert(v).second) {
        throw DomainError(ErrorCode::InvalidFamily,
                          "vertex '" + v + "' appears in two partition blocks");
      }
    }
    blocks.push_back(block);
  }
  for (const auto& v : p.universe_) {
    if (!seen.count(v)) blocks.push_back({v});
  }
  std::sort(blocks.begin(), blocks.end());
  p.blocks_ = std::move(blocks);
  for (std::size_t i = 0; i < p.blocks_.size(); ++i) {
    for (const auto& v : p.blocks_[i]) p.block_index_[v] = i;
  }
  return p;
}

VertexPartition VertexPartition::identity(VertexSet universe) {
  return from_blocks(std::move(universe), {});
}

const VertexSet& VertexPartition::block_of(const Label& v) const {
  auto it = block_index_.find(v);
  if (it == block_index_.end()) {
    throw DomainError(ErrorCode::UniverseTooSmall,
                      "vertex '" + v + "' is not in the relation's universe");
  }
  return blocks_[it->second];
}

bool VertexPartition::same_block(const Label& a, const Label& b) const {
  return &block_of(a) == &block_of(b);
}

Label VertexPartition::block_label(const VertexSet& block) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& v : block) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "]";
  return os.str();
}

Label VertexPartition::class_label(const Label& v) const {
  return block_label(block_of(v));
}

VertexPartition VertexPartition::restricted_to(const VertexSet& sub) const {
  VertexSet new_universe;
  for (const auto& v : sub) {
    if (universe_.count(v)) new_universe.insert(v);
  }
  std::vector<VertexSet> new_blocks;
  for (const auto& block : blocks_) {
    VertexSet cut;
    for (const auto& v : block) {
      if (new_universe.count(v)) cut.insert(v);
    }
    if (!cut.empty()) new_blocks.push_back(std::move(cut));
  }
  return from_blocks(std::move(new_universe), new_blocks);
}

}  // namespace hypertrans
