#pragma once

#include <map>
#include <vector>

#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

/// An equivalence relation on a finite vertex universe, stored as a
/// partition into blocks. Lookup is total on the universe.
class VertexPartition {
 public:
  /// Builds a partition from declared blocks; universe vertices not listed
  /// in any block become singleton blocks. Declared blocks must be nonempty,
  /// pairwise disjoint, and inside the universe.
  static VertexPartition from_blocks(VertexSet universe,
                                     const std::vector<VertexSet>& declared);

  static VertexPartition identity(VertexSet universe);

  const VertexSet& universe() const { return universe_; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }

  bool contains(const Label& v) const { return block_index_.count(v) > 0; }
  const VertexSet& block_of(const Label& v) const;
  bool same_block(const Label& a, const Label& b) const;

  /// Deterministic label of the class of v, derived from the sorted block
  /// content: the block {b, a} becomes "[a,b]".
  Label class_label(const Label& v) const;
  static Label block_label(const VertexSet& block);

  /// Restriction of the relation to a sub-universe. Blocks are intersected
  /// with the given set; empty intersections vanish.
  VertexPartition restricted_to(const VertexSet& sub) const;

  bool operator==(const VertexPartition& other) const {
    return blocks_ == other.blocks_;
  }

 private:
  VertexSet universe_;
  std::vector<VertexSet> blocks_;            // canonical order: by first element
  std::map<Label, std::size_t> block_index_;
};

}  // namespace hypertrans
