#pragma once

#include <optional>

#include "hypertrans/hypergraph.hpp"

namespace hypertrans {

/// The unique pairwise-component-disjoint subset of a distinguished set
/// whose members are maximally component-contained in the target.
struct MaximalSubset {
  Hypergraph target;
  std::set<Hypergraph> members;
};

/// Outcome of the maximal-subset construction: either the unique subset or
/// a description of why none exists (the clashing candidate pair).
struct MaximalSubsetResult {
  std::optional<MaximalSubset> subset;
  std::string failure;

  bool ok() const { return subset.has_value(); }
};

/// Greedy construction: candidates are the non-null distinguished members
/// component-contained in x; the result keeps the containment-maximal ones
/// (plus the null hypergraph when distinguished). Fails when the maximal
/// candidates are not pairwise component disjoint.
MaximalSubsetResult maximal_subset(const std::set<Hypergraph>& distinguished,
                                   const Hypergraph& x);

struct ComponentMaximalReport {
  bool ok;
  std::optional<Hypergraph> witness;  // first member without a maximal subset
  std::string detail;
};

ComponentMaximalReport is_component_maximal(const std::set<Hypergraph>& distinguished,
                                            const Family& family);

/// The data determining a transformation: domain family, distinguished set,
/// and the images of the distinguished members.
struct TransformSpec {
  Family family;
  std::set<Hypergraph> distinguished;
  std::map<Hypergraph, Hypergraph> images;
};

/// A validated transformation: the full table plus the per-member maximal
/// and active sets it was derived from. Immutable once built.
class Transformation {
 public:
  Transformation(TransformSpec spec,
                 std::map<Hypergraph, std::set<Hypergraph>> maximal,
                 std::map<Hypergraph, std::set<Hypergraph>> active,
                 std::map<Hypergraph, Hypergraph> table)
      : spec_(std::move(spec)),
        maximal_(std::move(maximal)),
        active_(std::move(active)),
        table_(std::move(table)) {}

  const TransformSpec& spec() const { return spec_; }
  const Family& family() const { return spec_.family; }
  const std::set<Hypergraph>& distinguished() const { return spec_.distinguished; }
  const std::map<Hypergraph, std::set<Hypergraph>>& maximal_subsets() const {
    return maximal_;
  }
  const std::map<Hypergraph, std::set<Hypergraph>>& active_sets() const {
    return active_;
  }
  const std::map<Hypergraph, Hypergraph>& table() const { return table_; }

  const Hypergraph& image_of_distinguished(const Hypergraph& s) const {
    return spec_.images.at(s);
  }

 private:
  TransformSpec spec_;
  std::map<Hypergraph, std::set<Hypergraph>> maximal_;  // per member
  std::map<Hypergraph, std::set<Hypergraph>> active_;   // per member
  std::map<Hypergraph, Hypergraph> table_;              // full map
};

/// Builds and validates the transformation determined by a spec. Throws
/// DomainError with an invalid_spec.* code when no valid transformation
/// extends the given images.
Transformation derive(const TransformSpec& spec);

struct VerifyResult {
  bool ok = true;
  ErrorCode code = ErrorCode::DecompositionViolation;
  std::optional<Hypergraph> where;
  std::string detail;
};

/// Decision procedure for the transformation conditions on an arbitrary
/// full table: nonredundancy of the restriction to the distinguished set,
/// existence of all maximal subsets, disjointness/count of the active
/// images, and the decomposition identity at every member.
VerifyResult verify(const Family& family,
                    const std::map<Hypergraph, Hypergraph>& table,
                    const std::set<Hypergraph>& distinguished);

/// Table lookup; the argument must belong to the domain family.
const Hypergraph& apply(const Transformation& t, const Hypergraph& x);

/// The non-fixed points of the transformation.
std::set<Hypergraph> support(const Transformation& t);

/// True if every distinguished member component-containing a member of sub
/// is itself in sub.
bool is_upward_closed(const std::set<Hypergraph>& sub,
                      const std::set<Hypergraph>& distinguished);

/// The unique transformation with the smaller distinguished set that agrees
/// with t on it. Requires sub to be an upward closed subset of t's
/// distinguished set.
Transformation support_reduction(const Transformation& t,
                                 const std::set<Hypergraph>& sub);

}  // namespace hypertrans
