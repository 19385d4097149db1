#pragma once

#include "hypertrans/transform.hpp"

namespace hypertrans {

/// A partial transformation as an explicit finite map.
using PartialMap = std::map<Hypergraph, Hypergraph>;

/// The table of a transformation, as a composable partial map.
PartialMap to_partial_map(const Transformation& t);

PartialMap identity_map(const std::set<Hypergraph>& universe);

std::set<Hypergraph> domain_of(const PartialMap& m);
std::set<Hypergraph> image_of(const PartialMap& m);

/// Composition with the largest possible domain: x is kept exactly when
/// inner(x) lies in the domain of outer.
PartialMap compose(const PartialMap& outer, const PartialMap& inner);

/// Left fold of compose; the first map of the sequence is applied first.
/// The empty sequence yields the identity on the supplied universe.
PartialMap compose_seq(const std::vector<PartialMap>& seq,
                       const std::set<Hypergraph>& universe_for_empty = {});

struct CoincidenceReport {
  std::size_t ordering_count = 0;
  std::set<Hypergraph> common_domain;
  std::set<Hypergraph> coincidence;
};

/// Examines all |seq|! orderings of the sequence: the common domain is the
/// intersection of the composition domains, and the coincidence set keeps
/// the members every ordering maps to the same image. The sequence length
/// is capped at 6.
CoincidenceReport coincidence(const std::vector<PartialMap>& seq);

/// True when every distinguished hypergraph or image of t1 is vertex
/// disjoint from every distinguished hypergraph or image of t2.
bool are_disjoint(const Transformation& t1, const Transformation& t2);

/// Applies a pairwise-disjoint sequence to a member of its coincidence set
/// through the closed-form decomposition, and cross-checks the result
/// against sequential application in the given order.
Hypergraph disjoint_apply(const std::vector<Transformation>& ts,
                          const Hypergraph& x);

}  // namespace hypertrans
