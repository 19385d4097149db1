#pragma once

#include "hypertrans/compose.hpp"
#include "hypertrans/families.hpp"
#include "hypertrans/quotient.hpp"

namespace hypertrans {

/// True when component containment of each distinguished hypergraph in each
/// member survives the quotient.
bool preserves_component_containment(const VertexPartition& r,
                                     const std::set<Hypergraph>& distinguished,
                                     const Family& family);

/// True when vertex disjointness of w from each member survives the
/// quotient.
bool preserves_vertex_disjointness(const VertexPartition& r, const Hypergraph& w,
                                   const Family& family);

/// A transformation together with its quotient under a vertex relation:
/// the quotient family, the projected distinguished set, and the projected
/// table, revalidated as a transformation in their own right.
struct QuotientTransformation {
  Transformation base;
  VertexPartition relation;
  Family quotient_family;
  Transformation quotient;
  std::map<Hypergraph, Hypergraph> member_projection;  // member -> its quotient
};

/// Vertex-augmented quotient of every family member under r, collapsing
/// structurally equal quotients. Unused relation classes become extra
/// universe vertices of the quotient family.
Family quotient_family(const Family& family, const VertexPartition& r);

/// Projects a transformation through a vertex relation and validates the
/// result. Fails when the projected table or maximal subsets are ill
/// defined on collapsing members, or when the projected triple violates
/// the transformation conditions.
QuotientTransformation quotient_transformation(const Transformation& t,
                                               const VertexPartition& r);

struct CommutativityReport {
  bool ok = true;
  std::optional<Hypergraph> witness;  // quotient member outside the projected set
};

/// Checks that the projection of the base coincidence set lands inside the
/// coincidence set of the projected sequence.
CommutativityReport quotient_commutativity(const std::vector<Transformation>& ts,
                                           const VertexPartition& r);

/// Equivalent-edges addition: adds to each member every absent edge of the
/// equivalence class of e that fits inside it. Requires the family to be
/// closed and amenable for that class.
Transformation equivalent_edge_add(const Family& family, const Hyperedge& e,
                                   const VertexPartition& r);

struct RelationReport {
  bool ok = true;
  std::string failed_clause;
};

/// Relates the quotient of an equivalent-edges addition to the plain edge
/// addition of the projected edge on the quotient family: the projected
/// distinguished set must be an upward closed subset of the addition's, and
/// the quotient transformation must equal the corresponding support
/// reduction table for table.
RelationReport equivalent_edge_quotient_relation(const Transformation& t,
                                                 const Hyperedge& e,
                                                 const VertexPartition& r);

}  // namespace hypertrans
