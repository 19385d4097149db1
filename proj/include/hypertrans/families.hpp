#pragma once

#include "hypertrans/partition.hpp"
#include "hypertrans/transform.hpp"

namespace hypertrans {

using EdgeSet = std::set<Hyperedge>;

/// Closure predicates a family may satisfy relative to an edge set, a
/// summand, or an edge equivalence class.
enum class ClosureKind {
  EdgeAddition,       // adding absent edges keeps the touched part inside
  EdgeDeletion,       // deleting present edges keeps the touched part inside
  EdgeFull,           // any toggle keeps the touched part inside
  GraphEdgeAddition,  // summand-then-edge addition variant
  EquivalentEdgeAddition,
  EquivalentEdgeAmenability,
};

struct ClosureReport {
  bool ok = true;
  std::optional<Hypergraph> counterexample;
};

ClosureReport closure_check(const Family& family, ClosureKind kind, const EdgeSet& h);
ClosureReport closure_check(const Family& family, const Hypergraph& w, const EdgeSet& h);
ClosureReport closure_check(const Family& family, ClosureKind kind,
                            const Hyperedge& e, const VertexPartition& r);

/// Edge toggle: flips the edges of h in every member covering their
/// vertices, and fixes the rest. Requires nonempty h and an EdgeFull-closed
/// family.
Transformation edge_toggle(const Family& family, const EdgeSet& h);

/// Edge addition: adds h where the vertices are covered and none of h is
/// present; fixes the rest. Requires an EdgeAddition-closed family.
Transformation edge_add(const Family& family, const EdgeSet& h);

/// Summand toggle: adds w's components to vertex-disjoint members and
/// removes them from members containing them all. Requires the null
/// hypergraph and w in the family.
Transformation graph_toggle(const Family& family, const Hypergraph& w);

/// Summand addition: adds w to vertex-disjoint members, fixes the rest.
/// Requires the null hypergraph in the family; w need not be a member.
Transformation graph_add(const Family& family, const Hypergraph& w);

/// Combined summand-and-edges addition: appends w and then adds h when h
/// fits inside the extended member and is absent from it. The summand must
/// be vertex disjoint from every member.
Transformation graph_edge_add(const Family& family, const Hypergraph& w,
                              const EdgeSet& h);

/// Member-wise application rules of the constructors, usable directly.
Hypergraph edge_toggle_rule(const Hypergraph& x, const EdgeSet& h);
Hypergraph edge_add_rule(const Hypergraph& x, const EdgeSet& h);
Hypergraph graph_toggle_rule(const Hypergraph& x, const Hypergraph& w);
Hypergraph graph_add_rule(const Hypergraph& x, const Hypergraph& w);
Hypergraph graph_edge_add_rule(const Hypergraph& x, const Hypergraph& w,
                               const EdgeSet& h);

bool edges_covered(const Hypergraph& x, const EdgeSet& h);
bool edges_absent(const Hypergraph& x, const EdgeSet& h);

}  // namespace hypertrans
