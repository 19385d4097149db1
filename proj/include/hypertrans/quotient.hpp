#pragma once

#include <optional>

#include "hypertrans/hypergraph.hpp"
#include "hypertrans/partition.hpp"

namespace hypertrans {

/// A quotient hypergraph together with the projection from source vertices
/// to class labels. The projection is total on the source vertex set and
/// surjective onto the quotient vertex set.
struct QuotientResult {
  Hypergraph quotient;
  std::map<Label, Label> projection;
};

/// Quotient of x under an equivalence relation whose universe equals V(x).
/// A set of classes is an edge exactly when some edge of x meets every class
/// and is covered by their union; under LoopPolicy::Disallow, class sets of
/// size one are excluded. Edge labels are synthesized from the sorted class
/// set, so structurally equal inputs give structurally equal quotients.
QuotientResult quotient(const Hypergraph& x, const VertexPartition& r,
                        LoopPolicy policy);

/// Vertex-augmented quotient: the relation may live on a larger universe.
/// Vertex classes are those of V(x) only, but class labels come from the
/// full blocks of the relation.
QuotientResult vertex_augmented_quotient(const Hypergraph& x,
                                         const VertexPartition& r_f,
                                         LoopPolicy policy);

/// Checks that mapping each restricted class to its full class is a
/// bijection carrying the quotient's edges exactly onto the
/// vertex-augmented quotient's edges. Holds on every valid input; exists as
/// a verification probe.
bool check_canonical_iso(const Hypergraph& x, const VertexPartition& r_f,
                         LoopPolicy policy);

/// Class set {[v] | v in e} of a hyperedge, as class labels. Returns
/// nullopt (rejected) when loops are disallowed and the classes collapse to
/// a single one.
std::optional<VertexSet> edge_quotient(const Hyperedge& e,
                                       const VertexPartition& r,
                                       LoopPolicy policy);

/// The equivalence class of a hyperedge under a vertex relation: all vertex
/// sets over the relation's universe whose class set equals the class set
/// of the representative. Members are stored as plain vertex sets; labels
/// are synthesized only when such edges are materialized into a hypergraph.
struct EdgeClass {
  Hyperedge representative;
  VertexSet class_set;               // class labels of the representative
  std::set<VertexSet> members;       // all equivalent vertex sets

  /// Members lying inside V(x).
  std::set<VertexSet> members_in(const Hypergraph& x) const;
  /// Members present in x as edges (compared by vertex set, any label).
  std::set<VertexSet> members_in_edges(const Hypergraph& x) const;
};

/// Enumerates the equivalence class of e over the family's universe. The
/// relation's universe must cover the family universe and the edge.
EdgeClass equivalent_edges(const Hyperedge& e, const VertexPartition& r,
                           const Family& family);

/// Synthesized label for a materialized equivalent edge: "(a,b)" for the
/// vertex set {a,b}.
Label synthesized_edge_label(const VertexSet& vs);

/// Adds the given vertex sets to x as fresh labelled edges. None of them
/// may already be present (by vertex set).
Hypergraph add_vertex_set_edges(const Hypergraph& x,
                                const std::set<VertexSet>& sets);

}  // namespace hypertrans
