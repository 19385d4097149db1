#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypertrans/errors.hpp"

namespace hypertrans {

using Label = std::string;
using VertexSet = std::set<Label>;

enum class LoopPolicy { Allow, Disallow };

/// A labelled hyperedge. Identity is the full (label, vertex set) pair;
/// two edges with equal vertex sets but different labels are distinct.
struct Hyperedge {
  Label label;
  VertexSet vertices;

  auto operator<=>(const Hyperedge&) const = default;
};

/// Edge container of a hypergraph: label -> vertex set. The map keys make
/// edge labels unique within one hypergraph by construction.
using EdgeMap = std::map<Label, VertexSet>;

/// An immutable vertex- and edge-labelled hypergraph. The default value is
/// the null hypergraph (no vertices, no edges). Construction enforces that
/// every edge is a nonempty subset of the vertex set; loop legality is a
/// family-level policy checked by validate().
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(VertexSet vertices, EdgeMap edges);

  const VertexSet& vertices() const { return vertices_; }
  const EdgeMap& edges() const { return edges_; }

  bool is_null() const { return vertices_.empty(); }
  bool has_vertex(const Label& v) const { return vertices_.count(v) > 0; }
  bool has_edge(const Hyperedge& e) const;
  /// True if some edge of this hypergraph covers exactly this vertex set,
  /// regardless of its label.
  bool has_edge_vertices(const VertexSet& vs) const;

  std::set<Hyperedge> edge_set() const;

  auto operator<=>(const Hypergraph&) const = default;

 private:
  VertexSet vertices_;
  EdgeMap edges_;
};

/// The null hypergraph.
inline Hypergraph null_hypergraph() { return Hypergraph(); }

struct Violation {
  std::string invariant;
  Label offender;
};

/// A finite set of hypergraphs over shared label alphabets together with a
/// loop policy. extra_vertices lists universe vertices not used by any
/// member (the universe vertex set is member_vertices() + extra_vertices).
struct Family {
  std::set<Hypergraph> members;
  LoopPolicy policy = LoopPolicy::Disallow;
  VertexSet extra_vertices;

  bool contains(const Hypergraph& x) const { return members.count(x) > 0; }
  VertexSet member_vertices() const;
  VertexSet universe_vertices() const;
  std::set<Hyperedge> edge_universe() const;
};

std::vector<Violation> validate(const Hypergraph& h, LoopPolicy policy);
std::vector<Violation> validate(const Family& family);

/// Connected components of h, pairwise vertex disjoint, each connected;
/// their direct sum is h. The null hypergraph has no components.
std::set<Hypergraph> components(const Hypergraph& h);

struct Relation {
  bool vertex_disjoint;
  bool component_disjoint;
};

Relation relate(const Hypergraph& x, const Hypergraph& y);

bool vertex_disjoint(const Hypergraph& x, const Hypergraph& y);

/// Hypergraph union. Errors if the same edge label names different vertex
/// sets in x and y.
Hypergraph hypergraph_union(const Hypergraph& x, const Hypergraph& y);

/// Direct sum of pairwise vertex-disjoint hypergraphs; the empty sum is the
/// null hypergraph. Order of parts is irrelevant.
Hypergraph direct_sum(const std::vector<Hypergraph>& parts);
Hypergraph direct_sum(const std::set<Hypergraph>& parts);
Hypergraph direct_sum(std::initializer_list<Hypergraph> parts);

/// Direct difference: removes from x the components of z. Requires every
/// component of z to be a component of x.
Hypergraph direct_difference(const Hypergraph& x, const Hypergraph& z);

/// Symmetric difference on the edge set: vertices unchanged, edges toggled
/// by (label, vertex set) identity. All toggled edges must live inside V(x).
Hypergraph edge_symdiff(const Hypergraph& x, const std::set<Hyperedge>& h);

/// Union of the components of x touched by at least one edge of h.
Hypergraph meet_components(const Hypergraph& x, const std::set<Hyperedge>& h);

struct SubhypergraphRelation {
  bool is_sub;
  bool is_induced;
};

SubhypergraphRelation strong_subhypergraph(const Hypergraph& x, const Hypergraph& y);

/// True if every component of x is a component of y.
bool component_subset(const Hypergraph& x, const Hypergraph& y);
bool component_subset(const std::set<Hypergraph>& cx, const std::set<Hypergraph>& cy);

std::string to_text(const Hypergraph& h);
std::string to_text(const Hyperedge& e);

}  // namespace hypertrans
