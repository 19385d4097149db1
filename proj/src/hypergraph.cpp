#include "hypertrans/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hypertrans {

Hypergraph::Hypergraph(VertexSet vertices, EdgeMap edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& [label, vs] : edges_) {
    if (label.empty()) {
      throw DomainError(ErrorCode::InvalidHypergraph, "empty edge label");
    }
    if (vs.empty()) {
      throw DomainError(ErrorCode::InvalidHypergraph,
                        "empty hyperedge '" + label + "'");
    }
    for (const auto& v : vs) {
      if (!vertices_.count(v)) {
        throw DomainError(ErrorCode::InvalidHypergraph,
                          "edge '" + label + "' uses unknown vertex '" + v + "'");
      }
    }
  }
  for (const auto& v : vertices_) {
    if (v.empty()) {
      throw DomainError(ErrorCode::InvalidHypergraph, "empty vertex label");
    }
  }
}

bool Hypergraph::has_edge(const Hyperedge& e) const {
  auto it = edges_.find(e.label);
  return it != edges_.end() && it->second == e.vertices;
}

bool Hypergraph::has_edge_vertices(const VertexSet& vs) const {
  for (const auto& [label, evs] : edges_) {
    if (evs == vs) return true;
  }
  return false;
}

std::set<Hyperedge> Hypergraph::edge_set() const {
  std::set<Hyperedge> out;
  for (const auto& [label, vs] : edges_) out.insert(Hyperedge{label, vs});
  return out;
}

VertexSet Family::member_vertices() const {
  VertexSet out;
  for (const auto& m : members) out.insert(m.vertices().begin(), m.vertices().end());
  return out;
}

VertexSet Family::universe_vertices() const {
  VertexSet out = member_vertices();
  out.insert(extra_vertices.begin(), extra_vertices.end());
  return out;
}

std::set<Hyperedge> Family::edge_universe() const {
  std::set<Hyperedge> out;
  for (const auto& m : members) {
    auto es = m.edge_set();
    out.insert(es.begin(), es.end());
  }
  return out;
}

std::vector<Violation> validate(const Hypergraph& h, LoopPolicy policy) {
  std::vector<Violation> out;
  for (const auto& [label, vs] : h.edges()) {
    if (policy == LoopPolicy::Disallow && vs.size() < 2) {
      out.push_back({"loop disallowed", label});
    }
  }
  // The remaining invariants (edges inside the vertex set, unique edge
  // labels, null implies edgeless) are unrepresentable by construction.
  return out;
}

std::vector<Violation> validate(const Family& family) {
  std::vector<Violation> out;
  VertexSet member_vs;
  std::set<Label> edge_labels;
  for (const auto& m : family.members) {
    auto vs = validate(m, family.policy);
    out.insert(out.end(), vs.begin(), vs.end());
    member_vs.insert(m.vertices().begin(), m.vertices().end());
    for (const auto& [label, evs] : m.edges()) edge_labels.insert(label);
  }
  for (const auto& v : family.extra_vertices) {
    if (member_vs.count(v)) {
      out.push_back({"extra universe vertex used by a member", v});
    }
  }
  // Vertex and edge label alphabets must be disjoint within a family.
  VertexSet all_vs = member_vs;
  all_vs.insert(family.extra_vertices.begin(), family.extra_vertices.end());
  for (const auto& l : edge_labels) {
    if (all_vs.count(l)) {
      out.push_back({"label used as both vertex and edge label", l});
    }
  }
  return out;
}

namespace {

// Union-find over the vertex set; every edge merges its vertices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void merge(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::set<Hypergraph> components(const Hypergraph& h) {
  std::vector<Label> verts(h.vertices().begin(), h.vertices().end());
  std::map<Label, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;

  UnionFind uf(verts.size());
  for (const auto& [label, vs] : h.edges()) {
    auto first = index[*vs.begin()];
    for (const auto& v : vs) uf.merge(index[v], first);
  }

  std::map<std::size_t, VertexSet> groups;
  for (std::size_t i = 0; i < verts.size(); ++i) groups[uf.find(i)].insert(verts[i]);

  std::set<Hypergraph> out;
  for (auto& [root, vs] : groups) {
    EdgeMap edges;
    for (const auto& [label, evs] : h.edges()) {
      if (vs.count(*evs.begin())) edges[label] = evs;
    }
    out.insert(Hypergraph(std::move(vs), std::move(edges)));
  }
  return out;
}

bool vertex_disjoint(const Hypergraph& x, const Hypergraph& y) {
  const auto& a = x.vertices();
  const auto& b = y.vertices();
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& big = a.size() <= b.size() ? b : a;
  return std::none_of(small.begin(), small.end(),
                      [&](const Label& v) { return big.count(v) > 0; });
}

Relation relate(const Hypergraph& x, const Hypergraph& y) {
  Relation r;
  r.vertex_disjoint = vertex_disjoint(x, y);
  if (r.vertex_disjoint) {
    r.component_disjoint = true;
  } else {
    auto cx = components(x);
    auto cy = components(y);
    r.component_disjoint =
        std::none_of(cx.begin(), cx.end(),
                     [&](const Hypergraph& c) { return cy.count(c) > 0; });
  }
  return r;
}

Hypergraph hypergraph_union(const Hypergraph& x, const Hypergraph& y) {
  VertexSet vs = x.vertices();
  vs.insert(y.vertices().begin(), y.vertices().end());
  EdgeMap edges = x.edges();
  for (const auto& [label, evs] : y.edges()) {
    auto [it, inserted] = edges.emplace(label, evs);
    if (!inserted && it->second != evs) {
      throw DomainError(ErrorCode::LabelCollision,
                        "edge label '" + label + "' names different vertex sets");
    }
  }
  return Hypergraph(std::move(vs), std::move(edges));
}

Hypergraph direct_sum(const std::vector<Hypergraph>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!vertex_disjoint(parts[i], parts[j]) ) {
        throw DomainError(ErrorCode::NotDisjoint,
                          "summands " + std::to_string(i) + " and " +
                              std::to_string(j) + " share a vertex");
      }
    }
  }
  VertexSet vs;
  EdgeMap edges;
  for (const auto& p : parts) {
    vs.insert(p.vertices().begin(), p.vertices().end());
    for (const auto& [label, evs] : p.edges()) {
      auto [it, inserted] = edges.emplace(label, evs);
      if (!inserted && it->second != evs) {
        throw DomainError(ErrorCode::LabelCollision,
                          "edge label '" + label + "' names different vertex sets");
      }
    }
  }
  return Hypergraph(std::move(vs), std::move(edges));
}

Hypergraph direct_sum(const std::set<Hypergraph>& parts) {
  return direct_sum(std::vector<Hypergraph>(parts.begin(), parts.end()));
}

Hypergraph direct_sum(std::initializer_list<Hypergraph> parts) {
  return direct_sum(std::vector<Hypergraph>(parts));
}

bool component_subset(const std::set<Hypergraph>& cx, const std::set<Hypergraph>& cy) {
  return std::all_of(cx.begin(), cx.end(),
                     [&](const Hypergraph& c) { return cy.count(c) > 0; });
}

bool component_subset(const Hypergraph& x, const Hypergraph& y) {
  return component_subset(components(x), components(y));
}

Hypergraph direct_difference(const Hypergraph& x, const Hypergraph& z) {
  auto cx = components(x);
  for (const auto& c : components(z)) {
    if (!cx.count(c)) {
      throw DomainError(ErrorCode::NotComponentSubset,
                        "a component of the subtrahend is not a component of the minuend");
    }
    cx.erase(c);
  }
  return direct_sum(cx);
}

Hypergraph edge_symdiff(const Hypergraph& x, const std::set<Hyperedge>& h) {
  for (const auto& e : h) {
    for (const auto& v : e.vertices) {
      if (!x.has_vertex(v)) {
        throw DomainError(ErrorCode::VerticesNotCovered,
                          "edge '" + e.label + "' uses vertex '" + v +
                              "' outside the hypergraph");
      }
    }
  }
  EdgeMap edges = x.edges();
  for (const auto& e : h) {
    auto it = edges.find(e.label);
    if (it != edges.end() && it->second == e.vertices) {
      edges.erase(it);
    } else if (it != edges.end()) {
      // Adding would duplicate an edge label within one hypergraph.
      throw DomainError(ErrorCode::LabelCollision,
                        "edge label '" + e.label + "' already names a different vertex set");
    } else {
      edges.emplace(e.label, e.vertices);
    }
  }
  return Hypergraph(x.vertices(), std::move(edges));
}

Hypergraph meet_components(const Hypergraph& x, const std::set<Hyperedge>& h) {
  std::set<Hypergraph> touched;
  for (const auto& c : components(x)) {
    for (const auto& e : h) {
      bool meets = std::any_of(e.vertices.begin(), e.vertices.end(),
                               [&](const Label& v) { return c.has_vertex(v); });
      if (meets) {
        touched.insert(c);
        break;
      }
    }
  }
  return direct_sum(touched);
}

SubhypergraphRelation strong_subhypergraph(const Hypergraph& x, const Hypergraph& y) {
  SubhypergraphRelation r{true, false};
  for (const auto& v : x.vertices()) {
    if (!y.has_vertex(v)) return {false, false};
  }
  for (const auto& [label, vs] : x.edges()) {
    if (!y.has_edge(Hyperedge{label, vs})) return {false, false};
  }
  // Induced: x carries every y-edge that fits inside V(x).
  r.is_induced = true;
  for (const auto& [label, vs] : y.edges()) {
    bool inside = std::all_of(vs.begin(), vs.end(),
                              [&](const Label& v) { return x.has_vertex(v); });
    if (inside && !x.has_edge(Hyperedge{label, vs})) {
      r.is_induced = false;
      break;
    }
  }
  return r;
}

std::string to_text(const Hyperedge& e) {
  std::ostringstream os;
  os << e.label << ":{";
  bool first = true;
  for (const auto& v : e.vertices) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream os;
  os << "<{";
  bool first = true;
  for (const auto& v : h.vertices()) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << "}; {";
  first = true;
  for (const auto& [label, vs] : h.edges()) {
    if (!first) os << ", ";
    os << to_text(Hyperedge{label, vs});
    first = false;
  }
  os << "}>";
  return os.str();
}

}  // namespace hypertrans
