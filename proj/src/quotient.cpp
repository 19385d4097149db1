#include "hypertrans/quotient.hpp"

#include <algorithm>
#include <sstream>

namespace hypertrans {

namespace {

Label class_set_edge_label(const VertexSet& class_labels) {
  std::ostringstream os;
  for (const auto& c : class_labels) os << c;
  return os.str();
}

QuotientResult quotient_impl(const Hypergraph& x, const VertexPartition& r,
                             LoopPolicy policy) {
  QuotientResult out;
  VertexSet qvertices;
  for (const auto& v : x.vertices()) {
    Label c = r.class_label(v);
    out.projection[v] = c;
    qvertices.insert(c);
  }
  // Each source edge witnesses exactly the class set {[v] | v in e}: the
  // meet-every-class and covered-by-union conditions pin the set down.
  std::set<VertexSet> class_sets;
  for (const auto& [label, vs] : x.edges()) {
    VertexSet cs;
    for (const auto& v : vs) cs.insert(out.projection.at(v));
    if (policy == LoopPolicy::Disallow && cs.size() < 2) continue;
    class_sets.insert(std::move(cs));
  }
  EdgeMap qedges;
  for (const auto& cs : class_sets) qedges[class_set_edge_label(cs)] = cs;
  out.quotient = Hypergraph(std::move(qvertices), std::move(qedges));
  return out;
}

}  // namespace

QuotientResult quotient(const Hypergraph& x, const VertexPartition& r,
                        LoopPolicy policy) {
  if (r.universe() != x.vertices()) {
    throw DomainError(ErrorCode::UniverseMismatch,
                      "relation universe must equal the vertex set");
  }
  return quotient_impl(x, r, policy);
}

QuotientResult vertex_augmented_quotient(const Hypergraph& x,
                                         const VertexPartition& r_f,
                                         LoopPolicy policy) {
  for (const auto& v : x.vertices()) {
    if (!r_f.contains(v)) {
      throw DomainError(ErrorCode::UniverseTooSmall,
                        "vertex '" + v + "' missing from the relation's universe");
    }
  }
  return quotient_impl(x, r_f, policy);
}

bool check_canonical_iso(const Hypergraph& x, const VertexPartition& r_f,
                         LoopPolicy policy) {
  auto restricted = r_f.restricted_to(x.vertices());
  auto plain = quotient(x, restricted, policy);
  auto augmented = vertex_augmented_quotient(x, r_f, policy);

  // The vertex map sends the restricted class of v to the full class of v.
  std::map<Label, Label> phi;
  for (const auto& v : x.vertices()) {
    phi[restricted.class_label(v)] = r_f.class_label(v);
  }
  std::set<Label> image;
  for (const auto& [from, to] : phi) image.insert(to);
  if (phi.size() != plain.quotient.vertices().size()) return false;  // total
  if (image.size() != phi.size()) return false;                      // injective
  if (image != augmented.quotient.vertices()) return false;          // onto

  // Edge correspondence: map each edge's class set through phi.
  std::set<VertexSet> mapped;
  for (const auto& [label, cs] : plain.quotient.edges()) {
    VertexSet m;
    for (const auto& c : cs) m.insert(phi.at(c));
    mapped.insert(std::move(m));
  }
  std::set<VertexSet> target;
  for (const auto& [label, cs] : augmented.quotient.edges()) target.insert(cs);
  return mapped == target;
}

std::optional<VertexSet> edge_quotient(const Hyperedge& e,
                                       const VertexPartition& r,
                                       LoopPolicy policy) {
  VertexSet cs;
  for (const auto& v : e.vertices) cs.insert(r.class_label(v));
  if (policy == LoopPolicy::Disallow && cs.size() < 2) return std::nullopt;
  return cs;
}

std::set<VertexSet> EdgeClass::members_in(const Hypergraph& x) const {
  std::set<VertexSet> out;
  for (const auto& f : members) {
    bool inside = std::all_of(f.begin(), f.end(),
                              [&](const Label& v) { return x.has_vertex(v); });
    if (inside) out.insert(f);
  }
  return out;
}

std::set<VertexSet> EdgeClass::members_in_edges(const Hypergraph& x) const {
  std::set<VertexSet> out;
  for (const auto& f : members_in(x)) {
    if (x.has_edge_vertices(f)) out.insert(f);
  }
  return out;
}

EdgeClass equivalent_edges(const Hyperedge& e, const VertexPartition& r,
                           const Family& family) {
  for (const auto& v : family.universe_vertices()) {
    if (!r.contains(v)) {
      throw DomainError(ErrorCode::UniverseTooSmall,
                        "family vertex '" + v + "' missing from the relation's universe");
    }
  }
  auto cs = edge_quotient(e, r, family.policy);
  if (!cs) {
    throw DomainError(ErrorCode::LoopRejected,
                      "edge '" + e.label + "' collapses to a single class");
  }

  EdgeClass out;
  out.representative = e;
  out.class_set = *cs;

  // Equivalent vertex sets choose a nonempty subset of each participating
  // block; enumerate the product of those choices.
  std::vector<std::vector<VertexSet>> per_block;
  std::size_t total = 1;
  for (const auto& c : out.class_set) {
    const VertexSet* block = nullptr;
    for (const auto& b : r.blocks()) {
      if (VertexPartition::block_label(b) == c) {
        block = &b;
        break;
      }
    }
    std::vector<Label> elems(block->begin(), block->end());
    if (elems.size() > 20) {
      throw DomainError(ErrorCode::EquivalentEdgesTooLarge,
                        "block " + c + " is too large to enumerate");
    }
    std::vector<VertexSet> choices;
    for (std::size_t mask = 1; mask < (1u << elems.size()); ++mask) {
      VertexSet choice;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (mask & (1u << i)) choice.insert(elems[i]);
      }
      choices.push_back(std::move(choice));
    }
    total *= choices.size();
    if (total > (1u << 20)) {
      throw DomainError(ErrorCode::EquivalentEdgesTooLarge,
                        "equivalence class has more than 2^20 members");
    }
    per_block.push_back(std::move(choices));
  }

  std::vector<VertexSet> acc{VertexSet{}};
  for (const auto& choices : per_block) {
    std::vector<VertexSet> next;
    next.reserve(acc.size() * choices.size());
    for (const auto& partial : acc) {
      for (const auto& choice : choices) {
        VertexSet merged = partial;
        merged.insert(choice.begin(), choice.end());
        next.push_back(std::move(merged));
      }
    }
    acc = std::move(next);
  }
  out.members.insert(acc.begin(), acc.end());
  return out;
}

Label synthesized_edge_label(const VertexSet& vs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& v : vs) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

Hypergraph add_vertex_set_edges(const Hypergraph& x,
                                const std::set<VertexSet>& sets) {
  EdgeMap edges = x.edges();
  for (const auto& vs : sets) {
    if (x.has_edge_vertices(vs)) {
      throw DomainError(ErrorCode::LabelCollision,
                        "vertex set already present as an edge");
    }
    Label label = synthesized_edge_label(vs);
    if (edges.count(label)) {
      throw DomainError(ErrorCode::LabelCollision,
                        "synthesized edge label '" + label + "' already taken");
    }
    edges.emplace(std::move(label), vs);
  }
  return Hypergraph(x.vertices(), std::move(edges));
}

}  // namespace hypertrans
