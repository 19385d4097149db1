#include "hypertrans/quotient_transform.hpp"

#include <algorithm>

namespace hypertrans {

namespace {

Hypergraph project(const Hypergraph& x, const VertexPartition& r, LoopPolicy policy) {
  return vertex_augmented_quotient(x, r, policy).quotient;
}

}  // namespace

bool preserves_component_containment(const VertexPartition& r,
                                     const std::set<Hypergraph>& distinguished,
                                     const Family& family) {
  for (const auto& s : distinguished) {
    auto cs = components(s);
    Hypergraph sq = project(s, r, family.policy);
    for (const auto& x : family.members) {
      if (!component_subset(cs, components(x))) continue;
      if (!component_subset(sq, project(x, r, family.policy))) return false;
    }
  }
  return true;
}

bool preserves_vertex_disjointness(const VertexPartition& r, const Hypergraph& w,
                                   const Family& family) {
  Hypergraph wq = project(w, r, family.policy);
  for (const auto& x : family.members) {
    if (!vertex_disjoint(w, x)) continue;
    if (!vertex_disjoint(wq, project(x, r, family.policy))) return false;
  }
  return true;
}

Family quotient_family(const Family& family, const VertexPartition& r) {
  Family out;
  out.policy = family.policy;
  for (const auto& x : family.members) {
    out.members.insert(project(x, r, family.policy));
  }
  VertexSet used;
  for (const auto& m : out.members) used.insert(m.vertices().begin(), m.vertices().end());
  for (const auto& block : r.blocks()) {
    Label c = VertexPartition::block_label(block);
    if (!used.count(c)) out.extra_vertices.insert(c);
  }
  return out;
}

QuotientTransformation quotient_transformation(const Transformation& t,
                                               const VertexPartition& r) {
  const Family& family = t.family();
  for (const auto& v : family.universe_vertices()) {
    if (!r.contains(v)) {
      throw DomainError(ErrorCode::UniverseTooSmall,
                        "family vertex '" + v + "' missing from the relation's universe");
    }
  }

  QuotientTransformation out{t, r, Family{}, Transformation({}, {}, {}, {}), {}};
  std::map<Hypergraph, Hypergraph> projection;   // member -> quotient
  std::map<Hypergraph, Hypergraph> image_by_q;   // quotient -> projected image
  std::map<Hypergraph, std::set<Hypergraph>> maximal_by_q;
  std::map<Hypergraph, Hypergraph> preimage;     // sample preimage per quotient

  // Well-definedness over every preimage pair, before collapsing.
  for (const auto& x : family.members) {
    Hypergraph xq = project(x, r, family.policy);
    Hypergraph image_q = project(t.table().at(x), r, family.policy);
    std::set<Hypergraph> dq;
    for (const auto& s : t.maximal_subsets().at(x)) {
      dq.insert(project(s, r, family.policy));
    }
    projection.emplace(x, xq);
    auto [it, inserted] = image_by_q.emplace(xq, image_q);
    if (!inserted && it->second != image_q) {
      throw DomainError(ErrorCode::NotAmenableIllDefinedPi,
                        "members " + to_text(preimage.at(xq)) + " and " + to_text(x) +
                            " collapse but their images do not");
    }
    auto [mt, minserted] = maximal_by_q.emplace(xq, dq);
    if (!minserted && mt->second != dq) {
      throw DomainError(ErrorCode::NotAmenableIllDefinedD,
                        "members " + to_text(preimage.at(xq)) + " and " + to_text(x) +
                            " collapse but their maximal subsets do not");
    }
    preimage.emplace(xq, x);
  }

  out.quotient_family = quotient_family(family, r);
  out.member_projection = projection;

  std::set<Hypergraph> distinguished_q;
  std::map<Hypergraph, Hypergraph> images_q;
  for (const auto& s : t.distinguished()) {
    Hypergraph sq = projection.at(s);
    distinguished_q.insert(sq);
    images_q.emplace(sq, project(t.image_of_distinguished(s), r, family.policy));
  }

  std::map<Hypergraph, Hypergraph> table_q;
  for (const auto& [xq, image] : image_by_q) table_q.emplace(xq, image);

  auto check = verify(out.quotient_family, table_q, distinguished_q);
  if (!check.ok) {
    throw DomainError(ErrorCode::NotAmenableFailsConditions,
                      "projected triple: " + check.detail +
                          (check.where ? " at " + to_text(*check.where) : ""));
  }

  // The projected maximal subsets must coincide with the ones the quotient
  // triple derives on its own; uniqueness makes this a strict requirement.
  TransformSpec spec_q{out.quotient_family, distinguished_q, images_q};
  Transformation quotient_t = [&]() {
    try {
      return derive(spec_q);
    } catch (const DomainError& err) {
      throw DomainError(ErrorCode::NotAmenableFailsConditions,
                        std::string("projected triple: ") + err.what());
    }
  }();
  for (const auto& [xq, dq] : maximal_by_q) {
    if (quotient_t.maximal_subsets().at(xq) != dq) {
      throw DomainError(ErrorCode::NotAmenableFailsConditions,
                        "projected maximal subset differs from the derived one at " +
                            to_text(xq));
    }
  }
  for (const auto& [xq, image] : table_q) {
    if (quotient_t.table().at(xq) != image) {
      throw DomainError(ErrorCode::NotAmenableFailsConditions,
                        "projected table differs from the derived one at " + to_text(xq));
    }
  }

  out.quotient = std::move(quotient_t);
  return out;
}

CommutativityReport quotient_commutativity(const std::vector<Transformation>& ts,
                                           const VertexPartition& r) {
  if (ts.size() < 2 || ts.size() > 4) {
    throw DomainError(ts.size() < 2 ? ErrorCode::TooFewMaps : ErrorCode::TooManyMaps,
                      "need between 2 and 4 transformations");
  }
  std::vector<PartialMap> base_maps;
  std::vector<PartialMap> quotient_maps;
  LoopPolicy policy = ts.front().family().policy;
  for (const auto& t : ts) {
    base_maps.push_back(t.table());
    quotient_maps.push_back(quotient_transformation(t, r).quotient.table());
  }
  auto base = coincidence(base_maps);
  auto projected = coincidence(quotient_maps);
  for (const auto& x : base.coincidence) {
    Hypergraph xq = project(x, r, policy);
    if (!projected.coincidence.count(xq)) return {false, xq};
  }
  return {true, std::nullopt};
}

Transformation equivalent_edge_add(const Family& family, const Hyperedge& e,
                                   const VertexPartition& r) {
  auto closed = closure_check(family, ClosureKind::EquivalentEdgeAddition, e, r);
  if (!closed.ok) {
    throw DomainError(ErrorCode::NotClosed,
                      "family is not closed for equivalent-edge addition; "
                      "counterexample: " + to_text(*closed.counterexample));
  }
  auto amenable = closure_check(family, ClosureKind::EquivalentEdgeAmenability, e, r);
  if (!amenable.ok) {
    throw DomainError(ErrorCode::NotAmenableFamily,
                      "family is not amenable for equivalent-edge addition; "
                      "counterexample: " + to_text(*amenable.counterexample));
  }

  auto cls = equivalent_edges(e, r, family);
  auto touched = [&](const Hypergraph& x) {
    EdgeSet probe;
    for (const auto& vs : cls.members_in(x)) {
      probe.insert(Hyperedge{synthesized_edge_label(vs), vs});
    }
    return meet_components(x, probe);
  };
  auto applicable = [&](const Hypergraph& x) {
    return !cls.members_in(x).empty() && cls.members_in_edges(x).empty();
  };

  TransformSpec spec;
  spec.family = family;
  for (const auto& s : family.members) {
    if (applicable(s) && s == touched(s)) {
      spec.distinguished.insert(s);
      spec.images.emplace(s, add_vertex_set_edges(s, cls.members_in(s)));
    }
  }

  Transformation t = derive(spec);
  for (const auto& x : family.members) {
    Hypergraph expected = applicable(x) ? add_vertex_set_edges(x, cls.members_in(x)) : x;
    if (t.table().at(x) != expected) {
      throw DomainError(ErrorCode::DecompositionMismatch,
                        "derived table differs from the defining rule at " + to_text(x));
    }
    std::set<Hypergraph> expected_dx;
    if (applicable(x)) expected_dx = {touched(x)};
    if (t.maximal_subsets().at(x) != expected_dx) {
      throw DomainError(ErrorCode::DecompositionMismatch,
                        "derived maximal subset differs from the closed form at " +
                            to_text(x));
    }
  }
  return t;
}

RelationReport equivalent_edge_quotient_relation(const Transformation& t,
                                                 const Hyperedge& e,
                                                 const VertexPartition& r) {
  const Family& family = t.family();
  if (!preserves_component_containment(r, t.distinguished(), family)) {
    throw DomainError(ErrorCode::NotAmenableFamily,
                      "relation does not preserve containment of the distinguished set");
  }

  auto cs = edge_quotient(e, r, family.policy);
  if (!cs) {
    throw DomainError(ErrorCode::LoopRejected,
                      "edge '" + e.label + "' collapses to a single class");
  }
  Family family_q = quotient_family(family, r);
  VertexSet class_set = *cs;
  Label qlabel;
  for (const auto& c : class_set) qlabel += c;
  EdgeSet h{Hyperedge{qlabel, class_set}};

  Transformation addition = [&]() {
    try {
      return edge_add(family_q, h);
    } catch (const DomainError& err) {
      throw DomainError(err.code(),
                        std::string("projected edge addition failed: ") + err.what());
    }
  }();

  std::set<Hypergraph> distinguished_q;
  for (const auto& s : t.distinguished()) {
    distinguished_q.insert(project(s, r, family.policy));
  }

  for (const auto& sq : distinguished_q) {
    if (!addition.distinguished().count(sq)) {
      return {false, "projected distinguished set is not a subset of the addition's"};
    }
  }
  if (!is_upward_closed(distinguished_q, addition.distinguished())) {
    return {false, "projected distinguished set is not upward closed in the addition's"};
  }

  QuotientTransformation qt = [&]() {
    try {
      return quotient_transformation(t, r);
    } catch (const DomainError& err) {
      throw DomainError(err.code(),
                        std::string("quotient of the base transformation failed: ") +
                            err.what());
    }
  }();

  Transformation reduced = support_reduction(addition, distinguished_q);
  if (reduced.distinguished() != qt.quotient.distinguished()) {
    return {false, "support reduction and quotient disagree on the distinguished set"};
  }
  if (reduced.table() != qt.quotient.table()) {
    return {false, "support reduction and quotient disagree on the table"};
  }
  return {true, ""};
}

}  // namespace hypertrans
