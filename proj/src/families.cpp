#include "hypertrans/families.hpp"

#include <algorithm>
#include <functional>

#include "hypertrans/quotient.hpp"

namespace hypertrans {

bool edges_covered(const Hypergraph& x, const EdgeSet& h) {
  for (const auto& e : h) {
    for (const auto& v : e.vertices) {
      if (!x.has_vertex(v)) return false;
    }
  }
  return true;
}

bool edges_absent(const Hypergraph& x, const EdgeSet& h) {
  return std::none_of(h.begin(), h.end(),
                      [&](const Hyperedge& e) { return x.has_edge(e); });
}

namespace {

bool edges_present(const Hypergraph& x, const EdgeSet& h) {
  return std::all_of(h.begin(), h.end(),
                     [&](const Hyperedge& e) { return x.has_edge(e); });
}

void require_nonempty(const EdgeSet& h) {
  if (h.empty()) {
    throw DomainError(ErrorCode::InvalidFamily, "the edge set is empty");
  }
}

void require_closed(const ClosureReport& report, const char* what) {
  if (!report.ok) {
    throw DomainError(ErrorCode::NotClosed,
                      std::string("family is not ") + what + "; counterexample: " +
                          to_text(*report.counterexample));
  }
}

}  // namespace

ClosureReport closure_check(const Family& family, ClosureKind kind, const EdgeSet& h) {
  require_nonempty(h);
  for (const auto& x : family.members) {
    bool applicable = false;
    switch (kind) {
      case ClosureKind::EdgeAddition:
        applicable = edges_covered(x, h) && edges_absent(x, h);
        break;
      case ClosureKind::EdgeDeletion:
        applicable = edges_covered(x, h) && edges_present(x, h);
        break;
      case ClosureKind::EdgeFull:
        applicable = edges_covered(x, h);
        break;
      default:
        throw DomainError(ErrorCode::InvalidFamily, "closure kind needs other parameters");
    }
    if (applicable && !family.contains(meet_components(x, h))) {
      return {false, x};
    }
  }
  return {true, std::nullopt};
}

ClosureReport closure_check(const Family& family, const Hypergraph& w, const EdgeSet& h) {
  require_nonempty(h);
  for (const auto& x : family.members) {
    Hypergraph extended = direct_sum({x, w});
    if (edges_covered(extended, h) && edges_absent(extended, h)) {
      Hypergraph touched = meet_components(x, h);
      if (!touched.is_null() && !family.contains(touched)) return {false, x};
    }
  }
  return {true, std::nullopt};
}

ClosureReport closure_check(const Family& family, ClosureKind kind,
                            const Hyperedge& e, const VertexPartition& r) {
  auto cls = equivalent_edges(e, r, family);
  auto touched_by = [&](const Hypergraph& x, const std::set<VertexSet>& sets) {
    EdgeSet probe;
    for (const auto& vs : sets) probe.insert(Hyperedge{synthesized_edge_label(vs), vs});
    return meet_components(x, probe);
  };

  if (kind == ClosureKind::EquivalentEdgeAddition) {
    for (const auto& x : family.members) {
      auto in_x = cls.members_in(x);
      if (!in_x.empty() && cls.members_in_edges(x).empty()) {
        if (!family.contains(touched_by(x, in_x))) return {false, x};
      }
    }
    return {true, std::nullopt};
  }
  if (kind == ClosureKind::EquivalentEdgeAmenability) {
    // No addition-shaped member may sit inside a member that already
    // carries an equivalent edge.
    std::vector<Hypergraph> shaped;
    for (const auto& s : family.members) {
      auto in_s = cls.members_in(s);
      if (!in_s.empty() && cls.members_in_edges(s).empty() &&
          s == touched_by(s, in_s)) {
        shaped.push_back(s);
      }
    }
    for (const auto& x : family.members) {
      if (cls.members_in_edges(x).empty()) continue;
      for (const auto& s : shaped) {
        if (component_subset(s, x)) return {false, x};
      }
    }
    return {true, std::nullopt};
  }
  throw DomainError(ErrorCode::InvalidFamily, "closure kind needs other parameters");
}

Hypergraph edge_toggle_rule(const Hypergraph& x, const EdgeSet& h) {
  return edges_covered(x, h) ? edge_symdiff(x, h) : x;
}

Hypergraph edge_add_rule(const Hypergraph& x, const EdgeSet& h) {
  return edges_covered(x, h) && edges_absent(x, h) ? edge_symdiff(x, h) : x;
}

Hypergraph graph_toggle_rule(const Hypergraph& x, const Hypergraph& w) {
  auto cw = components(w);
  auto cx = components(x);
  if (component_subset(cw, cx)) {
    return direct_difference(x, w);
  }
  if (vertex_disjoint(w, x)) {
    return direct_sum({x, w});
  }
  return x;
}

Hypergraph graph_add_rule(const Hypergraph& x, const Hypergraph& w) {
  return vertex_disjoint(w, x) ? direct_sum({x, w}) : x;
}

Hypergraph graph_edge_add_rule(const Hypergraph& x, const Hypergraph& w,
                               const EdgeSet& h) {
  Hypergraph extended = direct_sum({x, w});
  if (edges_covered(extended, h) && edges_absent(extended, h)) {
    return edge_symdiff(extended, h);
  }
  return x;
}

namespace {

// Builds the spec, derives it, and cross-checks the derived table against
// the member-wise rule and the derived maximal subsets against the stated
// closed form. A mismatch means the precondition analysis is wrong, so it
// surfaces as an error rather than a silently odd transformation.
Transformation derive_and_check(
    TransformSpec spec,
    const std::function<Hypergraph(const Hypergraph&)>& rule,
    const std::function<std::set<Hypergraph>(const Hypergraph&)>& maximal_form) {
  Transformation t = derive(spec);
  for (const auto& x : t.family().members) {
    if (t.table().at(x) != rule(x)) {
      throw DomainError(ErrorCode::DecompositionMismatch,
                        "derived table differs from the defining rule at " + to_text(x));
    }
    if (t.maximal_subsets().at(x) != maximal_form(x)) {
      throw DomainError(ErrorCode::DecompositionMismatch,
                        "derived maximal subset differs from the closed form at " +
                            to_text(x));
    }
  }
  return t;
}

}  // namespace

Transformation edge_toggle(const Family& family, const EdgeSet& h) {
  require_nonempty(h);
  require_closed(closure_check(family, ClosureKind::EdgeFull, h), "edge-toggle closed");

  TransformSpec spec;
  spec.family = family;
  for (const auto& s : family.members) {
    if (edges_covered(s, h) && s == meet_components(s, h)) {
      spec.distinguished.insert(s);
      spec.images.emplace(s, edge_symdiff(s, h));
    }
  }
  return derive_and_check(
      std::move(spec), [&](const Hypergraph& x) { return edge_toggle_rule(x, h); },
      [&](const Hypergraph& x) -> std::set<Hypergraph> {
        if (!edges_covered(x, h)) return {};
        return {meet_components(x, h)};
      });
}

Transformation edge_add(const Family& family, const EdgeSet& h) {
  require_nonempty(h);
  require_closed(closure_check(family, ClosureKind::EdgeAddition, h),
                 "edge-addition closed");

  TransformSpec spec;
  spec.family = family;
  for (const auto& s : family.members) {
    if (edges_covered(s, h) && edges_absent(s, h) && s == meet_components(s, h)) {
      spec.distinguished.insert(s);
      spec.images.emplace(s, edge_symdiff(s, h));
    }
  }
  return derive_and_check(
      std::move(spec), [&](const Hypergraph& x) { return edge_add_rule(x, h); },
      [&](const Hypergraph& x) -> std::set<Hypergraph> {
        if (!(edges_covered(x, h) && edges_absent(x, h))) return {};
        return {meet_components(x, h)};
      });
}

Transformation graph_toggle(const Family& family, const Hypergraph& w) {
  if (w.is_null()) {
    throw DomainError(ErrorCode::NullWNotAllowed, "the summand must be non-null");
  }
  if (!family.contains(null_hypergraph())) {
    throw DomainError(ErrorCode::NullNotInFamily,
                      "the family must contain the null hypergraph");
  }
  if (!family.contains(w)) {
    throw DomainError(ErrorCode::DistinguishedNotInFamily,
                      "the summand must be a family member");
  }

  TransformSpec spec;
  spec.family = family;
  spec.distinguished = {null_hypergraph(), w};
  spec.images.emplace(null_hypergraph(), w);
  spec.images.emplace(w, null_hypergraph());

  auto cw = components(w);
  return derive_and_check(
      std::move(spec),
      [&](const Hypergraph& x) { return graph_toggle_rule(x, w); },
      [&](const Hypergraph& x) -> std::set<Hypergraph> {
        if (component_subset(cw, components(x))) return {null_hypergraph(), w};
        return {null_hypergraph()};
      });
}

Transformation graph_add(const Family& family, const Hypergraph& w) {
  if (w.is_null()) {
    throw DomainError(ErrorCode::NullWNotAllowed, "the summand must be non-null");
  }
  if (!family.contains(null_hypergraph())) {
    throw DomainError(ErrorCode::NullNotInFamily,
                      "the family must contain the null hypergraph");
  }

  TransformSpec spec;
  spec.family = family;
  spec.distinguished = {null_hypergraph()};
  spec.images.emplace(null_hypergraph(), w);

  return derive_and_check(
      std::move(spec), [&](const Hypergraph& x) { return graph_add_rule(x, w); },
      [&](const Hypergraph&) -> std::set<Hypergraph> { return {null_hypergraph()}; });
}

Transformation graph_edge_add(const Family& family, const Hypergraph& w,
                              const EdgeSet& h) {
  require_nonempty(h);
  if (w.is_null()) {
    throw DomainError(ErrorCode::NullWNotAllowed, "the summand must be non-null");
  }
  VertexSet member_vs = family.member_vertices();
  for (const auto& v : w.vertices()) {
    if (member_vs.count(v)) {
      throw DomainError(ErrorCode::WNotDisjointFromFamily,
                        "summand vertex '" + v + "' is used by a family member");
    }
  }
  // Edges confined to the summand and absent from it would modify every
  // applicable member while leaving nothing to distinguish; no valid
  // transformation extends that rule.
  bool inside_w = std::all_of(h.begin(), h.end(), [&](const Hyperedge& e) {
    return std::all_of(e.vertices.begin(), e.vertices.end(),
                       [&](const Label& v) { return w.has_vertex(v); });
  });
  if (inside_w && edges_absent(w, h)) {
    throw DomainError(ErrorCode::EdgesConfinedToSummand,
                      "every edge lies inside the summand and is absent from it");
  }
  require_closed(closure_check(family, w, h), "summand-edge-addition closed");

  TransformSpec spec;
  spec.family = family;
  auto applicable = [&](const Hypergraph& x) {
    Hypergraph extended = direct_sum({x, w});
    return edges_covered(extended, h) && edges_absent(extended, h) &&
           !meet_components(x, h).is_null();
  };
  for (const auto& x : family.members) {
    if (applicable(x)) {
      Hypergraph s = meet_components(x, h);
      if (!spec.distinguished.count(s)) {
        spec.distinguished.insert(s);
        spec.images.emplace(s, edge_symdiff(direct_sum({s, w}), h));
      }
    }
  }
  return derive_and_check(
      std::move(spec),
      [&](const Hypergraph& x) { return graph_edge_add_rule(x, w, h); },
      [&](const Hypergraph& x) -> std::set<Hypergraph> {
        if (!applicable(x)) return {};
        return {meet_components(x, h)};
      });
}

}  // namespace hypertrans
