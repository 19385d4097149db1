#include "hypertrans/transform.hpp"

#include <algorithm>

namespace hypertrans {

namespace {

bool components_disjoint(const std::set<Hypergraph>& ca,
                         const std::set<Hypergraph>& cb) {
  return std::none_of(ca.begin(), ca.end(),
                      [&](const Hypergraph& c) { return cb.count(c) > 0; });
}

}  // namespace

MaximalSubsetResult maximal_subset(const std::set<Hypergraph>& distinguished,
                                   const Hypergraph& x) {
  auto cx = components(x);

  std::vector<Hypergraph> candidates;
  std::vector<std::set<Hypergraph>> candidate_components;
  for (const auto& s : distinguished) {
    if (s.is_null()) continue;
    auto cs = components(s);
    if (component_subset(cs, cx)) {
      candidates.push_back(s);
      candidate_components.push_back(std::move(cs));
    }
  }

  // Keep the containment-maximal candidates. Every candidate sits below a
  // maximal one, so the domination property holds by construction; the one
  // thing that can fail is pairwise component disjointness of the maxima.
  std::set<Hypergraph> members;
  std::vector<std::size_t> maximal_idx;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (i == j) continue;
      if (candidates[i] != candidates[j] &&
          component_subset(candidate_components[i], candidate_components[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      members.insert(candidates[i]);
      maximal_idx.push_back(i);
    }
  }

  for (std::size_t a = 0; a < maximal_idx.size(); ++a) {
    for (std::size_t b = a + 1; b < maximal_idx.size(); ++b) {
      const auto& ca = candidate_components[maximal_idx[a]];
      const auto& cb = candidate_components[maximal_idx[b]];
      if (candidates[maximal_idx[a]] != candidates[maximal_idx[b]] &&
          !components_disjoint(ca, cb)) {
        MaximalSubsetResult r;
        r.failure = "maximal candidates share a component: " +
                    to_text(candidates[maximal_idx[a]]) + " and " +
                    to_text(candidates[maximal_idx[b]]);
        return r;
      }
    }
  }

  // Domination check, directly from the definition. Unreachable for the
  // greedy construction but kept as a guard on the returned object.
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool covered = std::any_of(members.begin(), members.end(),
                               [&](const Hypergraph& t) {
                                 return component_subset(candidate_components[i],
                                                         components(t));
                               });
    if (!covered) {
      MaximalSubsetResult r;
      r.failure = "candidate not dominated: " + to_text(candidates[i]);
      return r;
    }
  }

  if (distinguished.count(null_hypergraph())) members.insert(null_hypergraph());

  MaximalSubsetResult r;
  r.subset = MaximalSubset{x, std::move(members)};
  return r;
}

ComponentMaximalReport is_component_maximal(const std::set<Hypergraph>& distinguished,
                                            const Family& family) {
  for (const auto& s : distinguished) {
    if (!family.contains(s)) {
      throw DomainError(ErrorCode::DistinguishedNotInFamily,
                        "distinguished hypergraph is not a family member: " + to_text(s));
    }
  }
  for (const auto& x : family.members) {
    auto r = maximal_subset(distinguished, x);
    if (!r.ok()) return {false, x, r.failure};
  }
  return {true, std::nullopt, ""};
}

namespace {

struct Derivation {
  std::map<Hypergraph, std::set<Hypergraph>> maximal;
  std::map<Hypergraph, std::set<Hypergraph>> active;
  std::map<Hypergraph, Hypergraph> table;
};

// Shared construction for derive and verify: images gives pi on the
// distinguished set. Throws DomainError on any failed condition.
Derivation build(const Family& family, const std::set<Hypergraph>& distinguished,
                 const std::map<Hypergraph, Hypergraph>& images) {
  for (const auto& s : distinguished) {
    if (!family.contains(s)) {
      throw DomainError(ErrorCode::DistinguishedNotInFamily,
                        "distinguished hypergraph is not a family member: " + to_text(s));
    }
    if (!images.count(s)) {
      throw DomainError(ErrorCode::InvalidFamily,
                        "missing image for distinguished hypergraph " + to_text(s));
    }
  }

  // Nonredundancy: no component of a distinguished hypergraph survives in
  // its image, and the null hypergraph may not be fixed.
  for (const auto& s : distinguished) {
    const auto& image = images.at(s);
    if (s.is_null()) {
      if (image.is_null()) {
        throw DomainError(ErrorCode::NotNonredundant,
                          "the null hypergraph is fixed by its image");
      }
      continue;
    }
    auto cs = components(s);
    auto ci = components(image);
    if (!components_disjoint(cs, ci)) {
      throw DomainError(ErrorCode::NotNonredundant,
                        "a component of " + to_text(s) + " survives in its image");
    }
  }

  Derivation d;
  for (const auto& x : family.members) {
    auto ms = maximal_subset(distinguished, x);
    if (!ms.ok()) {
      throw DomainError(ErrorCode::NotComponentMaximal,
                        "no maximal subset for " + to_text(x) + ": " + ms.failure);
    }
    const auto& dx = ms.subset->members;

    std::set<Hypergraph> sx;
    for (const auto& s : dx) {
      auto rest = direct_difference(x, s);
      if (vertex_disjoint(images.at(s), rest)) sx.insert(s);
    }

    std::set<Hypergraph> image_set;
    std::vector<Hypergraph> image_list;
    for (const auto& s : sx) {
      image_set.insert(images.at(s));
      image_list.push_back(images.at(s));
    }
    if (image_set.size() != sx.size()) {
      throw DomainError(ErrorCode::ImageCountCollision,
                        "two active hypergraphs share one image at " + to_text(x));
    }
    for (std::size_t i = 0; i < image_list.size(); ++i) {
      for (std::size_t j = i + 1; j < image_list.size(); ++j) {
        if (!vertex_disjoint(image_list[i], image_list[j])) {
          throw DomainError(ErrorCode::ImagesNotDisjoint,
                            "active images share a vertex at " + to_text(x));
        }
      }
    }

    Hypergraph replaced = direct_sum(sx);
    Hypergraph rest = direct_difference(x, replaced);
    std::vector<Hypergraph> parts{rest};
    parts.insert(parts.end(), image_list.begin(), image_list.end());
    Hypergraph image = direct_sum(parts);

    d.maximal[x] = dx;
    d.active[x] = std::move(sx);
    d.table.emplace(x, std::move(image));
  }
  return d;
}

}  // namespace

Transformation derive(const TransformSpec& spec) {
  auto d = build(spec.family, spec.distinguished, spec.images);
  // The table must extend the requested images; when the active set of a
  // distinguished member is not the singleton {S} the construction drifts
  // and the decomposition condition cannot hold.
  auto check = verify(spec.family, d.table, spec.distinguished);
  if (!check.ok) {
    std::string where = check.where ? " at " + to_text(*check.where) : "";
    throw DomainError(check.code, check.detail + where);
  }
  for (const auto& s : spec.distinguished) {
    if (d.table.at(s) != spec.images.at(s)) {
      throw DomainError(ErrorCode::DecompositionViolation,
                        "derived table disagrees with the requested image at " +
                            to_text(s));
    }
  }
  return Transformation(spec, std::move(d.maximal), std::move(d.active),
                        std::move(d.table));
}

VerifyResult verify(const Family& family,
                    const std::map<Hypergraph, Hypergraph>& table,
                    const std::set<Hypergraph>& distinguished) {
  VerifyResult result;
  for (const auto& x : family.members) {
    if (!table.count(x)) {
      result.ok = false;
      result.code = ErrorCode::NotInDomain;
      result.where = x;
      result.detail = "table is not total on the family";
      return result;
    }
  }
  std::map<Hypergraph, Hypergraph> images;
  for (const auto& s : distinguished) {
    auto it = table.find(s);
    if (it == table.end()) {
      result.ok = false;
      result.code = ErrorCode::DistinguishedNotInFamily;
      result.where = s;
      result.detail = "distinguished hypergraph missing from the table";
      return result;
    }
    images.emplace(s, it->second);
  }

  Derivation d;
  try {
    d = build(family, distinguished, images);
  } catch (const DomainError& e) {
    result.ok = false;
    result.code = e.code();
    result.detail = e.what();
    return result;
  }

  for (const auto& x : family.members) {
    if (d.table.at(x) != table.at(x)) {
      result.ok = false;
      result.code = ErrorCode::DecompositionViolation;
      result.where = x;
      result.detail = "table entry differs from the preserved decomposition";
      return result;
    }
  }
  return result;
}

const Hypergraph& apply(const Transformation& t, const Hypergraph& x) {
  auto it = t.table().find(x);
  if (it == t.table().end()) {
    throw DomainError(ErrorCode::NotInDomain,
                      "hypergraph is not in the domain family: " + to_text(x));
  }
  return it->second;
}

std::set<Hypergraph> support(const Transformation& t) {
  std::set<Hypergraph> out;
  for (const auto& [x, image] : t.table()) {
    if (image != x) out.insert(x);
  }
  return out;
}

bool is_upward_closed(const std::set<Hypergraph>& sub,
                      const std::set<Hypergraph>& distinguished) {
  for (const auto& s : sub) {
    if (!distinguished.count(s)) return false;
    auto cs = components(s);
    for (const auto& t : distinguished) {
      if (component_subset(cs, components(t)) && !sub.count(t)) return false;
    }
  }
  return true;
}

Transformation support_reduction(const Transformation& t,
                                 const std::set<Hypergraph>& sub) {
  if (!is_upward_closed(sub, t.distinguished())) {
    throw DomainError(ErrorCode::NotUpwardClosed,
                      "subset is not upward closed within the distinguished set");
  }

  TransformSpec spec;
  spec.family = t.family();
  spec.distinguished = sub;
  for (const auto& s : sub) spec.images.emplace(s, t.image_of_distinguished(s));

  // Closed form: intersect the stored maximal and active sets with the
  // subset and rebuild each table entry from the reduced active set.
  std::map<Hypergraph, std::set<Hypergraph>> maximal;
  std::map<Hypergraph, std::set<Hypergraph>> active;
  std::map<Hypergraph, Hypergraph> table;
  for (const auto& [x, dx] : t.maximal_subsets()) {
    std::set<Hypergraph> dx_cut;
    for (const auto& s : dx) {
      if (sub.count(s)) dx_cut.insert(s);
    }
    std::set<Hypergraph> sx_cut;
    for (const auto& s : t.active_sets().at(x)) {
      if (sub.count(s)) sx_cut.insert(s);
    }
    Hypergraph replaced = direct_sum(sx_cut);
    std::vector<Hypergraph> parts{direct_difference(x, replaced)};
    for (const auto& s : sx_cut) parts.push_back(t.image_of_distinguished(s));
    table.emplace(x, direct_sum(parts));
    maximal[x] = std::move(dx_cut);
    active[x] = std::move(sx_cut);
  }

  auto check = verify(spec.family, table, spec.distinguished);
  if (!check.ok) {
    throw DomainError(check.code, "support reduction is not a transformation: " +
                                      check.detail);
  }
  return Transformation(std::move(spec), std::move(maximal), std::move(active),
                        std::move(table));
}

}  // namespace hypertrans
