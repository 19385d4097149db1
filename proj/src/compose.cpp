#include "hypertrans/compose.hpp"

#include <algorithm>

namespace hypertrans {

PartialMap to_partial_map(const Transformation& t) { return t.table(); }

PartialMap identity_map(const std::set<Hypergraph>& universe) {
  PartialMap m;
  for (const auto& x : universe) m.emplace(x, x);
  return m;
}

std::set<Hypergraph> domain_of(const PartialMap& m) {
  std::set<Hypergraph> out;
  for (const auto& [x, y] : m) out.insert(x);
  return out;
}

std::set<Hypergraph> image_of(const PartialMap& m) {
  std::set<Hypergraph> out;
  for (const auto& [x, y] : m) out.insert(y);
  return out;
}

PartialMap compose(const PartialMap& outer, const PartialMap& inner) {
  PartialMap out;
  for (const auto& [x, mid] : inner) {
    auto it = outer.find(mid);
    if (it != outer.end()) out.emplace(x, it->second);
  }
  return out;
}

PartialMap compose_seq(const std::vector<PartialMap>& seq,
                       const std::set<Hypergraph>& universe_for_empty) {
  if (seq.empty()) return identity_map(universe_for_empty);
  PartialMap acc = seq.front();
  for (std::size_t i = 1; i < seq.size(); ++i) acc = compose(seq[i], acc);
  return acc;
}

CoincidenceReport coincidence(const std::vector<PartialMap>& seq) {
  if (seq.empty()) {
    throw DomainError(ErrorCode::TooFewMaps, "coincidence needs at least one map");
  }
  if (seq.size() > 6) {
    throw DomainError(ErrorCode::TooManyMaps,
                      "coincidence enumerates at most 6! orderings");
  }

  std::vector<std::size_t> order(seq.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  CoincidenceReport report;
  bool first = true;
  std::map<Hypergraph, Hypergraph> agreed;  // member -> common image so far
  do {
    std::vector<PartialMap> arranged;
    arranged.reserve(seq.size());
    for (auto i : order) arranged.push_back(seq[i]);
    PartialMap composed = compose_seq(arranged);
    ++report.ordering_count;

    std::set<Hypergraph> dom = domain_of(composed);
    if (first) {
      report.common_domain = dom;
      for (const auto& [x, y] : composed) agreed.emplace(x, y);
      first = false;
    } else {
      std::set<Hypergraph> cut;
      std::set_intersection(report.common_domain.begin(), report.common_domain.end(),
                            dom.begin(), dom.end(), std::inserter(cut, cut.begin()));
      report.common_domain = std::move(cut);
      for (auto it = agreed.begin(); it != agreed.end();) {
        auto found = composed.find(it->first);
        if (found == composed.end() || found->second != it->second) {
          it = agreed.erase(it);
        } else {
          ++it;
        }
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));

  for (const auto& [x, y] : agreed) {
    if (report.common_domain.count(x)) report.coincidence.insert(x);
  }
  return report;
}

bool are_disjoint(const Transformation& t1, const Transformation& t2) {
  auto gather = [](const Transformation& t) {
    std::set<Hypergraph> out = t.distinguished();
    for (const auto& s : t.distinguished()) out.insert(t.image_of_distinguished(s));
    return out;
  };
  for (const auto& a : gather(t1)) {
    for (const auto& b : gather(t2)) {
      if (!vertex_disjoint(a, b)) return false;
    }
  }
  return true;
}

Hypergraph disjoint_apply(const std::vector<Transformation>& ts,
                          const Hypergraph& x) {
  if (ts.empty()) {
    throw DomainError(ErrorCode::TooFewMaps, "nothing to apply");
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (!are_disjoint(ts[i], ts[j])) {
        throw DomainError(ErrorCode::NotPairwiseDisjoint,
                          "transformations " + std::to_string(i) + " and " +
                              std::to_string(j) + " are not disjoint");
      }
    }
  }

  if (ts.size() == 1) return apply(ts.front(), x);

  std::vector<PartialMap> maps;
  maps.reserve(ts.size());
  for (const auto& t : ts) maps.push_back(t.table());
  auto report = coincidence(maps);
  if (!report.coincidence.count(x)) {
    throw DomainError(ErrorCode::NotInCoincidence,
                      "hypergraph is outside the coincidence set: " + to_text(x));
  }

  // Closed form: strip every active distinguished hypergraph of every
  // transformation, then sum the corresponding images back in.
  std::vector<Hypergraph> removed;
  std::vector<Hypergraph> added;
  for (const auto& t : ts) {
    for (const auto& s : t.active_sets().at(x)) {
      removed.push_back(s);
      added.push_back(t.image_of_distinguished(s));
    }
  }
  Hypergraph rest = direct_difference(x, direct_sum(removed));
  std::vector<Hypergraph> parts{rest};
  parts.insert(parts.end(), added.begin(), added.end());
  Hypergraph closed_form = direct_sum(parts);

  Hypergraph sequential = x;
  for (const auto& t : ts) sequential = apply(t, sequential);
  if (sequential != closed_form) {
    throw DomainError(ErrorCode::DecompositionMismatch,
                      "closed form disagrees with sequential application");
  }
  return closed_form;
}

}  // namespace hypertrans
