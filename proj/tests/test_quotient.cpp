#include <doctest.h>

#include "hypertrans/quotient.hpp"
#include "test_support.hpp"

using namespace hypertrans;
using namespace hypertrans::testing;

namespace {

// Brute-force oracle for quotient edges: enumerate every nonempty subset of
// the quotient vertex classes and keep those witnessed by a source edge
// meeting every class and covered by their union.
std::set<VertexSet> quotient_edges_oracle(const Hypergraph& x,
                                          const VertexPartition& r,
                                          LoopPolicy policy) {
  std::vector<VertexSet> classes;
  std::set<VertexSet> seen;
  for (const auto& v : x.vertices()) {
    VertexSet cut;
    for (const auto& u : r.block_of(v)) {
      if (x.has_vertex(u)) cut.insert(u);
    }
    if (seen.insert(cut).second) classes.push_back(cut);
  }
  REQUIRE(classes.size() <= 16);

  std::set<VertexSet> out;
  for (std::size_t mask = 1; mask < (1u << classes.size()); ++mask) {
    std::vector<VertexSet> chosen;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (mask & (1u << i)) chosen.push_back(classes[i]);
    }
    if (policy == LoopPolicy::Disallow && chosen.size() < 2) continue;
    bool witnessed = false;
    for (const auto& [label, evs] : x.edges()) {
      bool meets_all = true;
      for (const auto& cls : chosen) {
        bool meets = std::any_of(cls.begin(), cls.end(),
                                 [&](const Label& u) { return evs.count(u) > 0; });
        if (!meets) {
          meets_all = false;
          break;
        }
      }
      if (!meets_all) continue;
      bool covered = std::all_of(evs.begin(), evs.end(), [&](const Label& v) {
        return std::any_of(chosen.begin(), chosen.end(),
                           [&](const VertexSet& cls) { return cls.count(v) > 0; });
      });
      if (covered) {
        witnessed = true;
        break;
      }
    }
    if (witnessed) {
      VertexSet labels;
      for (const auto& cls : chosen) {
        // Class labels come from the full blocks of the relation.
        labels.insert(VertexPartition::block_label(r.block_of(*cls.begin())));
      }
      out.insert(std::move(labels));
    }
  }
  return out;
}

std::set<VertexSet> edge_class_sets(const Hypergraph& q) {
  std::set<VertexSet> out;
  for (const auto& [label, vs] : q.edges()) out.insert(vs);
  return out;
}

}  // namespace

TEST_CASE("identity partition reproduces the hypergraph up to relabelling") {
  Hypergraph a = fixture_a();
  auto r = VertexPartition::identity(a.vertices());
  auto q = quotient(a, r, LoopPolicy::Disallow);
  CHECK(q.quotient.vertices() == VertexSet{"[a]", "[b]"});
  CHECK(edge_class_sets(q.quotient) == std::set<VertexSet>{{"[a]", "[b]"}});
  CHECK(q.projection.at("a") == "[a]");
}

TEST_CASE("an edge collapsing to one class is dropped when loops are disallowed") {
  Hypergraph a = fixture_a();
  auto r = VertexPartition::from_blocks(a.vertices(), {{"a", "b"}});
  auto q = quotient(a, r, LoopPolicy::Disallow);
  CHECK(q.quotient == hg({"[a,b]"}));
  // Frozen against the brute-force enumeration of the edge conditions.
  CHECK(quotient_edges_oracle(a, r, LoopPolicy::Disallow).empty());

  auto q2 = quotient(a, r, LoopPolicy::Allow);
  CHECK(edge_class_sets(q2.quotient) == std::set<VertexSet>{{"[a,b]"}});
}

TEST_CASE("a partial merge keeps the edge over the merged classes") {
  Hypergraph x = hg({"a", "b", "c"}, {{"e1", {"a", "b", "c"}}});
  auto r = VertexPartition::from_blocks(x.vertices(), {{"a", "b"}, {"c"}});
  auto q = quotient(x, r, LoopPolicy::Disallow);
  CHECK(edge_class_sets(q.quotient) == std::set<VertexSet>{{"[a,b]", "[c]"}});
  CHECK(quotient_edges_oracle(x, r, LoopPolicy::Disallow) ==
        std::set<VertexSet>{{"[a,b]", "[c]"}});
}

TEST_CASE("quotient requires the exact universe") {
  CHECK_THROWS_AS(
      quotient(fixture_a(), VertexPartition::identity({"a"}), LoopPolicy::Disallow),
      DomainError);
}

TEST_CASE("quotient edges match the brute-force oracle on random instances") {
  Rng rng(2024);
  auto pool = make_pool(10);
  for (int i = 0; i < 300; ++i) {
    LoopPolicy policy = chance(rng, 0.5) ? LoopPolicy::Allow : LoopPolicy::Disallow;
    Hypergraph x = random_hypergraph(rng, pool, 8, 6, policy);
    auto r = random_partition(rng, x.vertices());
    auto q = quotient(x, r, policy);
    CHECK(edge_class_sets(q.quotient) == quotient_edges_oracle(x, r, policy));

    // Projection is total and surjective.
    CHECK(q.projection.size() == x.vertices().size());
    VertexSet image;
    for (const auto& [v, c] : q.projection) image.insert(c);
    CHECK(image == q.quotient.vertices());
  }
}

TEST_CASE("every non-collapsed edge projects to a quotient edge") {
  Rng rng(613);
  auto pool = make_pool(9);
  for (int i = 0; i < 200; ++i) {
    LoopPolicy policy = chance(rng, 0.5) ? LoopPolicy::Allow : LoopPolicy::Disallow;
    Hypergraph x = random_hypergraph(rng, pool, 7, 5, policy);
    auto r = random_partition(rng, x.vertices());
    auto q = quotient(x, r, policy);
    for (const auto& [label, vs] : x.edges()) {
      auto cs = edge_quotient(Hyperedge{label, vs}, r, policy);
      if (cs) CHECK(q.quotient.has_edge_vertices(*cs));
    }
  }
}

TEST_CASE("vertex-augmented quotient with the exact universe is the plain quotient") {
  Hypergraph a = fixture_a();
  auto r = VertexPartition::from_blocks(a.vertices(), {{"a", "b"}});
  CHECK(vertex_augmented_quotient(a, r, LoopPolicy::Disallow).quotient ==
        quotient(a, r, LoopPolicy::Disallow).quotient);
}

TEST_CASE("extra universe vertices in their own blocks keep the structure") {
  Hypergraph a = fixture_a();
  VertexSet universe{"a", "b", "z"};
  auto r = VertexPartition::from_blocks(universe, {{"a", "b"}, {"z"}});
  auto augmented = vertex_augmented_quotient(a, r, LoopPolicy::Disallow);
  auto plain = quotient(a, r.restricted_to(a.vertices()), LoopPolicy::Disallow);
  CHECK(augmented.quotient.vertices().size() == plain.quotient.vertices().size());
  CHECK(edge_class_sets(augmented.quotient).size() ==
        edge_class_sets(plain.quotient).size());
  // No separate class for the unused vertex z.
  CHECK(augmented.quotient.vertices() == VertexSet{"[a,b]"});
}

TEST_CASE("a block mixing member and extra vertices produces one class") {
  Hypergraph a = fixture_a();
  VertexSet universe{"a", "b", "z"};
  auto r = VertexPartition::from_blocks(universe, {{"a", "z"}, {"b"}});
  auto augmented = vertex_augmented_quotient(a, r, LoopPolicy::Disallow);
  CHECK(augmented.quotient.vertices() == VertexSet{"[a,z]", "[b]"});
  CHECK(augmented.projection.at("a") == "[a,z]");
}

TEST_CASE("vertex-augmented quotient rejects a too-small universe") {
  CHECK_THROWS_AS(vertex_augmented_quotient(fixture_a(),
                                            VertexPartition::identity({"a"}),
                                            LoopPolicy::Disallow),
                  DomainError);
}

TEST_CASE("the canonical vertex map is an isomorphism on the fixtures") {
  Hypergraph a = fixture_a();
  VertexSet universe{"a", "b", "z"};
  auto r = VertexPartition::from_blocks(universe, {{"a", "z"}, {"b"}});
  CHECK(check_canonical_iso(a, r, LoopPolicy::Disallow));
  CHECK(check_canonical_iso(null_hypergraph(), r, LoopPolicy::Disallow));
}

TEST_CASE("the canonical vertex map is an isomorphism on random instances") {
  Rng rng(31337);
  auto pool = make_pool(12);
  for (int i = 0; i < 500; ++i) {
    LoopPolicy policy = chance(rng, 0.5) ? LoopPolicy::Allow : LoopPolicy::Disallow;
    Hypergraph x = random_hypergraph(rng, pool, 8, 6, policy);
    VertexSet universe = x.vertices();
    std::size_t extras = pick(rng, 4);
    for (std::size_t k = 0; k < extras; ++k) universe.insert(vertex_name(40 + k));
    auto r = random_partition(rng, universe);
    CHECK(check_canonical_iso(x, r, policy));
  }
}

TEST_CASE("edge quotient maps vertices to classes and rejects collapsed loops") {
  VertexSet universe{"a", "b", "c"};
  auto split = VertexPartition::identity(universe);
  auto merged = VertexPartition::from_blocks(universe, {{"a", "b"}, {"c"}});

  CHECK(edge_quotient(Hyperedge{"e1", {"a", "b"}}, split, LoopPolicy::Disallow) ==
        VertexSet{"[a]", "[b]"});
  CHECK(edge_quotient(Hyperedge{"e1", {"a", "b"}}, merged, LoopPolicy::Disallow) ==
        std::nullopt);
  CHECK(edge_quotient(Hyperedge{"e1", {"a", "b"}}, merged, LoopPolicy::Allow) ==
        VertexSet{"[a,b]"});
  CHECK(edge_quotient(Hyperedge{"e9", {"a", "b", "c"}}, merged, LoopPolicy::Disallow) ==
        VertexSet{"[a,b]", "[c]"});
}

TEST_CASE("equivalent edges enumerate every vertex set with the same class set") {
  Family family;
  family.policy = LoopPolicy::Disallow;
  Hypergraph x1 = hg({"a", "b"}, {{"e1", {"a", "b"}}});
  Hypergraph x2 = hg({"a", "b2"}, {{"e2", {"a", "b2"}}});
  family.members = {x1, x2};
  auto r = VertexPartition::from_blocks({"a", "b", "b2"}, {{"a"}, {"b", "b2"}});

  auto cls = equivalent_edges(Hyperedge{"e1", {"a", "b"}}, r, family);
  CHECK(cls.class_set == VertexSet{"[a]", "[b,b2]"});
  // Every choice of a nonempty subset per block participates.
  CHECK(cls.members ==
        std::set<VertexSet>{{"a", "b"}, {"a", "b2"}, {"a", "b", "b2"}});

  CHECK(cls.members_in(x2) == std::set<VertexSet>{{"a", "b2"}});
  CHECK(cls.members_in_edges(x2) == std::set<VertexSet>{{"a", "b2"}});
  CHECK(cls.members_in_edges(hg({"a", "b"})).empty());
}

TEST_CASE("equivalence classes computed from any member agree") {
  Rng rng(88);
  auto pool = make_pool(8);
  Family family;
  family.policy = LoopPolicy::Disallow;
  for (int k = 0; k < 4; ++k) {
    family.members.insert(random_hypergraph(rng, pool, 6, 4));
  }
  VertexSet universe = family.universe_vertices();
  if (universe.size() < 2) return;
  std::vector<Label> verts(universe.begin(), universe.end());
  for (int i = 0; i < 100; ++i) {
    auto r = random_partition(rng, universe);
    VertexSet evs;
    while (evs.size() < 2) evs.insert(verts[pick(rng, verts.size())]);
    Hyperedge e = make_edge(evs);
    if (!edge_quotient(e, r, family.policy)) continue;
    auto cls = equivalent_edges(e, r, family);
    CHECK(cls.members.count(evs) == 1);
    for (const auto& f : cls.members) {
      auto cls_f = equivalent_edges(make_edge(f), r, family);
      CHECK(cls_f.members == cls.members);
      CHECK(cls_f.class_set == cls.class_set);
    }
  }
}

TEST_CASE("single-member class when the relation is the identity") {
  Family family;
  family.policy = LoopPolicy::Disallow;
  family.members = {fixture_a()};
  auto r = VertexPartition::identity(family.universe_vertices());
  auto cls = equivalent_edges(Hyperedge{"e1", {"a", "b"}}, r, family);
  CHECK(cls.members == std::set<VertexSet>{{"a", "b"}});
}
