#include <doctest.h>

#include "hypertrans/compose.hpp"
#include "test_support.hpp"

using namespace hypertrans;
using namespace hypertrans::testing;

namespace {

PartialMap map_of(std::initializer_list<std::pair<Hypergraph, Hypergraph>> entries) {
  PartialMap m;
  for (const auto& [k, v] : entries) m.emplace(k, v);
  return m;
}

}  // namespace

TEST_CASE("composition restricts to the largest consistent domain") {
  Hypergraph a = fixture_a(), b = fixture_b(), c = fixture_c();
  PartialMap inner = map_of({{a, b}, {b, c}});
  PartialMap outer = map_of({{b, a}});
  PartialMap composed = compose(outer, inner);
  CHECK(composed == map_of({{a, a}}));

  CHECK(compose(PartialMap{}, inner).empty());
  CHECK(compose(outer, PartialMap{}).empty());
}

TEST_CASE("composition with disjoint image and domain is empty") {
  Hypergraph a = fixture_a(), b = fixture_b(), c = fixture_c();
  PartialMap inner = map_of({{a, a}});
  PartialMap outer = map_of({{b, c}});
  CHECK(compose(outer, inner).empty());
}

TEST_CASE("composing with an identity restricts to preimages") {
  Hypergraph a = fixture_a(), b = fixture_b(), c = fixture_c();
  PartialMap pi = map_of({{a, b}, {c, c}});
  PartialMap id_b = identity_map({b});
  CHECK(compose(id_b, pi) == map_of({{a, b}}));
}

TEST_CASE("sequence composition folds left with the first map applied first") {
  Hypergraph a = fixture_a(), b = fixture_b(), c = fixture_c();
  PartialMap p1 = map_of({{a, b}});
  PartialMap p2 = map_of({{b, c}});
  CHECK(compose_seq({p1, p2}) == map_of({{a, c}}));
  CHECK(compose_seq({p1}) == p1);
  CHECK(compose_seq({}, {a, b}) == identity_map({a, b}));
}

TEST_CASE("composition is associative on random finite maps") {
  Rng rng(246);
  auto pool = make_pool(8);
  std::vector<Hypergraph> values;
  for (int i = 0; i < 8; ++i) values.push_back(random_hypergraph(rng, pool, 5, 3));
  auto random_map = [&]() {
    PartialMap m;
    for (const auto& k : values) {
      if (chance(rng, 0.6)) m[k] = values[pick(rng, values.size())];
    }
    return m;
  };
  for (int i = 0; i < 200; ++i) {
    PartialMap f = random_map(), g = random_map(), h = random_map();
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

TEST_CASE("coincidence of identical maps is the whole domain") {
  Hypergraph a = fixture_a(), b = fixture_b();
  // Both entries map into the domain, so the self-composition is total.
  PartialMap p = map_of({{a, b}, {b, b}});
  auto report = coincidence({p, p});
  CHECK(report.ordering_count == 2);
  CHECK(report.common_domain == std::set<Hypergraph>{a, b});
  CHECK(report.coincidence == report.common_domain);
}

TEST_CASE("order-sensitive maps have a strict coincidence subset") {
  // f swaps a pair, g collapses it: the two orderings agree only on c.
  Hypergraph a = fixture_a(), b = fixture_b(), c = fixture_c();
  PartialMap f = map_of({{a, b}, {b, a}, {c, c}});
  PartialMap g = map_of({{a, a}, {b, a}, {c, c}});
  auto report = coincidence({f, g});
  CHECK(report.ordering_count == 2);
  // g(f(-)) sends a,b to a; f(g(-)) sends a,b to b; both fix c.
  CHECK(report.common_domain == std::set<Hypergraph>{a, b, c});
  CHECK(report.coincidence == std::set<Hypergraph>{c});
}

TEST_CASE("coincidence rejects oversized sequences") {
  PartialMap p;
  std::vector<PartialMap> seq(7, p);
  CHECK_THROWS_AS(coincidence(seq), DomainError);
  CHECK_THROWS_AS(coincidence({}), DomainError);
}

namespace {

// Two edge-toggle style transformations over separate vertex pools, with a
// shared domain family closed under both rules.
struct DisjointPairFixture {
  TransformSpec spec1, spec2;
};

Transformation toggle_like(Rng& rng, std::size_t offset,
                           std::set<Hypergraph>* members_out) {
  // One distinguished member S on a private pool; image toggles an edge.
  VertexSet vs;
  std::size_t n = 2 + pick(rng, 2);
  for (std::size_t i = 0; i < n; ++i) vs.insert(vertex_name(offset + i));
  Hypergraph s = random_connected(rng, vs);
  VertexSet evs;
  auto it = vs.begin();
  evs.insert(*it++);
  evs.insert(*it);
  std::set<Hyperedge> extra{Hyperedge{"t" + std::to_string(offset), evs}};
  Hypergraph image = edge_symdiff(s, extra);

  TransformSpec spec;
  spec.family.policy = LoopPolicy::Disallow;
  spec.family.members = {s, image, null_hypergraph()};
  spec.distinguished = {s};
  spec.images.emplace(s, image);
  if (members_out) {
    members_out->insert(s);
    members_out->insert(image);
  }
  Transformation t = derive(spec);
  return t;
}

}  // namespace

TEST_CASE("transformation disjointness depends on shared vertices") {
  Rng rng(135);
  Transformation t1 = toggle_like(rng, 0, nullptr);
  Transformation t2 = toggle_like(rng, 10, nullptr);
  CHECK(are_disjoint(t1, t2));
  Transformation t3 = toggle_like(rng, 1, nullptr);  // always shares a vertex with t1
  CHECK_FALSE(are_disjoint(t1, t3));
}

TEST_CASE("the null hypergraph is vertex disjoint from everything") {
  // Summand swaps both distinguish the null hypergraph; with separate
  // vertex pools the transformations are still disjoint.
  Hypergraph w1 = fixture_a();
  Hypergraph w2 = fixture_c();
  auto make_swap = [](const Hypergraph& w) {
    TransformSpec spec;
    spec.family.members = {null_hypergraph(), w};
    spec.distinguished = {null_hypergraph(), w};
    spec.images.emplace(null_hypergraph(), w);
    spec.images.emplace(w, null_hypergraph());
    return derive(spec);
  };
  CHECK(are_disjoint(make_swap(w1), make_swap(w2)));
}

namespace {

// Builds n pairwise-disjoint transformations over one shared family. Each
// acts on a private pool; members mix fragments of all pools and the family
// is closed orbitwise so that compositions stay total.
std::vector<Transformation> disjoint_suite(Rng& rng, std::size_t n,
                                           std::set<Hypergraph>* family_out) {
  std::vector<Hypergraph> s_list, image_list;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet vs;
    std::size_t nv = 2 + pick(rng, 2);
    for (std::size_t k = 0; k < nv; ++k) vs.insert(vertex_name(i * 10 + k));
    Hypergraph s = random_connected(rng, vs);
    VertexSet evs;
    auto it = vs.begin();
    evs.insert(*it++);
    evs.insert(*it);
    Hypergraph image =
        edge_symdiff(s, {Hyperedge{"t" + std::to_string(i * 10), evs}});
    s_list.push_back(s);
    image_list.push_back(image);
  }

  // Family: all 2^n combinations of per-pool state (distinguished or image),
  // plus the null hypergraph; every rule maps members to members.
  std::set<Hypergraph> members{null_hypergraph()};
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Hypergraph> parts;
    for (std::size_t i = 0; i < n; ++i) {
      parts.push_back(mask & (1u << i) ? image_list[i] : s_list[i]);
    }
    members.insert(direct_sum(parts));
  }
  if (family_out) *family_out = members;

  std::vector<Transformation> out;
  for (std::size_t i = 0; i < n; ++i) {
    TransformSpec spec;
    spec.family.policy = LoopPolicy::Disallow;
    spec.family.members = members;
    spec.distinguished = {s_list[i]};
    spec.images.emplace(s_list[i], image_list[i]);
    // The lone distinguished member must itself be in the family.
    spec.family.members.insert(s_list[i]);
    out.push_back(derive(spec));
  }
  return out;
}

}  // namespace

TEST_CASE("disjoint transformations coincide on their whole common domain") {
  Rng rng(2468);
  for (int i = 0; i < 60; ++i) {
    auto ts = disjoint_suite(rng, 2, nullptr);
    REQUIRE(are_disjoint(ts[0], ts[1]));
    auto report = coincidence({ts[0].table(), ts[1].table()});
    CHECK(report.coincidence == report.common_domain);
    CHECK_FALSE(report.common_domain.empty());
  }
}

TEST_CASE("longer disjoint sequences coincide across every ordering") {
  Rng rng(1357);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 3 + (i % 2);
    auto ts = disjoint_suite(rng, n, nullptr);
    std::vector<PartialMap> maps;
    for (const auto& t : ts) maps.push_back(t.table());
    auto report = coincidence(maps);
    CHECK(report.ordering_count == (n == 3 ? 6u : 24u));
    CHECK(report.coincidence == report.common_domain);
  }
}

TEST_CASE("disjoint application matches sequential application in any order") {
  Rng rng(9753);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 2 + (i % 3);
    std::set<Hypergraph> members;
    auto ts = disjoint_suite(rng, n, &members);
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    for (const auto& x : members) {
      Hypergraph closed = disjoint_apply(ts, x);
      do {
        Hypergraph sequential = x;
        for (auto k : order) sequential = apply(ts[k], sequential);
        CHECK(sequential == closed);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("disjoint application refuses overlapping transformations") {
  Rng rng(111);
  Transformation t1 = toggle_like(rng, 0, nullptr);
  Transformation t3 = toggle_like(rng, 1, nullptr);
  CHECK_THROWS_AS(disjoint_apply({t1, t3}, null_hypergraph()), DomainError);
}

TEST_CASE("disjoint application rejects inputs outside the coincidence set") {
  Rng rng(222);
  auto ts = disjoint_suite(rng, 2, nullptr);
  CHECK_THROWS_AS(disjoint_apply(ts, fixture_c()), DomainError);
}
