#include <catch2/catch.hpp>
#include <random>
#include <set>

#include "helpers.hpp"
#include "momangle/polyjoin.hpp"

using namespace momangle;
using testutil::face;

namespace {

// Independent oracle: the union-of-joins definition.
SimplicialComplex polyhedral_join_oracle(const JoinSpec& spec) {
    std::set<VertexSet> faces;
    for (VertexSet sigma : spec.base.faces()) {
        std::vector<VertexSet> acc = {0u};
        bool dead = false;
        for (int i = 0; i < spec.base.vertex_count() && !dead; ++i) {
            const SimplicialComplex& family =
                vs::contains(sigma, i + 1) ? spec.pairs[i].big : spec.pairs[i].small;
            if (family.is_void()) {
                dead = true;
                break;
            }
            std::vector<VertexSet> next;
            for (VertexSet partial : acc)
                for (VertexSet tau : family.faces())
                    next.push_back(partial | (tau << spec.offset(i)));
            acc = std::move(next);
        }
        if (!dead)
            for (VertexSet f : acc) faces.insert(f);
    }
    if (faces.empty()) return SimplicialComplex::void_complex(spec.total_vertices());
    return SimplicialComplex::from_faces(spec.total_vertices(),
                                         std::vector<VertexSet>(faces.begin(), faces.end()));
}

SimplicialPair pair_of(const SimplicialComplex& big, const SimplicialComplex& small) {
    return SimplicialPair(big, small);
}

}  // namespace

TEST_CASE("polyhedral join reconstructs the octahedron") {
    auto base = SimplicialComplex::from_facets(2, {1u, 2u});
    auto path = testutil::path3();
    auto endpoints = SimplicialComplex::from_facets(3, {face({1}), face({3})});
    JoinSpec spec(base, {pair_of(path, endpoints), pair_of(path, endpoints)});
    auto result = polyhedral_join(spec);
    REQUIRE(result.vertex_count() == 6);
    REQUIRE(are_isomorphic(result, testutil::octahedron()));
    REQUIRE(result == polyhedral_join_oracle(spec));
}

TEST_CASE("polyhedral join with L = K degenerates to the join") {
    auto a = SimplicialComplex::from_facets(2, {face({1, 2})});
    auto b = testutil::pentagon();
    auto base = SimplicialComplex::from_facets(2, {face({1, 2})});
    JoinSpec spec(base, {pair_of(a, a), pair_of(b, b)});
    REQUIRE(polyhedral_join(spec) == join(a, b));
}

TEST_CASE("polyhedral join builds the 7-vertex sphere") {
    auto base = SimplicialComplex::from_facets(3, {face({1, 3}), face({2, 3})});
    auto point = SimplicialComplex::from_facets(1, {1u});
    auto ghost = SimplicialComplex::empty_complex(1);
    auto pent = testutil::pentagon();
    JoinSpec spec(base, {pair_of(point, ghost), pair_of(point, ghost),
                         pair_of(pent, SimplicialComplex::void_complex(5))});
    auto result = polyhedral_join(spec);
    REQUIRE(result.vertex_count() == 7);
    DualityReport g = ghs_check(result);
    REQUIRE(g.passed());
    REQUIRE(*g.dimension == 2);
    REQUIRE(result == polyhedral_join_oracle(spec));
}

TEST_CASE("pairs with the trivial small side reproduce the base") {
    // ({v}, {∅}) per vertex: the join is the base complex, relabeled
    auto base = testutil::pentagon();
    auto point = SimplicialComplex::from_facets(1, {1u});
    auto ghost = SimplicialComplex::empty_complex(1);
    std::vector<SimplicialPair> pairs;
    for (int i = 0; i < 5; ++i) pairs.emplace_back(point, ghost);
    auto result = polyhedral_join(JoinSpec(base, pairs));
    REQUIRE(result == base);
}

TEST_CASE("join spec validation") {
    auto point = SimplicialComplex::from_facets(1, {1u});
    auto edge = SimplicialComplex::from_facets(2, {face({1, 2})});
    REQUIRE_THROWS_AS(SimplicialPair(point, edge), std::invalid_argument);
    auto not_contained = SimplicialComplex::from_facets(2, {face({1, 2})});
    auto bigger = SimplicialComplex::from_facets(2, {1u, 2u});
    REQUIRE_THROWS_AS(SimplicialPair(bigger, not_contained), std::invalid_argument);
    REQUIRE_THROWS_AS(JoinSpec(edge, {SimplicialPair(point, point)}), std::invalid_argument);
}

TEST_CASE("definitional equivalence on random specs") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + trial % 3;
        auto base = testutil::random_complex(rng, m);
        std::vector<SimplicialPair> pairs;
        for (int i = 0; i < m; ++i) {
            int li = 1 + (trial + i) % 2;
            auto big = testutil::random_complex(rng, li);
            // random subcomplex: VOID, a full subcomplex, or the closure of a
            // random subset of the faces
            std::uniform_int_distribution<int> coin(0, 3);
            SimplicialComplex small = SimplicialComplex::void_complex(li);
            switch (coin(rng)) {
                case 0:
                    break;
                case 1: {
                    std::uniform_int_distribution<VertexSet> pick(0, vs::full(li));
                    small = full_subcomplex(big, pick(rng));
                    break;
                }
                default: {
                    std::vector<VertexSet> chosen;
                    std::uniform_int_distribution<int> keep(0, 1);
                    for (VertexSet f : big.faces())
                        if (keep(rng)) chosen.push_back(f);
                    small = SimplicialComplex::from_facets(li, chosen, !chosen.empty());
                    break;
                }
            }
            pairs.emplace_back(big, small);
        }
        JoinSpec spec(base, pairs);
        REQUIRE(polyhedral_join(spec) == polyhedral_join_oracle(spec));
    }
}

TEST_CASE("composition complexes") {
    auto base = SimplicialComplex::from_facets(2, {1u, 2u});
    auto s0 = SimplicialComplex::from_facets(2, {1u, 2u});
    // ∂Δ¹(∂Δ¹, ∂Δ¹) glues the four solid blocks Δ¹*∂Δ¹ and ∂Δ¹*Δ¹: that is
    // the boundary of the 3-simplex
    auto comp = composition_complex(base, {s0, s0});
    REQUIRE(ghs_check(comp).passed());
    REQUIRE(are_isomorphic(comp, testutil::boundary_simplex(4)));

    // ghost base: only the small sides contribute
    auto ghost_base = SimplicialComplex::empty_complex(1);
    REQUIRE(composition_complex(ghost_base, {testutil::octahedron()}) == testutil::octahedron());

    // (Δ¹, ∂Δ¹) factor breaks the sphere property
    auto full_edge = SimplicialComplex::from_facets(2, {face({1, 2})});
    auto bad = composition_complex(base, {full_edge, s0});
    REQUIRE_FALSE(ghs_check(bad).passed());
}

TEST_CASE("ayzenberg predicate") {
    auto s0 = SimplicialComplex::from_facets(2, {1u, 2u});
    auto base = s0;
    auto full_edge = SimplicialComplex::from_facets(2, {face({1, 2})});
    REQUIRE(ayzenberg_predicate(base, {s0, s0}));
    REQUIRE_FALSE(ayzenberg_predicate(base, {full_edge, s0}));
    REQUIRE(ayzenberg_predicate(SimplicialComplex::empty_complex(1), {testutil::octahedron()}));
    REQUIRE_FALSE(ayzenberg_predicate(testutil::path3(),
                                      {s0, s0, s0}));  // path is not a GHS
}

TEST_CASE("ayzenberg predicate matches direct GHS checks exhaustively") {
    // factor pool: point, Δ¹, ∂Δ¹, ∂Δ²
    std::vector<SimplicialComplex> pool = {
        SimplicialComplex::from_facets(1, {1u}),
        SimplicialComplex::from_facets(2, {face({1, 2})}),
        SimplicialComplex::from_facets(2, {1u, 2u}),
        testutil::boundary_simplex(3),
    };
    std::mt19937 rng(62);
    for (int m = 1; m <= 3; ++m) {
        std::set<std::vector<VertexSet>> bases_seen;
        std::vector<SimplicialComplex> bases;
        // all complexes on m <= 3: enumerate closures of facet subsets
        std::vector<VertexSet> all_faces;
        for (VertexSet s = 1; s <= vs::full(m); ++s) all_faces.push_back(s);
        for (int mask = 0; mask < (1 << all_faces.size()); ++mask) {
            std::vector<VertexSet> facets;
            for (std::size_t i = 0; i < all_faces.size(); ++i)
                if (mask & (1 << i)) facets.push_back(all_faces[i]);
            auto k = SimplicialComplex::from_facets(m, facets, true);
            if (bases_seen.insert(k.faces()).second) bases.push_back(k);
        }
        std::uniform_int_distribution<int> pick(0, int(pool.size()) - 1);
        for (const auto& base : bases) {
            // exhaustive over factor tuples for m <= 2, sampled for m = 3
            long long tuples = 1;
            for (int i = 0; i < m; ++i) tuples *= int(pool.size());
            for (long long t = 0; t < tuples; ++t) {
                if (m == 3 && t % 7 != 0) continue;  // thin out the largest layer
                std::vector<SimplicialComplex> factors;
                long long code = t;
                for (int i = 0; i < m; ++i) {
                    factors.push_back(pool[code % pool.size()]);
                    code /= pool.size();
                }
                bool predicted = ayzenberg_predicate(base, factors);
                auto comp = composition_complex(base, factors);
                bool actual = !comp.is_void() && ghs_check(comp).passed();
                REQUIRE(predicted == actual);
            }
        }
    }
}

TEST_CASE("isomorphism testing") {
    auto pent = testutil::pentagon();
    auto relabeled = SimplicialComplex::from_facets(
        5, {face({3, 5}), face({5, 2}), face({2, 4}), face({4, 1}), face({1, 3})});
    REQUIRE(are_isomorphic(pent, relabeled));

    auto path5 = SimplicialComplex::from_facets(
        5, {face({1, 2}), face({2, 3}), face({3, 4}), face({4, 5})});
    REQUIRE_FALSE(are_isomorphic(pent, path5));

    // ghosts are ignored
    auto pent_ghost = SimplicialComplex::from_facets(
        6, {face({1, 2}), face({2, 3}), face({3, 4}), face({4, 5}), face({5, 1})});
    REQUIRE(are_isomorphic(pent, pent_ghost));

    REQUIRE_FALSE(are_isomorphic(testutil::octahedron(), testutil::rp2_6()));
    REQUIRE_THROWS_AS(are_isomorphic(pent, SimplicialComplex::void_complex(2)),
                      std::invalid_argument);
}

TEST_CASE("kunneth consistency for the octahedron reconstruction") {
    // the cohomology of Z over the reconstructed complex must match the
    // rank-by-rank product of three copies of H*(S³)
    auto base = SimplicialComplex::from_facets(2, {1u, 2u});
    auto path = testutil::path3();
    auto endpoints = SimplicialComplex::from_facets(3, {face({1}), face({3})});
    auto result = polyhedral_join(JoinSpec(base, {pair_of(path, endpoints), pair_of(path, endpoints)}));
    REQUIRE(poincare_polynomial(result) == std::vector<int>{1, 0, 0, 3, 0, 0, 3, 0, 0, 1});
    // torsion-free throughout
    for (const auto& [d, g] : zk_cohomology_groups(result).nonzero())
        REQUIRE(g.torsion().empty());
}
