#include <catch2/catch.hpp>
#include <random>

#include "helpers.hpp"
#include "momangle/duality.hpp"

using namespace momangle;
using testutil::face;

TEST_CASE("alexander duality check") {
    REQUIRE(alexander_duality_check(testutil::octahedron(), 2).passed());

    auto three = testutil::three_points();
    for (int d = -1; d <= 2; ++d) {
        DualityReport r = alexander_duality_check(three, d);
        REQUIRE_FALSE(r.passed());
        REQUIRE_FALSE(r.alexander_witnesses.empty());
    }
    // the J = [3] witness shows the rank-2 zeroth cohomology
    DualityReport r = alexander_duality_check(three, 0);
    bool found = false;
    for (const auto& w : r.alexander_witnesses)
        if (w.subset == vs::full(3) && w.degree == 0 && w.lhs.rank() == 2) found = true;
    REQUIRE(found);

    REQUIRE(alexander_duality_check(SimplicialComplex::empty_complex(1), -1).passed());

    DualityReport rp2 = alexander_duality_check(testutil::rp2_6(), 2);
    REQUIRE_FALSE(rp2.passed());
    bool torsion_witness = false;
    for (const auto& w : rp2.alexander_witnesses)
        if (!w.lhs.torsion().empty() || !w.rhs.torsion().empty()) torsion_witness = true;
    REQUIRE(torsion_witness);

    REQUIRE_THROWS_AS(alexander_duality_check(SimplicialComplex::void_complex(2), 0),
                      std::invalid_argument);
}

TEST_CASE("ghs check") {
    DualityReport octa = ghs_check(testutil::octahedron());
    REQUIRE(octa.passed());
    REQUIRE(*octa.dimension == 2);

    DualityReport pent = ghs_check(testutil::pentagon());
    REQUIRE(pent.passed());
    REQUIRE(*pent.dimension == 1);

    // RP²: every vertex link is a circle, only the global condition fails
    DualityReport rp2 = ghs_check(testutil::rp2_6());
    REQUIRE_FALSE(rp2.passed());
    REQUIRE(rp2.link_witnesses.size() == 1);
    REQUIRE(rp2.link_witnesses[0].face == 0);
    REQUIRE(rp2.link_witnesses[0].observed.at(1) == AbelianGroup::cyclic(2));

    REQUIRE(ghs_check(SimplicialComplex::empty_complex(2)).passed());
    REQUIRE_FALSE(ghs_check(testutil::path3()).passed());
}

TEST_CASE("fundamental class") {
    ZkChain mu = fundamental_class(testutil::octahedron());
    REQUIRE(mu.degree == 9);
    REQUIRE(mu.terms.size() == 8);
    for (const auto& [cell, coeff] : mu.terms) {
        REQUIRE(cell.support() == vs::full(6));
        REQUIRE((coeff == 1 || coeff == -1));
    }

    ZkChain mu1 = fundamental_class(SimplicialComplex::from_facets(2, {1u, 2u}));
    REQUIRE(mu1.degree == 3);
    REQUIRE(mu1.terms.size() == 2);
    for (const auto& [cell, coeff] : mu1.terms) REQUIRE(cell.support() == face({1, 2}));

    // the path has H_3(Z_K) = Z but carried by a proper summand
    REQUIRE_THROWS_AS(fundamental_class(testutil::path3()), std::invalid_argument);
    REQUIRE_THROWS_AS(fundamental_class(testutil::three_points()), std::invalid_argument);
}

TEST_CASE("pd certificates") {
    PDCertificate octa = pd_certify(testutil::octahedron());
    REQUIRE(octa.passed());
    REQUIRE(octa.top_degree == 9);
    REQUIRE(octa.hypothesis_met);
    for (const auto& d : octa.degrees) REQUIRE(d.isomorphism);
    for (const auto& s : octa.summand_table) REQUIRE(s.contained);

    PDCertificate pent = pd_certify(testutil::pentagon());
    REQUIRE(pent.passed());
    REQUIRE(pent.top_degree == 7);

    PDCertificate three = pd_certify(testutil::three_points());
    REQUIRE_FALSE(three.passed());
    REQUIRE(three.verdict == Verdict::kFail);

    PDCertificate path = pd_certify(testutil::path3());
    REQUIRE(path.verdict == Verdict::kInapplicable);
    REQUIRE_FALSE(path.hypothesis_met);

    PDCertificate ghost = pd_certify(SimplicialComplex::empty_complex(1));
    REQUIRE(ghost.passed());
    REQUIRE(ghost.top_degree == 1);
}

TEST_CASE("gorenstein check") {
    for (int m = 2; m <= 4; ++m) {
        auto simplex = SimplicialComplex::from_facets(m, {vs::full(m)});
        DualityReport r = gorenstein_check(simplex);
        REQUIRE(r.passed());
        REQUIRE(r.core_complex->dimension() == -1);
    }

    REQUIRE(gorenstein_check(testutil::octahedron()).passed());

    DualityReport rp2 = gorenstein_check(testutil::rp2_6());
    REQUIRE_FALSE(rp2.passed());
    REQUIRE(*rp2.core_complex == testutil::rp2_6());  // core of RP² is itself

    // path: core is two points = S⁰, so Z[path] is Gorenstein
    DualityReport path = gorenstein_check(testutil::path3());
    REQUIRE(path.passed());
    REQUIRE(path.core_complex->faces() ==
            std::vector<VertexSet>{0u, face({1}), face({3})});
    REQUIRE(path.ideal_generators == std::vector<VertexSet>{face({1, 3})});
}

TEST_CASE("classify composite") {
    ClassifyResult octa = classify(testutil::octahedron());
    REQUIRE(octa.hypothesis_met);
    REQUIRE(octa.all_pass());

    ClassifyResult seven = classify(
        SimplicialComplex::from_facets(7, {face({1, 3, 4}), face({1, 4, 5}), face({1, 5, 6}),
                                           face({1, 6, 7}), face({1, 3, 7}), face({2, 3, 4}),
                                           face({2, 4, 5}), face({2, 5, 6}), face({2, 6, 7}),
                                           face({2, 3, 7})}));
    REQUIRE(seven.all_pass());  // 7-vertex 2-sphere

    ClassifyResult path = classify(testutil::path3());
    REQUIRE_FALSE(path.hypothesis_met);
    REQUIRE(path.pd.verdict == Verdict::kInapplicable);
    REQUIRE(path.gorenstein.passed());
    REQUIRE_FALSE(path.note.empty());

    ClassifyResult rp2 = classify(testutil::rp2_6());
    REQUIRE(rp2.hypothesis_met);
    REQUIRE_FALSE(rp2.all_pass());
}

TEST_CASE("checker equivalence on a generated family") {
    std::mt19937 rng(51);
    std::set<std::pair<int, std::vector<VertexSet>>> seen;
    int generated = 0, trials = 0;
    while (generated < 150 && trials < 100000) {
        int m = 2 + trials++ % 4;
        auto k = testutil::random_complex(rng, m);
        if (!seen.insert({m, k.faces()}).second) continue;
        ++generated;
        // classify itself raises internal_error if any two checkers disagree
        ClassifyResult r = classify(k);
        if (!r.hypothesis_met) continue;
        // Fan-Wang: GHS^(dim K) iff Alexander duality at dim K
        REQUIRE(r.ghs.passed() == r.alexander_at_dim.passed());
        // Theorem: PD iff Alexander at the inferred dimension
        const DualityReport& alex =
            r.alexander_at_inferred ? *r.alexander_at_inferred : r.alexander_at_dim;
        REQUIRE(r.pd.passed() == alex.passed());
        // Gorenstein = GHS of the core = GHS of K here (core = K)
        REQUIRE(r.gorenstein.passed() == r.ghs.passed());
        // passing certificates have full-support fundamental classes
        if (r.pd.passed()) {
            REQUIRE(r.pd.fundamental.has_value());
            for (const auto& [cell, coeff] : r.pd.fundamental->terms)
                REQUIRE(cell.support() == vs::full(m));
        }
    }
}
