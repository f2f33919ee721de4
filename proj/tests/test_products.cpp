#include <catch2/catch.hpp>
#include <random>

#include "helpers.hpp"
#include "momangle/products.hpp"

using namespace momangle;
using testutil::face;

namespace {

ZkChain random_chain(std::mt19937& rng, const SimplicialComplex& k, int deg, int terms = 4) {
    auto cells = zk_cells_of_dimension(k, deg);
    ZkChain c;
    c.degree = deg;
    if (cells.empty()) return c;
    std::uniform_int_distribution<int> idx(0, int(cells.size()) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < terms; ++i) c.add(cells[idx(rng)], coeff(rng));
    return c;
}

ZkCochain random_cochain(std::mt19937& rng, const SimplicialComplex& k, int deg, int terms = 4) {
    auto cells = zk_cells_of_dimension(k, deg);
    ZkCochain c;
    c.degree = deg;
    if (cells.empty()) return c;
    std::uniform_int_distribution<int> idx(0, int(cells.size()) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < terms; ++i) c.add(cells[idx(rng)], coeff(rng));
    return c;
}

ZkCochain dual(const Cell& c) {
    ZkCochain out;
    out.degree = c.dimension();
    out.add(c, 1);
    return out;
}

}  // namespace

TEST_CASE("evaluation pairing") {
    Cell a{face({1}), face({2})};
    Cell b{face({2}), face({1})};
    ZkChain c;
    c.degree = a.dimension();
    c.add(a, 1);
    REQUIRE(evaluate(c, dual(a)) == 1);
    REQUIRE(evaluate(c, dual(b)) == 0);

    ZkChain mix;
    mix.degree = 2;
    mix.add(Cell{0, face({1})}, 2);
    mix.add(Cell{0, face({2})}, -1);
    REQUIRE(evaluate(mix, dual(Cell{0, face({2})})) == -1);

    ZkCochain wrong;
    wrong.degree = 3;
    wrong.add(Cell{face({1}), face({2})}, 1);
    REQUIRE_THROWS_AS(evaluate(mix, wrong), std::invalid_argument);
}

TEST_CASE("baskakov product formula") {
    auto octa = testutil::octahedron();
    SubcomplexCochain phi;
    phi.subset = face({1, 2});
    phi.degree = 0;
    phi.add(face({1}), 1);
    SubcomplexCochain psi;
    psi.subset = face({3, 4});
    psi.degree = 0;
    psi.add(face({3}), 1);
    SubcomplexCochain prod = baskakov_cup(phi, psi, octa);
    REQUIRE(prod.subset == face({1, 2, 3, 4}));
    REQUIRE(prod.degree == 1);
    REQUIRE(prod.terms.size() == 1);
    Integer c = prod.terms.at(face({1, 3}));
    REQUIRE((c == 1 || c == -1));

    // overlapping index sets give zero
    SubcomplexCochain clash;
    clash.subset = face({1, 3});
    clash.degree = 0;
    clash.add(face({3}), 1);
    REQUIRE(baskakov_cup(phi, clash, octa).is_zero());

    // σ∪τ not a face gives zero: {1} on K_{1} times {2} on K_{2}
    SubcomplexCochain one;
    one.subset = face({1});
    one.degree = 0;
    one.add(face({1}), 1);
    SubcomplexCochain two;
    two.subset = face({2});
    two.degree = 0;
    two.add(face({2}), 1);
    REQUIRE(baskakov_cup(one, two, octa).is_zero());
}

TEST_CASE("cap product formula from the adjunction") {
    auto k = SimplicialComplex::from_facets(2, {face({1}), face({2})});
    ZkChain c;
    c.degree = 3;
    c.add(Cell{face({1}), face({2})}, 1);

    ZkChain r1 = cellular_cap(c, dual(Cell{face({1}), 0}), k);
    REQUIRE(r1.terms.size() == 1);
    REQUIRE(r1.terms.count(Cell{0, face({2})}) == 1);

    ZkChain r2 = cellular_cap(c, dual(Cell{0, face({2})}), k);
    REQUIRE(r2.terms.size() == 1);
    REQUIRE(r2.terms.count(Cell{face({1}), 0}) == 1);

    ZkChain s;
    s.degree = 1;
    s.add(Cell{face({1}), 0}, 1);
    REQUIRE(cellular_cap(s, dual(Cell{face({2}), 0}), k).is_zero());
}

TEST_CASE("adjunction and Leibniz properties") {
    std::mt19937 rng(31);
    int done = 0;
    while (done < 500) {
        int m = 2 + done % 4;
        auto k = testutil::random_complex(rng, m);
        std::uniform_int_distribution<int> deg(0, 2 * m);
        int dphi = deg(rng), dpsi = deg(rng);
        ZkChain c = random_chain(rng, k, dphi + dpsi);
        ZkCochain phi = random_cochain(rng, k, dphi);
        ZkCochain psi = random_cochain(rng, k, dpsi);

        // <c ⌢ φ, ψ> = <c, φ ⌣ ψ>
        REQUIRE(evaluate(cellular_cap(c, phi, k), psi) == evaluate(c, zk_cup(phi, psi, k)));

        // δ(φ ⌣ ψ) = δφ ⌣ ψ + (-1)^{|φ|} φ ⌣ δψ
        ZkCochain lhs = zk_coboundary(zk_cup(phi, psi, k), k);
        ZkCochain rhs = combination_sum(
            zk_cup(zk_coboundary(phi, k), psi, k),
            scaled(zk_cup(phi, zk_coboundary(psi, k), k), vs::sign_pow(dphi)));
        REQUIRE(lhs == rhs);

        // ∂(c ⌢ φ) = (-1)^{|φ|} (∂c ⌢ φ) - (-1)^{|φ|} (c ⌢ δφ)
        int dc = deg(rng);
        ZkChain c2 = random_chain(rng, k, dc);
        ZkCochain phi2 = random_cochain(rng, k, deg(rng));
        if (c2.degree >= phi2.degree) {
            ZkChain L = zk_boundary(cellular_cap(c2, phi2, k), k);
            ZkChain R = combination_sum(
                scaled(cellular_cap(zk_boundary(c2, k), phi2, k), vs::sign_pow(phi2.degree)),
                scaled(cellular_cap(c2, zk_coboundary(phi2, k), k), -vs::sign_pow(phi2.degree)));
            REQUIRE(L == R);
        }

        // graded commutativity on the nose at cochain level
        REQUIRE(zk_cup(phi, psi, k) == scaled(zk_cup(psi, phi, k), vs::sign_pow(dphi * dpsi)));

        // associativity
        ZkCochain chi = random_cochain(rng, k, deg(rng));
        REQUIRE(zk_cup(zk_cup(phi, psi, k), chi, k) == zk_cup(phi, zk_cup(psi, chi, k), k));
        ++done;
    }
}

TEST_CASE("baskakov product agrees with the transported cellular cup") {
    std::mt19937 rng(32);
    int done = 0;
    while (done < 300) {
        int m = 2 + done % 4;
        auto k = testutil::random_complex(rng, m);
        std::uniform_int_distribution<VertexSet> pick(0, vs::full(m));
        VertexSet i = pick(rng);
        VertexSet j = pick(rng) & ~i;
        auto ki = full_subcomplex(k, i);
        auto kj = full_subcomplex(k, j);
        std::uniform_int_distribution<int> fi(0, int(ki.face_count()) - 1);
        std::uniform_int_distribution<int> fj(0, int(kj.face_count()) - 1);
        VertexSet sigma = ki.faces()[fi(rng)];
        VertexSet tau = kj.faces()[fj(rng)];
        SubcomplexCochain phi;
        phi.subset = i;
        phi.degree = vs::count(sigma) - 1;
        phi.add(sigma, 2);
        SubcomplexCochain psi;
        psi.subset = j;
        psi.degree = vs::count(tau) - 1;
        psi.add(tau, -1);
        SubcomplexCochain bk = baskakov_cup(phi, psi, k);
        ZkCochain transported = h_transport_cochain(bk.subset, bk, k);
        ZkCochain cellular =
            zk_cup(h_transport_cochain(i, phi, k), h_transport_cochain(j, psi, k), k);
        REQUIRE(transported == cellular);
        ++done;
    }
}

TEST_CASE("bigraded naturality of the product") {
    std::mt19937 rng(33);
    auto octa = testutil::octahedron();
    // products of summand pieces land in (I ⊔ J, p + q + 1)
    SubcomplexCochain phi;
    phi.subset = face({1, 2});
    phi.degree = 0;
    phi.add(face({1}), 1);
    SubcomplexCochain psi;
    psi.subset = face({3, 4});
    psi.degree = 0;
    psi.add(face({4}), 1);
    auto prod = baskakov_cup(phi, psi, octa);
    REQUIRE(prod.subset == (phi.subset | psi.subset));
    REQUIRE(prod.degree == phi.degree + psi.degree + 1);
}

TEST_CASE("cup on classes: octahedron ring structure") {
    auto octa = testutil::octahedron();
    auto an = make_hochster_analysis(octa);
    BigradedCohomology h = an->bigraded(an);

    auto u1 = summand_class(h, face({1, 2}), 0);
    auto u2 = summand_class(h, face({3, 4}), 0);
    auto u3 = summand_class(h, face({5, 6}), 0);
    REQUIRE(u1.total_degree == 3);

    auto p12 = cup_on_classes(u1, u2, h);
    REQUIRE(p12.total_degree == 6);
    REQUIRE(p12.coordinates.size() == 1);

    auto p = cup_on_classes(p12, u3, h);
    REQUIRE(p.total_degree == 9);
    auto it = p.coordinates.find({vs::full(6), 2});
    REQUIRE(it != p.coordinates.end());
    REQUIRE(it->second.size() == 1);
    REQUIRE((it->second[0] == 1 || it->second[0] == -1));

    // unit
    auto one = unit_class(h);
    REQUIRE(cup_on_classes(u1, one, h).coordinates == u1.coordinates);
    REQUIRE(cup_on_classes(one, u1, h).coordinates == u1.coordinates);

    // square of a degree-3 class is zero on ∂Δ¹ (degree 6 exceeds 2m = 4)
    auto s0 = SimplicialComplex::from_facets(2, {1u, 2u});
    auto an2 = make_hochster_analysis(s0);
    BigradedCohomology h2 = an2->bigraded(an2);
    auto v = summand_class(h2, face({1, 2}), 0);
    auto sq = cup_on_classes(v, v, h2);
    REQUIRE(sq.coordinates.empty());
    REQUIRE(sq.representative.is_zero());
}

TEST_CASE("cap on classes") {
    auto octa = testutil::octahedron();
    auto an = make_hochster_analysis(octa);
    BigradedCohomology h = an->bigraded(an);

    // fundamental-style cycle: transport the top simplicial cycle of K
    ComplexAnalysis full(octa);
    auto gen = full.homology(2).generator(0);
    SubcomplexChain z;
    z.subset = vs::full(6);
    z.degree = 2;
    const auto& basis = full.chain_data().bases[3];
    for (std::size_t i = 0; i < basis.size(); ++i) z.add(basis[i], gen[i]);
    HomologyClass mu = reduce_cycle(h, h_transport(vs::full(6), z, octa));
    REQUIRE(mu.total_degree == 9);

    auto u1 = summand_class(h, face({1, 2}), 0);
    auto u2 = summand_class(h, face({3, 4}), 0);
    auto u3 = summand_class(h, face({5, 6}), 0);
    auto top = cup_on_classes(cup_on_classes(u1, u2, h), u3, h);

    HomologyClass point = cap_on_classes(mu, top, h);
    REQUIRE(point.total_degree == 0);
    auto it = point.coordinates.find({0u, -1});
    REQUIRE(it != point.coordinates.end());
    REQUIRE((it->second[0] == 1 || it->second[0] == -1));

    HomologyClass same = cap_on_classes(mu, unit_class(h), h);
    REQUIRE(same.coordinates == mu.coordinates);

    // graded commutativity on classes up to sign
    auto ab = cup_on_classes(u1, u2, h);
    auto ba = cup_on_classes(u2, u1, h);
    bool equal_up_to_sign = true;
    for (const auto& [key, coords] : ab.coordinates) {
        auto jt = ba.coordinates.find(key);
        if (jt == ba.coordinates.end() || jt->second.size() != coords.size()) {
            equal_up_to_sign = false;
            break;
        }
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (coords[i] != jt->second[i] && coords[i] != -jt->second[i])
                equal_up_to_sign = false;
    }
    REQUIRE(equal_up_to_sign);
}

TEST_CASE("class-level preconditions are verified") {
    auto octa = testutil::octahedron();
    auto an = make_hochster_analysis(octa);
    BigradedCohomology h = an->bigraded(an);
    // a non-cocycle must be rejected
    ZkCochain not_cocycle;
    not_cocycle.degree = 1;
    not_cocycle.add(Cell{face({1}), 0}, 1);
    REQUIRE_THROWS_AS(reduce_cocycle(h, not_cocycle), std::invalid_argument);
    // a non-cycle must be rejected
    ZkChain not_cycle;
    not_cycle.degree = 2;
    not_cycle.add(Cell{0, face({1})}, 1);
    REQUIRE_THROWS_AS(reduce_cycle(h, not_cycle), std::invalid_argument);
    // without a retained analysis the class operations refuse to run
    BigradedCohomology plain = hochster_cohomology(octa);
    REQUIRE_THROWS_AS(unit_class(plain), std::invalid_argument);
}
