// Multiplicative structure on the cellular (co)chains of Z_K: evaluation
// pairing, cup product, the Baskakov product on full-subcomplex cochains,
// and the cellular cap product, together with class-level operations on the
// bigraded cohomology.
//
// All signs belong to one family, fixed by two requirements: h is a chain
// map, and the adjunction <c ⌢ φ, ψ> = <c, φ ⌣ ψ> holds exactly at chain
// level ("adjunction-normalized").  In the h-oriented cell basis:
//
//   κ(A,B)* ⌣ κ(A',B')* = (-1)^{|B||B'|} shuffle(A,A') κ(A∪A',B∪B')*
//       when (A∪B) ∩ (A'∪B') = ∅ and B∪B' ∈ K, else 0;
//   κ(A,B) ⌢ κ(Â,B̂)*   = (-1)^{|B̂||B\B̂|} shuffle(Â,A\Â) κ(A\Â, B\B̂)
//       when Â ⊆ A and B̂ ⊆ B, else 0.
#pragma once

#include "momangle/moment_angle.hpp"

namespace momangle {

inline constexpr const char* kSignConvention = "adjunction-normalized";

// Evaluation pairing <c, φ> = Σ coefficient products over shared cells.
inline Integer evaluate(const ZkChain& chain, const ZkCochain& cochain) {
    if (!chain.terms.empty() && !cochain.terms.empty() && chain.degree != cochain.degree)
        throw std::invalid_argument("evaluation pairing degree mismatch");
    Integer out = 0;
    for (const auto& [cell, c] : chain.terms) {
        auto it = cochain.terms.find(cell);
        if (it != cochain.terms.end()) out += c * it->second;
    }
    return out;
}

// Cup product of cellular cochains of Z_K.
inline ZkCochain zk_cup(const ZkCochain& phi, const ZkCochain& psi, const SimplicialComplex& k) {
    ZkCochain out;
    out.degree = phi.degree + psi.degree;
    for (const auto& [a, ca] : phi.terms) {
        for (const auto& [b, cb] : psi.terms) {
            if (!vs::disjoint(a.support(), b.support())) continue;
            VertexSet disks = a.disks | b.disks;
            if (!k.contains(disks)) continue;
            int sign = vs::sign_pow(vs::count(a.disks) * vs::count(b.disks)) *
                       vs::shuffle_sign(a.circles, b.circles);
            out.add(Cell{a.circles | b.circles, disks}, ca * cb * sign);
        }
    }
    return out;
}

// Baskakov product on simplicial cochains of full subcomplexes:
// C^{p}(K_I) ⊗ C^{q}(K_J) -> C^{p+q+1}(K_{I∪J}), zero unless I ∩ J = ∅.
// The sign family matches the transported cellular cup exactly.
inline SubcomplexCochain baskakov_cup(const SubcomplexCochain& phi, const SubcomplexCochain& psi,
                                      const SimplicialComplex& k) {
    SubcomplexCochain out;
    out.subset = phi.subset | psi.subset;
    out.degree = phi.degree + psi.degree + 1;
    if (!vs::disjoint(phi.subset, psi.subset)) return out;
    for (const auto& [sigma, ca] : phi.terms) {
        if (!vs::subset(sigma, phi.subset) || !k.contains(sigma))
            throw std::invalid_argument("cochain not supported on K_I");
        for (const auto& [tau, cb] : psi.terms) {
            if (!vs::subset(tau, psi.subset) || !k.contains(tau))
                throw std::invalid_argument("cochain not supported on K_J");
            VertexSet merged = sigma | tau;
            if (!k.contains(merged)) continue;
            int sign = h_sign(sigma, phi.subset) * h_sign(tau, psi.subset) *
                       h_sign(merged, out.subset) *
                       vs::sign_pow(vs::count(sigma) * vs::count(tau)) *
                       vs::shuffle_sign(phi.subset & ~sigma, psi.subset & ~tau);
            out.add(merged, ca * cb * sign);
        }
    }
    return out;
}

// Cellular cap product, adjoint to the cup product.
inline ZkChain cellular_cap(const ZkChain& chain, const ZkCochain& phi,
                            const SimplicialComplex& k) {
    ZkChain out;
    out.degree = chain.degree - phi.degree;
    for (const auto& [cell, cc] : chain.terms) {
        if (!cell_in_zk(cell, k)) throw std::invalid_argument("cell not in Z_K");
        for (const auto& [hat, cp] : phi.terms) {
            if (!vs::subset(hat.circles, cell.circles) || !vs::subset(hat.disks, cell.disks))
                continue;
            VertexSet rest_circles = cell.circles & ~hat.circles;
            VertexSet rest_disks = cell.disks & ~hat.disks;
            int sign = vs::sign_pow(vs::count(hat.disks) * vs::count(rest_disks)) *
                       vs::shuffle_sign(hat.circles, rest_circles);
            out.add(Cell{rest_circles, rest_disks}, cc * cp * sign);
        }
    }
    return out;
}

// --- class level -----------------------------------------------------------

struct CohomologyClass {
    int total_degree = 0;
    ZkCochain representative;
    // Coordinates per Hochster summand (J, reduced degree), normalized.
    std::map<std::pair<VertexSet, int>, std::vector<Integer>> coordinates;
};

struct HomologyClass {
    int total_degree = 0;
    ZkChain representative;
    std::map<std::pair<VertexSet, int>, std::vector<Integer>> coordinates;
};

namespace detail {

inline const HochsterAnalysis& require_analysis(const BigradedCohomology& h) {
    if (!h.analysis)
        throw std::invalid_argument(
            "class-level operation requires a BigradedCohomology built from a retained analysis");
    return *h.analysis;
}

inline std::vector<Integer> cochain_vector(const ChainComplexData& data, int degree,
                                           const SubcomplexCochain& c) {
    std::vector<Integer> out(data.chain_rank(degree), Integer(0));
    for (const auto& [simplex, coeff] : c.terms) out[data.face_index(degree, simplex)] = coeff;
    return out;
}

}  // namespace detail

// Verifies the representative is a cocycle and computes its coordinates in
// every Hochster summand.
inline CohomologyClass reduce_cocycle(const BigradedCohomology& h, const ZkCochain& rep) {
    const HochsterAnalysis& an = detail::require_analysis(h);
    const SimplicialComplex& k = an.complex();
    for (const auto& [cell, coeff] : rep.terms)
        if (!cell_in_zk(cell, k)) throw std::invalid_argument("cochain cell not in Z_K");
    if (!zk_coboundary(rep, k).is_zero())
        throw std::invalid_argument("representative is not a cocycle");
    CohomologyClass out;
    out.total_degree = rep.degree;
    out.representative = rep;
    for (const auto& [j, comp] : h_decompose(rep)) {
        const ComplexAnalysis& a = an.at(j);
        if (comp.degree < -1 || comp.degree > a.dim()) {
            if (!comp.is_zero())
                throw internal_error("cocycle component outside chain range of K_J");
            continue;
        }
        const HomologyBasis& basis = a.cohomology(comp.degree);
        if (basis.generator_count() == 0) continue;
        std::vector<Integer> v = detail::cochain_vector(a.chain_data(), comp.degree, comp);
        std::vector<Integer> coords = basis.coords(v);
        bool nonzero = false;
        for (const Integer& c : coords) nonzero = nonzero || c != 0;
        if (nonzero) out.coordinates[{j, comp.degree}] = std::move(coords);
    }
    return out;
}

inline HomologyClass reduce_cycle(const BigradedCohomology& h, const ZkChain& rep) {
    const HochsterAnalysis& an = detail::require_analysis(h);
    const SimplicialComplex& k = an.complex();
    if (!zk_boundary(rep, k).is_zero()) throw std::invalid_argument("representative is not a cycle");
    HomologyClass out;
    out.total_degree = rep.degree;
    out.representative = rep;
    for (const auto& [j, comp] : h_decompose(rep)) {
        const ComplexAnalysis& a = an.at(j);
        if (comp.degree < -1 || comp.degree > a.dim()) {
            if (!comp.is_zero()) throw internal_error("cycle component outside chain range of K_J");
            continue;
        }
        const HomologyBasis& basis = a.homology(comp.degree);
        if (basis.generator_count() == 0) continue;
        std::vector<Integer> v(a.chain_data().chain_rank(comp.degree), Integer(0));
        for (const auto& [simplex, coeff] : comp.terms)
            v[a.chain_data().face_index(comp.degree, simplex)] = coeff;
        std::vector<Integer> coords = basis.coords(v);
        bool nonzero = false;
        for (const Integer& c : coords) nonzero = nonzero || c != 0;
        if (nonzero) out.coordinates[{j, comp.degree}] = std::move(coords);
    }
    return out;
}

// The unit of H^*(Z_K): the class of κ(∅,∅)*, i.e. the J = ∅ summand.
inline CohomologyClass unit_class(const BigradedCohomology& h) {
    ZkCochain one;
    one.degree = 0;
    one.add(Cell{0, 0}, 1);
    return reduce_cocycle(h, one);
}

// The class of the g-th generator of the summand (J, l).
inline CohomologyClass summand_class(const BigradedCohomology& h, VertexSet j, int l, int g = 0) {
    const HochsterSummand* s = h.find(j, l);
    if (!s || g >= int(s->generators.size()))
        throw std::invalid_argument("no such Hochster summand generator");
    const HochsterAnalysis& an = detail::require_analysis(h);
    return reduce_cocycle(h, h_transport_cochain(j, s->generators[g], an.complex()));
}

// Cup product on classes: representatives multiply summand-wise through the
// Baskakov product, then reduce.
inline CohomologyClass cup_on_classes(const CohomologyClass& a, const CohomologyClass& b,
                                      const BigradedCohomology& h) {
    const HochsterAnalysis& an = detail::require_analysis(h);
    const SimplicialComplex& k = an.complex();
    ZkCochain product;
    product.degree = a.total_degree + b.total_degree;
    for (const auto& [i, phi] : h_decompose(a.representative))
        for (const auto& [j, psi] : h_decompose(b.representative)) {
            if (!vs::disjoint(i, j)) continue;
            SubcomplexCochain piece = baskakov_cup(phi, psi, k);
            ZkCochain lifted = h_transport_cochain(piece.subset, piece, k);
            product = combination_sum(product, lifted);
        }
    product.degree = a.total_degree + b.total_degree;
    return reduce_cocycle(h, product);
}

// Cap product on classes; the result is reduced through the homology side
// of the decomposition.
inline HomologyClass cap_on_classes(const HomologyClass& x, const CohomologyClass& a,
                                    const BigradedCohomology& h) {
    const HochsterAnalysis& an = detail::require_analysis(h);
    const SimplicialComplex& k = an.complex();
    if (a.total_degree > x.total_degree) throw std::invalid_argument("cap degree mismatch");
    ZkChain capped = cellular_cap(x.representative, a.representative, k);
    capped.degree = x.total_degree - a.total_degree;
    return reduce_cycle(h, capped);
}

}  // namespace momangle
