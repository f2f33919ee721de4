// Decision procedures for the duality triangle: combinatorial Alexander
// duality of K, generalized-homology-sphere detection via links, Poincaré
// duality certification of Z_K through an explicit fundamental class and
// cap products, and Gorenstein duality of the Stanley-Reisner ring via
// Stanley's core criterion.  The checkers are mutually independent and act
// as oracles for one another.
#pragma once

#include <optional>
#include <string>

#include "momangle/products.hpp"

namespace momangle {

enum class Verdict { kPass, kFail, kInapplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kPass: return "pass";
        case Verdict::kFail: return "fail";
        default: return "inapplicable";
    }
}

// One failed comparison H̃^l(K_J) vs H̃_{d-l-1}(K_{[m]\J}).
struct AlexanderWitness {
    VertexSet subset = 0;
    int degree = 0;
    AbelianGroup lhs, rhs;
};

// A face whose link does not have the homology of the expected sphere (the
// empty face records a failure of the global sphere-homology condition).
struct LinkWitness {
    VertexSet face = 0;
    int expected_dimension = 0;
    GradedGroups observed;
};

struct DualityReport {
    std::string check;
    Verdict verdict = Verdict::kFail;
    std::optional<int> dimension;  // the d / n parameter of the check
    std::vector<AlexanderWitness> alexander_witnesses;
    std::vector<LinkWitness> link_witnesses;
    std::string note;

    // Gorenstein extras.
    std::optional<SimplicialComplex> core_complex;
    std::vector<VertexSet> ideal_generators;

    bool passed() const { return verdict == Verdict::kPass; }
};

namespace detail {

inline void require_not_void(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("check requires a non-VOID complex");
}

inline DualityReport alexander_check_impl(const HochsterAnalysis& an, int d) {
    const int m = an.m();
    DualityReport report;
    report.check = "alexander";
    report.dimension = d;
    for (VertexSet j = 0;; ++j) {
        const ComplexAnalysis& sub = an.at(j);
        const ComplexAnalysis& comp = an.at(vs::full(m) & ~j);
        for (int l = -1; l <= m; ++l) {
            AbelianGroup lhs = sub.cohomology_group(l);
            AbelianGroup rhs = comp.homology_group(d - l - 1);
            if (!groups_isomorphic(lhs, rhs))
                report.alexander_witnesses.push_back({j, l, lhs, rhs});
        }
        if (j == vs::full(m)) break;
    }
    report.verdict = report.alexander_witnesses.empty() ? Verdict::kPass : Verdict::kFail;
    return report;
}

}  // namespace detail

// d-dimensional combinatorial Alexander duality:
// H̃^l(K_J) ≅ H̃_{d-l-1}(K_{[m]\J}) for every J ⊆ [m] and every l.
// Streams over subsets, holding only the group tables.
inline DualityReport alexander_duality_check(const SimplicialComplex& k, int d,
                                             int cap = kDefaultSubsetCap) {
    detail::require_not_void(k);
    if (d < -1) throw std::invalid_argument("duality dimension below -1");
    if (k.vertex_count() > cap)
        throw budget_error("vertex count " + std::to_string(k.vertex_count()) + " exceeds cap " +
                           std::to_string(cap));
    const int m = k.vertex_count();
    std::vector<GradedGroups> co(std::size_t(1) << m), ho(std::size_t(1) << m);
    for (VertexSet j = 0;; ++j) {
        ChainComplexData data = reduced_chain_complex(full_subcomplex(k, j));
        co[j] = cohomology_groups_fast(data);
        ho[j] = homology_groups_fast(data);
        if (j == vs::full(m)) break;
    }
    DualityReport report;
    report.check = "alexander";
    report.dimension = d;
    for (VertexSet j = 0;; ++j) {
        const GradedGroups& lhs_table = co[j];
        const GradedGroups& rhs_table = ho[vs::full(m) & ~j];
        for (int l = -1; l <= m; ++l) {
            AbelianGroup lhs = lhs_table.at(l);
            AbelianGroup rhs = rhs_table.at(d - l - 1);
            if (!groups_isomorphic(lhs, rhs))
                report.alexander_witnesses.push_back({j, l, lhs, rhs});
        }
        if (j == vs::full(m)) break;
    }
    report.verdict = report.alexander_witnesses.empty() ? Verdict::kPass : Verdict::kFail;
    return report;
}

// Generalized homology sphere of dimension n = dim K: global homology of
// S^n plus the standard link criterion (every nonempty face σ has a link
// with the homology of S^{n-|σ|}).  {∅} counts as the (-1)-sphere.
inline DualityReport ghs_check(const SimplicialComplex& k) {
    detail::require_not_void(k);
    DualityReport report;
    report.check = "ghs";
    int n = k.dimension();
    report.dimension = n;
    if (n == -1) {
        report.verdict = Verdict::kPass;  // K = {∅} is S^{-1} by convention
        return report;
    }
    GradedGroups global = reduced_homology(k);
    bool global_ok = true;
    for (const auto& [deg, g] : global.nonzero())
        if (deg != n) global_ok = false;
    if (!global.at(n).is_infinite_cyclic()) global_ok = false;
    if (!global_ok) report.link_witnesses.push_back({0, n, global});

    for (VertexSet f : k.faces()) {
        if (f == 0) continue;
        int expected = n - vs::count(f);
        GradedGroups h = reduced_homology(link(k, f));
        if (expected < -1 || !is_sphere_homology(h, expected))
            report.link_witnesses.push_back({f, expected, h});
    }
    report.verdict = report.link_witnesses.empty() ? Verdict::kPass : Verdict::kFail;
    return report;
}

// The fundamental class of Z_K as a cellular cycle.  Requires the top
// nonzero homology of Z_K to be infinite cyclic and carried by the J = [m]
// Hochster summand, which is exactly the condition for a representative of
// the form Σ aᵢ κ([m]\σᵢ, σᵢ) to exist.
struct FundamentalClassResult {
    bool found = false;
    int degree = 0;  // n + m when found
    ZkChain chain;
    std::string failure;
};

inline FundamentalClassResult fundamental_class_core(const GradedGroups& total_homology,
                                                     const ComplexAnalysis& full,
                                                     const SimplicialComplex& k) {
    FundamentalClassResult out;
    const int m = k.vertex_count();
    if (total_homology.empty()) {
        out.failure = "Z_K has no homology at all";
        return out;
    }
    int top = total_homology.max_degree();
    out.degree = top;
    if (!total_homology.at(top).is_infinite_cyclic()) {
        out.failure = "top homology " + total_homology.at(top).to_string() + " in degree " +
                      std::to_string(top) + " is not infinite cyclic";
        return out;
    }
    int n = top - m;  // summand degree n - 1 = top - m - 1
    if (!full.homology_group(n - 1).is_infinite_cyclic()) {
        out.failure = "top class is not carried by the full-support summand";
        return out;
    }
    std::vector<Integer> gen = full.homology(n - 1).generator(0);
    SubcomplexChain z;
    z.subset = vs::full(m);
    z.degree = n - 1;
    const auto& basis = full.chain_data().bases[n];
    for (std::size_t i = 0; i < basis.size(); ++i) z.add(basis[i], gen[i]);
    out.chain = h_transport(vs::full(m), z, k);
    out.found = true;
    return out;
}

inline FundamentalClassResult fundamental_class_impl(const HochsterAnalysis& an) {
    return fundamental_class_core(an.total_homology(), an.at(vs::full(an.m())), an.complex());
}

// Standalone extraction; streams the subset totalization so only the full
// complex needs a retained analysis.
inline ZkChain fundamental_class(const SimplicialComplex& k, int cap = kDefaultSubsetCap) {
    detail::require_not_void(k);
    GradedGroups total = zk_homology_via_hochster(k, cap);
    ComplexAnalysis full(k);
    FundamentalClassResult r = fundamental_class_core(total, full, k);
    if (!r.found) throw std::invalid_argument("no fundamental class: " + r.failure);
    return r.chain;
}

// Per-degree verdict of the cap-with-μ map H^l(Z_K) -> H_{top-l}(Z_K).
struct CapDegreeVerdict {
    int degree = 0;
    bool isomorphism = false;
    AbelianGroup cohomology, homology_target;
};

// Where the image of a Hochster summand landed under Φ = h⁻¹∘(μ⌢-)∘h.
struct SummandImage {
    VertexSet subset = 0;        // J of the source summand H̃^l(K_J)
    int reduced_degree = 0;      // l
    bool contained = true;       // image lies in the [m]\J homology summand
};

struct PDCertificate {
    bool hypothesis_met = false;  // K has non-trivial reduced cohomology
    Verdict verdict = Verdict::kFail;
    int top_degree = 0;  // n + m when a fundamental class exists
    std::optional<ZkChain> fundamental;
    std::vector<CapDegreeVerdict> degrees;
    std::vector<SummandImage> summand_table;
    std::string failure_reason;

    bool passed() const { return verdict == Verdict::kPass; }
};

inline PDCertificate pd_certify_impl(const HochsterAnalysis& an, int cap) {
    const SimplicialComplex& k = an.complex();
    PDCertificate cert;
    const int m = an.m();

    // Theorem hypothesis: K itself must have non-trivial reduced cohomology.
    cert.hypothesis_met = !an.at(vs::full(m)).cohomology_groups().empty();
    if (!cert.hypothesis_met) {
        cert.verdict = Verdict::kInapplicable;
        cert.failure_reason = "trivial reduced cohomology";
        return cert;
    }

    FundamentalClassResult fc = fundamental_class_impl(an);
    cert.top_degree = fc.degree;
    if (!fc.found) {
        cert.verdict = Verdict::kFail;
        cert.failure_reason = "no fundamental class: " + fc.failure;
        return cert;
    }
    cert.fundamental = fc.chain;

    ZkCellComplex zk(k, cap);
    const int top = fc.degree;
    if (!zk.homology(top).group.is_infinite_cyclic())
        throw internal_error("direct cellular homology disagrees with Hochster at the top degree");
    {
        std::vector<Integer> coords = zk.homology(top).coords(zk.chain_vector(fc.chain));
        if (coords.size() != 1 || (coords[0] != 1 && coords[0] != -1))
            throw internal_error("Hochster fundamental class does not generate direct H_top");
    }

    // Cap with μ in every degree, on the honest cellular complex.
    bool all_iso = true;
    for (int l = 0; l <= top; ++l) {
        const HomologyBasis& src = zk.cohomology(l);
        const HomologyBasis& tgt = zk.homology(top - l);
        const auto& cells_l = zk.cells(l);
        IntegerMatrix cap_matrix(tgt.ambient_dim, src.ambient_dim);
        for (std::size_t c = 0; c < cells_l.size(); ++c) {
            ZkCochain dual;
            dual.degree = l;
            dual.add(cells_l[c], 1);
            ZkChain image = cellular_cap(fc.chain, dual, k);
            std::vector<Integer> v = zk.chain_vector(image);
            for (int r = 0; r < tgt.ambient_dim; ++r) cap_matrix.at(r, int(c)) = v[r];
        }
        bool iso = induced_map_is_isomorphism(cap_matrix, src, tgt);
        cert.degrees.push_back({l, iso, src.group, tgt.group});
        all_iso = all_iso && iso;
    }

    // Summand refinement: Φ(H̃^l(K_J)) ⊆ H̃_{n-l-2}(K_{[m]\J}).
    bool refinement_ok = true;
    for (VertexSet j = 0;; ++j) {
        const ComplexAnalysis& sub = an.at(j);
        for (int l = -1; l <= sub.dim(); ++l) {
            const HomologyBasis& basis = sub.cohomology(l);
            if (basis.group.is_zero()) continue;
            bool contained = true;
            for (int g = 0; g < basis.generator_count(); ++g) {
                SubcomplexCochain phi =
                    detail::cochain_from_vector(sub.chain_data(), j, l, basis.generator(g));
                ZkChain image = cellular_cap(fc.chain, h_transport_cochain(j, phi, k), k);
                for (const auto& [target, comp] : h_decompose(image)) {
                    if (target == (vs::full(m) & ~j)) continue;
                    const ComplexAnalysis& ta = an.at(target);
                    if (comp.degree < -1 || comp.degree > ta.dim()) {
                        if (!comp.is_zero()) contained = false;
                        continue;
                    }
                    std::vector<Integer> v(ta.chain_data().chain_rank(comp.degree), Integer(0));
                    for (const auto& [simplex, coeff] : comp.terms)
                        v[ta.chain_data().face_index(comp.degree, simplex)] = coeff;
                    if (!ta.homology(comp.degree).is_zero_class(v)) contained = false;
                }
            }
            cert.summand_table.push_back({j, l, contained});
            refinement_ok = refinement_ok && contained;
        }
        if (j == vs::full(m)) break;
    }

    if (all_iso && refinement_ok) {
        cert.verdict = Verdict::kPass;
    } else {
        cert.verdict = Verdict::kFail;
        cert.failure_reason = all_iso ? "summand refinement violated" : "cap map not an isomorphism";
    }
    return cert;
}

// Certifies Poincaré duality of Z_K: extracts the fundamental class μ,
// verifies on the full cellular chain complex that capping with μ induces
// an isomorphism H^l -> H_{top-l} in every degree, and checks that the
// image of each Hochster summand H̃^l(K_J) lies in H̃_{n-l-2}(K_{[m]\J}).
inline PDCertificate pd_certify(const SimplicialComplex& k, int cap = kDefaultCellCap) {
    detail::require_not_void(k);
    HochsterAnalysis an(k, cap);
    return pd_certify_impl(an, cap);
}

// Gorenstein duality of Z[K] via Stanley's criterion: the core of K must be
// a generalized homology sphere ({∅} passes as S^{-1}).
inline DualityReport gorenstein_check(const SimplicialComplex& k) {
    detail::require_not_void(k);
    SimplicialComplex c = core(k);
    DualityReport report = ghs_check(c);
    report.check = "gorenstein";
    report.core_complex = c;
    report.ideal_generators = minimal_non_faces(k);
    if (report.passed()) report.note = "core is a GHS of dimension " + std::to_string(c.dimension());
    return report;
}

// The composite classification: all duality checks plus their mutual
// consistency.  For K with non-trivial reduced cohomology the verdicts of
// the Alexander, GHS, PD and Gorenstein checks must coincide; disagreement
// would falsify the implementation and raises internal_error.
struct ClassifyResult {
    bool hypothesis_met = false;
    DualityReport alexander_at_dim;       // d = dim K
    std::optional<DualityReport> alexander_at_inferred;
    DualityReport ghs;
    PDCertificate pd;
    DualityReport gorenstein;
    std::string note;

    bool all_pass() const {
        return alexander_at_dim.passed() && ghs.passed() && pd.passed() && gorenstein.passed();
    }
};

inline ClassifyResult classify(const SimplicialComplex& k, int cap = kDefaultCellCap) {
    detail::require_not_void(k);
    ClassifyResult out;
    HochsterAnalysis an(k, cap);
    const int m = an.m();

    out.hypothesis_met = !an.at(vs::full(m)).cohomology_groups().empty();
    out.alexander_at_dim = detail::alexander_check_impl(an, k.dimension());
    out.ghs = ghs_check(k);
    out.gorenstein = gorenstein_check(k);
    out.pd = pd_certify_impl(an, cap);

    GradedGroups total = an.total_homology();
    int inferred = total.max_degree() - m - 1;
    if (inferred >= -1 && inferred != k.dimension())
        out.alexander_at_inferred = detail::alexander_check_impl(an, inferred);

    if (!out.hypothesis_met) {
        out.note = "hypothesis not met: K has trivial reduced cohomology; "
                   "Poincaré duality equivalence does not apply";
        return out;
    }

    bool expectation = out.ghs.passed();
    bool consistent = out.alexander_at_dim.passed() == expectation &&
                      out.pd.passed() == expectation && out.gorenstein.passed() == expectation;
    if (out.alexander_at_inferred)
        consistent = consistent && out.alexander_at_inferred->passed() == expectation;
    if (!consistent)
        throw internal_error("duality checkers disagree on " +
                             std::string(expectation ? "a passing" : "a failing") + " complex");
    return out;
}

}  // namespace momangle
