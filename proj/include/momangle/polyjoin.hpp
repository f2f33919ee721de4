// Polyhedral join products and composition complexes, the Ayzenberg
// sphere-classification predicate for compositions, and desk-scale
// simplicial isomorphism testing.
#pragma once

#include <numeric>

#include "momangle/duality.hpp"

namespace momangle {

struct SimplicialPair {
    SimplicialComplex big;    // K_i
    SimplicialComplex small;  // L_i ⊆ K_i (may be VOID)

    SimplicialPair(SimplicialComplex b, SimplicialComplex s)
        : big(std::move(b)), small(std::move(s)) {
        if (big.vertex_count() != small.vertex_count())
            throw std::invalid_argument("pair members live on different vertex sets");
        for (VertexSet f : small.faces())
            if (!big.contains(f))
                throw std::invalid_argument("pair containment violated: L is not a subcomplex of K");
    }
};

struct JoinSpec {
    SimplicialComplex base;           // K on [m]
    std::vector<SimplicialPair> pairs;  // one pair per base vertex

    JoinSpec(SimplicialComplex b, std::vector<SimplicialPair> p)
        : base(std::move(b)), pairs(std::move(p)) {
        if (int(pairs.size()) != base.vertex_count())
            throw std::invalid_argument("polyhedral join needs exactly one pair per base vertex");
    }

    int total_vertices() const {
        int total = 0;
        for (const auto& p : pairs) total += p.big.vertex_count();
        return total;
    }

    // Vertex offset of block i (0-based pair index).
    int offset(int i) const {
        int off = 0;
        for (int j = 0; j < i; ++j) off += pairs[j].big.vertex_count();
        return off;
    }
};

// The polyhedral join (K_i, L_i)^{*K}: vertices are the disjoint union of
// the pair vertex sets, in pair order; a face F = ⊔ τ_i is included iff
// every τ_i ∈ K_i and {i : τ_i ∉ L_i} is a face of the base.  (This is the
// membership characterization; the union-of-joins definition is used as an
// independent oracle in the tests.)
inline SimplicialComplex polyhedral_join(const JoinSpec& spec) {
    int total = spec.total_vertices();
    if (total > kMaxVertices) throw budget_error("polyhedral join exceeds 32 vertices");
    const int m = spec.base.vertex_count();
    if (spec.base.is_void()) return SimplicialComplex::void_complex(total);

    std::vector<VertexSet> faces;
    std::vector<VertexSet> partial;  // face masks accumulated block by block

    // Depth-first over blocks; prune when the support-so-far is not a base
    // face (supports only grow as blocks are added).
    struct Frame {
        VertexSet mask;
        VertexSet support;
    };
    std::vector<Frame> frontier = {{0u, 0u}};
    for (int i = 0; i < m; ++i) {
        const SimplicialPair& pair = spec.pairs[i];
        int off = spec.offset(i);
        std::vector<Frame> next;
        for (const Frame& f : frontier) {
            for (VertexSet tau : pair.big.faces()) {
                VertexSet support = f.support;
                if (!pair.small.contains(tau)) support |= vs::single(i + 1);
                if (!spec.base.contains(support)) continue;
                next.push_back({f.mask | (tau << off), support});
            }
        }
        frontier = std::move(next);
    }
    for (const Frame& f : frontier) faces.push_back(f.mask);
    if (faces.empty()) return SimplicialComplex::void_complex(total);
    return SimplicialComplex::from_faces(total, std::move(faces));
}

// Composition complex K(K_1,...,K_m): every big side is the full simplex on
// the factor's vertex set.
inline SimplicialComplex composition_complex(const SimplicialComplex& base,
                                             const std::vector<SimplicialComplex>& factors) {
    std::vector<SimplicialPair> pairs;
    pairs.reserve(factors.size());
    for (const SimplicialComplex& f : factors) {
        int li = f.vertex_count();
        if (li < 1) throw std::invalid_argument("composition factors need at least one vertex");
        pairs.emplace_back(SimplicialComplex::from_facets(li, {vs::full(li)}), f);
    }
    return polyhedral_join(JoinSpec(base, std::move(pairs)));
}

inline bool is_boundary_of_simplex(const SimplicialComplex& k) {
    // ∂Δ^{l-1} on l vertices: all proper subsets of [l].  For l = 1 this is
    // {∅} on a single ghost vertex.
    int l = k.vertex_count();
    if (k.is_void()) return false;
    return k.face_count() == (std::size_t(1) << l) - 1 && !k.contains(vs::full(l));
}

// Ayzenberg's classification: the composition complex is a generalized
// homology sphere iff the base is one, every non-ghost base vertex carries
// a boundary of a simplex, and every ghost base vertex carries a GHS.
inline bool ayzenberg_predicate(const SimplicialComplex& base,
                                const std::vector<SimplicialComplex>& factors) {
    if (int(factors.size()) != base.vertex_count())
        throw std::invalid_argument("one factor per base vertex required");
    if (base.is_void()) return false;
    if (!ghs_check(base).passed()) return false;
    for (int i = 1; i <= base.vertex_count(); ++i) {
        const SimplicialComplex& f = factors[i - 1];
        if (f.is_void()) return false;
        if (base.has_vertex(i)) {
            if (!is_boundary_of_simplex(f)) return false;
        } else {
            if (!ghs_check(f).passed()) return false;
        }
    }
    return true;
}

namespace detail {

// Per-vertex refinement key: how many faces of each cardinality contain it.
// Trailing zeros are trimmed so profiles compare across ambient vertex
// counts.
inline std::vector<int> vertex_profile(const SimplicialComplex& k, int v) {
    std::vector<int> profile(k.vertex_count() + 2, 0);
    for (VertexSet f : k.faces())
        if (vs::contains(f, v)) ++profile[vs::count(f)];
    while (!profile.empty() && profile.back() == 0) profile.pop_back();
    return profile;
}

struct IsoSearch {
    const std::vector<VertexSet>& a_faces;
    const SimplicialComplex& b;
    const std::vector<int>& a_verts;
    const std::vector<std::vector<int>>& b_candidates;
    std::vector<int> mapping;     // a vertex index -> b vertex (0 = unset)
    std::vector<bool> used;       // b vertices already taken
    long long budget = 2'000'000;

    bool extend(std::size_t idx) {
        if (--budget < 0) throw budget_error("isomorphism search budget exceeded");
        if (idx == a_verts.size()) return true;
        int av = a_verts[idx];
        for (int bv : b_candidates[idx]) {
            if (used[bv]) continue;
            mapping[av] = bv;
            used[bv] = true;
            if (consistent(idx) && extend(idx + 1)) return true;
            used[bv] = false;
            mapping[av] = 0;
        }
        return false;
    }

    // Every face of A supported on the mapped vertices must map to a face
    // of B (cardinalities match, so checking one direction at full depth
    // plus equal face counts gives a bijection).
    bool consistent(std::size_t depth) const {
        VertexSet mapped = 0;
        for (std::size_t i = 0; i <= depth; ++i) mapped |= vs::single(a_verts[i]);
        for (VertexSet f : a_faces) {
            if (!vs::subset(f, mapped)) continue;
            VertexSet image = 0;
            for (int v : vs::elements(f)) image |= vs::single(mapping[v]);
            if (!b.contains(image)) return false;
        }
        return true;
    }
};

}  // namespace detail

// Simplicial isomorphism on the non-ghost vertices, by backtracking with
// degree-profile pruning.
inline bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) throw std::invalid_argument("isomorphism of VOID complexes");
    if (a.face_count() != b.face_count()) return false;

    std::vector<int> a_verts = vs::elements(a.real_vertices());
    std::vector<int> b_verts = vs::elements(b.real_vertices());
    if (a_verts.size() != b_verts.size()) return false;
    if (a_verts.size() > 12) throw budget_error("isomorphism search capped at 12 real vertices");

    // f-vectors must agree.
    std::map<int, int> fa, fb;
    for (VertexSet f : a.faces()) ++fa[vs::count(f)];
    for (VertexSet f : b.faces()) ++fb[vs::count(f)];
    if (fa != fb) return false;

    std::vector<std::vector<int>> profiles_b;
    for (int v : b_verts) profiles_b.push_back(detail::vertex_profile(b, v));

    std::vector<std::vector<int>> candidates;
    for (int av : a_verts) {
        std::vector<int> row;
        std::vector<int> pa = detail::vertex_profile(a, av);
        for (std::size_t i = 0; i < b_verts.size(); ++i)
            if (profiles_b[i] == pa) row.push_back(b_verts[i]);
        if (row.empty()) return false;
        candidates.push_back(std::move(row));
    }

    detail::IsoSearch search{a.faces(), b, a_verts, candidates,
                             std::vector<int>(a.vertex_count() + 1, 0),
                             std::vector<bool>(b.vertex_count() + 1, false)};
    return search.extend(0);
}

}  // namespace momangle
