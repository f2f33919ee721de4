// Simplicial complexes on {1,...,m} stored as fully enumerated bitmask face
// families.  Ghost vertices (i with {i} not a face) are first class, and the
// VOID complex (no faces at all, not even the empty set) is distinct from
// {∅}.
#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "momangle/bits.hpp"
#include "momangle/errors.hpp"

namespace momangle {

class SimplicialComplex {
public:
    // dimension() of the VOID complex.
    static constexpr int kVoidDimension = INT_MIN;

    SimplicialComplex() : m_(0) {}

    static SimplicialComplex void_complex(int m) {
        check_vertex_count(m);
        SimplicialComplex k;
        k.m_ = m;
        return k;
    }

    // {∅} on m (possibly ghost) vertices.
    static SimplicialComplex empty_complex(int m) {
        check_vertex_count(m);
        SimplicialComplex k;
        k.m_ = m;
        k.faces_ = {VertexSet{0}};
        return k;
    }

    // Downward closure of the given facets.  With no facets the result is
    // {∅} when include_empty is set and VOID otherwise.
    static SimplicialComplex from_facets(int m, const std::vector<VertexSet>& facets,
                                         bool include_empty = false) {
        check_vertex_count(m);
        if (facets.empty())
            return include_empty ? empty_complex(m) : void_complex(m);
        std::vector<VertexSet> faces;
        for (VertexSet f : facets) {
            if (!vs::subset(f, vs::full(m)))
                throw std::invalid_argument("facet vertex out of range 1.." + std::to_string(m));
            for (VertexSet sub = f;; sub = (sub - 1) & f) {
                faces.push_back(sub);
                if (sub == 0) break;
            }
        }
        return from_face_list(m, std::move(faces));
    }

    // Builds from an arbitrary list of faces (deduplicated); the family must
    // be downward closed.
    static SimplicialComplex from_faces(int m, std::vector<VertexSet> faces) {
        check_vertex_count(m);
        SimplicialComplex k = from_face_list(m, std::move(faces));
        k.check_closed();
        return k;
    }

    int vertex_count() const { return m_; }

    bool is_void() const { return faces_.empty(); }

    // Faces in canonical order: by cardinality, then lexicographic on the
    // sorted vertex tuple.
    const std::vector<VertexSet>& faces() const { return faces_; }

    std::size_t face_count() const { return faces_.size(); }

    bool contains(VertexSet f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f, vs::face_less);
    }

    bool has_vertex(int v) const { return contains(vs::single(v)); }

    bool is_ghost(int v) const { return v >= 1 && v <= m_ && !has_vertex(v); }

    // Vertices that are actual faces.
    VertexSet real_vertices() const {
        VertexSet out = 0;
        for (int v = 1; v <= m_; ++v)
            if (has_vertex(v)) out |= vs::single(v);
        return out;
    }

    // Max |σ|-1; -1 for {∅}; kVoidDimension for VOID.
    int dimension() const {
        if (is_void()) return kVoidDimension;
        return vs::count(faces_.back()) - 1;
    }

    // Faces of cardinality k+1, as a contiguous view into faces().
    std::vector<VertexSet> faces_of_dimension(int k) const {
        std::vector<VertexSet> out;
        for (VertexSet f : faces_)
            if (vs::count(f) == k + 1) out.push_back(f);
        return out;
    }

    // Inclusion-maximal faces.
    std::vector<VertexSet> facets() const {
        std::vector<VertexSet> out;
        for (VertexSet f : faces_) {
            bool maximal = true;
            for (VertexSet g : faces_) {
                if (g != f && vs::subset(f, g)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) out.push_back(f);
        }
        return out;
    }

    // All faces have the same cardinality as the largest.
    bool is_pure() const {
        if (is_void()) return true;
        int d = dimension();
        for (VertexSet f : facets())
            if (vs::count(f) != d + 1) return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.m_ == b.m_ && a.faces_ == b.faces_;
    }

private:
    static void check_vertex_count(int m) {
        if (m < 0 || m > kMaxVertices)
            throw std::invalid_argument("vertex count must lie in 0..32");
    }

    static SimplicialComplex from_face_list(int m, std::vector<VertexSet> faces) {
        for (VertexSet f : faces)
            if (!vs::subset(f, vs::full(m)))
                throw std::invalid_argument("face vertex out of range 1.." + std::to_string(m));
        std::sort(faces.begin(), faces.end(), vs::face_less);
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
        SimplicialComplex k;
        k.m_ = m;
        k.faces_ = std::move(faces);
        return k;
    }

    void check_closed() const {
        for (VertexSet f : faces_) {
            VertexSet rest = f;
            while (rest) {
                VertexSet low = rest & (~rest + 1);
                if (!contains(f ^ low))
                    throw std::invalid_argument("face family is not downward closed");
                rest ^= low;
            }
        }
        if (!faces_.empty() && faces_.front() != 0)
            throw std::invalid_argument("nonempty complex must contain the empty face");
    }

    int m_ = 0;
    std::vector<VertexSet> faces_;
};

// K_J = {σ ∈ K : σ ⊆ J}, on the same ambient vertex set.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, VertexSet j) {
    if (!vs::subset(j, vs::full(k.vertex_count())))
        throw std::invalid_argument("subset out of range");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (vs::subset(f, j)) faces.push_back(f);
    SimplicialComplex out = faces.empty() ? SimplicialComplex::void_complex(k.vertex_count())
                                          : SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
    return out;
}

// link_K(σ) = {τ : τ∩σ = ∅, τ∪σ ∈ K}.
inline SimplicialComplex link(const SimplicialComplex& k, VertexSet sigma) {
    if (!k.contains(sigma)) throw std::invalid_argument("link of a non-face");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (vs::disjoint(f, sigma) && k.contains(f | sigma)) faces.push_back(f);
    return SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
}

// Closed star: {σ ∈ K : σ∪{v} ∈ K}.  VOID when v is a ghost vertex.
inline SimplicialComplex star(const SimplicialComplex& k, int v) {
    if (v < 1 || v > k.vertex_count()) throw std::invalid_argument("vertex out of range");
    std::vector<VertexSet> faces;
    for (VertexSet f : k.faces())
        if (k.contains(f | vs::single(v))) faces.push_back(f);
    if (faces.empty()) return SimplicialComplex::void_complex(k.vertex_count());
    return SimplicialComplex::from_faces(k.vertex_count(), std::move(faces));
}

// Join with the second factor relabeled onto m1+1 .. m1+m2.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    int m = a.vertex_count() + b.vertex_count();
    if (m > kMaxVertices) throw budget_error("join exceeds 32 vertices");
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(m);
    std::vector<VertexSet> faces;
    faces.reserve(a.face_count() * b.face_count());
    for (VertexSet f : a.faces())
        for (VertexSet g : b.faces())
            faces.push_back(f | (g << a.vertex_count()));
    return SimplicialComplex::from_faces(m, std::move(faces));
}

inline bool is_cone_vertex(const SimplicialComplex& k, int v) {
    // star(K,v) = K, i.e. σ∪{v} is a face for every face σ.
    for (VertexSet f : k.faces())
        if (!k.contains(f | vs::single(v))) return false;
    return true;
}

// Full subcomplex on the vertices whose star is not all of K.  Ghost
// vertices have VOID stars and therefore always stay.
inline SimplicialComplex core(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("core of the VOID complex");
    VertexSet keep = 0;
    for (int v = 1; v <= k.vertex_count(); ++v)
        if (!is_cone_vertex(k, v)) keep |= vs::single(v);
    return full_subcomplex(k, keep);
}

// All ⊆-minimal subsets of [m] that are not faces; these index the
// generators of the Stanley-Reisner ideal.
inline std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& k) {
    if (k.is_void()) throw std::invalid_argument("minimal non-faces of the VOID complex");
    int m = k.vertex_count();
    if (m > 24) throw budget_error("minimal non-face enumeration capped at m <= 24");
    std::vector<VertexSet> out;
    VertexSet all = vs::full(m);
    for (VertexSet s = 1; s <= all && s != 0; ++s) {
        if (k.contains(s)) continue;
        bool minimal = true;
        VertexSet rest = s;
        while (rest) {
            VertexSet low = rest & (~rest + 1);
            if (!k.contains(s ^ low)) {
                minimal = false;
                break;
            }
            rest ^= low;
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), vs::face_less);
    return out;
}

}  // namespace momangle
