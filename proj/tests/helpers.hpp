// Shared helpers for the test suites.
#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "momangle/simplicial_complex.hpp"

namespace testutil {

using momangle::SimplicialComplex;
using momangle::VertexSet;

inline VertexSet face(std::initializer_list<int> verts) {
    VertexSet out = 0;
    for (int v : verts) out |= momangle::vs::single(v);
    return out;
}

inline SimplicialComplex boundary_simplex(int m) {
    std::vector<VertexSet> facets;
    for (int v = 1; v <= m; ++v)
        facets.push_back(momangle::vs::full(m) & ~momangle::vs::single(v));
    return SimplicialComplex::from_facets(m, facets);
}

inline SimplicialComplex octahedron() {
    auto s0 = SimplicialComplex::from_facets(2, {1u, 2u});
    return momangle::join(momangle::join(s0, s0), s0);
}

inline SimplicialComplex pentagon() {
    return SimplicialComplex::from_facets(
        5, {face({1, 2}), face({2, 3}), face({3, 4}), face({4, 5}), face({5, 1})});
}

// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2_6() {
    return SimplicialComplex::from_facets(
        6, {face({1, 2, 3}), face({1, 3, 4}), face({1, 4, 5}), face({1, 5, 6}), face({1, 2, 6}),
            face({2, 3, 5}), face({3, 4, 6}), face({2, 4, 5}), face({3, 5, 6}), face({2, 4, 6})});
}

inline SimplicialComplex path3() {
    return SimplicialComplex::from_facets(3, {face({1, 2}), face({2, 3})});
}

inline SimplicialComplex three_points() {
    return SimplicialComplex::from_facets(3, {1u, 2u, 4u});
}

// Downward closure of a random facet family on m vertices.
inline SimplicialComplex random_complex(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> nf(1, m + 2);
    std::uniform_int_distribution<VertexSet> pick(1, momangle::vs::full(m));
    std::vector<VertexSet> facets;
    for (int i = 0, n = nf(rng); i < n; ++i) facets.push_back(pick(rng));
    return SimplicialComplex::from_facets(m, facets);
}

}  // namespace testutil
