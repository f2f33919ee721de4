// Exact integral chain-complex machinery: boundary matrices of reduced
// simplicial chain complexes, homology/cohomology via Smith normal form,
// bases with coordinate maps, and isomorphism verification for induced maps.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "momangle/abelian_group.hpp"
#include "momangle/errors.hpp"
#include "momangle/simplicial_complex.hpp"
#include "momangle/smith.hpp"

namespace momangle {

// Homology of ker(out) / im(in) at one degree, with cycle representatives
// and an exact coordinate map.  Works verbatim for cochain complexes.
struct HomologyBasis {
    AbelianGroup group;
    int ambient_dim = 0;

    // Columns are representatives of the generators: torsion generators
    // first (orders ascending), then free generators.  orders[i] is the
    // torsion order of generator i, or 0 if it generates a Z summand.
    IntegerMatrix generators;
    std::vector<Integer> orders;

    IntegerMatrix out_map;    // the boundary leaving this degree
    IntegerMatrix coord_map;  // (#generators) x ambient_dim, see coords()

    bool is_cycle(const std::vector<Integer>& chain) const {
        std::vector<Integer> img = out_map.apply(chain);
        for (const Integer& x : img)
            if (x != 0) return false;
        return true;
    }

    // Coordinates of a cycle's class with respect to the generators;
    // torsion coordinates are normalized into [0, order).
    std::vector<Integer> coords(const std::vector<Integer>& cycle) const {
        std::vector<Integer> w = coord_map.apply(cycle);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (orders[i] != 0) {
                w[i] %= orders[i];
                if (w[i] < 0) w[i] += orders[i];
            }
        return w;
    }

    bool is_zero_class(const std::vector<Integer>& cycle) const {
        for (const Integer& c : coords(cycle))
            if (c != 0) return false;
        return true;
    }

    std::vector<Integer> generator(int i) const { return generators.column(i); }

    int generator_count() const { return generators.cols(); }
};

// out: C -> C', in: C'' -> C with out∘in = 0.  dim = rank of C.
inline HomologyBasis homology_basis(const IntegerMatrix& out, const IntegerMatrix& in) {
    HomologyBasis basis;
    basis.ambient_dim = out.cols();
    basis.out_map = out;
    if (basis.ambient_dim == 0) {
        basis.generators = IntegerMatrix(0, 0);
        basis.coord_map = IntegerMatrix(0, 0);
        return basis;
    }

    SmithDecomposition snf_out = smith_normal_form(out);
    int dim_ker = basis.ambient_dim - snf_out.rank;

    // Kernel lattice basis: columns of V past the rank; kernel coordinates
    // of a cycle are the corresponding rows of V^{-1}.
    std::vector<int> ker_idx(dim_ker);
    for (int i = 0; i < dim_ker; ++i) ker_idx[i] = snf_out.rank + i;
    IntegerMatrix kernel_basis = snf_out.v.cols_subset(ker_idx);           // ambient x k
    IntegerMatrix kernel_from_ambient = snf_out.v_inv.rows_subset(ker_idx);  // k x ambient

    // Relations: boundaries from above, written in kernel coordinates.
    IntegerMatrix relations = kernel_from_ambient * in;  // k x dim_in
    SmithDecomposition snf_rel = smith_normal_form(relations);

    std::vector<int> selected;  // rows of U2 / columns of kernel_basis * U2^{-1}
    std::vector<Integer> orders;
    for (int i = 0; i < snf_rel.rank; ++i) {
        Integer e = snf_rel.d.at(i, i);
        if (e == 1) continue;
        selected.push_back(i);
        orders.push_back(e);
    }
    for (int i = snf_rel.rank; i < dim_ker; ++i) {
        selected.push_back(i);
        orders.push_back(0);
    }

    IntegerMatrix gens_full = kernel_basis * snf_rel.u_inv;  // ambient x k
    basis.generators = gens_full.cols_subset(selected);
    basis.coord_map = (snf_rel.u * kernel_from_ambient).rows_subset(selected);
    basis.orders = orders;

    int free_rank = dim_ker - snf_rel.rank;
    std::vector<Integer> torsion(orders.begin(),
                                 orders.begin() + (orders.size() - free_rank));
    basis.group = AbelianGroup(free_rank, torsion);
    return basis;
}

// Boundary matrices of the reduced simplicial chain complex, including the
// augmentation C_0 -> C_{-1} = <∅>.  Simplices are ordered canonically
// (by size, then lexicographic), which fixes every boundary sign.
struct ChainComplexData {
    SimplicialComplex complex;
    int dim = SimplicialComplex::kVoidDimension;

    // bases[k+1] lists the faces of dimension k, for k = -1 .. dim.
    std::vector<std::vector<VertexSet>> bases;
    std::vector<std::map<VertexSet, int>> index;

    // boundaries[k+1]: C_k -> C_{k-1}, defined for k = 0 .. dim.
    std::vector<IntegerMatrix> boundaries;

    int chain_rank(int k) const {
        if (k < -1 || k > dim) return 0;
        return int(bases[k + 1].size());
    }

    int face_index(int k, VertexSet f) const { return index[k + 1].at(f); }

    // Boundary leaving degree k (zero-sized when out of range).
    IntegerMatrix boundary_from(int k) const {
        if (k <= -1 || k > dim) return IntegerMatrix(chain_rank(k - 1), chain_rank(k));
        return boundaries[k + 1];
    }
};

inline ChainComplexData reduced_chain_complex(const SimplicialComplex& k) {
    ChainComplexData data;
    data.complex = k;
    if (k.is_void()) return data;
    data.dim = k.dimension();
    data.bases.assign(data.dim + 2, {});
    data.index.assign(data.dim + 2, {});
    for (VertexSet f : k.faces()) data.bases[vs::count(f)].push_back(f);
    for (int d = 0; d <= data.dim + 1; ++d)
        for (std::size_t i = 0; i < data.bases[d].size(); ++i)
            data.index[d][data.bases[d][i]] = int(i);

    data.boundaries.assign(data.dim + 2, IntegerMatrix());
    for (int deg = 0; deg <= data.dim; ++deg) {
        const auto& dom = data.bases[deg + 1];
        const auto& cod = data.bases[deg];
        IntegerMatrix b(int(cod.size()), int(dom.size()));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            VertexSet f = dom[c];
            int pos = 0;
            VertexSet rest = f;
            while (rest) {
                VertexSet low = rest & (~rest + 1);
                b.at(data.index[deg].at(f ^ low), int(c)) = vs::sign_pow(pos);
                rest ^= low;
                ++pos;
            }
        }
        data.boundaries[deg + 1] = std::move(b);
    }
    return data;
}

// Groups-only computation: rank H_k = c_k - rank ∂_k - rank ∂_{k+1} and the
// torsion of H_k is the part of the invariant factors of ∂_{k+1} exceeding
// one.  No transforms, no representatives.
inline GradedGroups homology_groups_fast(const ChainComplexData& data) {
    GradedGroups out;
    if (data.complex.is_void()) return out;
    std::vector<std::vector<Integer>> factors(data.dim + 3);
    for (int k = 0; k <= data.dim; ++k) factors[k + 1] = smith_invariant_factors(data.boundary_from(k));
    for (int k = -1; k <= data.dim; ++k) {
        const auto& below = factors[k + 2];  // factors of ∂_{k+1}
        int rank_out = k >= 0 ? int(factors[k + 1].size()) : 0;
        int rank_in = k < data.dim ? int(below.size()) : 0;
        int free_rank = data.chain_rank(k) - rank_out - rank_in;
        std::vector<Integer> torsion;
        for (const Integer& d : below)
            if (d > 1) torsion.push_back(d);
        out.set(k, AbelianGroup(free_rank, torsion));
    }
    return out;
}

// Cohomology by the same rank bookkeeping on the transposed complex: the
// torsion of H^k is carried by the invariant factors of ∂_k.
inline GradedGroups cohomology_groups_fast(const ChainComplexData& data) {
    GradedGroups out;
    if (data.complex.is_void()) return out;
    std::vector<std::vector<Integer>> factors(data.dim + 3);
    for (int k = 0; k <= data.dim; ++k) factors[k + 1] = smith_invariant_factors(data.boundary_from(k));
    for (int k = -1; k <= data.dim; ++k) {
        const auto& own = factors[k + 1];  // factors of ∂_k = factors of δ_{k-1}
        int rank_in = k >= 0 ? int(own.size()) : 0;
        int rank_out = k < data.dim ? int(factors[k + 2].size()) : 0;
        int free_rank = data.chain_rank(k) - rank_out - rank_in;
        std::vector<Integer> torsion;
        for (const Integer& d : own)
            if (d > 1) torsion.push_back(d);
        out.set(k, AbelianGroup(free_rank, torsion));
    }
    return out;
}

// Full homological analysis of one complex: bases in both directions.
class ComplexAnalysis {
public:
    explicit ComplexAnalysis(const SimplicialComplex& k) : data_(reduced_chain_complex(k)) {
        if (data_.complex.is_void()) return;
        int n = data_.dim;
        homology_.resize(n + 2);
        cohomology_.resize(n + 2);
        for (int deg = -1; deg <= n; ++deg) {
            homology_[deg + 1] =
                homology_basis(data_.boundary_from(deg), data_.boundary_from(deg + 1));
            cohomology_[deg + 1] = homology_basis(data_.boundary_from(deg + 1).transposed(),
                                                  data_.boundary_from(deg).transposed());
        }
    }

    const ChainComplexData& chain_data() const { return data_; }

    bool is_void() const { return data_.complex.is_void(); }
    int dim() const { return data_.dim; }

    const HomologyBasis& homology(int deg) const { return basis_at(homology_, deg); }
    const HomologyBasis& cohomology(int deg) const { return basis_at(cohomology_, deg); }

    AbelianGroup homology_group(int deg) const {
        if (is_void() || deg < -1 || deg > data_.dim) return AbelianGroup();
        return homology_[deg + 1].group;
    }

    AbelianGroup cohomology_group(int deg) const {
        if (is_void() || deg < -1 || deg > data_.dim) return AbelianGroup();
        return cohomology_[deg + 1].group;
    }

    GradedGroups homology_groups() const {
        GradedGroups out;
        for (int d = -1; !is_void() && d <= data_.dim; ++d) out.set(d, homology_group(d));
        return out;
    }

    GradedGroups cohomology_groups() const {
        GradedGroups out;
        for (int d = -1; !is_void() && d <= data_.dim; ++d) out.set(d, cohomology_group(d));
        return out;
    }

private:
    const HomologyBasis& basis_at(const std::vector<HomologyBasis>& v, int deg) const {
        static const HomologyBasis kEmpty{};
        if (is_void() || deg < -1 || deg > data_.dim) return kEmpty;
        return v[deg + 1];
    }

    ChainComplexData data_;
    std::vector<HomologyBasis> homology_;
    std::vector<HomologyBasis> cohomology_;
};

// Reduced integral homology; VOID has no groups at all, H̃_{-1}({∅}) = Z.
inline GradedGroups reduced_homology(const SimplicialComplex& k) {
    return homology_groups_fast(reduced_chain_complex(k));
}

inline GradedGroups reduced_cohomology(const SimplicialComplex& k) {
    return cohomology_groups_fast(reduced_chain_complex(k));
}

inline bool is_sphere_homology(const GradedGroups& h, int d) {
    for (const auto& [deg, g] : h.nonzero())
        if (deg != d) return false;
    return h.at(d).is_infinite_cyclic();
}

// H̃_d = Z and everything else zero.  For d = -1 this means K = {∅}.
inline bool has_sphere_homology(const SimplicialComplex& k, int d) {
    if (d < -1) throw std::invalid_argument("sphere dimension below -1");
    if (k.is_void()) return false;
    return is_sphere_homology(reduced_homology(k), d);
}

// Whether the chain-level map f (ambient source -> ambient target, mapping
// cycles to cycles) induces an isomorphism between the two presented
// homology groups.  Kernel and cokernel are both checked exactly.
inline bool induced_map_is_isomorphism(const IntegerMatrix& f, const HomologyBasis& source,
                                       const HomologyBasis& target) {
    int ns = source.generator_count();
    int nt = target.generator_count();

    // Images of the source generators, in target generator coordinates
    // (un-normalized integer lifts).
    IntegerMatrix m(nt, ns);
    for (int j = 0; j < ns; ++j) {
        std::vector<Integer> img = f.apply(source.generator(j));
        if (!target.is_cycle(img))
            throw std::invalid_argument("map does not send cycles to cycles");
        std::vector<Integer> w = target.coord_map.apply(img);
        for (int i = 0; i < nt; ++i) m.at(i, j) = w[i];
    }

    // Presentation of the target: relations d_i * e_i for torsion rows.
    std::vector<int> torsion_rows;
    for (int i = 0; i < nt; ++i)
        if (target.orders[i] != 0) torsion_rows.push_back(i);

    IntegerMatrix augmented(nt, ns + int(torsion_rows.size()));
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < ns; ++j) augmented.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < torsion_rows.size(); ++j)
        augmented.at(torsion_rows[j], ns + int(j)) = target.orders[torsion_rows[j]];

    // Surjective iff the augmented column lattice is all of Z^{nt}.
    SmithDecomposition snf = smith_normal_form(augmented);
    if (snf.rank != nt) return false;
    for (int i = 0; i < nt; ++i)
        if (snf.d.at(i, i) != 1) return false;

    // Injective iff every solution of  M x ∈ target-relations  is itself a
    // source relation: kernel vectors of [M | R] projected to x must have
    // torsion coordinates divisible by the source orders and zero free
    // coordinates.
    int total_cols = augmented.cols();
    std::vector<int> ker_idx;
    for (int i = snf.rank; i < total_cols; ++i) ker_idx.push_back(i);
    IntegerMatrix kernel = snf.v.cols_subset(ker_idx);
    for (int c = 0; c < kernel.cols(); ++c)
        for (int r = 0; r < ns; ++r) {
            const Integer& x = kernel.at(r, c);
            if (source.orders[r] == 0) {
                if (x != 0) return false;
            } else if (x % source.orders[r] != 0) {
                return false;
            }
        }
    return true;
}

}  // namespace momangle
