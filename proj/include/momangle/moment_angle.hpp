// The cellular model of the moment-angle complex Z_K: cells κ(J,I) with
// circle factors on J and disk factors on I, the degree-preserving chain
// isomorphism h from the direct sum of full-subcomplex chain complexes, the
// cellular chain complex of Z_K itself, and the bigraded (Hochster)
// decomposition of H^*(Z_K).
//
// Sign discipline: h(σ) = sgn(σ,J)·κ(J\σ,σ) where sgn is the shuffle sign of
// (σ, J\σ), and the cellular boundary is *defined* by conjugating the
// simplicial boundary with h.  In closed form:
//     ∂κ(A,B) = Σ_{v∈B} (-1)^{#{a∈A : a<v} + |B| - 1} κ(A∪v, B\v).
#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "momangle/homology.hpp"

namespace momangle {

constexpr int kDefaultSubsetCap = 16;  // 2^m subset enumerations
constexpr int kDefaultCellCap = 10;    // full cellular model of Z_K

// The cell κ(circles, disks); dimension |circles| + 2|disks|.
struct Cell {
    VertexSet circles = 0;
    VertexSet disks = 0;

    int dimension() const { return vs::count(circles) + 2 * vs::count(disks); }
    VertexSet support() const { return circles | disks; }

    friend bool operator==(const Cell& a, const Cell& b) {
        return a.circles == b.circles && a.disks == b.disks;
    }
    friend bool operator<(const Cell& a, const Cell& b) {
        if (a.circles != b.circles) return a.circles < b.circles;
        return a.disks < b.disks;
    }
};

inline bool cell_in_zk(const Cell& c, const SimplicialComplex& k) {
    return vs::disjoint(c.circles, c.disks) && vs::subset(c.support(), vs::full(k.vertex_count())) &&
           k.contains(c.disks);
}

inline std::string format_cell(const Cell& c) {
    return "k(" + vs::format(c.circles) + "," + vs::format(c.disks) + ")";
}

namespace detail {

// Shared sparse container for cellular chains and cochains.
struct CellCombination {
    int degree = 0;
    std::map<Cell, Integer> terms;

    void add(const Cell& c, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms.try_emplace(c, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const CellCombination& a, const CellCombination& b) {
        return a.terms == b.terms && (a.terms.empty() || a.degree == b.degree);
    }
};

}  // namespace detail

struct ZkChain : detail::CellCombination {};
struct ZkCochain : detail::CellCombination {};

template <typename T>
T scaled(const T& x, const Integer& s) {
    T out;
    out.degree = x.degree;
    if (s == 0) return out;
    for (const auto& [cell, c] : x.terms) out.terms.emplace(cell, c * s);
    return out;
}

template <typename T>
T combination_sum(const T& a, const T& b) {
    T out = a;
    out.degree = a.terms.empty() ? b.degree : a.degree;
    for (const auto& [cell, c] : b.terms) out.add(cell, c);
    return out;
}

// A simplicial chain (or cochain) living on the full subcomplex K_J.
struct SubcomplexChain {
    VertexSet subset = 0;  // J
    int degree = -1;       // reduced degree, |σ|-1 on supports
    std::map<VertexSet, Integer> terms;

    void add(VertexSet simplex, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, fresh] = terms.try_emplace(simplex, coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
};

using SubcomplexCochain = SubcomplexChain;

// sgn(σ,J): shuffle sign of sorting (σ, J\σ).
inline int h_sign(VertexSet sigma, VertexSet j) { return vs::shuffle_sign(sigma, j & ~sigma); }

// h: σ ↦ sgn(σ,J)·κ(J\σ,σ), sending the reduced degree l = |σ|-1 of C(K_J)
// to the cell dimension l + |J| + 1.
inline ZkChain h_transport(VertexSet j, const SubcomplexChain& chain, const SimplicialComplex& k) {
    ZkChain out;
    out.degree = chain.degree + vs::count(j) + 1;
    for (const auto& [sigma, coeff] : chain.terms) {
        if (!vs::subset(sigma, j) || !k.contains(sigma))
            throw std::invalid_argument("simplex not in K_J");
        out.add(Cell{j & ~sigma, sigma}, coeff * h_sign(sigma, j));
    }
    return out;
}

inline ZkCochain h_transport_cochain(VertexSet j, const SubcomplexCochain& cochain,
                                     const SimplicialComplex& k) {
    ZkCochain out;
    out.degree = cochain.degree + vs::count(j) + 1;
    for (const auto& [sigma, coeff] : cochain.terms) {
        if (!vs::subset(sigma, j) || !k.contains(sigma))
            throw std::invalid_argument("simplex not in K_J");
        out.add(Cell{j & ~sigma, sigma}, coeff * h_sign(sigma, j));
    }
    return out;
}

// Inverse of h per summand: the component of a cellular (co)chain living
// over J, as a simplicial (co)chain of K_J.
template <typename T>
std::map<VertexSet, SubcomplexChain> h_decompose(const T& x) {
    std::map<VertexSet, SubcomplexChain> out;
    for (const auto& [cell, coeff] : x.terms) {
        VertexSet j = cell.support();
        auto& comp = out[j];
        comp.subset = j;
        comp.degree = x.degree - vs::count(j) - 1;
        comp.add(cell.disks, coeff * h_sign(cell.disks, j));
    }
    return out;
}

// Cellular boundary of a single cell, with the signs that make h a chain map.
inline ZkChain zk_boundary_cell(const Cell& cell) {
    ZkChain out;
    out.degree = cell.dimension() - 1;
    int nb = vs::count(cell.disks);
    VertexSet rest = cell.disks;
    while (rest) {
        VertexSet low = rest & (~rest + 1);
        int v = std::countr_zero(low) + 1;
        int sign = vs::sign_pow(vs::count_below(cell.circles, v) + nb - 1);
        out.add(Cell{cell.circles | low, cell.disks ^ low}, sign);
        rest ^= low;
    }
    return out;
}

inline ZkChain zk_boundary(const ZkChain& chain, const SimplicialComplex& k) {
    ZkChain out;
    out.degree = chain.degree - 1;
    for (const auto& [cell, coeff] : chain.terms) {
        if (!cell_in_zk(cell, k)) throw std::invalid_argument("cell not in Z_K");
        for (const auto& [face, sign] : zk_boundary_cell(cell).terms) out.add(face, coeff * sign);
    }
    return out;
}

// All cells of Z_K of the given dimension, in a fixed canonical order.
inline std::vector<Cell> zk_cells_of_dimension(const SimplicialComplex& k, int d) {
    std::vector<Cell> out;
    VertexSet all = vs::full(k.vertex_count());
    for (VertexSet b : k.faces()) {
        int need = d - 2 * vs::count(b);
        if (need < 0 || need > k.vertex_count() - vs::count(b)) continue;
        VertexSet comp = all & ~b;
        // enumerate subsets a ⊆ comp with |a| = need
        for (VertexSet a = comp;; a = (a - 1) & comp) {
            if (vs::count(a) == need) out.push_back(Cell{a, b});
            if (a == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// δφ = φ∘∂ on cellular cochains of Z_K.
inline ZkCochain zk_coboundary(const ZkCochain& phi, const SimplicialComplex& k) {
    ZkCochain out;
    out.degree = phi.degree + 1;
    for (const Cell& e : zk_cells_of_dimension(k, phi.degree + 1)) {
        Integer acc = 0;
        for (const auto& [face, sign] : zk_boundary_cell(e).terms) {
            auto it = phi.terms.find(face);
            if (it != phi.terms.end()) acc += Integer(sign) * it->second;
        }
        out.add(e, acc);
    }
    return out;
}

// One summand of the Hochster decomposition: H̃^{l}(K_J) sitting in total
// degree l + |J| + 1 of H^*(Z_K).
struct HochsterSummand {
    VertexSet subset = 0;
    int reduced_degree = 0;
    int total_degree = 0;
    AbelianGroup group;
    std::vector<SubcomplexCochain> generators;
    std::vector<Integer> orders;  // aligned with generators; 0 = free
};

class HochsterAnalysis;

struct BigradedCohomology {
    int m = 0;
    std::vector<HochsterSummand> summands;  // nonzero groups only
    GradedGroups total;                     // H^*(Z_K)

    // Present when built from a retained analysis; required by the
    // class-level product operations.
    std::shared_ptr<const HochsterAnalysis> analysis;

    const HochsterSummand* find(VertexSet j, int l) const {
        for (const auto& s : summands)
            if (s.subset == j && s.reduced_degree == l) return &s;
        return nullptr;
    }
};

namespace detail {

inline void check_moment_angle_input(const SimplicialComplex& k, int cap) {
    if (k.is_void())
        throw std::invalid_argument("VOID complex has no moment-angle model");
    if (k.vertex_count() > cap)
        throw budget_error("vertex count " + std::to_string(k.vertex_count()) +
                           " exceeds cap " + std::to_string(cap));
}

inline SubcomplexCochain cochain_from_vector(const ChainComplexData& data, VertexSet j, int degree,
                                             const std::vector<Integer>& coeffs) {
    SubcomplexCochain out;
    out.subset = j;
    out.degree = degree;
    const auto& basis = data.bases[degree + 1];
    for (std::size_t i = 0; i < basis.size(); ++i) out.add(basis[i], coeffs[i]);
    return out;
}

}  // namespace detail

// Retained per-subset analyses of all full subcomplexes K_J, with chain and
// cochain bases.  This is the workhorse behind the Hochster decomposition,
// the Alexander duality check, and class-level products.  Immutable after
// construction.
class HochsterAnalysis {
public:
    explicit HochsterAnalysis(SimplicialComplex k, int cap = 12)
        : k_(std::move(k)), m_(k_.vertex_count()) {
        detail::check_moment_angle_input(k_, cap);
        sub_.reserve(std::size_t(1) << m_);
        for (VertexSet j = 0;; ++j) {
            sub_.push_back(std::make_unique<ComplexAnalysis>(full_subcomplex(k_, j)));
            if (j == vs::full(m_)) break;
        }
    }

    const SimplicialComplex& complex() const { return k_; }
    int m() const { return m_; }

    const ComplexAnalysis& at(VertexSet j) const { return *sub_[j]; }

    GradedGroups total_cohomology() const {
        GradedGroups out;
        for (VertexSet j = 0;; ++j) {
            const ComplexAnalysis& a = at(j);
            int shift = vs::count(j) + 1;
            for (int l = -1; l <= a.dim(); ++l) out.add_summand(l + shift, a.cohomology_group(l));
            if (j == vs::full(m_)) break;
        }
        return out;
    }

    GradedGroups total_homology() const {
        GradedGroups out;
        for (VertexSet j = 0;; ++j) {
            const ComplexAnalysis& a = at(j);
            int shift = vs::count(j) + 1;
            for (int l = -1; l <= a.dim(); ++l) out.add_summand(l + shift, a.homology_group(l));
            if (j == vs::full(m_)) break;
        }
        return out;
    }

    BigradedCohomology bigraded(std::shared_ptr<const HochsterAnalysis> self = nullptr) const {
        BigradedCohomology out;
        out.m = m_;
        out.analysis = std::move(self);
        for (VertexSet j = 0;; ++j) {
            const ComplexAnalysis& a = at(j);
            for (int l = -1; l <= a.dim(); ++l) {
                const HomologyBasis& basis = a.cohomology(l);
                if (basis.group.is_zero()) continue;
                HochsterSummand s;
                s.subset = j;
                s.reduced_degree = l;
                s.total_degree = l + vs::count(j) + 1;
                s.group = basis.group;
                s.orders = basis.orders;
                for (int g = 0; g < basis.generator_count(); ++g)
                    s.generators.push_back(
                        detail::cochain_from_vector(a.chain_data(), j, l, basis.generator(g)));
                out.total.add_summand(s.total_degree, basis.group);
                out.summands.push_back(std::move(s));
            }
            if (j == vs::full(m_)) break;
        }
        return out;
    }

private:
    SimplicialComplex k_;
    int m_;
    std::vector<std::unique_ptr<ComplexAnalysis>> sub_;
};

inline std::shared_ptr<const HochsterAnalysis> make_hochster_analysis(const SimplicialComplex& k,
                                                                      int cap = 12) {
    return std::make_shared<const HochsterAnalysis>(k, cap);
}

// The bigraded cohomology of Z_K via the Hochster decomposition, with
// cocycle representatives per summand.  Streams over subsets, so memory
// stays proportional to the output; for class-level products build a
// retained HochsterAnalysis instead.
inline BigradedCohomology hochster_cohomology(const SimplicialComplex& k,
                                              int cap = kDefaultSubsetCap) {
    detail::check_moment_angle_input(k, cap);
    int m = k.vertex_count();
    BigradedCohomology out;
    out.m = m;
    for (VertexSet j = 0;; ++j) {
        ComplexAnalysis a(full_subcomplex(k, j));
        for (int l = -1; l <= a.dim(); ++l) {
            const HomologyBasis& basis = a.cohomology(l);
            if (basis.group.is_zero()) continue;
            HochsterSummand s;
            s.subset = j;
            s.reduced_degree = l;
            s.total_degree = l + vs::count(j) + 1;
            s.group = basis.group;
            s.orders = basis.orders;
            for (int g = 0; g < basis.generator_count(); ++g)
                s.generators.push_back(
                    detail::cochain_from_vector(a.chain_data(), j, l, basis.generator(g)));
            out.total.add_summand(s.total_degree, s.group);
            out.summands.push_back(std::move(s));
        }
        if (j == vs::full(m)) break;
    }
    return out;
}

// Totalized H^*(Z_K) (groups only).
inline GradedGroups zk_cohomology_groups(const SimplicialComplex& k, int cap = kDefaultSubsetCap) {
    detail::check_moment_angle_input(k, cap);
    GradedGroups out;
    for (VertexSet j = 0;; ++j) {
        GradedGroups sub = cohomology_groups_fast(reduced_chain_complex(full_subcomplex(k, j)));
        int shift = vs::count(j) + 1;
        for (const auto& [l, g] : sub.nonzero()) out.add_summand(l + shift, g);
        if (j == vs::full(k.vertex_count())) break;
    }
    return out;
}

// Coefficient of t^d = rank of H^d(Z_K); torsion is reported separately.
inline std::vector<int> poincare_polynomial(const SimplicialComplex& k,
                                            int cap = kDefaultSubsetCap) {
    return zk_cohomology_groups(k, cap).rank_vector();
}

// The full cellular chain complex of Z_K, built from all cells and the
// derived boundary.  Serves as the independent oracle for the Hochster
// route and as the substrate for Poincaré duality certificates.
class ZkCellComplex {
public:
    explicit ZkCellComplex(SimplicialComplex k, int cap = kDefaultCellCap) : k_(std::move(k)) {
        detail::check_moment_angle_input(k_, cap);
        top_ = 0;
        for (VertexSet f : k_.faces())
            top_ = std::max(top_, k_.vertex_count() - vs::count(f) + 2 * vs::count(f));
        cells_.resize(top_ + 1);
        index_.resize(top_ + 1);
        for (int d = 0; d <= top_; ++d) {
            cells_[d] = zk_cells_of_dimension(k_, d);
            for (std::size_t i = 0; i < cells_[d].size(); ++i) index_[d][cells_[d][i]] = int(i);
        }
        boundaries_.resize(top_ + 1);
        for (int d = 1; d <= top_; ++d) {
            IntegerMatrix b(int(cells_[d - 1].size()), int(cells_[d].size()));
            for (std::size_t c = 0; c < cells_[d].size(); ++c)
                for (const auto& [face, sign] : zk_boundary_cell(cells_[d][c]).terms)
                    b.at(index_[d - 1].at(face), int(c)) = sign;
            boundaries_[d] = std::move(b);
        }
        homology_.resize(top_ + 1);
        cohomology_.resize(top_ + 1);
        for (int d = 0; d <= top_; ++d) {
            homology_[d] = homology_basis(boundary_from(d), boundary_from(d + 1));
            cohomology_[d] =
                homology_basis(boundary_from(d + 1).transposed(), boundary_from(d).transposed());
        }
    }

    const SimplicialComplex& complex() const { return k_; }
    int top_dimension() const { return top_; }

    const std::vector<Cell>& cells(int d) const { return cells_[d]; }

    // Boundary C_d -> C_{d-1}; zero-sized outside the populated range.
    IntegerMatrix boundary_from(int d) const {
        if (d < 1 || d > top_) {
            int rows = (d - 1 >= 0 && d - 1 <= top_) ? int(cells_[d - 1].size()) : 0;
            int cols = (d >= 0 && d <= top_) ? int(cells_[d].size()) : 0;
            return IntegerMatrix(rows, cols);
        }
        return boundaries_[d];
    }

    const HomologyBasis& homology(int d) const { return at(homology_, d); }
    const HomologyBasis& cohomology(int d) const { return at(cohomology_, d); }

    GradedGroups homology_groups() const {
        GradedGroups out;
        for (int d = 0; d <= top_; ++d) out.set(d, homology_[d].group);
        return out;
    }

    GradedGroups cohomology_groups() const {
        GradedGroups out;
        for (int d = 0; d <= top_; ++d) out.set(d, cohomology_[d].group);
        return out;
    }

    std::vector<Integer> chain_vector(const ZkChain& chain) const {
        return to_vector(chain, chain.degree);
    }
    std::vector<Integer> cochain_vector(const ZkCochain& cochain) const {
        return to_vector(cochain, cochain.degree);
    }

    ZkChain chain_from_vector(int degree, const std::vector<Integer>& v) const {
        ZkChain out;
        out.degree = degree;
        for (std::size_t i = 0; i < cells_[degree].size(); ++i) out.add(cells_[degree][i], v[i]);
        return out;
    }

private:
    const HomologyBasis& at(const std::vector<HomologyBasis>& v, int d) const {
        static const HomologyBasis kEmpty{};
        if (d < 0 || d > top_) return kEmpty;
        return v[d];
    }

    template <typename T>
    std::vector<Integer> to_vector(const T& x, int degree) const {
        if (degree < 0 || degree > top_)
            return x.terms.empty() ? std::vector<Integer>{}
                                   : throw std::invalid_argument("degree out of cell range");
        std::vector<Integer> out(cells_[degree].size(), Integer(0));
        for (const auto& [cell, coeff] : x.terms) out[index_[degree].at(cell)] = coeff;
        return out;
    }

    SimplicialComplex k_;
    int top_ = 0;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::map<Cell, int>> index_;
    std::vector<IntegerMatrix> boundaries_;
    std::vector<HomologyBasis> homology_;
    std::vector<HomologyBasis> cohomology_;
};

// Homology of Z_K from the direct cellular chain complex (the oracle side
// of the Hochster decomposition).
inline GradedGroups zk_homology_direct(const SimplicialComplex& k, int cap = kDefaultCellCap) {
    return ZkCellComplex(k, cap).homology_groups();
}

// Homology groups predicted by the Hochster route (for comparison with the
// direct cellular computation).
inline GradedGroups zk_homology_via_hochster(const SimplicialComplex& k,
                                             int cap = kDefaultSubsetCap) {
    detail::check_moment_angle_input(k, cap);
    GradedGroups out;
    for (VertexSet j = 0;; ++j) {
        GradedGroups sub = homology_groups_fast(reduced_chain_complex(full_subcomplex(k, j)));
        int shift = vs::count(j) + 1;
        for (const auto& [l, g] : sub.nonzero()) out.add_summand(l + shift, g);
        if (j == vs::full(k.vertex_count())) break;
    }
    return out;
}

}  // namespace momangle
