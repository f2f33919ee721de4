// Bitmask vertex sets on {1,...,m} and the sign conventions shared by the
// chain-level machinery.
#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace momangle {

// Subset of {1,...,m}; vertex v is stored in bit v-1.  m <= 32.
using VertexSet = std::uint32_t;

constexpr int kMaxVertices = 32;

namespace vs {

inline int count(VertexSet s) { return std::popcount(s); }

inline VertexSet full(int m) {
    return m >= kMaxVertices ? ~VertexSet{0} : ((VertexSet{1} << m) - 1);
}

inline VertexSet single(int v) { return VertexSet{1} << (v - 1); }

inline bool contains(VertexSet s, int v) { return (s >> (v - 1)) & 1u; }

inline VertexSet with(VertexSet s, int v) { return s | single(v); }

inline VertexSet without(VertexSet s, int v) { return s & ~single(v); }

inline bool subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline bool disjoint(VertexSet a, VertexSet b) { return (a & b) == 0; }

// Bits strictly below vertex v.
inline VertexSet below(int v) { return single(v) - 1; }

// Number of elements of s smaller than v.
inline int count_below(VertexSet s, int v) { return std::popcount(s & below(v)); }

inline std::vector<int> elements(VertexSet s) {
    std::vector<int> out;
    out.reserve(count(s));
    while (s) {
        VertexSet low = s & (~s + 1);
        out.push_back(std::countr_zero(low) + 1);
        s ^= low;
    }
    return out;
}

inline int sign_pow(int exponent) { return (exponent & 1) ? -1 : 1; }

// Sign of the permutation sorting the concatenation (sorted first, sorted
// second) into ascending order, for disjoint sets.  Equals
// (-1)^{#{(f,s) in first x second : s < f}}.
inline int shuffle_sign(VertexSet first, VertexSet second) {
    int inv = 0;
    VertexSet f = first;
    while (f) {
        VertexSet low = f & (~f + 1);
        int v = std::countr_zero(low) + 1;
        inv += count_below(second, v);
        f ^= low;
    }
    return sign_pow(inv);
}

// Lexicographic order on sorted vertex tuples, restricted to sets of equal
// size; also a valid strict weak order on all sets.
inline bool lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    VertexSet diff = a ^ b;
    VertexSet low = diff & (~diff + 1);
    return (a & low) != 0;
}

// Canonical order used for simplex bases: by cardinality, then lex.
inline bool face_less(VertexSet a, VertexSet b) {
    int ca = count(a), cb = count(b);
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

inline std::string format(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace vs
}  // namespace momangle
