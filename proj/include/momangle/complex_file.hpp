// The on-disk complex format: whitespace-separated tokens, LF line endings.
//
//   # comment
//   m 6
//   facet 1 3 5
//   ...
//
// `m` must appear exactly once and first.  A file with no facet lines is
// {∅} on m ghost vertices; the directive `void` (exclusive with `facet`)
// denotes the VOID complex.  Writing emits the maximal faces, so
// write-then-parse is the identity.
#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include "momangle/simplicial_complex.hpp"

namespace momangle {

inline SimplicialComplex parse_complex(std::istream& in) {
    bool have_m = false, have_void = false;
    int m = 0;
    std::vector<VertexSet> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string directive;
        if (!(tokens >> directive)) continue;
        auto fail = [&](const std::string& msg) {
            throw parse_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (directive == "m") {
            if (have_m) fail("duplicate m directive");
            if (!(tokens >> m) || m < 0 || m > kMaxVertices) fail("m must be an integer in 0..32");
            std::string rest;
            if (tokens >> rest) fail("trailing tokens after m");
            have_m = true;
        } else if (directive == "facet") {
            if (!have_m) fail("facet before m");
            if (have_void) fail("facet lines not allowed in a void complex");
            VertexSet f = 0;
            int v;
            while (tokens >> v) {
                if (v < 1 || v > m) fail("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
                f |= vs::single(v);
            }
            if (!tokens.eof()) fail("non-integer vertex token");
            facets.push_back(f);
        } else if (directive == "void") {
            if (!have_m) fail("void before m");
            if (!facets.empty()) fail("void complex cannot have facet lines");
            have_void = true;
        } else {
            fail("unknown directive '" + directive + "'");
        }
    }
    if (!have_m) throw parse_error("missing m directive");
    if (have_void) return SimplicialComplex::void_complex(m);
    return SimplicialComplex::from_facets(m, facets, /*include_empty=*/true);
}

inline SimplicialComplex parse_complex(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

inline void write_complex(std::ostream& out, const SimplicialComplex& k) {
    out << "m " << k.vertex_count() << "\n";
    if (k.is_void()) {
        out << "void\n";
        return;
    }
    for (VertexSet f : k.facets()) {
        if (f == 0) continue;  // {∅} is the m line alone
        out << "facet";
        for (int v : vs::elements(f)) out << " " << v;
        out << "\n";
    }
}

inline std::string write_complex(const SimplicialComplex& k) {
    std::ostringstream out;
    write_complex(out, k);
    return out.str();
}

}  // namespace momangle
