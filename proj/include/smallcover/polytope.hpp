// Simple polytopes given purely combinatorially, as vertex-facet incidence.
// Faces are the nonempty intersections of facet subsets; the lattice keeps
// every face with its maximal defining facet set and the codimension-one
// containments, which is all the downstream cell constructions need.

#ifndef SMC_POLYTOPE_HPP
#define SMC_POLYTOPE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace smc {

struct SimplePolytope {
    int dim = 0;                                     // n
    int facet_count = 0;                             // m
    std::vector<std::vector<int>> vertex_facets;     // per vertex, sorted facet indices

    int vertex_count() const { return int(vertex_facets.size()); }
};

struct Face {
    std::vector<int> facet_set;   // maximal facet subset cutting this face; empty = whole polytope
    std::vector<int> vertex_set;  // sorted
    int dim = 0;                  // n - |facet_set|
};

struct ValidationReport {
    bool ok = true;
    std::string message;                  // first violated condition, empty when ok
    std::vector<std::string> notes;       // caveats that do not fail validation
};

// Simplicity invariants plus gradedness of the facet-intersection poset and
// uniqueness of the maximal element.  Accepts any incidence structure that
// passes; polytopality of arbitrary input is not certified (noted in the
// report).
ValidationReport validate(const SimplePolytope& p);

struct FaceLattice {
    int dim = 0;
    std::vector<Face> faces;                              // sorted by dim, then vertex set
    std::vector<std::vector<std::uint32_t>> by_dim;       // face indices per dim 0..n
    std::vector<std::vector<std::uint32_t>> subfaces;     // per face, its codim-1 faces
    std::uint32_t whole = 0;                              // index of the dim-n face

    // position of face f within by_dim[faces[f].dim]
    std::vector<std::uint32_t> rank_in_dim;

    bool face_leq(std::uint32_t a, std::uint32_t b) const;  // a <= b by vertex inclusion
};

// All faces of a validated polytope, graded by dimension, deduplicated by
// vertex set.  Includes the vertices and the whole polytope.
FaceLattice enumerate_faces(const SimplePolytope& p);

std::vector<long long> f_vector(const SimplePolytope& p);
std::vector<long long> f_vector(const FaceLattice& lat);

// h-polynomial via the face sum of (t-1)^{dim F} over all faces including P
// itself; h_i is the coefficient of t^{n-i}.  Checks sum(h) = f_0.
std::vector<long long> h_vector(const SimplePolytope& p);
std::vector<long long> h_vector(const FaceLattice& lat);

SimplePolytope simplex(int n);
SimplePolytope cube(int n);      // facets 2i, 2i+1 are the opposite pair in coordinate i
SimplePolytope polygon(int m);   // edge j joins vertices j and j+1 mod m
SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q);

}  // namespace smc

#endif
