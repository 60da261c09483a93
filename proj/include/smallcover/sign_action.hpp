// The coordinate sign action on R^n at the combinatorial level: sign
// subgroups stored additively as GF(2) subspaces, stabilizers of coordinate
// subspaces, the rotation-generation test, the weight isomorphism onto the
// even sign subgroup, and mod-2 homology of cross-polytope sphere quotients.

#ifndef SMC_SIGN_ACTION_HPP
#define SMC_SIGN_ACTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "smallcover/chain.hpp"
#include "smallcover/gf2.hpp"

namespace smc {

// Subgroup of the full sign group {+-1}^n; a vector has 1 exactly in the
// coordinates where the sign element is -1.
struct SignSubgroup {
    int ambient_n = 0;
    EchelonBasis subgroup;

    SignSubgroup() : subgroup(0) {}
    SignSubgroup(int n, EchelonBasis b) : ambient_n(n), subgroup(std::move(b)) {}

    std::uint64_t order() const { return std::uint64_t(1) << subgroup.rank(); }
    std::vector<GF2Vector> elements() const { return subgroup.elements(); }
};

SignSubgroup sign_subgroup(int n, const std::vector<GF2Vector>& generators);

// Elements with an even number of -1 entries; the index-2 subgroup acting
// with complexity one.
SignSubgroup even_sign_subgroup(int n);

// {v in G : support(v) ⊆ zero_set}, the stabilizer of a point whose zero
// coordinates are exactly zero_set (0-based indices).
SignSubgroup coordinate_stabilizer(const SignSubgroup& g, const std::vector<int>& zero_set);

// C(k,0) + C(k,2) + ... ; equals 2^{k-1} for k >= 1 and 1 for k = 0.
unsigned long long even_binomial_sum(int k);

// True iff the elements of weight two span the subgroup.
bool is_generated_by_rotations(const SignSubgroup& h);

struct GeneralPositionError : std::runtime_error {
    GeneralPositionError(std::string msg, std::vector<int> dependent)
        : std::runtime_error(std::move(msg)), dependent_subset(std::move(dependent)) {}
    std::vector<int> dependent_subset;  // indices of a dependent (n-1)-subset
};

// phi(t) = (alpha_1(t), ..., alpha_n(t)) for n weights on Z_2^{n-1} in
// general position; rows of the returned matrix are the weights, so the map
// is t -> phi * t.  Injectivity and image = even_sign_subgroup(n) are
// verified (by element enumeration for n <= 16).  Throws
// GeneralPositionError with a dependent subset as certificate otherwise.
struct WeakEquivalence {
    GF2Matrix phi;  // n x (n-1)
    GF2Vector apply(const GF2Vector& t) const { return phi.apply(t); }
    std::vector<GF2Vector> image_elements() const;
};

WeakEquivalence weak_equivalence_iso(const std::vector<GF2Vector>& weights);

// Simplicial complexes with sorted vertex lists per simplex; enough for the
// cross-polytope boundary and its barycentric subdivision.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::string> vertex_names;
    std::vector<std::vector<std::vector<int>>> simplices;  // [d], lex-sorted lists

    int top_dim() const { return int(simplices.size()) - 1; }
    std::uint32_t find(int d, const std::vector<int>& vs) const;  // throws if absent
    CellComplex to_cell_complex() const;
    // Cell permutation induced by a vertex permutation (must map simplices to
    // simplices).
    CellPermutation induced_permutation(const std::vector<int>& vertex_map) const;
};

// Boundary of the n-dimensional cross polytope: vertices 2i <-> +e_{i+1} and
// 2i+1 <-> -e_{i+1}; simplices are the vertex sets with no antipodal pair.
SimplicialComplex cross_polytope_boundary(int n);

CellComplex cross_polytope_sphere(int n);

// Vertex permutation of the cross-polytope boundary given by a sign element.
std::vector<int> sign_vertex_permutation(int n, const GF2Vector& h);

// Barycentric subdivision; vertices of the result are the simplices of the
// input, simplices are the flags.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& sc);
std::vector<int> subdivided_vertex_map(const SimplicialComplex& sc,
                                       const std::vector<int>& vertex_map);

// Quotient homology of a simplicial complex by a group of vertex
// permutations; if the induced cell action is not regular, retries once on
// the barycentric subdivision before giving up.
std::vector<std::size_t> quotient_homology_with_fallback(
    const SimplicialComplex& sc, const std::vector<std::vector<int>>& vertex_perms);

// Mod-2 Betti numbers of S^{n-1}/H for a sign subgroup H of Z_2^n.
std::vector<std::size_t> quotient_sphere_homology(int n, const SignSubgroup& h);

std::vector<std::size_t> sphere_betti(int dim);  // (2) for dim 0, else (1,0,...,0,1)

}  // namespace smc

#endif
