// Characteristic functions on simple polytopes: the independence condition
// at every vertex, tangent weights (dual bases), the orienting functional xi
// with its index-2 kernel subtorus, and the two routes to the general
// position test.

#ifndef SMC_CHARFUN_HPP
#define SMC_CHARFUN_HPP

#include <optional>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smc {

struct CharacteristicFunction {
    GF2Matrix lambda;  // m rows = one vector in Z_2^n per facet
};

// Rank n-1 subgroup of Z_2^n cut out by a nonzero functional.
struct Subtorus {
    GF2Vector xi;
    std::vector<GF2Vector> basis;  // n-1 independent kernel vectors
};

Subtorus subtorus_from_functional(const GF2Vector& xi);

struct TangentWeights {
    int vertex = 0;
    std::vector<GF2Vector> weights;  // dual basis to the vertex's lambda rows
};

// Passes iff at every vertex the incident lambda rows have full rank.
// Throws std::invalid_argument on shape mismatch.
ValidationReport check_star(const SimplePolytope& p, const CharacteristicFunction& cf);

// Dual basis at a vertex; pairing with the lambda rows is the identity.
TangentWeights tangent_weights(const SimplePolytope& p, const CharacteristicFunction& cf,
                               int vertex);

// Solves lambda_i . xi = 1 for all facets; empty result means non-orientable.
std::optional<Subtorus> orientability_functional(const CharacteristicFunction& cf);

// Number of functionals xi (over all 2^n - 1 nonzero ones) with xi(lambda_i)=1
// for every facet.  Exhaustive; requires n <= 24.
std::size_t count_orienting_functionals(const CharacteristicFunction& cf);

// xi(lambda_i) = 1 for every facet.
bool is_general_position(const SimplePolytope& p, const CharacteristicFunction& cf,
                         const Subtorus& g);

// Independent route: at every vertex, restrict the tangent weights to the
// subtorus (reduce mod <xi> in the dual space) and require every (n-1)-subset
// to stay independent.
bool general_position_by_weights(const SimplePolytope& p, const CharacteristicFunction& cf,
                                 const Subtorus& g);

struct VertexCanonicalForm {
    int vertex = 0;
    GF2Matrix lambda_basis;     // the vertex's lambda rows (a basis of Z_2^n)
    GF2Matrix subtorus_coords;  // G's basis rewritten in that basis, one row each
    bool sum_zero = false;      // the rewritten subgroup is the even-coordinate subspace
};

// Expresses G in the lambda basis of the chosen vertex and certifies it is
// the coordinate-sum-zero subspace there.  Throws std::domain_error when G is
// not in general position.
VertexCanonicalForm canonical_form_at_vertex(const SimplePolytope& p,
                                             const CharacteristicFunction& cf, int vertex,
                                             const Subtorus& g);

}  // namespace smc

#endif
