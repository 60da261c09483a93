// The small cover of a simple polytope with a characteristic function,
// realized as a cell complex: d-cells are pairs (face F of dim d, coset of
// the face stabilizer), glued along the face poset.  On top of it: fixed
// sets, the equivariant formality count, face submanifolds, the orbit space
// under an index-2 subtorus with its rank filtration, and the two-disc
// doubling model of that orbit space.

#ifndef SMC_SMALLCOVER_HPP
#define SMC_SMALLCOVER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/chain.hpp"
#include "smallcover/charfun.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smc {

struct SmallCoverComplex {
    SimplePolytope polytope;
    CharacteristicFunction lambda;
    FaceLattice lattice;
    std::vector<EchelonBasis> stabilizer;  // per face: span of the lambda rows of its facet set
    CellComplex complex;

    // Cell bookkeeping.  Cells of dim d are grouped by the faces of dim d in
    // lattice order, coset index ascending; cell_base[f] is the id of the
    // first cell over face f.
    std::vector<std::uint32_t> cell_base;
    std::vector<std::vector<std::uint32_t>> cell_face;  // per dim: cell id -> face index
    std::uint32_t face_of_cell(int dim, std::uint32_t id) const;
    std::uint32_t cell_of(std::uint32_t face, const GF2Vector& coset_member) const;
    GF2Vector coset_rep_of_cell(int dim, std::uint32_t id) const;
};

// Builds X(P, lambda).  The independence condition is rechecked; failure
// throws std::domain_error with the vertex report.
SmallCoverComplex build_small_cover(const SimplePolytope& p, const CharacteristicFunction& cf);

struct CellRef {
    int dim;
    std::uint32_t id;
    std::string label;
};

// Cells whose face stabilizer contains the given subgroup.
std::vector<CellRef> fixed_set(const SmallCoverComplex& s, const std::vector<GF2Vector>& subgroup);

struct FormalityReport {
    bool pass = false;
    std::size_t fixed_cells = 0;
    std::size_t betti_sum = 0;
};

// Fixed cells of the full group (the vertex cells) against the total mod-2
// Betti number.
FormalityReport formality_check(const SmallCoverComplex& s);
// Same count for the restricted subtorus action; requires general position.
FormalityReport formality_check(const SmallCoverComplex& s, const Subtorus& g);

// The part of X over a proper face, rebuilt as a small cover over that face
// with the induced characteristic data; the rebuild is asserted isomorphic
// to the subcomplex it came from.
SmallCoverComplex face_submanifold(const SmallCoverComplex& s, std::uint32_t face);

struct OrbitSpaceComplex {
    int dim = 0;  // n
    CellComplex complex;
    std::vector<std::uint32_t> face_cell;        // proper face index -> its single cell
    std::array<std::uint32_t, 2> top_cells{};    // the two n-cells
    // filtration[i] = cell ids per dim of Q_i; levels 0..n-1, with the last
    // level equal to the whole complex (the free part enters only there).
    std::vector<std::vector<std::vector<std::uint32_t>>> filtration;

    Subcomplex level(std::size_t i) const;
};

// Quotient of the small cover by the subtorus acting on the coset
// coordinate.  Requires general position (otherwise the quotient has
// boundary and is refused).
OrbitSpaceComplex orbit_space(const SmallCoverComplex& s, const Subtorus& g);

// Two n-discs glued along the boundary of P: every proper face once plus two
// top cells bounded by all facets.
CellComplex doubling_model(const SimplePolytope& p);

// Cell-level isomorphism between the orbit space and the doubling model,
// matching cells through the face index.
bool doubling_isomorphic(const SmallCoverComplex& s, const OrbitSpaceComplex& q,
                         std::string* why = nullptr);

struct FiltrationReport {
    bool relative_vanishing = false;  // H^i(Q, Q_{n-2}) = 0 below degree n-1
    bool face_pairs = false;          // (F, F_-1) concentrated in the face rank
    bool rank_face_bijection = false; // components of Q_i \ Q_{i-1} <-> faces of P, i <= n-2
    std::string detail;
    bool pass() const { return relative_vanishing && face_pairs && rank_face_bijection; }
};

FiltrationReport filtration_checks(const SmallCoverComplex& s, const OrbitSpaceComplex& q);

// chi predicted by orbit counting: sum over faces of (-1)^dim 2^dim.
long long euler_by_orbit_count(const FaceLattice& lat);

}  // namespace smc

#endif
