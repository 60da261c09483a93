// Graded cell complexes with mod-2 boundary incidence, homology and relative
// homology by GF(2) rank, subcomplexes, and quotients by cell-permuting group
// actions.  Coefficients are parities throughout; d∘d = 0 is verified on
// every constructed complex.

#ifndef SMC_CHAIN_HPP
#define SMC_CHAIN_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcover/gf2.hpp"

namespace smc {

struct CellComplex {
    // labels[d][i] names cell i of dimension d; boundary[d][i] lists the
    // (d-1)-cells with odd incidence, sorted and duplicate-free.
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<std::vector<std::uint32_t>>> boundary;

    int top_dim() const { return int(labels.size()) - 1; }
    std::size_t cell_count(int d) const {
        return (d >= 0 && d <= top_dim()) ? labels[d].size() : 0;
    }
    std::size_t total_cells() const {
        std::size_t c = 0;
        for (const auto& l : labels) c += l.size();
        return c;
    }
};

// Cells are added bottom-up by id; finish() checks boundary references and
// d∘d = 0 and throws std::logic_error on violation.  Boundary lists may be
// given as multisets; they are reduced mod 2.
class ComplexBuilder {
public:
    explicit ComplexBuilder(int top_dim);
    std::uint32_t add_cell(int dim, std::string label, std::vector<std::uint32_t> boundary_ids);
    CellComplex finish();

private:
    CellComplex cx_;
    bool finished_ = false;
};

// Mod-2 Betti numbers, indices 0..top_dim.
std::vector<std::size_t> betti_mod2(const CellComplex& c);

long long euler_characteristic(const CellComplex& c);

struct Subcomplex {
    const CellComplex* parent = nullptr;
    std::vector<std::vector<char>> in;  // membership mask per dim

    std::size_t cell_count() const {
        std::size_t c = 0;
        for (const auto& m : in)
            for (char b : m) c += b ? 1 : 0;
        return c;
    }
};

// Throws std::invalid_argument when the selection is not boundary-closed.
Subcomplex make_subcomplex(const CellComplex& parent,
                           const std::vector<std::vector<std::uint32_t>>& ids_per_dim);

// Betti numbers of the quotient chain complex C/A over GF(2); equal to the
// relative (co)homology ranks since the coefficients form a field.
std::vector<std::size_t> relative_betti_mod2(const CellComplex& c, const Subcomplex& a);

// One group element acting on the complex: a permutation of the cells of
// each dimension.
struct CellPermutation {
    std::vector<std::vector<std::uint32_t>> map;  // per dim
};

struct RegularityError : std::runtime_error {
    RegularityError(std::string msg, std::size_t element, int dim, std::uint32_t cell)
        : std::runtime_error(std::move(msg)), element(element), dim(dim), cell(cell) {}
    std::size_t element;
    int dim;
    std::uint32_t cell;
};

struct QuotientResult {
    CellComplex complex;
    std::vector<std::vector<std::uint32_t>> orbit_of;  // per dim: cell id -> orbit cell id
};

// Quotient by the group generated by the given elements.  Preconditions
// checked: each element permutes cells within a dimension preserving the
// mod-2 boundary lists, and an element fixing a cell fixes every cell of its
// boundary list (RegularityError otherwise).  Orbit boundaries are computed
// from the minimal representative and re-derived from a second representative
// to assert independence of the choice.
QuotientResult quotient_by_action(const CellComplex& c, const std::vector<CellPermutation>& elements);

// True when map (per-dim a-id -> b-id) is a bijection commuting with the
// boundary.  On failure, *why receives a description if non-null.
bool isomorphic_via(const CellComplex& a, const CellComplex& b,
                    const std::vector<std::vector<std::uint32_t>>& map, std::string* why = nullptr);

// Standalone copy of a boundary-closed selection of cells, trimmed to its
// own top dimension.  new_id_of (optional) receives the per-dim map from
// parent ids to extracted ids (undefined for unselected cells).
CellComplex extract_subcomplex(const CellComplex& c,
                               const std::vector<std::vector<std::uint32_t>>& ids_per_dim,
                               std::vector<std::vector<std::uint32_t>>* new_id_of = nullptr);

}  // namespace smc

#endif
