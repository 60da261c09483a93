#include "smallcover/gf2.hpp"

#include <algorithm>

namespace smc {

RowEchelon reduced_row_echelon(GF2Matrix m) {
    RowEchelon e;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (m.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot == m.rows()) continue;
        std::swap(m.row(r), m.row(pivot));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, col)) m.row(i) ^= m.row(r);
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.rank = r;
    e.mat = std::move(m);
    return e;
}

std::size_t rank(const GF2Matrix& m) { return reduced_row_echelon(m).rank; }

std::vector<GF2Vector> kernel_basis(const GF2Matrix& m) {
    RowEchelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<GF2Vector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        GF2Vector v(m.cols());
        v.set(j, true);
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
            if (e.mat.get(k, j)) v.set(e.pivot_cols[k], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const GF2Matrix& m, const GF2Vector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: b length != rows");

    // Eliminate on [M | b] with the same pivot rule as reduced_row_echelon.
    GF2Matrix a = m;
    GF2Vector rhs = b;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t pivot = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (a.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot == a.rows()) continue;
        std::swap(a.row(r), a.row(pivot));
        bool br = rhs.get(r), bp = rhs.get(pivot);
        rhs.set(r, bp);
        rhs.set(pivot, br);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r && a.get(i, col)) {
                a.row(i) ^= a.row(r);
                if (rhs.get(r)) rhs.flip(i);
            }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < a.rows(); ++i)
        if (rhs.get(i)) return std::nullopt;

    AffineSolution sol;
    sol.x = GF2Vector(a.cols());
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) sol.x.set(pivot_cols[k], rhs.get(k));
    sol.unique = (pivot_cols.size() == a.cols());
    return sol;
}

std::optional<GF2Matrix> inverse(const GF2Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    GF2Matrix a = m;
    GF2Matrix inv = GF2Matrix::identity(n);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t i = r; i < n; ++i)
            if (a.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot == n) return std::nullopt;
        std::swap(a.row(r), a.row(pivot));
        std::swap(inv.row(r), inv.row(pivot));
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && a.get(i, col)) {
                a.row(i) ^= a.row(r);
                inv.row(i) ^= inv.row(r);
            }
        ++r;
    }
    return inv;
}

bool EchelonBasis::insert(GF2Vector v) {
    if (v.size() != ambient_) throw std::invalid_argument("EchelonBasis: ambient mismatch");
    v = reduce(std::move(v));
    int p = v.lowest_set_bit();
    if (p < 0) return false;
    // Clear the new pivot from the existing rows, then keep rows ordered by pivot.
    for (auto& r : rows_)
        if (r.get(std::size_t(p))) r ^= v;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), std::size_t(p));
    std::size_t at = it - pivots_.begin();
    pivots_.insert(it, std::size_t(p));
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

std::vector<std::size_t> EchelonBasis::free_positions() const {
    std::vector<std::size_t> free;
    std::size_t k = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j)
            ++k;
        else
            free.push_back(j);
    }
    return free;
}

std::uint64_t EchelonBasis::coset_index(const GF2Vector& reduced_rep) const {
    std::uint64_t idx = 0;
    auto free = free_positions();
    for (std::size_t k = 0; k < free.size(); ++k)
        if (reduced_rep.get(free[k])) idx |= std::uint64_t(1) << k;
    return idx;
}

GF2Vector EchelonBasis::coset_rep(std::uint64_t index) const {
    GF2Vector v(ambient_);
    auto free = free_positions();
    for (std::size_t k = 0; k < free.size(); ++k)
        if ((index >> k) & 1u) v.set(free[k], true);
    return v;
}

std::vector<GF2Vector> EchelonBasis::elements() const {
    if (rank() > 24) throw std::logic_error("EchelonBasis::elements: subspace too large to enumerate");
    std::vector<GF2Vector> out;
    out.reserve(std::size_t(1) << rank());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << rank()); ++mask) {
        GF2Vector v(ambient_);
        for (std::size_t k = 0; k < rank(); ++k)
            if ((mask >> k) & 1u) v ^= rows_[k];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace smc
