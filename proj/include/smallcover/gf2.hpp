// Bit-packed linear algebra over GF(2): vectors, matrices, rank, kernels,
// affine solving, and reduced echelon bases with canonical coset
// representatives.  Everything here is exact; row operations are word XORs.

#ifndef SMC_GF2_HPP
#define SMC_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smc {

class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t len) : words_((len + 63) / 64, 0), len_(len) {}

    static GF2Vector unit(std::size_t len, std::size_t i) {
        GF2Vector v(len);
        v.set(i, true);
        return v;
    }
    static GF2Vector from_bits(const std::vector<int>& bits) {
        GF2Vector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
        return v;
    }
    static GF2Vector all_ones(std::size_t len) {
        GF2Vector v(len);
        for (std::size_t i = 0; i < len; ++i) v.set(i, true);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool b) {
        if (b)
            words_[i >> 6] |= std::uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    // Index of the lowest set bit, or -1 on the zero vector.
    int lowest_set_bit() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(64 * k + std::countr_zero(words_[k]));
        return -1;
    }

    GF2Vector& operator^=(const GF2Vector& o) {
        if (o.len_ != len_) throw std::invalid_argument("GF2Vector: length mismatch in ^=");
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) {
        a ^= b;
        return a;
    }

    // Parity of the coordinatewise product; the pairing between a vector and
    // a functional written in coordinates.
    bool dot(const GF2Vector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("GF2Vector: length mismatch in dot");
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
        return std::popcount(acc) & 1u;
    }

    bool operator==(const GF2Vector& o) const { return len_ == o.len_ && words_ == o.words_; }
    bool operator!=(const GF2Vector& o) const { return !(*this == o); }

    // Lexicographic by coordinate index, 0 < 1.  Used for canonical
    // representative choices, so it must be a stable total order.
    bool operator<(const GF2Vector& o) const {
        if (len_ != o.len_) return len_ < o.len_;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t d = words_[k] ^ o.words_[k];
            if (d) {
                int b = std::countr_zero(d);
                return ((words_[k] >> b) & 1u) == 0;
            }
        }
        return false;
    }

    std::string str() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }
    std::vector<int> bits() const {
        std::vector<int> b(len_);
        for (std::size_t i = 0; i < len_; ++i) b[i] = get(i) ? 1 : 0;
        return b;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t len_ = 0;
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), row_(rows, GF2Vector(cols)) {}

    static GF2Matrix identity(std::size_t n) {
        GF2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }
    static GF2Matrix from_rows(std::vector<GF2Vector> rows, std::size_t cols) {
        for (const auto& r : rows)
            if (r.size() != cols) throw std::invalid_argument("GF2Matrix: ragged rows");
        GF2Matrix m;
        m.cols_ = cols;
        m.row_ = std::move(rows);
        return m;
    }

    std::size_t rows() const { return row_.size(); }
    std::size_t cols() const { return cols_; }

    const GF2Vector& row(std::size_t i) const { return row_[i]; }
    GF2Vector& row(std::size_t i) { return row_[i]; }
    const std::vector<GF2Vector>& row_vectors() const { return row_; }

    bool get(std::size_t i, std::size_t j) const { return row_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { row_[i].set(j, b); }

    void append_row(GF2Vector r) {
        if (r.size() != cols_) throw std::invalid_argument("GF2Matrix: row length mismatch");
        row_.push_back(std::move(r));
    }

    GF2Matrix transposed() const {
        GF2Matrix t(cols_, rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    // M.apply(v) = M·v, entry i = <row i, v>.
    GF2Vector apply(const GF2Vector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("GF2Matrix: apply length mismatch");
        GF2Vector out(rows());
        for (std::size_t i = 0; i < rows(); ++i) out.set(i, row_[i].dot(v));
        return out;
    }

    bool operator==(const GF2Matrix& o) const { return cols_ == o.cols_ && row_ == o.row_; }

private:
    std::size_t cols_ = 0;
    std::vector<GF2Vector> row_;
};

// Reduced row echelon form with deterministic pivoting: leftmost nonzero
// column, topmost available row.  Pivot columns are strictly increasing.
struct RowEchelon {
    GF2Matrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

RowEchelon reduced_row_echelon(GF2Matrix m);

std::size_t rank(const GF2Matrix& m);

// Basis of {v : M v = 0}.  Deterministic: one vector per free column in
// ascending column order.  Size is always cols - rank.
std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);

struct AffineSolution {
    GF2Vector x;
    bool unique = false;  // kernel of M is trivial
};

// One solution of M x = b (free coordinates zero), or nullopt if
// inconsistent.  Throws on dimension mismatch.
std::optional<AffineSolution> solve_affine(const GF2Matrix& m, const GF2Vector& b);

std::optional<GF2Matrix> inverse(const GF2Matrix& m);

// A subspace held as a reduced echelon basis.  reduce() maps a vector to the
// canonical representative of its coset (zero in every pivot coordinate),
// which makes coset identifiers reproducible.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

    static EchelonBasis span(const std::vector<GF2Vector>& gens, std::size_t ambient) {
        EchelonBasis b(ambient);
        for (const auto& g : gens) b.insert(g);
        return b;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<GF2Vector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    GF2Vector reduce(GF2Vector v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if (v.get(pivots_[k])) v ^= rows_[k];
        return v;
    }
    bool contains(const GF2Vector& v) const { return reduce(v).is_zero(); }

    // Extend by v; keeps the basis reduced.  Returns false if v is already
    // in the span.
    bool insert(GF2Vector v);

    // Coordinates not used as pivots, ascending.  Canonical coset
    // representatives are exactly the vectors supported on these.
    std::vector<std::size_t> free_positions() const;

    std::uint64_t coset_count() const { return std::uint64_t(1) << (ambient_ - rank()); }

    // Pack / unpack the free coordinates of a canonical representative.
    std::uint64_t coset_index(const GF2Vector& reduced_rep) const;
    GF2Vector coset_rep(std::uint64_t index) const;

    // All 2^rank elements of the subspace, in deterministic order.
    std::vector<GF2Vector> elements() const;

private:
    std::size_t ambient_;
    std::vector<GF2Vector> rows_;      // reduced, sorted by pivot
    std::vector<std::size_t> pivots_;  // strictly increasing
};

}  // namespace smc

#endif
