#include "smallcover/chain.hpp"

#include <algorithm>
#include <numeric>

namespace smc {

ComplexBuilder::ComplexBuilder(int top_dim) {
    if (top_dim < 0) throw std::invalid_argument("ComplexBuilder: negative top dimension");
    cx_.labels.resize(top_dim + 1);
    cx_.boundary.resize(top_dim + 1);
}

std::uint32_t ComplexBuilder::add_cell(int dim, std::string label,
                                       std::vector<std::uint32_t> boundary_ids) {
    if (finished_) throw std::logic_error("ComplexBuilder: already finished");
    if (dim < 0 || dim > cx_.top_dim()) throw std::invalid_argument("add_cell: dim out of range");
    if (dim == 0 && !boundary_ids.empty())
        throw std::invalid_argument("add_cell: 0-cell with boundary");

    // Reduce mod 2: sorted list, pairs cancel.
    std::sort(boundary_ids.begin(), boundary_ids.end());
    std::vector<std::uint32_t> reduced;
    for (std::size_t i = 0; i < boundary_ids.size();) {
        std::size_t j = i;
        while (j < boundary_ids.size() && boundary_ids[j] == boundary_ids[i]) ++j;
        if ((j - i) % 2 == 1) reduced.push_back(boundary_ids[i]);
        i = j;
    }

    if (dim > 0)
        for (auto b : reduced)
            if (b >= cx_.labels[dim - 1].size())
                throw std::logic_error("add_cell: boundary refers to missing cell in dim " +
                                       std::to_string(dim - 1));

    cx_.labels[dim].push_back(std::move(label));
    cx_.boundary[dim].push_back(std::move(reduced));
    return std::uint32_t(cx_.labels[dim].size() - 1);
}

CellComplex ComplexBuilder::finish() {
    if (finished_) throw std::logic_error("ComplexBuilder: already finished");
    finished_ = true;

    // d∘d = 0: for each cell, every (d-2)-cell must appear an even number of
    // times among the boundaries of its boundary cells.
    for (int d = 2; d <= cx_.top_dim(); ++d) {
        std::vector<int> count(cx_.cell_count(d - 2), 0);
        for (std::size_t i = 0; i < cx_.cell_count(d); ++i) {
            std::vector<std::uint32_t> touched;
            for (auto b : cx_.boundary[d][i])
                for (auto bb : cx_.boundary[d - 1][b]) {
                    count[bb] ^= 1;
                    touched.push_back(bb);
                }
            for (auto t : touched)
                if (count[t]) {
                    throw std::logic_error("complex: d∘d != 0 at cell '" + cx_.labels[d][i] +
                                           "' (dim " + std::to_string(d) + "), odd incidence on '" +
                                           cx_.labels[d - 2][t] + "'");
                }
        }
    }
    return std::move(cx_);
}

namespace {

// Boundary matrix of dimension d as a GF(2) matrix: rows are (d-1)-cells,
// columns are d-cells, optionally restricted to masked survivors.
GF2Matrix boundary_matrix(const CellComplex& c, int d, const std::vector<std::vector<char>>* keep) {
    auto alive = [&](int dim, std::uint32_t i) { return !keep || (*keep)[dim][i]; };

    std::vector<std::uint32_t> row_of(c.cell_count(d - 1), 0);
    std::size_t nrows = 0;
    if (d - 1 >= 0)
        for (std::uint32_t i = 0; i < c.cell_count(d - 1); ++i)
            if (alive(d - 1, i)) row_of[i] = std::uint32_t(nrows++);

    std::size_t ncols = 0;
    std::vector<std::uint32_t> col_ids;
    for (std::uint32_t i = 0; i < c.cell_count(d); ++i)
        if (alive(d, i)) {
            col_ids.push_back(i);
            ++ncols;
        }

    GF2Matrix m(nrows, ncols);
    for (std::size_t j = 0; j < col_ids.size(); ++j)
        for (auto b : c.boundary[d][col_ids[j]])
            if (alive(d - 1, b)) m.set(row_of[b], j, true);
    return m;
}

std::vector<std::size_t> betti_from_masks(const CellComplex& c,
                                          const std::vector<std::vector<char>>* keep) {
    int top = c.top_dim();
    std::vector<std::size_t> counts(top + 1, 0), rk(top + 2, 0);
    for (int d = 0; d <= top; ++d) {
        if (!keep)
            counts[d] = c.cell_count(d);
        else
            for (char b : (*keep)[d]) counts[d] += b ? 1 : 0;
    }
    for (int d = 1; d <= top; ++d) rk[d] = rank(boundary_matrix(c, d, keep));

    std::vector<std::size_t> betti(top + 1, 0);
    for (int d = 0; d <= top; ++d) betti[d] = counts[d] - rk[d] - rk[d + 1];
    return betti;
}

}  // namespace

std::vector<std::size_t> betti_mod2(const CellComplex& c) { return betti_from_masks(c, nullptr); }

long long euler_characteristic(const CellComplex& c) {
    long long chi = 0;
    for (int d = 0; d <= c.top_dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * (long long)(c.cell_count(d));
    return chi;
}

Subcomplex make_subcomplex(const CellComplex& parent,
                           const std::vector<std::vector<std::uint32_t>>& ids_per_dim) {
    Subcomplex s;
    s.parent = &parent;
    s.in.resize(parent.top_dim() + 1);
    for (int d = 0; d <= parent.top_dim(); ++d) s.in[d].assign(parent.cell_count(d), 0);
    for (int d = 0; d < int(ids_per_dim.size()); ++d)
        for (auto i : ids_per_dim[d]) {
            if (d > parent.top_dim() || i >= parent.cell_count(d))
                throw std::invalid_argument("make_subcomplex: cell id out of range");
            s.in[d][i] = 1;
        }
    for (int d = 1; d <= parent.top_dim(); ++d)
        for (std::uint32_t i = 0; i < parent.cell_count(d); ++i)
            if (s.in[d][i])
                for (auto b : parent.boundary[d][i])
                    if (!s.in[d - 1][b])
                        throw std::invalid_argument(
                            "make_subcomplex: not boundary-closed: cell '" + parent.labels[d][i] +
                            "' selected but its boundary cell '" + parent.labels[d - 1][b] +
                            "' is not");
    return s;
}

std::vector<std::size_t> relative_betti_mod2(const CellComplex& c, const Subcomplex& a) {
    if (a.parent != &c) throw std::invalid_argument("relative_betti_mod2: subcomplex of a different complex");
    // Quotient chain complex = survivors, boundary entries inside A dropped.
    std::vector<std::vector<char>> keep(c.top_dim() + 1);
    for (int d = 0; d <= c.top_dim(); ++d) {
        keep[d].assign(c.cell_count(d), 0);
        for (std::uint32_t i = 0; i < c.cell_count(d); ++i) keep[d][i] = a.in[d][i] ? 0 : 1;
    }
    return betti_from_masks(c, &keep);
}

namespace {

void check_element(const CellComplex& c, const CellPermutation& g, std::size_t gi) {
    if (int(g.map.size()) != c.top_dim() + 1)
        throw std::invalid_argument("quotient: element " + std::to_string(gi) +
                                    " has wrong number of dimensions");
    for (int d = 0; d <= c.top_dim(); ++d) {
        const auto& perm = g.map[d];
        if (perm.size() != c.cell_count(d))
            throw std::invalid_argument("quotient: element " + std::to_string(gi) +
                                        " has wrong size in dim " + std::to_string(d));
        std::vector<char> seen(perm.size(), 0);
        for (auto img : perm) {
            if (img >= perm.size() || seen[img])
                throw std::invalid_argument("quotient: element " + std::to_string(gi) +
                                            " is not a permutation in dim " + std::to_string(d));
            seen[img] = 1;
        }
    }
    // Boundary preservation and regularity.
    for (int d = 1; d <= c.top_dim(); ++d) {
        for (std::uint32_t i = 0; i < c.cell_count(d); ++i) {
            std::uint32_t img = g.map[d][i];
            std::vector<std::uint32_t> mapped;
            for (auto b : c.boundary[d][i]) mapped.push_back(g.map[d - 1][b]);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != c.boundary[d][img])
                throw std::invalid_argument("quotient: element " + std::to_string(gi) +
                                            " does not preserve the boundary of cell '" +
                                            c.labels[d][i] + "'");
            if (img == i)
                for (auto b : c.boundary[d][i])
                    if (g.map[d - 1][b] != b)
                        throw RegularityError(
                            "quotient: element " + std::to_string(gi) + " fixes cell '" +
                                c.labels[d][i] + "' but moves its boundary cell '" +
                                c.labels[d - 1][b] + "'",
                            gi, d, i);
        }
    }
}

struct UnionFind {
    std::vector<std::uint32_t> up;
    explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    std::uint32_t find(std::uint32_t x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

QuotientResult quotient_by_action(const CellComplex& c,
                                  const std::vector<CellPermutation>& elements) {
    for (std::size_t gi = 0; gi < elements.size(); ++gi) check_element(c, elements[gi], gi);

    int top = c.top_dim();
    std::vector<UnionFind> uf;
    for (int d = 0; d <= top; ++d) uf.emplace_back(c.cell_count(d));
    for (const auto& g : elements)
        for (int d = 0; d <= top; ++d)
            for (std::uint32_t i = 0; i < c.cell_count(d); ++i) uf[d].unite(i, g.map[d][i]);

    // Orbit cells, ordered by minimal representative id.
    std::vector<std::vector<std::uint32_t>> orbit_of(top + 1);
    std::vector<std::vector<std::uint32_t>> min_rep(top + 1), max_rep(top + 1);
    for (int d = 0; d <= top; ++d) {
        orbit_of[d].assign(c.cell_count(d), 0);
        std::vector<std::uint32_t> reps;
        for (std::uint32_t i = 0; i < c.cell_count(d); ++i)
            if (uf[d].find(i) == i) reps.push_back(i);
        std::vector<std::uint32_t> orbit_index(c.cell_count(d), 0);
        for (std::uint32_t k = 0; k < reps.size(); ++k) orbit_index[reps[k]] = k;
        min_rep[d] = reps;
        max_rep[d] = reps;
        for (std::uint32_t i = 0; i < c.cell_count(d); ++i) {
            std::uint32_t root = uf[d].find(i);
            orbit_of[d][i] = orbit_index[root];
            max_rep[d][orbit_index[root]] = std::max(max_rep[d][orbit_index[root]], i);
        }
    }

    auto induced_boundary = [&](int d, std::uint32_t rep) {
        std::vector<std::uint32_t> ids;
        for (auto b : c.boundary[d][rep]) ids.push_back(orbit_of[d - 1][b]);
        std::sort(ids.begin(), ids.end());
        std::vector<std::uint32_t> reduced;
        for (std::size_t i = 0; i < ids.size();) {
            std::size_t j = i;
            while (j < ids.size() && ids[j] == ids[i]) ++j;
            if ((j - i) % 2 == 1) reduced.push_back(ids[i]);
            i = j;
        }
        return reduced;
    };

    ComplexBuilder builder(top);
    for (int d = 0; d <= top; ++d) {
        for (std::uint32_t k = 0; k < min_rep[d].size(); ++k) {
            std::vector<std::uint32_t> bnd;
            if (d > 0) {
                bnd = induced_boundary(d, min_rep[d][k]);
                if (max_rep[d][k] != min_rep[d][k] &&
                    induced_boundary(d, max_rep[d][k]) != bnd)
                    throw std::logic_error(
                        "quotient: induced boundary depends on the orbit representative at '" +
                        c.labels[d][min_rep[d][k]] + "'");
            }
            builder.add_cell(d, c.labels[d][min_rep[d][k]], std::move(bnd));
        }
    }

    QuotientResult res;
    res.complex = builder.finish();
    res.orbit_of = std::move(orbit_of);
    return res;
}

CellComplex extract_subcomplex(const CellComplex& c,
                               const std::vector<std::vector<std::uint32_t>>& ids_per_dim,
                               std::vector<std::vector<std::uint32_t>>* new_id_of) {
    int top = -1;
    for (int d = 0; d < int(ids_per_dim.size()); ++d)
        if (!ids_per_dim[d].empty()) top = d;
    if (top < 0) throw std::invalid_argument("extract_subcomplex: empty selection");

    std::vector<std::vector<char>> in(c.top_dim() + 1);
    std::vector<std::vector<std::uint32_t>> idmap(c.top_dim() + 1);
    for (int d = 0; d <= c.top_dim(); ++d) {
        in[d].assign(c.cell_count(d), 0);
        idmap[d].assign(c.cell_count(d), 0);
    }
    for (int d = 0; d < int(ids_per_dim.size()); ++d)
        for (auto i : ids_per_dim[d]) {
            if (d > c.top_dim() || i >= c.cell_count(d))
                throw std::invalid_argument("extract_subcomplex: cell id out of range");
            in[d][i] = 1;
        }

    ComplexBuilder builder(top);
    for (int d = 0; d <= top; ++d) {
        std::uint32_t next = 0;
        for (std::uint32_t i = 0; i < c.cell_count(d); ++i) {
            if (!in[d][i]) continue;
            idmap[d][i] = next++;
            std::vector<std::uint32_t> bnd;
            for (auto b : c.boundary[d][i]) {
                if (!in[d - 1][b])
                    throw std::invalid_argument("extract_subcomplex: selection not boundary-closed at '" +
                                                c.labels[d][i] + "'");
                bnd.push_back(idmap[d - 1][b]);
            }
            builder.add_cell(d, c.labels[d][i], std::move(bnd));
        }
    }
    if (new_id_of) *new_id_of = std::move(idmap);
    return builder.finish();
}

bool isomorphic_via(const CellComplex& a, const CellComplex& b,
                    const std::vector<std::vector<std::uint32_t>>& map, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (a.top_dim() != b.top_dim()) return fail("top dimensions differ");
    if (int(map.size()) != a.top_dim() + 1) return fail("map has wrong number of dimensions");
    for (int d = 0; d <= a.top_dim(); ++d) {
        if (a.cell_count(d) != b.cell_count(d))
            return fail("cell counts differ in dim " + std::to_string(d));
        if (map[d].size() != a.cell_count(d))
            return fail("map has wrong size in dim " + std::to_string(d));
        std::vector<char> hit(b.cell_count(d), 0);
        for (auto img : map[d]) {
            if (img >= b.cell_count(d) || hit[img])
                return fail("map is not a bijection in dim " + std::to_string(d));
            hit[img] = 1;
        }
    }
    for (int d = 1; d <= a.top_dim(); ++d)
        for (std::uint32_t i = 0; i < a.cell_count(d); ++i) {
            std::vector<std::uint32_t> mapped;
            for (auto x : a.boundary[d][i]) mapped.push_back(map[d - 1][x]);
            std::sort(mapped.begin(), mapped.end());
            if (mapped != b.boundary[d][map[d][i]])
                return fail("boundary does not commute at cell '" + a.labels[d][i] + "'");
        }
    return true;
}

}  // namespace smc
