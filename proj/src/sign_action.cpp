#include "smallcover/sign_action.hpp"

#include <algorithm>
#include <map>

namespace smc {

SignSubgroup sign_subgroup(int n, const std::vector<GF2Vector>& generators) {
    for (const auto& g : generators)
        if (int(g.size()) != n) throw std::invalid_argument("sign_subgroup: generator length != n");
    return SignSubgroup(n, EchelonBasis::span(generators, n));
}

SignSubgroup even_sign_subgroup(int n) {
    if (n < 1) throw std::invalid_argument("even_sign_subgroup: n must be >= 1");
    std::vector<GF2Vector> gens;
    for (int i = 0; i + 1 < n; ++i) {
        GF2Vector v(n);
        v.set(i, true);
        v.set(i + 1, true);
        gens.push_back(std::move(v));
    }
    return sign_subgroup(n, gens);
}

SignSubgroup coordinate_stabilizer(const SignSubgroup& g, const std::vector<int>& zero_set) {
    const int n = g.ambient_n;
    std::vector<char> in_set(n, 0);
    for (int i : zero_set) {
        if (i < 0 || i >= n) throw std::invalid_argument("coordinate_stabilizer: index out of range");
        in_set[i] = 1;
    }
    // Combinations c of the basis with (c^T B) zero outside the set: kernel
    // of the basis matrix restricted to the complementary columns.
    const auto& rows = g.subgroup.rows();
    GF2Matrix restricted(0, rows.size());
    for (int j = 0; j < n; ++j) {
        if (in_set[j]) continue;
        GF2Vector col(rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) col.set(k, rows[k].get(j));
        restricted.append_row(std::move(col));
    }
    std::vector<GF2Vector> gens;
    for (const auto& combo : kernel_basis(restricted)) {
        GF2Vector v(n);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (combo.get(k)) v ^= rows[k];
        gens.push_back(std::move(v));
    }
    return sign_subgroup(n, gens);
}

unsigned long long even_binomial_sum(int k) {
    if (k < 0) throw std::invalid_argument("even_binomial_sum: k must be >= 0");
    if (k > 62) throw std::invalid_argument("even_binomial_sum: k too large");
    // C(k, j) summed over even j, by the Pascal recurrence.
    std::vector<unsigned long long> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    unsigned long long sum = 0;
    for (int j = 0; j <= k; j += 2) sum += row[j];
    return sum;
}

bool is_generated_by_rotations(const SignSubgroup& h) {
    EchelonBasis span(h.ambient_n);
    for (const auto& v : h.elements())
        if (v.popcount() == 2) span.insert(v);
    return span.rank() == h.subgroup.rank();
}

std::vector<GF2Vector> WeakEquivalence::image_elements() const {
    std::size_t k = phi.cols();
    if (k > 16) throw std::logic_error("image_elements: domain too large to enumerate");
    std::vector<GF2Vector> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        GF2Vector t(k);
        for (std::size_t i = 0; i < k; ++i)
            if ((mask >> i) & 1u) t.set(i, true);
        out.push_back(phi.apply(t));
    }
    return out;
}

WeakEquivalence weak_equivalence_iso(const std::vector<GF2Vector>& weights) {
    const int n = int(weights.size());
    if (n < 1) throw std::invalid_argument("weak_equivalence_iso: no weights");
    const std::size_t k = weights[0].size();
    if (k + 1 != std::size_t(n))
        throw std::invalid_argument("weak_equivalence_iso: need n weights on Z_2^{n-1}");
    for (const auto& w : weights)
        if (w.size() != k) throw std::invalid_argument("weak_equivalence_iso: ragged weights");

    // General position: every (n-1)-subset independent.  A violation is
    // reported with the offending subset.
    for (int skip = 0; skip < n; ++skip) {
        GF2Matrix m(0, k);
        std::vector<int> subset;
        for (int j = 0; j < n; ++j)
            if (j != skip) {
                m.append_row(weights[j]);
                subset.push_back(j);
            }
        if (rank(m) != k)
            throw GeneralPositionError(
                "weights not in general position: subset omitting index " + std::to_string(skip) +
                    " is dependent" +
                    (std::any_of(weights.begin(), weights.end(),
                                 [](const GF2Vector& w) { return w.is_zero(); })
                         ? " (a weight is zero, so fixed points are not isolated)"
                         : ""),
                subset);
    }

    WeakEquivalence we;
    we.phi = GF2Matrix::from_rows(weights, k);

    // n vectors in a (n-1)-space are dependent, and general position forces
    // the only relation to involve all of them, so the weights sum to zero
    // and every value of phi has even support.
    GF2Vector sum(k);
    for (const auto& w : weights) sum ^= w;
    if (!sum.is_zero()) throw std::logic_error("weak_equivalence_iso: weights do not sum to zero");
    if (rank(we.phi) != k) throw std::logic_error("weak_equivalence_iso: phi not injective");

    if (k <= 16) {
        auto image = we.image_elements();
        auto expected = even_sign_subgroup(n).elements();
        std::sort(image.begin(), image.end());
        std::sort(expected.begin(), expected.end());
        if (image != expected)
            throw std::logic_error("weak_equivalence_iso: image differs from the even sign subgroup");
    }
    return we;
}

std::uint32_t SimplicialComplex::find(int d, const std::vector<int>& vs) const {
    const auto& level = simplices[d];
    auto it = std::lower_bound(level.begin(), level.end(), vs);
    if (it == level.end() || *it != vs)
        throw std::logic_error("SimplicialComplex: simplex not found");
    return std::uint32_t(it - level.begin());
}

CellComplex SimplicialComplex::to_cell_complex() const {
    ComplexBuilder builder(top_dim());
    for (int d = 0; d <= top_dim(); ++d) {
        for (const auto& vs : simplices[d]) {
            std::string label;
            for (std::size_t i = 0; i < vs.size(); ++i)
                label += (i ? "," : "") + vertex_names[vs[i]];
            std::vector<std::uint32_t> bnd;
            if (d > 0)
                for (std::size_t drop = 0; drop < vs.size(); ++drop) {
                    std::vector<int> facet;
                    for (std::size_t i = 0; i < vs.size(); ++i)
                        if (i != drop) facet.push_back(vs[i]);
                    bnd.push_back(find(d - 1, facet));
                }
            builder.add_cell(d, std::move(label), std::move(bnd));
        }
    }
    return builder.finish();
}

CellPermutation SimplicialComplex::induced_permutation(const std::vector<int>& vertex_map) const {
    if (int(vertex_map.size()) != vertex_count)
        throw std::invalid_argument("induced_permutation: wrong vertex map size");
    CellPermutation perm;
    perm.map.resize(top_dim() + 1);
    for (int d = 0; d <= top_dim(); ++d) {
        perm.map[d].resize(simplices[d].size());
        for (std::uint32_t i = 0; i < simplices[d].size(); ++i) {
            std::vector<int> img;
            for (int v : simplices[d][i]) img.push_back(vertex_map[v]);
            std::sort(img.begin(), img.end());
            perm.map[d][i] = find(d, img);
        }
    }
    return perm;
}

SimplicialComplex cross_polytope_boundary(int n) {
    if (n < 1) throw std::invalid_argument("cross_polytope_boundary: n must be >= 1");
    if (n > 16) throw std::invalid_argument("cross_polytope_boundary: n too large");
    SimplicialComplex sc;
    sc.vertex_count = 2 * n;
    for (int i = 0; i < n; ++i) {
        sc.vertex_names.push_back("+e" + std::to_string(i + 1));
        sc.vertex_names.push_back("-e" + std::to_string(i + 1));
    }
    sc.simplices.resize(n);
    // Choose a coordinate subset and a sign for each chosen coordinate.
    for (std::uint32_t coords = 1; coords < (std::uint32_t(1) << n); ++coords) {
        std::vector<int> support;
        for (int i = 0; i < n; ++i)
            if ((coords >> i) & 1u) support.push_back(i);
        int d = int(support.size()) - 1;
        for (std::uint32_t signs = 0; signs < (std::uint32_t(1) << support.size()); ++signs) {
            std::vector<int> vs;
            for (std::size_t j = 0; j < support.size(); ++j)
                vs.push_back(2 * support[j] + int((signs >> j) & 1u));
            std::sort(vs.begin(), vs.end());
            sc.simplices[d].push_back(std::move(vs));
        }
    }
    for (auto& level : sc.simplices) std::sort(level.begin(), level.end());
    return sc;
}

CellComplex cross_polytope_sphere(int n) { return cross_polytope_boundary(n).to_cell_complex(); }

std::vector<int> sign_vertex_permutation(int n, const GF2Vector& h) {
    if (int(h.size()) != n) throw std::invalid_argument("sign_vertex_permutation: length mismatch");
    std::vector<int> perm(2 * n);
    for (int i = 0; i < n; ++i) {
        if (h.get(i)) {
            perm[2 * i] = 2 * i + 1;
            perm[2 * i + 1] = 2 * i;
        } else {
            perm[2 * i] = 2 * i;
            perm[2 * i + 1] = 2 * i + 1;
        }
    }
    return perm;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& sc) {
    SimplicialComplex sd;
    // One vertex per simplex of sc, numbered level by level.
    std::vector<int> offset(sc.top_dim() + 1, 0);
    for (int d = 0; d <= sc.top_dim(); ++d)
        offset[d] = (d == 0 ? 0 : offset[d - 1] + int(sc.simplices[d - 1].size()));
    sd.vertex_count = offset[sc.top_dim()] + int(sc.simplices[sc.top_dim()].size());
    sd.vertex_names.resize(sd.vertex_count);
    for (int d = 0; d <= sc.top_dim(); ++d)
        for (std::size_t i = 0; i < sc.simplices[d].size(); ++i) {
            std::string name = "b(";
            for (std::size_t j = 0; j < sc.simplices[d][i].size(); ++j)
                name += (j ? "," : "") + sc.vertex_names[sc.simplices[d][i][j]];
            sd.vertex_names[offset[d] + i] = name + ")";
        }

    sd.simplices.resize(sc.top_dim() + 1);
    // Simplices are the chains sigma_0 < sigma_1 < ... in the face poset,
    // saturated or not.  Each chain appears once, rooted at its maximal
    // element.
    std::function<void(int, std::uint32_t, std::vector<int>)> extend =
        [&](int d, std::uint32_t idx, std::vector<int> chain) {
            chain.push_back(offset[d] + int(idx));
            std::vector<int> vs = chain;
            std::sort(vs.begin(), vs.end());
            sd.simplices[chain.size() - 1].push_back(std::move(vs));
            const auto& simplex = sc.simplices[d][idx];
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t(1) << simplex.size()); ++mask) {
                std::vector<int> face;
                for (std::size_t i = 0; i < simplex.size(); ++i)
                    if ((mask >> i) & 1u) face.push_back(simplex[i]);
                extend(int(face.size()) - 1, sc.find(int(face.size()) - 1, face), chain);
            }
        };
    for (int d = 0; d <= sc.top_dim(); ++d)
        for (std::uint32_t i = 0; i < sc.simplices[d].size(); ++i) extend(d, i, {});
    for (auto& level : sd.simplices) std::sort(level.begin(), level.end());
    return sd;
}

std::vector<int> subdivided_vertex_map(const SimplicialComplex& sc,
                                       const std::vector<int>& vertex_map) {
    std::vector<int> offset(sc.top_dim() + 1, 0);
    for (int d = 1; d <= sc.top_dim(); ++d)
        offset[d] = offset[d - 1] + int(sc.simplices[d - 1].size());
    int total = offset[sc.top_dim()] + int(sc.simplices[sc.top_dim()].size());
    std::vector<int> out(total);
    for (int d = 0; d <= sc.top_dim(); ++d)
        for (std::uint32_t i = 0; i < sc.simplices[d].size(); ++i) {
            std::vector<int> img;
            for (int v : sc.simplices[d][i]) img.push_back(vertex_map[v]);
            std::sort(img.begin(), img.end());
            out[offset[d] + i] = offset[d] + int(sc.find(d, img));
        }
    return out;
}

std::vector<std::size_t> quotient_homology_with_fallback(
    const SimplicialComplex& sc, const std::vector<std::vector<int>>& vertex_perms) {
    auto attempt = [](const SimplicialComplex& complex,
                      const std::vector<std::vector<int>>& perms) {
        CellComplex cx = complex.to_cell_complex();
        std::vector<CellPermutation> elements;
        for (const auto& vp : perms) elements.push_back(complex.induced_permutation(vp));
        return betti_mod2(quotient_by_action(cx, elements).complex);
    };
    try {
        return attempt(sc, vertex_perms);
    } catch (const RegularityError&) {
        SimplicialComplex sd = barycentric_subdivision(sc);
        std::vector<std::vector<int>> sd_perms;
        for (const auto& vp : vertex_perms) sd_perms.push_back(subdivided_vertex_map(sc, vp));
        try {
            return attempt(sd, sd_perms);
        } catch (const RegularityError& e) {
            throw std::runtime_error(
                std::string("quotient is irregular even after barycentric subdivision: ") +
                e.what());
        }
    }
}

std::vector<std::size_t> quotient_sphere_homology(int n, const SignSubgroup& h) {
    if (h.ambient_n != n) throw std::invalid_argument("quotient_sphere_homology: ambient mismatch");
    if (h.subgroup.rank() > 16)
        throw std::invalid_argument("quotient_sphere_homology: subgroup too large");
    SimplicialComplex sc = cross_polytope_boundary(n);
    std::vector<std::vector<int>> perms;
    for (const auto& el : h.elements()) perms.push_back(sign_vertex_permutation(n, el));
    return quotient_homology_with_fallback(sc, perms);
}

std::vector<std::size_t> sphere_betti(int dim) {
    if (dim < 0) throw std::invalid_argument("sphere_betti: negative dimension");
    if (dim == 0) return {2};
    std::vector<std::size_t> b(dim + 1, 0);
    b[0] = 1;
    b[dim] = 1;
    return b;
}

}  // namespace smc
