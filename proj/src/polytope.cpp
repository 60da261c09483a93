#include "smallcover/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace smc {

namespace {

bool sorted_subset(const std::vector<int>& a, const std::vector<int>& b) {
    // a ⊆ b, both sorted
    std::size_t j = 0;
    for (int x : a) {
        while (j < b.size() && b[j] < x) ++j;
        if (j == b.size() || b[j] != x) return false;
        ++j;
    }
    return true;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool FaceLattice::face_leq(std::uint32_t a, std::uint32_t b) const {
    return sorted_subset(faces[a].vertex_set, faces[b].vertex_set);
}

ValidationReport validate(const SimplePolytope& p) {
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.message = std::move(msg);
        return rep;
    };

    if (p.dim < 1) return fail("dim must be >= 1");
    if (p.facet_count < p.dim + 1)
        return fail("facet count " + std::to_string(p.facet_count) + " < dim+1 = " +
                    std::to_string(p.dim + 1));
    if (p.vertex_facets.empty()) return fail("no vertices");

    for (int v = 0; v < p.vertex_count(); ++v) {
        const auto& fs = p.vertex_facets[v];
        if (!std::is_sorted(fs.begin(), fs.end()) ||
            std::adjacent_find(fs.begin(), fs.end()) != fs.end())
            return fail("vertex " + std::to_string(v) + ": facet list not sorted/unique");
        for (int f : fs)
            if (f < 0 || f >= p.facet_count)
                return fail("vertex " + std::to_string(v) + ": facet index " + std::to_string(f) +
                            " out of range");
        if (int(fs.size()) != p.dim)
            return fail("not simple: vertex " + std::to_string(v) + " lies in " +
                        std::to_string(fs.size()) + " facets, expected " + std::to_string(p.dim));
    }

    {
        auto sets = p.vertex_facets;
        std::sort(sets.begin(), sets.end());
        auto dup = std::adjacent_find(sets.begin(), sets.end());
        if (dup != sets.end()) return fail("two vertices share the same facet set");
    }

    std::vector<int> facet_use(p.facet_count, 0);
    for (const auto& fs : p.vertex_facets)
        for (int f : fs) facet_use[f]++;
    for (int f = 0; f < p.facet_count; ++f)
        if (facet_use[f] == 0) return fail("facet " + std::to_string(f) + " contains no vertex");

    // Poset checks on the facet-intersection lattice.
    FaceLattice lat = enumerate_faces(p);
    if (lat.by_dim[p.dim].size() != 1)
        return fail("face poset has " + std::to_string(lat.by_dim[p.dim].size()) +
                    " maximal elements, expected 1");
    for (std::uint32_t f = 0; f < lat.faces.size(); ++f) {
        int d = lat.faces[f].dim;
        if (d >= 1 && lat.subfaces[f].empty())
            return fail("poset not graded: face of dim " + std::to_string(d) +
                        " has no subface of dim " + std::to_string(d - 1));
    }
    // No gaps: every strict containment is realized by a chain of covers.
    std::size_t nf = lat.faces.size();
    std::vector<std::vector<char>> reach(nf, std::vector<char>(nf, 0));
    for (int d = 1; d <= p.dim; ++d)
        for (auto f : lat.by_dim[d])
            for (auto s : lat.subfaces[f]) {
                reach[f][s] = 1;
                for (std::uint32_t t = 0; t < nf; ++t)
                    if (reach[s][t]) reach[f][t] = 1;
            }
    for (std::uint32_t a = 0; a < nf; ++a)
        for (std::uint32_t b = 0; b < nf; ++b)
            if (a != b && lat.face_leq(b, a) && !reach[a][b])
                return fail("poset not graded: containment of face dims " +
                            std::to_string(lat.faces[b].dim) + " < " +
                            std::to_string(lat.faces[a].dim) + " has no saturated chain");

    rep.notes.push_back(
        "combinatorial check only: simplicity and poset gradedness verified; "
        "polytopality of arbitrary incidence input is not certified");
    return rep;
}

FaceLattice enumerate_faces(const SimplePolytope& p) {
    const int n = p.dim;
    const int nv = p.vertex_count();
    if (n < 0 || nv < 1) throw std::invalid_argument("enumerate_faces: empty polytope");
    for (const auto& fs : p.vertex_facets)
        if (int(fs.size()) != n || !std::is_sorted(fs.begin(), fs.end()))
            throw std::invalid_argument("enumerate_faces: input is not a simple incidence structure");

    // Candidate faces: intersections of facet subsets incident to a common
    // vertex.  Every nonempty intersection arises this way.
    std::map<std::vector<int>, Face> by_vset;

    std::vector<std::vector<int>> facet_vertices(p.facet_count);
    for (int v = 0; v < nv; ++v)
        for (int f : p.vertex_facets[v]) facet_vertices[f].push_back(v);

    auto vertices_of = [&](const std::vector<int>& facets) {
        std::vector<int> vs;
        for (int v = 0; v < nv; ++v)
            if (sorted_subset(facets, p.vertex_facets[v])) vs.push_back(v);
        return vs;
    };

    auto add_candidate = [&](const std::vector<int>& facets) {
        std::vector<int> vs = vertices_of(facets);
        if (vs.empty()) return;
        if (by_vset.count(vs)) return;
        // Maximal facet set: every facet containing all of vs.
        std::vector<int> maximal = p.vertex_facets[vs[0]];
        for (std::size_t i = 1; i < vs.size() && !maximal.empty(); ++i)
            maximal = sorted_intersection(maximal, p.vertex_facets[vs[i]]);
        Face face;
        face.facet_set = std::move(maximal);
        face.dim = n - int(face.facet_set.size());
        face.vertex_set = std::move(vs);
        by_vset.emplace(face.vertex_set, std::move(face));
    };

    add_candidate({});  // the whole polytope
    for (int v = 0; v < nv; ++v) {
        const auto& fs = p.vertex_facets[v];
        const std::size_t k = fs.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1u) subset.push_back(fs[i]);
            add_candidate(subset);
        }
    }

    FaceLattice lat;
    lat.dim = n;
    for (auto& [vs, face] : by_vset) lat.faces.push_back(std::move(face));
    std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.vertex_set < b.vertex_set;
    });

    lat.by_dim.assign(std::size_t(n) + 1, {});
    lat.rank_in_dim.assign(lat.faces.size(), 0);
    for (std::uint32_t i = 0; i < lat.faces.size(); ++i) {
        int d = lat.faces[i].dim;
        lat.rank_in_dim[i] = std::uint32_t(lat.by_dim[d].size());
        lat.by_dim[d].push_back(i);
        if (d == n) lat.whole = i;
    }

    lat.subfaces.assign(lat.faces.size(), {});
    for (int d = 1; d <= n; ++d)
        for (auto f : lat.by_dim[d])
            for (auto s : lat.by_dim[d - 1])
                if (lat.face_leq(s, f)) lat.subfaces[f].push_back(s);
    return lat;
}

std::vector<long long> f_vector(const FaceLattice& lat) {
    std::vector<long long> f(lat.dim);
    for (int d = 0; d < lat.dim; ++d) f[d] = (long long)(lat.by_dim[d].size());
    return f;
}

std::vector<long long> f_vector(const SimplePolytope& p) { return f_vector(enumerate_faces(p)); }

std::vector<long long> h_vector(const FaceLattice& lat) {
    const int n = lat.dim;
    // Accumulate sum over faces of (t-1)^{dim F} as integer coefficients.
    std::vector<long long> poly(n + 1, 0);  // poly[k] = coeff of t^k
    std::vector<std::vector<long long>> binom(n + 1, std::vector<long long>(n + 1, 0));
    for (int d = 0; d <= n; ++d) {
        binom[d][0] = 1;
        for (int k = 1; k <= d; ++k)
            binom[d][k] = binom[d - 1][k - 1] + (k <= d - 1 ? binom[d - 1][k] : 0);
    }
    for (int d = 0; d <= n; ++d) {
        long long count = (long long)(lat.by_dim[d].size());
        for (int k = 0; k <= d; ++k) {
            long long term = binom[d][k] * ((d - k) % 2 == 0 ? 1 : -1);
            poly[k] += count * term;
        }
    }
    std::vector<long long> h(n + 1);
    for (int i = 0; i <= n; ++i) h[i] = poly[n - i];

    long long hsum = 0;
    for (auto x : h) hsum += x;
    if (hsum != (long long)(lat.by_dim[0].size()))
        throw std::logic_error("h_vector: sum(h) != vertex count");
    return h;
}

std::vector<long long> h_vector(const SimplePolytope& p) { return h_vector(enumerate_faces(p)); }

SimplePolytope simplex(int n) {
    if (n < 1) throw std::invalid_argument("simplex: n must be >= 1");
    SimplePolytope p;
    p.dim = n;
    p.facet_count = n + 1;
    for (int v = 0; v <= n; ++v) {
        std::vector<int> fs;
        for (int f = 0; f <= n; ++f)
            if (f != v) fs.push_back(f);
        p.vertex_facets.push_back(std::move(fs));
    }
    return p;
}

SimplePolytope cube(int n) {
    if (n < 1) throw std::invalid_argument("cube: n must be >= 1");
    if (n > 20) throw std::invalid_argument("cube: n too large");
    SimplePolytope p;
    p.dim = n;
    p.facet_count = 2 * n;
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << n); ++b) {
        std::vector<int> fs;
        for (int i = 0; i < n; ++i) fs.push_back(2 * i + int((b >> i) & 1u));
        p.vertex_facets.push_back(std::move(fs));
    }
    return p;
}

SimplePolytope polygon(int m) {
    if (m < 3) throw std::invalid_argument("polygon: m must be >= 3");
    SimplePolytope p;
    p.dim = 2;
    p.facet_count = m;
    for (int v = 0; v < m; ++v) {
        std::vector<int> fs = {(v + m - 1) % m, v};
        std::sort(fs.begin(), fs.end());
        p.vertex_facets.push_back(std::move(fs));
    }
    return p;
}

SimplePolytope product(const SimplePolytope& p, const SimplePolytope& q) {
    SimplePolytope r;
    r.dim = p.dim + q.dim;
    r.facet_count = p.facet_count + q.facet_count;
    for (const auto& uf : p.vertex_facets)
        for (const auto& vf : q.vertex_facets) {
            std::vector<int> fs = uf;
            for (int f : vf) fs.push_back(p.facet_count + f);
            r.vertex_facets.push_back(std::move(fs));
        }
    return r;
}

}  // namespace smc
