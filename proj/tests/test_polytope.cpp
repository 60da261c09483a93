#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "smallcover/polytope.hpp"

using namespace smc;

namespace {

// Oracle: all faces by brute force over every facet subset, deduplicated by
// vertex set.  Exponential in the facet count; fine for the generators.
std::map<int, std::size_t> faces_by_subset_enumeration(const SimplePolytope& p) {
    std::set<std::vector<int>> seen;
    std::map<int, std::size_t> count_by_dim;
    REQUIRE(p.facet_count <= 20);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << p.facet_count); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < p.vertex_count(); ++v) {
            bool inside = true;
            for (int f = 0; f < p.facet_count && inside; ++f)
                if ((mask >> f) & 1u)
                    inside = std::binary_search(p.vertex_facets[v].begin(),
                                                p.vertex_facets[v].end(), f);
            if (inside) vs.push_back(v);
        }
        if (vs.empty() || seen.count(vs)) continue;
        seen.insert(vs);
        // dimension from the maximal facet set
        std::vector<int> maximal;
        for (int f = 0; f < p.facet_count; ++f) {
            bool contains_all = true;
            for (int v : vs)
                contains_all = contains_all && std::binary_search(p.vertex_facets[v].begin(),
                                                                  p.vertex_facets[v].end(), f);
            if (contains_all) maximal.push_back(f);
        }
        count_by_dim[p.dim - int(maximal.size())]++;
    }
    return count_by_dim;
}

// Oracle: h from the dual simplicial identity, expanded with naive
// polynomial arithmetic.  f~_{i-1} counts the codimension-i faces, with
// f~_{-1} = 1 for the polytope itself.
std::vector<long long> h_by_polynomial_expansion(const SimplePolytope& p) {
    FaceLattice lat = enumerate_faces(p);
    const int n = p.dim;
    std::vector<long long> poly(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        long long count = (i == 0) ? 1 : (long long)(lat.by_dim[n - i].size());
        // multiply count * (t-1)^{n-i} into poly
        std::vector<long long> factor = {1};  // coefficients low..high
        for (int k = 0; k < n - i; ++k) {
            std::vector<long long> next(factor.size() + 1, 0);
            for (std::size_t d = 0; d < factor.size(); ++d) {
                next[d + 1] += factor[d];
                next[d] -= factor[d];
            }
            factor = next;
        }
        for (std::size_t d = 0; d < factor.size(); ++d) poly[d] += count * factor[d];
    }
    std::vector<long long> h(n + 1);
    for (int i = 0; i <= n; ++i) h[i] = poly[n - i];
    return h;
}

bool incidence_isomorphic(const SimplePolytope& a, const SimplePolytope& b) {
    if (a.dim != b.dim || a.facet_count != b.facet_count ||
        a.vertex_count() != b.vertex_count())
        return false;
    REQUIRE(a.facet_count <= 8);
    std::vector<int> perm(a.facet_count);
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [](const SimplePolytope& p, const std::vector<int>* map) {
        std::set<std::vector<int>> s;
        for (const auto& fs : p.vertex_facets) {
            std::vector<int> mapped;
            for (int f : fs) mapped.push_back(map ? (*map)[f] : f);
            std::sort(mapped.begin(), mapped.end());
            s.insert(mapped);
        }
        return s;
    };
    auto bkey = key(b, nullptr);
    do {
        if (key(a, &perm) == bkey) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("validate: simplex passes, non-simple fails with the offending vertex") {
    CHECK(validate(simplex(2)).ok);
    CHECK(validate(cube(3)).ok);
    CHECK(cube(3).vertex_count() == 8);
    CHECK(cube(3).facet_count == 6);

    SimplePolytope bad;
    bad.dim = 2;
    bad.facet_count = 3;
    bad.vertex_facets = {{0, 1, 2}, {0, 2}, {1, 2}};
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.message.find("not simple") != std::string::npos);
    CHECK(rep.message.find("vertex 0") != std::string::npos);

    SimplePolytope dup;
    dup.dim = 1;
    dup.facet_count = 2;
    dup.vertex_facets = {{0}, {0}};
    CHECK_FALSE(validate(dup).ok);

    // simple but not graded: two isolated corner vertices, no 1-faces at all
    SimplePolytope gap;
    gap.dim = 2;
    gap.facet_count = 4;
    gap.vertex_facets = {{0, 1}, {2, 3}};
    ValidationReport gap_rep = validate(gap);
    CHECK_FALSE(gap_rep.ok);
    CHECK(gap_rep.message.find("not graded") != std::string::npos);
}

TEST_CASE("enumerate_faces agrees with subset enumeration") {
    for (const SimplePolytope& p :
         {simplex(2), simplex(3), cube(2), cube(3), polygon(5), polygon(6),
          product(polygon(3), simplex(1))}) {
        REQUIRE(validate(p).ok);
        FaceLattice lat = enumerate_faces(p);
        auto oracle = faces_by_subset_enumeration(p);
        for (int d = 0; d <= p.dim; ++d)
            CHECK(lat.by_dim[d].size() == (oracle.count(d) ? oracle[d] : 0));
        // identity of faces: vertex sets are unique
        std::set<std::vector<int>> vsets;
        for (const auto& f : lat.faces) vsets.insert(f.vertex_set);
        CHECK(vsets.size() == lat.faces.size());
        // a d-face has at least d+1 vertices; every vertex lies in exactly n facets
        for (const auto& f : lat.faces)
            CHECK(int(f.vertex_set.size()) >= f.dim + 1);
    }
}

TEST_CASE("face counts: triangle, cube, hexagon") {
    FaceLattice tri = enumerate_faces(simplex(2));
    CHECK(f_vector(tri) == std::vector<long long>{3, 3});
    CHECK(tri.by_dim[2].size() == 1);

    CHECK(f_vector(cube(3)) == std::vector<long long>{8, 12, 6});
    CHECK(f_vector(polygon(6)) == std::vector<long long>{6, 6});
}

TEST_CASE("h-vector: examples and the polynomial-expansion oracle") {
    for (int n = 1; n <= 5; ++n)
        CHECK(h_vector(simplex(n)) == std::vector<long long>(n + 1, 1));
    CHECK(h_vector(cube(3)) == std::vector<long long>{1, 3, 3, 1});
    for (int m = 3; m <= 8; ++m)
        CHECK(h_vector(polygon(m)) == std::vector<long long>{1, m - 2, 1});

    for (const SimplePolytope& p :
         {simplex(4), cube(2), cube(4), polygon(7), product(polygon(5), simplex(1))}) {
        auto h = h_vector(p);
        CHECK(h == h_by_polynomial_expansion(p));
        // Dehn-Sommerville and the vertex-count identity
        for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] == h[h.size() - 1 - i]);
        CHECK(std::accumulate(h.begin(), h.end(), 0LL) == p.vertex_count());
    }
}

TEST_CASE("generators: products and small isomorphisms") {
    SimplePolytope seg = simplex(1);
    SimplePolytope sq = product(seg, seg);
    CHECK(sq.dim == 2);
    CHECK(incidence_isomorphic(sq, cube(2)));
    CHECK(incidence_isomorphic(polygon(4), cube(2)));
    CHECK_FALSE(incidence_isomorphic(polygon(5), polygon(6)));
    CHECK(product(polygon(3), seg).vertex_count() == 6);
    CHECK(validate(product(polygon(3), seg)).ok);

    CHECK_THROWS_AS(polygon(2), std::invalid_argument);
    CHECK_THROWS_AS(simplex(0), std::invalid_argument);
    CHECK_THROWS_AS(cube(0), std::invalid_argument);
}
