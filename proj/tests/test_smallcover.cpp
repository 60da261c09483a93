#include <doctest.h>

#include <numeric>
#include <random>

#include "smallcover/fixtures.hpp"
#include "smallcover/smallcover.hpp"

using namespace smc;

namespace {

GF2Vector bits(std::vector<int> b) { return GF2Vector::from_bits(b); }

SmallCoverComplex build_fixture(const char* name) {
    const Fixture& f = fixture_by_name(name);
    return build_small_cover(f.polytope, f.lambda);
}

std::size_t betti_sum(const CellComplex& c) {
    auto b = betti_mod2(c);
    return std::accumulate(b.begin(), b.end(), std::size_t(0));
}

}  // namespace

TEST_CASE("building the projective plane, torus, and circle") {
    SmallCoverComplex rp2 = build_fixture("RP2");
    CHECK(rp2.complex.cell_count(2) == 4);
    CHECK(rp2.complex.cell_count(1) == 6);
    CHECK(rp2.complex.cell_count(0) == 3);
    CHECK(betti_mod2(rp2.complex) == std::vector<std::size_t>{1, 1, 1});

    SmallCoverComplex t2 = build_fixture("T2");
    CHECK(betti_mod2(t2.complex) == std::vector<std::size_t>{1, 2, 1});

    SmallCoverComplex rp1 = build_fixture("RP1");
    CHECK(betti_mod2(rp1.complex) == std::vector<std::size_t>{1, 1});
    CHECK(rp1.complex.cell_count(0) == 2);
    CHECK(rp1.complex.cell_count(1) == 2);

    // the independence condition is rechecked on entry
    SimplePolytope tri = simplex(2);
    GF2Matrix bad(3, 2);
    bad.set(0, 0, true);
    bad.set(1, 0, true);
    bad.set(2, 1, true);
    CHECK_THROWS_AS(build_small_cover(tri, CharacteristicFunction{bad}), std::domain_error);
}

TEST_CASE("euler characteristic by orbit count; polygons give chi = 4 - m") {
    for (const auto& f : bundled_fixtures()) {
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        CHECK(euler_characteristic(s.complex) == euler_by_orbit_count(s.lattice));
    }
    for (const char* torus : {"RP1", "T2", "T3"})
        CHECK(euler_characteristic(build_fixture(torus).complex) == 0);
    for (int m = 3; m <= 8; ++m) {
        SimplePolytope p = polygon(m);
        // alternate two colors, patch odd cycles with the third
        GF2Matrix lam(m, 2);
        for (int i = 0; i < m; ++i) {
            if (m % 2 == 1 && i == m - 1) {
                lam.set(i, 0, true);
                lam.set(i, 1, true);
            } else {
                lam.set(i, i % 2, true);
            }
        }
        SmallCoverComplex s = build_small_cover(p, CharacteristicFunction{lam});
        CHECK(euler_characteristic(s.complex) == 4 - m);
        CHECK(betti_sum(s.complex) == std::size_t(m));
    }
}

TEST_CASE("fixed sets: full group, subtorus, trivial subgroup") {
    SmallCoverComplex t2 = build_fixture("T2");
    std::vector<GF2Vector> full = {bits({1, 0}), bits({0, 1})};
    CHECK(fixed_set(t2, full).size() == 4);
    for (const auto& ref : fixed_set(t2, full)) CHECK(ref.dim == 0);

    auto g = orientability_functional(fixture_by_name("T2").lambda);
    REQUIRE(g);
    auto fixed_g = fixed_set(t2, g->basis);
    CHECK(fixed_g.size() == 4);
    for (const auto& ref : fixed_g) CHECK(ref.dim == 0);

    CHECK(fixed_set(t2, {}).size() == t2.complex.total_cells());
}

TEST_CASE("formality counts") {
    for (const char* name : {"T2", "RP3", "M2_hexagon"}) {
        SmallCoverComplex s = build_fixture(name);
        FormalityReport rep = formality_check(s);
        CHECK(rep.pass);
    }
    SmallCoverComplex m2 = build_fixture("M2_hexagon");
    FormalityReport rep = formality_check(m2);
    CHECK(rep.fixed_cells == 6);
    CHECK(rep.betti_sum == 6);  // 1 + 4 + 1

    auto g = orientability_functional(fixture_by_name("M2_hexagon").lambda);
    REQUIRE(g);
    CHECK(formality_check(m2, *g).pass);

    Subtorus off = subtorus_from_functional(bits({1, 0}));
    CHECK_THROWS_AS(formality_check(m2, off), std::domain_error);
}

TEST_CASE("face submanifolds: edge, facet, vertex") {
    SmallCoverComplex t3 = build_fixture("T3");
    const FaceLattice& lat = t3.lattice;

    std::uint32_t edge = lat.by_dim[1].front();
    SmallCoverComplex circle = face_submanifold(t3, edge);
    CHECK(circle.polytope.dim == 1);
    CHECK(betti_mod2(circle.complex) == std::vector<std::size_t>{1, 1});

    std::uint32_t facet = lat.by_dim[2].front();
    SmallCoverComplex torus = face_submanifold(t3, facet);
    CHECK(torus.polytope.dim == 2);
    CHECK(betti_mod2(torus.complex) == std::vector<std::size_t>{1, 2, 1});
    CHECK(betti_sum(torus.complex) == 4);

    std::uint32_t vertex = lat.by_dim[0].front();
    SmallCoverComplex point = face_submanifold(t3, vertex);
    CHECK(betti_mod2(point.complex) == std::vector<std::size_t>{1});

    CHECK_THROWS_AS(face_submanifold(t3, lat.whole), std::invalid_argument);

    // betti sum equals the face's vertex count on every proper face of
    // every fixture of dimension <= 3
    for (const char* name : {"RP2", "RP3", "T2", "T3", "M2_hexagon", "K2_square"}) {
        SmallCoverComplex s = build_fixture(name);
        for (std::uint32_t f = 0; f < s.lattice.faces.size(); ++f) {
            if (f == s.lattice.whole) continue;
            SmallCoverComplex sub = face_submanifold(s, f);
            CHECK(betti_sum(sub.complex) == s.lattice.faces[f].vertex_set.size());
            CHECK(sub.polytope.dim == s.lattice.faces[f].dim);
        }
    }
}

TEST_CASE("a facet cover can be the Klein bottle when the colors are unpaired") {
    SimplePolytope c3 = cube(3);
    GF2Matrix lam(6, 3);
    // pair 0: e1 and e1+e2; pair 1: e2, e2; pair 2: e3, e3
    lam.set(0, 0, true);
    lam.set(1, 0, true);
    lam.set(1, 1, true);
    lam.set(2, 1, true);
    lam.set(3, 1, true);
    lam.set(4, 2, true);
    lam.set(5, 2, true);
    CharacteristicFunction cf{lam};
    REQUIRE(check_star(c3, cf).ok);
    SmallCoverComplex s = build_small_cover(c3, cf);

    // the bottom facet (x3 = 0) sees colors e1, e1+e2, e2, e2: three
    // distinct classes mod <e3>, so its cover is non-orientable
    std::uint32_t bottom = 0;
    bool found = false;
    for (auto f : s.lattice.by_dim[2])
        if (s.lattice.faces[f].facet_set == std::vector<int>{4}) {
            bottom = f;
            found = true;
        }
    REQUIRE(found);
    SmallCoverComplex klein = face_submanifold(s, bottom);
    CHECK(betti_mod2(klein.complex) == std::vector<std::size_t>{1, 2, 1});
    CHECK_FALSE(orientability_functional(klein.lambda));
    CHECK(betti_sum(klein.complex) == 4);
}

TEST_CASE("orbit spaces: spheres for the torus, projective 3-space, genus two") {
    for (const char* name : {"T2", "RP3", "M2_hexagon"}) {
        const Fixture& f = fixture_by_name(name);
        auto g = orientability_functional(f.lambda);
        REQUIRE(g);
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        OrbitSpaceComplex q = orbit_space(s, *g);
        CHECK(betti_mod2(q.complex) == *f.expected.betti_q);
        CHECK(q.complex.cell_count(f.polytope.dim) == 2);
        // every proper face contributes exactly one cell
        std::size_t proper = s.lattice.faces.size() - 1;
        CHECK(q.complex.total_cells() == proper + 2);
        CHECK(euler_characteristic(q.complex) == (f.polytope.dim % 2 == 0 ? 2 : 0));
    }

    const Fixture& t2 = fixture_by_name("T2");
    SmallCoverComplex s = build_small_cover(t2.polytope, t2.lambda);
    Subtorus off = subtorus_from_functional(bits({1, 0}));
    CHECK_THROWS_AS(orbit_space(s, off), std::domain_error);
}

TEST_CASE("every random orientable polygon cover has a sphere quotient") {
    // two-colorings of even polygons are exactly the orientable surface
    // covers reachable here; each must double to the 2-sphere
    std::mt19937_64 rng(2024);
    static const int palette[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int trial = 0; trial < 15; ++trial) {
        int m = 2 * (2 + int(rng() % 3));  // 4, 6, 8
        int a = int(rng() % 3), b = int((a + 1 + rng() % 2) % 3);
        GF2Matrix lam(m, 2);
        for (int i = 0; i < m; ++i) {
            const int* col = palette[i % 2 == 0 ? a : b];
            lam.set(i, 0, col[0] == 1);
            lam.set(i, 1, col[1] == 1);
        }
        SimplePolytope p = polygon(m);
        CharacteristicFunction cf{lam};
        REQUIRE(check_star(p, cf).ok);
        auto g = orientability_functional(cf);
        REQUIRE(g);
        SmallCoverComplex s = build_small_cover(p, cf);
        OrbitSpaceComplex q = orbit_space(s, *g);
        CHECK(betti_mod2(q.complex) == std::vector<std::size_t>{1, 0, 1});
        std::string why;
        CHECK_MESSAGE(doubling_isomorphic(s, q, &why), why);
        CHECK(filtration_checks(s, q).pass());
    }
}

TEST_CASE("doubling model: circle, square, solid cube") {
    CellComplex seg = doubling_model(simplex(1));
    CHECK(seg.cell_count(0) == 2);
    CHECK(seg.cell_count(1) == 2);
    CHECK(betti_mod2(seg) == std::vector<std::size_t>{1, 1});

    CellComplex sq = doubling_model(cube(2));
    CHECK(sq.cell_count(0) == 4);
    CHECK(sq.cell_count(1) == 4);
    CHECK(sq.cell_count(2) == 2);
    CHECK(euler_characteristic(sq) == 2);

    CHECK(betti_mod2(doubling_model(cube(3))) == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("doubling model matches the orbit space cell for cell") {
    for (const char* name : {"RP1", "T2", "T3", "RP3", "M2_hexagon"}) {
        const Fixture& f = fixture_by_name(name);
        auto g = orientability_functional(f.lambda);
        REQUIRE(g);
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        OrbitSpaceComplex q = orbit_space(s, *g);
        std::string why;
        CHECK_MESSAGE(doubling_isomorphic(s, q, &why), why);
    }
}

TEST_CASE("filtration: vanishing, face pairs, strata") {
    {
        const Fixture& f = fixture_by_name("T2");
        auto g = orientability_functional(f.lambda);
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        OrbitSpaceComplex q = orbit_space(s, *g);
        auto rel = relative_betti_mod2(q.complex, q.level(0));
        CHECK(rel[0] == 0);  // vanishing below degree n-1 = 1
        FiltrationReport fr = filtration_checks(s, q);
        CHECK(fr.pass());
    }
    {
        const Fixture& f = fixture_by_name("RP3");
        auto g = orientability_functional(f.lambda);
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        OrbitSpaceComplex q = orbit_space(s, *g);
        auto rel = relative_betti_mod2(q.complex, q.level(1));
        CHECK(rel[0] == 0);
        CHECK(rel[1] == 0);
        CHECK(rel == std::vector<std::size_t>{0, 0, 3, 1});
        FiltrationReport fr = filtration_checks(s, q);
        CHECK(fr.relative_vanishing);
        CHECK(fr.face_pairs);
        CHECK(fr.rank_face_bijection);
    }
    {
        // n = 1: the single filtration level is the whole quotient circle
        const Fixture& f = fixture_by_name("RP1");
        auto g = orientability_functional(f.lambda);
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        OrbitSpaceComplex q = orbit_space(s, *g);
        CHECK(q.filtration.size() == 1);
        CHECK(filtration_checks(s, q).pass());
    }
}

TEST_CASE("free cells under the subtorus are exactly those over faces of codim <= 1") {
    for (const char* name : {"T2", "T3", "RP3", "M2_hexagon"}) {
        const Fixture& f = fixture_by_name(name);
        auto g = orientability_functional(f.lambda);
        REQUIRE(g);
        SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
        const int n = f.polytope.dim;
        EchelonBasis g_span = EchelonBasis::span(g->basis, n);
        for (std::uint32_t face = 0; face < s.lattice.faces.size(); ++face) {
            // dim(G ∩ G_F) = dim G + dim G_F - dim(G + G_F)
            EchelonBasis joint = g_span;
            for (const auto& row : s.stabilizer[face].rows()) joint.insert(row);
            std::size_t meet =
                g_span.rank() + s.stabilizer[face].rank() - joint.rank();
            int codim = n - s.lattice.faces[face].dim;
            CHECK((meet == 0) == (codim <= 1));
        }
    }
}
