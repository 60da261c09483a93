#include "smallcover/fixtures.hpp"

#include <stdexcept>

namespace smc {

namespace {

GF2Matrix rows(std::vector<std::vector<int>> bits, int cols) {
    std::vector<GF2Vector> r;
    for (auto& b : bits) r.push_back(GF2Vector::from_bits(b));
    return GF2Matrix::from_rows(std::move(r), cols);
}

// Real projective n-space: the simplex with the standard basis plus the
// all-ones vector.  Orientable exactly when n is odd (the all-ones row pairs
// to n mod 2 against the only candidate functional).
Fixture projective(int n) {
    Fixture f;
    f.name = "RP" + std::to_string(n);
    f.polytope = simplex(n);
    GF2Matrix m(n + 1, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    for (int i = 0; i < n; ++i) m.set(n, i, true);
    f.lambda = CharacteristicFunction{std::move(m)};
    f.expected.orientable = (n % 2 == 1);
    f.expected.betti_x = std::vector<std::size_t>(n + 1, 1);
    if (n % 2 == 1) {
        std::vector<std::size_t> q(n + 1, 0);
        q[0] = q[n] = 1;
        f.expected.betti_q = q;
    }
    f.expected.provenance = "h-vector of the simplex (all ones); parity of the all-ones row";
    return f;
}

// Torus over the n-cube: both facets of pair i get e_i.
Fixture torus(int n) {
    Fixture f;
    f.name = "T" + std::to_string(n);
    f.polytope = cube(n);
    GF2Matrix m(2 * n, n);
    for (int i = 0; i < n; ++i) {
        m.set(2 * i, i, true);
        m.set(2 * i + 1, i, true);
    }
    f.lambda = CharacteristicFunction{std::move(m)};
    f.expected.orientable = true;
    std::vector<std::size_t> bx(n + 1, 0);
    {
        // binomial row: h-vector of the cube
        std::vector<unsigned long long> b(n + 1, 0);
        b[0] = 1;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j >= 1; --j) b[j] += b[j - 1];
        for (int i = 0; i <= n; ++i) bx[i] = std::size_t(b[i]);
    }
    f.expected.betti_x = bx;
    std::vector<std::size_t> q(n + 1, 0);
    q[0] = q[n] = 1;
    f.expected.betti_q = q;
    f.expected.provenance = "h-vector of the cube (binomials); sphere doubling";
    return f;
}

std::vector<Fixture> make_fixtures() {
    std::vector<Fixture> out;

    for (int n = 1; n <= 6; ++n) out.push_back(projective(n));
    for (int n = 2; n <= 4; ++n) out.push_back(torus(n));

    {
        // Orientable genus-2 surface: hexagon with the alternating
        // two-coloring e1, e2.  Any coloring of a polygon that uses all three
        // nonzero vectors of Z_2^2 admits no functional hitting 1 on every
        // facet, so the orientable surface fixtures must stay two-colored.
        Fixture f;
        f.name = "M2_hexagon";
        f.polytope = polygon(6);
        f.lambda = CharacteristicFunction{
            rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}, 2)};
        f.expected.orientable = true;
        f.expected.betti_x = {1, 4, 1};
        f.expected.betti_q = {1, 0, 1};
        f.expected.provenance = "h-vector of the hexagon; sphere doubling";
        out.push_back(f);
    }
    {
        // Non-orientable control: the pentagon is an odd cycle, so adjacent
        // facets force a third color and orientability fails.
        Fixture f;
        f.name = "pentagon_3col";
        f.polytope = polygon(5);
        f.lambda =
            CharacteristicFunction{rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 1}}, 2)};
        f.expected.orientable = false;
        f.expected.betti_x = {1, 3, 1};
        f.expected.provenance = "h-vector of the pentagon; exhaustive functional sweep";
        out.push_back(f);
    }
    {
        // Klein bottle over the square: one facet pair recolored e1+e2.
        Fixture f;
        f.name = "K2_square";
        f.polytope = cube(2);
        f.lambda = CharacteristicFunction{rows({{1, 0}, {1, 0}, {0, 1}, {1, 1}}, 2)};
        f.expected.orientable = false;
        f.expected.betti_x = {1, 2, 1};
        f.expected.provenance = "h-vector of the square; exhaustive functional sweep";
        out.push_back(f);
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
    static const std::vector<Fixture> fixtures = make_fixtures();
    return fixtures;
}

const Fixture& fixture_by_name(const std::string& name) {
    for (const auto& f : bundled_fixtures())
        if (f.name == name) return f;
    throw std::invalid_argument("no bundled fixture named '" + name + "'");
}

}  // namespace smc
