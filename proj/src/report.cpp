#include "smallcover/report.hpp"

#include <future>

#include "smallcover/fixtures.hpp"
#include "smallcover/smallcover.hpp"

namespace smc {

using nlohmann::json;

json fixture_report(const Fixture& f) {
    ValidationReport pv = validate(f.polytope);
    if (!pv.ok) throw std::domain_error("polytope invalid: " + pv.message);
    ValidationReport sv = check_star(f.polytope, f.lambda);
    if (!sv.ok) throw std::domain_error("characteristic function invalid: " + sv.message);

    json j;
    j["name"] = f.name;

    SmallCoverComplex s = build_small_cover(f.polytope, f.lambda);
    const int n = f.polytope.dim;

    std::vector<std::size_t> bx = betti_mod2(s.complex);
    std::vector<long long> h = h_vector(s.lattice);
    j["betti_X"] = bx;
    j["h_vector"] = h;

    bool dj = (bx.size() == h.size());
    for (std::size_t i = 0; dj && i < bx.size(); ++i) dj = (long long)(bx[i]) == h[i];

    FormalityReport formality = formality_check(s);
    j["formality_pass"] = formality.pass;

    bool has_expectations = f.expected.orientable || f.expected.betti_x || f.expected.betti_q;
    bool expected_match = true;
    if (f.expected.betti_x) expected_match = expected_match && bx == *f.expected.betti_x;

    json checks;
    checks["star"] = true;
    checks["dj_equality"] = dj;
    checks["euler_orbit_count"] =
        euler_characteristic(s.complex) == euler_by_orbit_count(s.lattice);
    checks["fixed_cells"] = formality.fixed_cells;

    auto g = orientability_functional(f.lambda);
    // uniqueness by exhaustive sweep while 2^n is small, by kernel
    // triviality of the characteristic matrix beyond that
    bool unique;
    if (n <= 20) {
        std::size_t orienting = count_orienting_functionals(f.lambda);
        checks["orienting_functionals"] = orienting;
        unique = orienting == 1;
    } else {
        auto sol = solve_affine(f.lambda.lambda, GF2Vector::all_ones(f.lambda.lambda.rows()));
        unique = sol && sol->unique;
    }
    j["orientable"] = bool(g);
    if (f.expected.orientable) expected_match = expected_match && bool(g) == *f.expected.orientable;
    if (f.expected.betti_q && !g) expected_match = false;
    if (g) {
        j["xi"] = g->xi.str();
        j["unique"] = unique;

        OrbitSpaceComplex q = orbit_space(s, *g);
        std::vector<std::size_t> bq = betti_mod2(q.complex);
        if (f.expected.betti_q) expected_match = expected_match && bq == *f.expected.betti_q;
        j["betti_Q"] = bq;

        std::string why;
        j["doubling_isomorphic"] = doubling_isomorphic(s, q, &why);

        FiltrationReport fr = filtration_checks(s, q);
        j["filtration_pass"] = fr.pass();
        checks["filtration_detail"] = fr.detail;
        checks["general_position_agreement"] =
            is_general_position(f.polytope, f.lambda, *g) ==
            general_position_by_weights(f.polytope, f.lambda, *g);
        FormalityReport restricted = formality_check(s, *g);
        checks["restricted_formality"] = restricted.pass;
    } else {
        j["xi"] = nullptr;
        j["unique"] = nullptr;
    }
    if (has_expectations) j["expected_match"] = expected_match;
    j["checks"] = checks;
    return j;
}

json all_fixture_reports() {
    const auto& fixtures = bundled_fixtures();
    std::vector<std::future<json>> futures;
    futures.reserve(fixtures.size());
    for (const auto& f : fixtures)
        futures.push_back(std::async(std::launch::async, [&f] { return fixture_report(f); }));
    json out = json::array();
    for (auto& fut : futures) out.push_back(fut.get());
    return out;
}

}  // namespace smc
