// Full verification pipeline for one fixture, emitted as a deterministic
// JSON object: orientability and the functional, uniqueness by exhaustive
// sweep, cell homology against the h-vector, the formality count, the sphere
// quotient, the doubling model, and the filtration facts.

#ifndef SMC_REPORT_HPP
#define SMC_REPORT_HPP

#include <json.hpp>

#include "smallcover/json_io.hpp"

namespace smc {

// Throws std::domain_error when the fixture fails validation (polytope or
// independence condition).
nlohmann::json fixture_report(const Fixture& f);

// Reports for all bundled fixtures, computed concurrently, emitted in
// fixture order.
nlohmann::json all_fixture_reports();

}  // namespace smc

#endif
