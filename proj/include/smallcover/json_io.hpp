// JSON schemas for polytopes, characteristic matrices, fixtures, and cell
// complex dumps.  Schema violations raise SchemaError with a position in the
// message; file-level problems raise IOError.

#ifndef SMC_JSON_IO_HPP
#define SMC_JSON_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallcover/chain.hpp"
#include "smallcover/charfun.hpp"
#include "smallcover/polytope.hpp"

namespace smc {

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"dim": n, "facets": m, "vertices": [[facet indices]...]}, or
// {"generator": "cube"|"simplex"|"polygon"|"product", "params": [...]}.
SimplePolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const SimplePolytope& p);

// Array of m bit rows of length n.
CharacteristicFunction lambda_from_json(const nlohmann::json& j, int facets, int dim);
nlohmann::json lambda_to_json(const CharacteristicFunction& cf);

struct ExpectedResults {
    std::optional<bool> orientable;
    std::optional<std::vector<std::size_t>> betti_x;
    std::optional<std::vector<std::size_t>> betti_q;
    std::string provenance;  // which oracle produced the expected values
};

struct Fixture {
    std::string name;
    SimplePolytope polytope;
    CharacteristicFunction lambda;
    ExpectedResults expected;
};

Fixture fixture_from_json(const nlohmann::json& j);
nlohmann::json fixture_to_json(const Fixture& f);

// Parses the file as a fixture ({"polytope":..., "lambda":...}); IOError on
// unreadable files, SchemaError (with byte position where available) on bad
// JSON or schema violations.
Fixture load_fixture_file(const std::string& path);

nlohmann::json complex_to_json(const CellComplex& c);

}  // namespace smc

#endif
