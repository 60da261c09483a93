#include "smallcover/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace smc {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing key '" + key + "'");
    return *it;
}

int require_int(const json& j, const char* key, const std::string& where) {
    const json& v = require(j, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + "." + key + ": expected an integer");
    return v.get<int>();
}

}  // namespace

SimplePolytope polytope_from_json(const json& j) {
    if (j.is_object() && j.contains("generator")) {
        const json& g = j["generator"];
        if (!g.is_string()) throw SchemaError("polytope.generator: expected a string");
        std::vector<int> params;
        if (j.contains("params")) {
            if (!j["params"].is_array()) throw SchemaError("polytope.params: expected an array");
            for (const auto& x : j["params"]) {
                if (!x.is_number_integer()) throw SchemaError("polytope.params: expected integers");
                params.push_back(x.get<int>());
            }
        }
        auto need = [&](std::size_t k) {
            if (params.size() != k)
                throw SchemaError("polytope.generator '" + g.get<std::string>() + "': expected " +
                                  std::to_string(k) + " parameter(s)");
        };
        std::string name = g.get<std::string>();
        try {
            if (name == "simplex") {
                need(1);
                return simplex(params[0]);
            }
            if (name == "cube") {
                need(1);
                return cube(params[0]);
            }
            if (name == "polygon") {
                need(1);
                return polygon(params[0]);
            }
            if (name == "product") {
                const json& factors = require(j, "factors", "polytope");
                if (!factors.is_array() || factors.size() < 2)
                    throw SchemaError("polytope.factors: expected at least two factor polytopes");
                SimplePolytope acc = polytope_from_json(factors[0]);
                for (std::size_t k = 1; k < factors.size(); ++k)
                    acc = product(acc, polytope_from_json(factors[k]));
                return acc;
            }
        } catch (const std::invalid_argument& e) {
            throw SchemaError(std::string("polytope.generator: ") + e.what());
        }
        throw SchemaError("polytope.generator: unknown generator '" + name + "'");
    }

    SimplePolytope p;
    p.dim = require_int(j, "dim", "polytope");
    p.facet_count = require_int(j, "facets", "polytope");
    const json& vs = require(j, "vertices", "polytope");
    if (!vs.is_array()) throw SchemaError("polytope.vertices: expected an array");
    for (std::size_t v = 0; v < vs.size(); ++v) {
        const json& row = vs[v];
        std::string where = "polytope.vertices[" + std::to_string(v) + "]";
        if (!row.is_array()) throw SchemaError(where + ": expected an array of facet indices");
        std::vector<int> fs;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (!row[k].is_number_integer())
                throw SchemaError(where + "[" + std::to_string(k) + "]: expected an integer");
            int f = row[k].get<int>();
            if (f < 0 || f >= p.facet_count)
                throw SchemaError(where + "[" + std::to_string(k) + "]: facet index " +
                                  std::to_string(f) + " out of range [0," +
                                  std::to_string(p.facet_count) + ")");
            fs.push_back(f);
        }
        std::sort(fs.begin(), fs.end());
        p.vertex_facets.push_back(std::move(fs));
    }
    return p;
}

json polytope_to_json(const SimplePolytope& p) {
    json j;
    j["dim"] = p.dim;
    j["facets"] = p.facet_count;
    j["vertices"] = p.vertex_facets;
    return j;
}

CharacteristicFunction lambda_from_json(const json& j, int facets, int dim) {
    if (!j.is_array()) throw SchemaError("lambda: expected an array of bit rows");
    if (int(j.size()) != facets)
        throw SchemaError("lambda: " + std::to_string(j.size()) + " rows for " +
                          std::to_string(facets) + " facets");
    GF2Matrix m(facets, dim);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j[r];
        std::string where = "lambda[" + std::to_string(r) + "]";
        if (!row.is_array() || int(row.size()) != dim)
            throw SchemaError(where + ": expected a row of " + std::to_string(dim) + " bits");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number_integer() || (row[c].get<int>() != 0 && row[c].get<int>() != 1))
                throw SchemaError(where + "[" + std::to_string(c) + "]: expected 0 or 1");
            m.set(r, c, row[c].get<int>() == 1);
        }
    }
    return CharacteristicFunction{std::move(m)};
}

json lambda_to_json(const CharacteristicFunction& cf) {
    json rows = json::array();
    for (std::size_t r = 0; r < cf.lambda.rows(); ++r) rows.push_back(cf.lambda.row(r).bits());
    return rows;
}

Fixture fixture_from_json(const json& j) {
    Fixture f;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw SchemaError("name: expected a string");
        f.name = j["name"].get<std::string>();
    }
    f.polytope = polytope_from_json(require(j, "polytope", "fixture"));
    f.lambda = lambda_from_json(require(j, "lambda", "fixture"), f.polytope.facet_count,
                                f.polytope.dim);
    if (j.contains("expected")) {
        const json& e = j["expected"];
        if (!e.is_object()) throw SchemaError("expected: expected an object");
        if (e.contains("orientable")) f.expected.orientable = e["orientable"].get<bool>();
        if (e.contains("betti_X"))
            f.expected.betti_x = e["betti_X"].get<std::vector<std::size_t>>();
        if (e.contains("betti_Q"))
            f.expected.betti_q = e["betti_Q"].get<std::vector<std::size_t>>();
        if (e.contains("provenance")) f.expected.provenance = e["provenance"].get<std::string>();
    }
    return f;
}

json fixture_to_json(const Fixture& f) {
    json j;
    j["name"] = f.name;
    j["polytope"] = polytope_to_json(f.polytope);
    j["lambda"] = lambda_to_json(f.lambda);
    json e = json::object();
    if (f.expected.orientable) e["orientable"] = *f.expected.orientable;
    if (f.expected.betti_x) e["betti_X"] = *f.expected.betti_x;
    if (f.expected.betti_q) e["betti_Q"] = *f.expected.betti_q;
    if (!f.expected.provenance.empty()) e["provenance"] = f.expected.provenance;
    if (!e.empty()) j["expected"] = e;
    return j;
}

Fixture load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("'" + path + "': " + e.what());
    }
    try {
        return fixture_from_json(j);
    } catch (const json::exception& e) {
        throw SchemaError("'" + path + "': " + e.what());
    }
}

json complex_to_json(const CellComplex& c) {
    json cells = json::object();
    json boundary = json::object();
    for (int d = 0; d <= c.top_dim(); ++d) {
        cells[std::to_string(d)] = c.labels[d];
        for (std::size_t i = 0; i < c.cell_count(d); ++i) {
            json b = json::array();
            for (auto x : c.boundary[d][i]) b.push_back(c.labels[d - 1][x]);
            boundary[c.labels[d][i]] = b;
        }
    }
    return json{{"cells", cells}, {"boundary", boundary}};
}

}  // namespace smc
