#include "smallcover/charfun.hpp"

#include <string>

namespace smc {

namespace {

void check_shape(const SimplePolytope& p, const CharacteristicFunction& cf) {
    if (int(cf.lambda.rows()) != p.facet_count)
        throw std::invalid_argument("characteristic function: " + std::to_string(cf.lambda.rows()) +
                                    " rows for " + std::to_string(p.facet_count) + " facets");
    if (int(cf.lambda.cols()) != p.dim)
        throw std::invalid_argument("characteristic function: row length " +
                                    std::to_string(cf.lambda.cols()) + " != dim " +
                                    std::to_string(p.dim));
}

GF2Matrix rows_at_vertex(const SimplePolytope& p, const CharacteristicFunction& cf, int vertex) {
    GF2Matrix b(0, cf.lambda.cols());
    for (int f : p.vertex_facets[vertex]) b.append_row(cf.lambda.row(f));
    return b;
}

std::string facet_list(const std::vector<int>& fs) {
    std::string s = "{";
    for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? "," : "") + std::to_string(fs[i]);
    return s + "}";
}

}  // namespace

Subtorus subtorus_from_functional(const GF2Vector& xi) {
    if (xi.is_zero()) throw std::invalid_argument("subtorus: xi must be nonzero");
    Subtorus g;
    g.xi = xi;
    g.basis = kernel_basis(GF2Matrix::from_rows({xi}, xi.size()));
    return g;
}

ValidationReport check_star(const SimplePolytope& p, const CharacteristicFunction& cf) {
    check_shape(p, cf);
    ValidationReport rep;
    // Independence at every vertex covers every face: a face's facet set
    // extends to a vertex's facet set, and subsets of independent sets stay
    // independent.
    for (int v = 0; v < p.vertex_count(); ++v) {
        if (rank(rows_at_vertex(p, cf, v)) != std::size_t(p.dim)) {
            rep.ok = false;
            rep.message = "independence fails at vertex " + std::to_string(v) + " = facets " +
                          facet_list(p.vertex_facets[v]);
            return rep;
        }
    }
    return rep;
}

TangentWeights tangent_weights(const SimplePolytope& p, const CharacteristicFunction& cf,
                               int vertex) {
    check_shape(p, cf);
    if (vertex < 0 || vertex >= p.vertex_count())
        throw std::out_of_range("tangent_weights: vertex index out of range");
    GF2Matrix b = rows_at_vertex(p, cf, vertex);
    auto binv = inverse(b);
    if (!binv)
        throw std::domain_error("tangent_weights: lambda rows at vertex " +
                                std::to_string(vertex) + " are dependent");
    TangentWeights tw;
    tw.vertex = vertex;
    // Row j of (B^-1)^T pairs to delta_jk against row k of B.
    GF2Matrix w = binv->transposed();
    for (std::size_t j = 0; j < w.rows(); ++j) tw.weights.push_back(w.row(j));
    return tw;
}

std::optional<Subtorus> orientability_functional(const CharacteristicFunction& cf) {
    auto sol = solve_affine(cf.lambda, GF2Vector::all_ones(cf.lambda.rows()));
    if (!sol) return std::nullopt;
    return subtorus_from_functional(sol->x);
}

std::size_t count_orienting_functionals(const CharacteristicFunction& cf) {
    std::size_t n = cf.lambda.cols();
    if (n > 24) throw std::invalid_argument("count_orienting_functionals: n too large");
    std::size_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        GF2Vector xi(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) xi.set(i, true);
        bool good = true;
        for (std::size_t r = 0; r < cf.lambda.rows() && good; ++r)
            good = cf.lambda.row(r).dot(xi);
        if (good) ++count;
    }
    return count;
}

bool is_general_position(const SimplePolytope& p, const CharacteristicFunction& cf,
                         const Subtorus& g) {
    check_shape(p, cf);
    for (std::size_t r = 0; r < cf.lambda.rows(); ++r)
        if (!cf.lambda.row(r).dot(g.xi)) return false;
    return true;
}

bool general_position_by_weights(const SimplePolytope& p, const CharacteristicFunction& cf,
                                 const Subtorus& g) {
    check_shape(p, cf);
    const int n = p.dim;
    for (int v = 0; v < p.vertex_count(); ++v) {
        TangentWeights tw = tangent_weights(p, cf, v);
        // Rank in the quotient (Z_2^n)*/<xi> is rank(span + xi) - 1; every
        // (n-1)-subset of the restricted weights must have rank n-1.
        for (int skip = 0; skip < n; ++skip) {
            GF2Matrix m(0, n);
            for (int j = 0; j < n; ++j)
                if (j != skip) m.append_row(tw.weights[j]);
            m.append_row(g.xi);
            if (rank(m) != std::size_t(n)) return false;
        }
    }
    return true;
}

VertexCanonicalForm canonical_form_at_vertex(const SimplePolytope& p,
                                             const CharacteristicFunction& cf, int vertex,
                                             const Subtorus& g) {
    check_shape(p, cf);
    if (vertex < 0 || vertex >= p.vertex_count())
        throw std::out_of_range("canonical_form_at_vertex: vertex index out of range");
    if (!is_general_position(p, cf, g))
        throw std::domain_error("canonical_form_at_vertex: subtorus is not in general position");

    const int n = p.dim;
    VertexCanonicalForm out;
    out.vertex = vertex;
    out.lambda_basis = rows_at_vertex(p, cf, vertex);

    // Coordinates of v in the lambda-row basis solve B^T x = v.
    GF2Matrix bt = out.lambda_basis.transposed();
    out.subtorus_coords = GF2Matrix(0, n);
    out.sum_zero = true;
    for (const auto& gen : g.basis) {
        auto sol = solve_affine(bt, gen);
        if (!sol) throw std::domain_error("canonical_form_at_vertex: lambda rows do not span");
        if (sol->x.popcount() % 2 != 0) out.sum_zero = false;
        out.subtorus_coords.append_row(sol->x);
    }
    if (rank(out.subtorus_coords) != std::size_t(n) - 1) out.sum_zero = false;
    return out;
}

}  // namespace smc
