#include "smallcover/smallcover.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace smc {

std::uint32_t SmallCoverComplex::face_of_cell(int dim, std::uint32_t id) const {
    return cell_face[dim][id];
}

std::uint32_t SmallCoverComplex::cell_of(std::uint32_t face, const GF2Vector& coset_member) const {
    const auto& stab = stabilizer[face];
    return cell_base[face] + std::uint32_t(stab.coset_index(stab.reduce(coset_member)));
}

GF2Vector SmallCoverComplex::coset_rep_of_cell(int dim, std::uint32_t id) const {
    std::uint32_t face = cell_face[dim][id];
    return stabilizer[face].coset_rep(id - cell_base[face]);
}

SmallCoverComplex build_small_cover(const SimplePolytope& p, const CharacteristicFunction& cf) {
    ValidationReport star = check_star(p, cf);
    if (!star.ok) throw std::domain_error("build_small_cover: " + star.message);

    SmallCoverComplex s;
    s.polytope = p;
    s.lambda = cf;
    s.lattice = enumerate_faces(p);
    const int n = p.dim;

    s.stabilizer.reserve(s.lattice.faces.size());
    for (const auto& face : s.lattice.faces) {
        std::vector<GF2Vector> gens;
        for (int f : face.facet_set) gens.push_back(cf.lambda.row(f));
        s.stabilizer.push_back(EchelonBasis::span(gens, n));
    }

    // Cells over a face = cosets of its stabilizer, 2^{dim F} of them; the
    // boundary of (F, c) collects every codim-1 subface with c pushed into
    // the finer coset.
    s.cell_base.assign(s.lattice.faces.size(), 0);
    s.cell_face.assign(n + 1, {});
    ComplexBuilder builder(n);
    for (int d = 0; d <= n; ++d) {
        for (auto f : s.lattice.by_dim[d]) {
            const auto& stab = s.stabilizer[f];
            if (stab.rank() != std::size_t(n - d))
                throw std::domain_error("build_small_cover: stabilizer of face of dim " +
                                        std::to_string(d) + " has rank " +
                                        std::to_string(stab.rank()));
            s.cell_base[f] = std::uint32_t(s.cell_face[d].size());
            for (std::uint64_t c = 0; c < stab.coset_count(); ++c) {
                GF2Vector rep = stab.coset_rep(c);
                std::vector<std::uint32_t> bnd;
                for (auto sf : s.lattice.subfaces[f]) {
                    const auto& sub_stab = s.stabilizer[sf];
                    bnd.push_back(s.cell_base[sf] +
                                  std::uint32_t(sub_stab.coset_index(sub_stab.reduce(rep))));
                }
                builder.add_cell(d, "F" + std::to_string(f) + "|" + rep.str(), std::move(bnd));
                s.cell_face[d].push_back(f);
            }
        }
    }
    s.complex = builder.finish();
    return s;
}

std::vector<CellRef> fixed_set(const SmallCoverComplex& s, const std::vector<GF2Vector>& subgroup) {
    std::vector<CellRef> out;
    for (std::uint32_t f = 0; f < s.lattice.faces.size(); ++f) {
        EchelonBasis extended = s.stabilizer[f];
        bool contained = true;
        for (const auto& g : subgroup)
            if (extended.insert(g)) {
                contained = false;
                break;
            }
        if (!contained) continue;
        int d = s.lattice.faces[f].dim;
        for (std::uint64_t c = 0; c < s.stabilizer[f].coset_count(); ++c) {
            std::uint32_t id = s.cell_base[f] + std::uint32_t(c);
            out.push_back({d, id, s.complex.labels[d][id]});
        }
    }
    return out;
}

FormalityReport formality_check(const SmallCoverComplex& s) {
    std::vector<GF2Vector> full;
    for (int i = 0; i < s.polytope.dim; ++i) full.push_back(GF2Vector::unit(s.polytope.dim, i));
    FormalityReport rep;
    rep.fixed_cells = fixed_set(s, full).size();
    for (auto b : betti_mod2(s.complex)) rep.betti_sum += b;
    rep.pass = rep.fixed_cells == rep.betti_sum;
    return rep;
}

FormalityReport formality_check(const SmallCoverComplex& s, const Subtorus& g) {
    if (!is_general_position(s.polytope, s.lambda, g))
        throw std::domain_error("formality_check: subtorus not in general position");
    FormalityReport rep;
    rep.fixed_cells = fixed_set(s, g.basis).size();
    for (auto b : betti_mod2(s.complex)) rep.betti_sum += b;
    rep.pass = rep.fixed_cells == rep.betti_sum;
    return rep;
}

SmallCoverComplex face_submanifold(const SmallCoverComplex& s, std::uint32_t face) {
    const auto& lat = s.lattice;
    if (face >= lat.faces.size()) throw std::out_of_range("face_submanifold: face index");
    if (face == lat.whole)
        throw std::invalid_argument("face_submanifold: need a proper face");
    const Face& f = lat.faces[face];
    const int d = f.dim;
    const auto& stab_f = s.stabilizer[face];
    auto free_pos = stab_f.free_positions();

    auto extract = [&](const GF2Vector& v) {
        GF2Vector out(free_pos.size());
        GF2Vector red = stab_f.reduce(v);
        for (std::size_t k = 0; k < free_pos.size(); ++k) out.set(k, red.get(free_pos[k]));
        return out;
    };

    // Faces of P below this face, graded; they become the faces of the
    // sub-polytope.
    std::vector<std::uint32_t> below;
    for (std::uint32_t g = 0; g < lat.faces.size(); ++g)
        if (lat.face_leq(g, face)) below.push_back(g);

    // Vertex renumbering.
    std::map<int, int> vertex_new;
    for (int v : f.vertex_set) {
        int next = int(vertex_new.size());
        vertex_new[v] = next;
    }

    // Sub-facets: faces of dim d-1 below F; their characteristic vector is
    // the image, in the quotient by the face stabilizer, of the one facet of
    // P they add.
    SimplePolytope subp;
    subp.dim = d;
    std::vector<std::uint32_t> subfacets;
    GF2Matrix sublambda(0, d);
    for (std::uint32_t g : below)
        if (lat.faces[g].dim == d - 1) {
            std::vector<int> extra;
            std::set_difference(lat.faces[g].facet_set.begin(), lat.faces[g].facet_set.end(),
                                f.facet_set.begin(), f.facet_set.end(), std::back_inserter(extra));
            if (extra.empty())
                throw std::logic_error("face_submanifold: subface adds no facet");
            sublambda.append_row(extract(s.lambda.lambda.row(extra.front())));
            subfacets.push_back(g);
        }
    subp.facet_count = int(subfacets.size());
    subp.vertex_facets.assign(f.vertex_set.size(), {});
    for (std::size_t k = 0; k < subfacets.size(); ++k)
        for (int v : lat.faces[subfacets[k]].vertex_set)
            if (vertex_new.count(v)) subp.vertex_facets[vertex_new[v]].push_back(int(k));
    for (auto& fs : subp.vertex_facets) std::sort(fs.begin(), fs.end());

    SmallCoverComplex sub = build_small_cover(subp, CharacteristicFunction{sublambda});

    // The rebuilt cover must be isomorphic to the part of X over this face.
    std::vector<std::vector<std::uint32_t>> picked(s.complex.top_dim() + 1);
    for (std::uint32_t g : below) {
        int gd = lat.faces[g].dim;
        for (std::uint64_t c = 0; c < s.stabilizer[g].coset_count(); ++c)
            picked[gd].push_back(s.cell_base[g] + std::uint32_t(c));
    }
    for (auto& ids : picked) std::sort(ids.begin(), ids.end());
    std::vector<std::vector<std::uint32_t>> old_to_new;
    CellComplex part = extract_subcomplex(s.complex, picked, &old_to_new);

    // Face of P below F  ->  face of the sub-polytope, matched by vertex set.
    std::map<std::vector<int>, std::uint32_t> sub_face_by_vset;
    for (std::uint32_t g = 0; g < sub.lattice.faces.size(); ++g)
        sub_face_by_vset[sub.lattice.faces[g].vertex_set] = g;

    std::vector<std::vector<std::uint32_t>> map(part.top_dim() + 1);
    for (int dd = 0; dd <= part.top_dim(); ++dd) map[dd].resize(part.cell_count(dd));
    for (std::uint32_t g : below) {
        int gd = lat.faces[g].dim;
        std::vector<int> vset;
        for (int v : lat.faces[g].vertex_set) vset.push_back(vertex_new[v]);
        std::sort(vset.begin(), vset.end());
        std::uint32_t sub_face = sub_face_by_vset.at(vset);
        for (std::uint64_t c = 0; c < s.stabilizer[g].coset_count(); ++c) {
            std::uint32_t old_id = s.cell_base[g] + std::uint32_t(c);
            GF2Vector rep = s.stabilizer[g].coset_rep(c);
            map[gd][old_to_new[gd][old_id]] = sub.cell_of(sub_face, extract(rep));
        }
    }
    std::string why;
    if (!isomorphic_via(part, sub.complex, map, &why))
        throw std::logic_error("face_submanifold: rebuilt cover not isomorphic to the subcomplex: " +
                               why);
    return sub;
}

namespace {

std::vector<GF2Vector> subtorus_elements(const Subtorus& g) {
    if (g.basis.size() > 20) throw std::invalid_argument("subtorus too large to enumerate");
    EchelonBasis span = EchelonBasis::span(g.basis, g.xi.size());
    return span.elements();
}

}  // namespace

OrbitSpaceComplex orbit_space(const SmallCoverComplex& s, const Subtorus& g) {
    if (!is_general_position(s.polytope, s.lambda, g))
        throw std::domain_error(
            "orbit_space: subtorus not in general position (the quotient would have boundary)");
    const int n = s.polytope.dim;

    std::vector<CellPermutation> elements;
    for (const auto& el : subtorus_elements(g)) {
        CellPermutation perm;
        perm.map.resize(n + 1);
        for (int d = 0; d <= n; ++d) {
            perm.map[d].resize(s.complex.cell_count(d));
            for (std::uint32_t i = 0; i < s.complex.cell_count(d); ++i) {
                std::uint32_t f = s.cell_face[d][i];
                perm.map[d][i] = s.cell_of(f, s.coset_rep_of_cell(d, i) ^ el);
            }
        }
        elements.push_back(std::move(perm));
    }

    QuotientResult qr = quotient_by_action(s.complex, elements);

    OrbitSpaceComplex q;
    q.dim = n;
    q.complex = std::move(qr.complex);

    // One cell per proper face, two cells over the polytope itself.
    q.face_cell.assign(s.lattice.faces.size(), 0);
    for (std::uint32_t f = 0; f < s.lattice.faces.size(); ++f) {
        int d = s.lattice.faces[f].dim;
        std::uint32_t first = qr.orbit_of[d][s.cell_base[f]];
        if (f == s.lattice.whole) continue;
        for (std::uint64_t c = 0; c < s.stabilizer[f].coset_count(); ++c)
            if (qr.orbit_of[d][s.cell_base[f] + c] != first)
                throw std::logic_error("orbit_space: cells over a proper face form several orbits");
        q.face_cell[f] = first;
    }
    {
        std::uint32_t whole = s.lattice.whole;
        std::vector<std::uint32_t> tops;
        for (std::uint64_t c = 0; c < s.stabilizer[whole].coset_count(); ++c) {
            std::uint32_t o = qr.orbit_of[n][s.cell_base[whole] + c];
            if (std::find(tops.begin(), tops.end(), o) == tops.end()) tops.push_back(o);
        }
        if (tops.size() != 2)
            throw std::logic_error("orbit_space: expected two top cells, found " +
                                   std::to_string(tops.size()));
        q.top_cells = {tops[0], tops[1]};
    }
    if (q.complex.cell_count(n) != 2)
        throw std::logic_error("orbit_space: top dimension has extra cells");

    // Rank filtration: faces of dim <= i for i <= n-2; the last level is the
    // whole quotient, where the free part lives.
    q.filtration.resize(n);
    for (int i = 0; i + 1 < n; ++i) {
        q.filtration[i].assign(n + 1, {});
        for (int d = 0; d <= i; ++d)
            for (auto f : s.lattice.by_dim[d]) q.filtration[i][d].push_back(q.face_cell[f]);
        for (auto& ids : q.filtration[i]) {
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        }
    }
    q.filtration[n - 1].assign(n + 1, {});
    for (int d = 0; d <= n; ++d)
        for (std::uint32_t i = 0; i < q.complex.cell_count(d); ++i)
            q.filtration[n - 1][d].push_back(i);
    return q;
}

Subcomplex OrbitSpaceComplex::level(std::size_t i) const {
    if (i >= filtration.size()) throw std::out_of_range("OrbitSpaceComplex::level");
    return make_subcomplex(complex, filtration[i]);
}

CellComplex doubling_model(const SimplePolytope& p) {
    FaceLattice lat = enumerate_faces(p);
    const int n = p.dim;
    ComplexBuilder builder(n);
    for (int d = 0; d < n; ++d)
        for (auto f : lat.by_dim[d]) {
            std::vector<std::uint32_t> bnd;
            for (auto sf : lat.subfaces[f]) bnd.push_back(lat.rank_in_dim[sf]);
            builder.add_cell(d, "F" + std::to_string(f), std::move(bnd));
        }
    std::vector<std::uint32_t> all_facets;
    for (auto f : lat.by_dim[n - 1]) all_facets.push_back(lat.rank_in_dim[f]);
    builder.add_cell(n, "T0", all_facets);
    builder.add_cell(n, "T1", all_facets);
    return builder.finish();
}

bool doubling_isomorphic(const SmallCoverComplex& s, const OrbitSpaceComplex& q, std::string* why) {
    CellComplex model = doubling_model(s.polytope);
    const int n = s.polytope.dim;
    std::vector<std::vector<std::uint32_t>> map(n + 1);
    for (int d = 0; d < n; ++d) {
        map[d].resize(model.cell_count(d));
        for (auto f : s.lattice.by_dim[d]) map[d][s.lattice.rank_in_dim[f]] = q.face_cell[f];
    }
    map[n] = {q.top_cells[0], q.top_cells[1]};
    return isomorphic_via(model, q.complex, map, why);
}

FiltrationReport filtration_checks(const SmallCoverComplex& s, const OrbitSpaceComplex& q) {
    FiltrationReport rep;
    const int n = q.dim;
    std::string detail;

    // (a) relative homology of (Q, Q_{n-2}) vanishes below degree n-1.
    {
        std::vector<std::size_t> rel;
        if (n >= 2)
            rel = relative_betti_mod2(q.complex, q.level(n - 2));
        else
            rel = betti_mod2(q.complex);
        rep.relative_vanishing = true;
        for (int i = 0; i + 1 < n; ++i)
            if (rel[i] != 0) rep.relative_vanishing = false;
        detail += "rel(Q,Q_{n-2}) = (";
        for (std::size_t i = 0; i < rel.size(); ++i)
            detail += (i ? "," : "") + std::to_string(rel[i]);
        detail += ")";
    }

    // (b) each face of rank i <= n-2, relative to its boundary part, is a
    // mod-2 (D^i, dD^i).
    rep.face_pairs = true;
    for (std::uint32_t f = 0; f < s.lattice.faces.size(); ++f) {
        int i = s.lattice.faces[f].dim;
        if (f == s.lattice.whole || i > n - 2) continue;
        std::vector<std::vector<std::uint32_t>> closure(i + 1), strict(i + 1);
        for (std::uint32_t g = 0; g < s.lattice.faces.size(); ++g)
            if (s.lattice.face_leq(g, f)) {
                closure[s.lattice.faces[g].dim].push_back(q.face_cell[g]);
                if (g != f) strict[s.lattice.faces[g].dim].push_back(q.face_cell[g]);
            }
        std::vector<std::vector<std::uint32_t>> idmap;
        CellComplex face_cx = extract_subcomplex(q.complex, closure, &idmap);
        std::vector<std::vector<std::uint32_t>> strict_new(face_cx.top_dim() + 1);
        for (int d = 0; d < int(strict.size()); ++d)
            for (auto id : strict[d]) strict_new[d].push_back(idmap[d][id]);
        std::vector<std::size_t> rel =
            relative_betti_mod2(face_cx, make_subcomplex(face_cx, strict_new));
        for (int d = 0; d <= i; ++d)
            if (rel[d] != (d == i ? 1u : 0u)) rep.face_pairs = false;
    }

    // (c) components of Q_i \ Q_{i-1} correspond to the dim-i faces of P for
    // i <= n-2, and the top stratum is connected.
    rep.rank_face_bijection = true;
    for (int i = 0; i < n; ++i) {
        // gather cells of level i not in level i-1
        std::vector<std::pair<int, std::uint32_t>> diff;
        std::vector<std::vector<char>> in_prev(n + 1), in_cur(n + 1);
        for (int d = 0; d <= n; ++d) {
            in_prev[d].assign(q.complex.cell_count(d), 0);
            in_cur[d].assign(q.complex.cell_count(d), 0);
        }
        if (i > 0)
            for (int d = 0; d <= n; ++d)
                for (auto id : q.filtration[i - 1][d]) in_prev[d][id] = 1;
        for (int d = 0; d <= n; ++d)
            for (auto id : q.filtration[i][d])
                if (!in_prev[d][id]) {
                    in_cur[d][id] = 1;
                    diff.push_back({d, id});
                }
        // union-find on the difference via the boundary relation
        std::map<std::pair<int, std::uint32_t>, std::size_t> index;
        for (std::size_t k = 0; k < diff.size(); ++k) index[diff[k]] = k;
        std::vector<std::size_t> root(diff.size());
        for (std::size_t k = 0; k < diff.size(); ++k) root[k] = k;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        for (std::size_t k = 0; k < diff.size(); ++k) {
            auto [d, id] = diff[k];
            if (d == 0) continue;
            for (auto b : q.complex.boundary[d][id])
                if (in_cur[d - 1][b]) {
                    auto a = find(k), bb = find(index.at({d - 1, b}));
                    if (a != bb) root[std::max(a, bb)] = std::min(a, bb);
                }
        }
        std::size_t components = 0;
        for (std::size_t k = 0; k < diff.size(); ++k)
            if (find(k) == k) ++components;

        if (i <= n - 2) {
            std::size_t expected = s.lattice.by_dim[i].size();
            if (components != expected) rep.rank_face_bijection = false;
            // the cells themselves must be exactly the face cells of dim i
            std::vector<std::uint32_t> got, want;
            for (auto [d, id] : diff) {
                if (d != i) rep.rank_face_bijection = false;
                got.push_back(id);
            }
            for (auto f : s.lattice.by_dim[i]) want.push_back(q.face_cell[f]);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) rep.rank_face_bijection = false;
        } else {
            if (components != 1) rep.rank_face_bijection = false;
        }
    }

    rep.detail = detail;
    return rep;
}

long long euler_by_orbit_count(const FaceLattice& lat) {
    long long chi = 0;
    for (int d = 0; d <= lat.dim; ++d)
        chi += (d % 2 == 0 ? 1 : -1) * (long long)(lat.by_dim[d].size()) * (1LL << d);
    return chi;
}

}  // namespace smc
