#include "groupchar/complex.hpp"

#include <algorithm>

#include "groupchar/errors.hpp"

namespace groupchar {

namespace {

// Canonical complement of part inside whole: residuals of the whole basis
// after eliminating part's pivot coordinates, re-canonicalized.
Subspace complement_mod(const Subspace& whole, const Subspace& part) {
    std::vector<Vec> vs;
    vs.reserve(whole.dim());
    for (const auto& b : whole.basis) vs.push_back(part.reduce(b));
    return Subspace::from_spanning(whole.ambient_dim, vs);
}

// Projection of the ambient space onto the canonical complement of part:
// the identity on non-pivot coordinates, each pivot coordinate replaced by
// minus the rest of its basis row.
SparseMatrix projection_matrix(const Subspace& part) {
    const std::size_t n = part.ambient_dim;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : part.pivots) is_pivot[p] = true;
    std::vector<SparseMatrix::Entry> triplets;
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j]) triplets.push_back({j, j, Rational(1)});
    }
    for (std::size_t i = 0; i < part.basis.size(); ++i) {
        const std::size_t p = part.pivots[i];
        for (std::size_t k = 0; k < n; ++k) {
            if (k != p && part.basis[i][k] != 0) {
                triplets.push_back({k, p, -part.basis[i][k]});
            }
        }
    }
    return SparseMatrix::from_triplets(n, n, std::move(triplets));
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<std::string> morphism_labels(const ActionGroupoid& g) {
    std::vector<std::string> out;
    out.reserve(g.morphism_count());
    for (std::size_t i = 0; i < g.morphism_count(); ++i) {
        out.push_back(g.morphism_label(g.morphism_at(i)));
    }
    return out;
}

// Checks both additivity laws of a 2-character represented by a level-1
// vector on a deterministic sample of generated 2-cells.
bool two_character_samples_ok(const ActionGroupoid& g, const Vec& rep) {
    auto value = [&](const TwoCell& cell) {
        return rep[g.index_of(cell.dst)] - rep[g.index_of(cell.src)];
    };
    for (const auto& [id, objects] : g.components()) {
        const std::size_t a = objects.front();
        const std::size_t b = objects.back();
        auto ab = g.hom_set(a, b);
        auto bb = g.hom_set(b, b);
        const std::size_t k = std::min<std::size_t>(ab.size(), 3);
        const std::size_t l = std::min<std::size_t>(bb.size(), 3);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                TwoCell alpha{ab[i], ab[j]};
                // vertical
                for (std::size_t m = 0; m < k; ++m) {
                    TwoCell beta{ab[j], ab[m]};
                    if (value(g.vcompose(alpha, beta)) != value(alpha) + value(beta)) {
                        return false;
                    }
                }
                // horizontal
                for (std::size_t p = 0; p < l; ++p) {
                    for (std::size_t q = 0; q < l; ++q) {
                        TwoCell prime{bb[p], bb[q]};
                        if (value(g.hcompose(alpha, prime)) != value(alpha) + value(prime)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

struct PositionInputs {
    std::size_t objects;            // local object count
    SparseMatrix ones_column;       // phi_0
    SparseMatrix incidence;         // phi_1 on ambient coordinates
    SparseMatrix characters;        // rows cutting out X1
    SparseMatrix loops;             // rows cutting out "trivial on loops"
};

ComponentExactness component_positions(const PositionInputs& in) {
    ComponentExactness out;
    out.object_count = in.objects;

    Subspace x1 = kernel_basis(in.characters);
    Subspace trivial = kernel_basis(vstack(in.characters, in.loops));
    Subspace x2 = complement_mod(x1, trivial);
    out.x0_dim = in.objects;
    out.x1_dim = x1.dim();
    out.x2_dim = x2.dim();

    // 0 -> scalars: the scalar field embeds injectively.
    Subspace ker_phi0 = kernel_basis(in.ones_column);
    out.positions.push_back({"0->Q", 0, ker_phi0.dim(), ker_phi0.dim() == 0});

    // scalars -> X0: constants vs functions killed by phi_1.
    Subspace im_phi0 = image_basis(in.ones_column);
    Subspace ker_phi1 = kernel_basis(in.incidence);
    out.positions.push_back({"Q->X0", im_phi0.dim(), ker_phi1.dim(),
                             subspace_equal(im_phi0, ker_phi1)});

    // X0 -> X1: coboundaries vs trivial-on-loops 1-characters.
    Subspace im_phi1 = image_basis(in.incidence);
    out.positions.push_back({"X0->X1", im_phi1.dim(), trivial.dim(),
                             subspace_equal(im_phi1, trivial)});

    // X1 -> X2: image of the projection vs the whole of X2.
    std::vector<Vec> projected;
    for (const auto& b : x1.basis) projected.push_back(trivial.reduce(b));
    Subspace im_phi2 = Subspace::from_spanning(x1.ambient_dim, projected);
    out.positions.push_back({"X1->X2", im_phi2.dim(), x2.dim(),
                             subspace_equal(im_phi2, x2)});

    out.exact = std::all_of(out.positions.begin(), out.positions.end(),
                            [](const auto& p) { return p.equal; });
    return out;
}

SparseMatrix ones_column(std::size_t n) {
    std::vector<SparseMatrix::Entry> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, 0, Rational(1)});
    return SparseMatrix::from_triplets(n, 1, std::move(t));
}

}  // namespace

// --- action groupoid --------------------------------------------------------

SparseMatrix x1_constraint_matrix(const ActionGroupoid& g, std::size_t max_rows) {
    const std::size_t n = g.group().order;
    const std::size_t rows = n * n * n;
    if (rows > max_rows) {
        throw SizeLimitError("additivity system needs " + std::to_string(rows) +
                             " rows, cap is " + std::to_string(max_rows));
    }
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(3 * rows);
    std::size_t row = 0;
    for (std::size_t phi_idx = 0; phi_idx < n * n; ++phi_idx) {
        const Morphism phi = g.morphism_at(phi_idx);
        const std::size_t b = g.target(phi);
        for (std::size_t v2 = 0; v2 < n; ++v2) {
            const Morphism psi{g.group().product(v2, b), v2};
            const std::size_t composed = g.index_of(g.compose(phi, psi));
            triplets.push_back({row, composed, Rational(1)});
            triplets.push_back({row, phi_idx, Rational(-1)});
            triplets.push_back({row, g.index_of(psi), Rational(-1)});
            ++row;
        }
    }
    return SparseMatrix::from_triplets(rows, n * n, std::move(triplets));
}

SparseMatrix loop_matrix(const ActionGroupoid& g) {
    const std::size_t n = g.group().order;
    std::vector<SparseMatrix::Entry> triplets;
    std::size_t row = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t v : centralizer(g.group(), a)) {
            triplets.push_back({row++, g.index_of({g.group().product(v, a), v}), Rational(1)});
        }
    }
    return SparseMatrix::from_triplets(row, n * n, std::move(triplets));
}

CharacterSpace x0_space(const ActionGroupoid& g) {
    return {0, g.group().labels, Subspace::full(g.object_count())};
}

CharacterSpace x1_space(const ActionGroupoid& g, std::size_t max_rows) {
    return {1, morphism_labels(g), kernel_basis(x1_constraint_matrix(g, max_rows))};
}

CharacterSpace x2_space(const ActionGroupoid& g, std::size_t max_rows) {
    const SparseMatrix constraints = x1_constraint_matrix(g, max_rows);
    Subspace x1 = kernel_basis(constraints);
    Subspace trivial = kernel_basis(vstack(constraints, loop_matrix(g)));
    Subspace x2 = complement_mod(x1, trivial);
    for (const auto& rep : x2.basis) {
        if (!two_character_samples_ok(g, rep)) {
            throw ContractViolation("2-character additivity failed on sampled cells");
        }
    }
    return {2, morphism_labels(g), std::move(x2)};
}

BoundaryMap boundary(int level, const ActionGroupoid& g, std::size_t max_rows) {
    const std::size_t n = g.group().order;
    switch (level) {
        case 0:
            return {-1, 0, ones_column(n)};
        case 1: {
            std::vector<SparseMatrix::Entry> t;
            for (std::size_t i = 0; i < n * n; ++i) {
                const Morphism m = g.morphism_at(i);
                t.push_back({i, g.target(m), Rational(1)});
                t.push_back({i, g.source(m), Rational(-1)});
            }
            return {0, 1, SparseMatrix::from_triplets(n * n, n, std::move(t))};
        }
        case 2: {
            const SparseMatrix constraints = x1_constraint_matrix(g, max_rows);
            Subspace trivial = kernel_basis(vstack(constraints, loop_matrix(g)));
            return {1, 2, projection_matrix(trivial)};
        }
        default:
            throw ContractViolation("boundary level must be 0, 1 or 2");
    }
}

bool is_trivial_on_loops(const Vec& chi, const ActionGroupoid& g) {
    if (chi.size() != g.morphism_count()) {
        throw ContractViolation("level-1 vector has wrong length");
    }
    for (std::size_t a = 0; a < g.group().order; ++a) {
        for (std::size_t v : centralizer(g.group(), a)) {
            if (chi[g.index_of({g.group().product(v, a), v})] != 0) return false;
        }
    }
    return true;
}

ExactnessReport verify_exactness(const ActionGroupoid& g, std::size_t max_rows) {
    const std::size_t n = g.group().order;
    ExactnessReport report;

    for (const auto& [id, objects] : g.components()) {
        // Morphisms of this component, in global enumeration order.
        std::vector<std::size_t> morphisms;
        std::vector<std::size_t> local_of(n * n, n * n);
        for (std::size_t i = 0; i < n * n; ++i) {
            if (g.classes().class_of[g.source(g.morphism_at(i))] == id) {
                local_of[i] = morphisms.size();
                morphisms.push_back(i);
            }
        }
        std::vector<std::size_t> obj_local(n, n);
        for (std::size_t i = 0; i < objects.size(); ++i) obj_local[objects[i]] = i;

        const std::size_t cols = morphisms.size();
        if (cols * n > max_rows) {
            throw SizeLimitError("component additivity system exceeds row cap");
        }

        PositionInputs in;
        in.objects = objects.size();
        in.ones_column = ones_column(objects.size());

        std::vector<SparseMatrix::Entry> inc;
        for (std::size_t i = 0; i < cols; ++i) {
            const Morphism m = g.morphism_at(morphisms[i]);
            inc.push_back({i, obj_local[g.target(m)], Rational(1)});
            inc.push_back({i, obj_local[g.source(m)], Rational(-1)});
        }
        in.incidence = SparseMatrix::from_triplets(cols, objects.size(), std::move(inc));

        std::vector<SparseMatrix::Entry> con;
        std::size_t row = 0;
        for (std::size_t i = 0; i < cols; ++i) {
            const Morphism phi = g.morphism_at(morphisms[i]);
            const std::size_t b = g.target(phi);
            for (std::size_t v2 = 0; v2 < n; ++v2) {
                const Morphism psi{g.group().product(v2, b), v2};
                con.push_back({row, local_of[g.index_of(g.compose(phi, psi))], Rational(1)});
                con.push_back({row, i, Rational(-1)});
                con.push_back({row, local_of[g.index_of(psi)], Rational(-1)});
                ++row;
            }
        }
        in.characters = SparseMatrix::from_triplets(row, cols, std::move(con));

        std::vector<SparseMatrix::Entry> loops;
        row = 0;
        for (std::size_t a : objects) {
            for (std::size_t v : centralizer(g.group(), a)) {
                loops.push_back({row++, local_of[g.index_of({g.group().product(v, a), v})],
                                 Rational(1)});
            }
        }
        in.loops = SparseMatrix::from_triplets(row, cols, std::move(loops));

        ComponentExactness comp = component_positions(in);
        comp.component = id;
        report.x0_dim += comp.x0_dim;
        report.x1_dim += comp.x1_dim;
        report.x2_dim += comp.x2_dim;
        report.components.push_back(std::move(comp));
    }

    Subspace full_constants_kernel = kernel_basis(boundary(1, g, max_rows).matrix);
    report.defect_dim_x0 = full_constants_kernel.dim() - 1;
    report.all_components_exact = std::all_of(
        report.components.begin(), report.components.end(),
        [](const auto& c) { return c.exact; });
    return report;
}

Vec lift_two_character(const ActionGroupoid& g, const Vec& c, std::size_t max_rows) {
    const SparseMatrix constraints = x1_constraint_matrix(g, max_rows);
    if (c.size() != g.morphism_count() || !is_zero(constraints.apply(c))) {
        throw ValidationError("lift input is not a 1-character");
    }
    Vec potential(g.object_count(), Rational(0));
    for (const auto& [id, objects] : g.components()) {
        const std::size_t root = objects.front();
        for (std::size_t b : objects) {
            potential[b] = c[g.index_of(g.hom_set(root, b).front())];
        }
    }
    Vec out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Morphism m = g.morphism_at(i);
        out[i] = c[i] - (potential[g.target(m)] - potential[g.source(m)]);
    }
    return out;
}

// --- presented groupoid -----------------------------------------------------

namespace {

std::vector<std::string> edge_labels(const PresentedGroupoid& g) {
    std::vector<std::string> out;
    for (const auto& e : g.quiver.edges) out.push_back(e.name);
    return out;
}

}  // namespace

CharacterSpace x0_space(const PresentedGroupoid& g) {
    return {0, g.quiver.objects, Subspace::full(g.object_count())};
}

CharacterSpace x1_space(const PresentedGroupoid& g) {
    return {1, edge_labels(g), kernel_basis(relation_matrix(g))};
}

CharacterSpace x2_space(const PresentedGroupoid& g) {
    const SparseMatrix relations = relation_matrix(g);
    Subspace x1 = kernel_basis(relations);
    Subspace trivial =
        kernel_basis(vstack(relations, cycle_matrix(g, spanning_forest(g))));
    return {2, edge_labels(g), complement_mod(x1, trivial)};
}

BoundaryMap boundary(int level, const PresentedGroupoid& g) {
    switch (level) {
        case 0:
            return {-1, 0, ones_column(g.object_count())};
        case 1:
            return {0, 1, incidence_matrix(g)};
        case 2: {
            const SparseMatrix relations = relation_matrix(g);
            Subspace trivial =
                kernel_basis(vstack(relations, cycle_matrix(g, spanning_forest(g))));
            return {1, 2, projection_matrix(trivial)};
        }
        default:
            throw ContractViolation("boundary level must be 0, 1 or 2");
    }
}

bool is_trivial_on_loops(const Vec& chi, const PresentedGroupoid& g) {
    if (chi.size() != g.edge_count()) {
        throw ContractViolation("level-1 vector has wrong length");
    }
    return is_zero(cycle_matrix(g, spanning_forest(g)).apply(chi));
}

ExactnessReport verify_exactness(const PresentedGroupoid& g) {
    ExactnessReport report;
    for (std::size_t id = 0; id < g.component_count; ++id) {
        // Restrict the presentation to one component.
        Quiver q;
        std::vector<std::size_t> obj_local(g.object_count(), g.object_count());
        for (std::size_t o = 0; o < g.object_count(); ++o) {
            if (g.component_of[o] == id) {
                obj_local[o] = q.objects.size();
                q.objects.push_back(g.quiver.objects[o]);
            }
        }
        std::vector<std::size_t> edge_local(g.edge_count(), g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto& edge = g.quiver.edges[e];
            if (g.component_of[edge.src] == id) {
                edge_local[e] = q.edges.size();
                q.edges.push_back({edge.name, obj_local[edge.src], obj_local[edge.dst]});
            }
        }
        std::vector<RelationWord> rels;
        for (const auto& r : g.relations) {
            if (g.component_of[g.quiver.edges[r.word.front().first].src] != id) continue;
            RelationWord local;
            for (const auto& [e, exp] : r.word) local.word.emplace_back(edge_local[e], exp);
            rels.push_back(std::move(local));
        }
        PresentedGroupoid sub = validate_presentation(std::move(q), std::move(rels));

        PositionInputs in;
        in.objects = sub.object_count();
        in.ones_column = ones_column(sub.object_count());
        in.incidence = incidence_matrix(sub);
        in.characters = relation_matrix(sub);
        in.loops = cycle_matrix(sub, spanning_forest(sub));

        ComponentExactness comp = component_positions(in);
        comp.component = id;
        report.x0_dim += comp.x0_dim;
        report.x1_dim += comp.x1_dim;
        report.x2_dim += comp.x2_dim;
        report.components.push_back(std::move(comp));
    }
    Subspace full_constants_kernel = kernel_basis(incidence_matrix(g));
    report.defect_dim_x0 =
        full_constants_kernel.dim() > 0 ? full_constants_kernel.dim() - 1 : 0;
    report.all_components_exact = std::all_of(
        report.components.begin(), report.components.end(),
        [](const auto& c) { return c.exact; });
    return report;
}

Vec lift_two_character(const PresentedGroupoid& g, const Vec& c) {
    if (c.size() != g.edge_count() || !is_zero(relation_matrix(g).apply(c))) {
        throw ValidationError("lift input is not a 1-character of the presentation");
    }
    const SpanningForest forest = spanning_forest(g);
    Vec potential(g.object_count(), Rational(0));
    std::vector<bool> done(g.object_count(), false);
    for (std::size_t root : forest.root_of_component) done[root] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t x = 0; x < g.object_count(); ++x) {
            if (done[x] || !forest.parent_edge[x] || !done[forest.parent[x]]) continue;
            const auto& [edge, orient] = *forest.parent_edge[x];
            potential[x] = potential[forest.parent[x]] + Rational(orient) * c[edge];
            done[x] = true;
            progress = true;
        }
    }
    Vec out(c.size());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.quiver.edges[e];
        out[e] = c[e] - (potential[edge.dst] - potential[edge.src]);
    }
    return out;
}

}  // namespace groupchar
