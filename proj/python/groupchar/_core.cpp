// Python bindings for the main operations: groups, the action 2-groupoid,
// character spaces, exactness, and the derivation dictionary. Rationals
// cross the boundary as strings to stay exact.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupchar/complex.hpp"
#include "groupchar/derivations.hpp"
#include "groupchar/errors.hpp"
#include "groupchar/group.hpp"
#include "groupchar/presented.hpp"

namespace py = pybind11;
using namespace groupchar;

namespace {

std::vector<std::string> vec_out(const Vec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(rational_to_string(x));
    return out;
}

Vec vec_in(const std::vector<std::string>& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(rational_from_string(s));
    return out;
}

std::vector<std::vector<std::string>> basis_out(const Subspace& s) {
    std::vector<std::vector<std::string>> out;
    for (const auto& b : s.basis) out.push_back(vec_out(b));
    return out;
}

py::dict exactness_out(const ExactnessReport& r) {
    py::dict out;
    out["x0_dim"] = r.x0_dim;
    out["x1_dim"] = r.x1_dim;
    out["x2_dim"] = r.x2_dim;
    out["defect_dim_x0"] = r.defect_dim_x0;
    out["all_components_exact"] = r.all_components_exact;
    py::list comps;
    for (const auto& c : r.components) {
        py::dict cj;
        cj["component"] = c.component;
        cj["object_count"] = c.object_count;
        cj["x0_dim"] = c.x0_dim;
        cj["x1_dim"] = c.x1_dim;
        cj["x2_dim"] = c.x2_dim;
        py::list positions;
        for (const auto& p : c.positions) {
            py::dict pj;
            pj["position"] = p.name;
            pj["image_dim"] = p.image_dim;
            pj["kernel_dim"] = p.kernel_dim;
            pj["exact"] = p.equal;
            positions.append(pj);
        }
        cj["positions"] = positions;
        cj["exact"] = c.exact;
        comps.append(cj);
    }
    out["components"] = comps;
    return out;
}

GroupAlgebraElement element_in(const GroupTable& g,
                               const std::map<std::size_t, std::string>& coeffs) {
    GroupAlgebraElement out;
    for (const auto& [idx, c] : coeffs) {
        if (idx >= g.order) throw ValidationError("element index out of range");
        out.add_term(idx, rational_from_string(c));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "character spaces and derivations of finite-group action 2-groupoids";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);

    py::class_<GroupTable>(m, "Group")
        .def_readonly("order", &GroupTable::order)
        .def_readonly("labels", &GroupTable::labels)
        .def("product", &GroupTable::product)
        .def("inverse", &GroupTable::inverse)
        .def("conjugate", &GroupTable::conjugate)
        .def("conjugacy_classes",
             [](const GroupTable& g) { return conjugacy_classes(g).classes; })
        .def("center", [](const GroupTable& g) { return center(g); })
        .def("centralizer",
             [](const GroupTable& g, std::size_t a) { return centralizer(g, a); })
        .def("__repr__", [](const GroupTable& g) {
            return "<Group of order " + std::to_string(g.order) + ">";
        });

    m.def("named_group", &named_group, py::arg("name"), py::arg("order_cap") = 10000);
    m.def(
        "group_from_cayley",
        [](const std::vector<std::vector<std::size_t>>& table,
           std::optional<std::vector<std::string>> labels) {
            return from_cayley_table(table, std::move(labels));
        },
        py::arg("table"), py::arg("labels") = std::nullopt);
    m.def("group_from_permutations", &from_permutation_generators, py::arg("degree"),
          py::arg("generators"), py::arg("element_cap") = 10000);

    py::class_<ActionGroupoid>(m, "ActionGroupoid")
        .def(py::init<GroupTable>())
        .def_property_readonly("group", &ActionGroupoid::group)
        .def_property_readonly("object_count", &ActionGroupoid::object_count)
        .def_property_readonly("morphism_count", &ActionGroupoid::morphism_count)
        .def("source",
             [](const ActionGroupoid& g, std::pair<std::size_t, std::size_t> m) {
                 return g.source({m.first, m.second});
             })
        .def("target",
             [](const ActionGroupoid& g, std::pair<std::size_t, std::size_t> m) {
                 return g.target({m.first, m.second});
             })
        .def("compose",
             [](const ActionGroupoid& g, std::pair<std::size_t, std::size_t> phi,
                std::pair<std::size_t, std::size_t> psi) {
                 Morphism out = g.compose({phi.first, phi.second}, {psi.first, psi.second});
                 return std::make_pair(out.u, out.v);
             })
        .def("hom_set",
             [](const ActionGroupoid& g, std::size_t a, std::size_t b) {
                 std::vector<std::pair<std::size_t, std::size_t>> out;
                 for (const Morphism& m : g.hom_set(a, b)) out.emplace_back(m.u, m.v);
                 return out;
             })
        .def("components", &ActionGroupoid::components)
        .def("x_dims",
             [](const ActionGroupoid& g) {
                 return std::make_tuple(x0_space(g).space.dim(), x1_space(g).space.dim(),
                                        x2_space(g).space.dim());
             })
        .def("x1_basis",
             [](const ActionGroupoid& g) { return basis_out(x1_space(g).space); })
        .def("verify_exactness",
             [](const ActionGroupoid& g) { return exactness_out(verify_exactness(g)); })
        .def("lift_two_character",
             [](const ActionGroupoid& g, const std::vector<std::string>& c) {
                 return vec_out(lift_two_character(g, vec_in(c)));
             });

    py::class_<DerivationTheory>(m, "DerivationTheory")
        .def(py::init<GroupTable, std::size_t>(), py::arg("group"),
             py::arg("max_rows") = kDefaultMaxRows)
        .def_property_readonly("group", &DerivationTheory::group)
        .def("derivation_dim",
             [](const DerivationTheory& t) { return t.derivation_space().dim(); })
        .def("character_dim",
             [](const DerivationTheory& t) { return t.character_space().dim(); })
        .def("weak_inner_dim",
             [](const DerivationTheory& t) { return t.weak_inner_space().dim(); })
        .def("derivation_basis",
             [](const DerivationTheory& t) { return basis_out(t.derivation_space()); })
        .def("chi_point",
             [](const DerivationTheory& t, std::size_t a) { return vec_out(t.chi_point(a)); })
        .def("inner_character",
             [](const DerivationTheory& t, const std::map<std::size_t, std::string>& a) {
                 return vec_out(
                     t.char_from_derivation(t.inner_derivation(element_in(t.group(), a))));
             })
        .def("bracket",
             [](const DerivationTheory& t, const std::vector<std::string>& c1,
                const std::vector<std::string>& c2) {
                 return vec_out(t.bracket_characters(vec_in(c1), vec_in(c2)));
             })
        .def("verify_ideal",
             [](const DerivationTheory& t) {
                 IdealReport r = t.verify_ideal();
                 py::dict out;
                 out["brackets_stay_weak_inner"] = r.brackets_stay_weak_inner;
                 out["loop_identity_holds"] = r.loop_identity_holds;
                 out["composition_identity_holds"] = r.composition_identity_holds;
                 out["checked_pairs"] = r.checked_pairs;
                 out["checked_triples"] = r.checked_triples;
                 out["verdict"] = r.verdict;
                 return out;
             })
        .def("verify_quotient_isomorphism",
             [](const DerivationTheory& t) {
                 IsoReport r = t.verify_quotient_isomorphism();
                 py::dict out;
                 out["weak_inner_maps_onto_trivial_loops"] =
                     r.weak_inner_maps_onto_trivial_loops;
                 out["derivation_quotient_dim"] = r.derivation_quotient_dim;
                 out["character_quotient_dim"] = r.character_quotient_dim;
                 out["quotient_dims_match"] = r.quotient_dims_match;
                 out["bracket_preserved_on_representatives"] =
                     r.bracket_preserved_on_representatives;
                 out["verdict"] = r.verdict;
                 return out;
             })
        .def("outer_dim",
             [](const DerivationTheory& t) { return t.outer_quotient().quotient_dim; });

    py::class_<PresentedGroupoid>(m, "PresentedGroupoid")
        .def_property_readonly("object_count", &PresentedGroupoid::object_count)
        .def_property_readonly("edge_count", &PresentedGroupoid::edge_count)
        .def_readonly("component_count", &PresentedGroupoid::component_count)
        .def("x_dims",
             [](const PresentedGroupoid& g) {
                 return std::make_tuple(x0_space(g).space.dim(), x1_space(g).space.dim(),
                                        x2_space(g).space.dim());
             })
        .def("x1_basis",
             [](const PresentedGroupoid& g) { return basis_out(x1_space(g).space); })
        .def("verify_exactness",
             [](const PresentedGroupoid& g) { return exactness_out(verify_exactness(g)); })
        .def("lift_two_character",
             [](const PresentedGroupoid& g, const std::vector<std::string>& c) {
                 return vec_out(lift_two_character(g, vec_in(c)));
             });

    m.def(
        "presentation",
        [](const std::vector<std::string>& objects,
           const std::vector<std::tuple<std::string, std::size_t, std::size_t>>& edges,
           const std::vector<std::vector<std::pair<std::size_t, int>>>& relations) {
            Quiver q;
            q.objects = objects;
            for (const auto& [name, src, dst] : edges) q.edges.push_back({name, src, dst});
            std::vector<RelationWord> words;
            for (const auto& r : relations) words.push_back({r});
            return validate_presentation(std::move(q), std::move(words));
        },
        py::arg("objects"), py::arg("edges"),
        py::arg("relations") = std::vector<std::vector<std::pair<std::size_t, int>>>{});

    m.attr("inner_derivation_sign") = DerivationTheory::inner_sign_convention;
}
