// Batch front end: reads a group or presentation descriptor, runs the
// requested analyses in a fixed order and writes a deterministic report.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "groupchar/complex.hpp"
#include "groupchar/derivations.hpp"
#include "groupchar/errors.hpp"
#include "groupchar/group.hpp"
#include "groupchar/presented.hpp"

using json = nlohmann::ordered_json;
using namespace groupchar;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

const std::vector<std::string> kAnalysisOrder = {
    "complex", "exactness", "derivations", "bracket-table", "ideal", "iso", "lift"};
const std::vector<std::string> kPresentationAnalyses = {"complex", "exactness", "lift"};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("JSON parse error in " + path + ": " + e.what());
    }
}

GroupTable group_from_descriptor(const json& d, std::size_t order_cap) {
    if (!d.is_object() || !d.contains("kind") || !d["kind"].is_string()) {
        throw ValidationError("group descriptor needs a \"kind\" string");
    }
    const std::string kind = d["kind"];
    if (kind == "named") {
        if (!d.contains("name") || !d["name"].is_string()) {
            throw ValidationError("named descriptor needs a \"name\" string");
        }
        return named_group(d["name"].get<std::string>(), order_cap);
    }
    if (kind == "cayley") {
        if (!d.contains("table") || !d["table"].is_array()) {
            throw ValidationError("cayley descriptor needs a \"table\" array");
        }
        std::vector<std::vector<std::size_t>> table;
        for (const auto& row : d["table"]) {
            table.push_back(row.get<std::vector<std::size_t>>());
        }
        if (table.size() > order_cap) throw SizeLimitError("table exceeds the order cap");
        std::optional<std::vector<std::string>> labels;
        if (d.contains("labels")) labels = d["labels"].get<std::vector<std::string>>();
        return from_cayley_table(table, labels);
    }
    if (kind == "permutation") {
        if (!d.contains("degree") || !d.contains("generators")) {
            throw ValidationError("permutation descriptor needs \"degree\" and \"generators\"");
        }
        std::vector<std::vector<std::size_t>> gens;
        for (const auto& g : d["generators"]) gens.push_back(g.get<std::vector<std::size_t>>());
        return from_permutation_generators(d["degree"].get<std::size_t>(), gens, order_cap);
    }
    throw ValidationError("unknown group descriptor kind: " + kind);
}

PresentedGroupoid presentation_from_descriptor(const json& d) {
    if (!d.is_object() || !d.contains("objects") || !d.contains("edges")) {
        throw ValidationError("presentation descriptor needs \"objects\" and \"edges\"");
    }
    Quiver q;
    q.objects = d["objects"].get<std::vector<std::string>>();
    auto object_index = [&](const json& v) -> std::size_t {
        if (v.is_number_unsigned()) return v.get<std::size_t>();
        if (v.is_string()) {
            const std::string name = v;
            auto it = std::find(q.objects.begin(), q.objects.end(), name);
            if (it == q.objects.end()) throw ValidationError("unknown object: " + name);
            return static_cast<std::size_t>(it - q.objects.begin());
        }
        throw ValidationError("object reference must be a name or an index");
    };
    for (const auto& e : d["edges"]) {
        if (!e.contains("name") || !e.contains("src") || !e.contains("dst")) {
            throw ValidationError("edge needs \"name\", \"src\" and \"dst\"");
        }
        q.edges.push_back({e["name"].get<std::string>(), object_index(e["src"]),
                           object_index(e["dst"])});
    }
    std::vector<RelationWord> relations;
    if (d.contains("relations")) {
        for (const auto& word : d["relations"]) {
            RelationWord w;
            for (const auto& letter : word) {
                if (!letter.is_array() || letter.size() != 2) {
                    throw ValidationError("relation letter must be [edge, exponent]");
                }
                std::size_t edge;
                if (letter[0].is_string()) {
                    const std::string name = letter[0];
                    auto it = std::find_if(q.edges.begin(), q.edges.end(),
                                           [&](const auto& e) { return e.name == name; });
                    if (it == q.edges.end()) throw ValidationError("unknown edge: " + name);
                    edge = static_cast<std::size_t>(it - q.edges.begin());
                } else {
                    edge = letter[0].get<std::size_t>();
                }
                w.word.emplace_back(edge, letter[1].get<int>());
            }
            relations.push_back(std::move(w));
        }
    }
    return validate_presentation(std::move(q), std::move(relations));
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_to_string(x));
    return out;
}

json subspace_to_json(const Subspace& s, bool emit_basis) {
    json out;
    out["ambient_dim"] = s.ambient_dim;
    out["dim"] = s.dim();
    if (emit_basis) {
        json basis = json::array();
        for (const auto& b : s.basis) basis.push_back(vec_to_json(b));
        out["basis"] = basis;
        out["pivots"] = s.pivots;
    }
    return out;
}

json exactness_to_json(const ExactnessReport& r) {
    json out;
    out["x0_dim"] = r.x0_dim;
    out["x1_dim"] = r.x1_dim;
    out["x2_dim"] = r.x2_dim;
    out["defect_dim_x0"] = r.defect_dim_x0;
    out["all_components_exact"] = r.all_components_exact;
    json comps = json::array();
    for (const auto& c : r.components) {
        json cj;
        cj["component"] = c.component;
        cj["object_count"] = c.object_count;
        cj["x0_dim"] = c.x0_dim;
        cj["x1_dim"] = c.x1_dim;
        cj["x2_dim"] = c.x2_dim;
        json pos = json::array();
        for (const auto& p : c.positions) {
            pos.push_back({{"position", p.name},
                           {"image_dim", p.image_dim},
                           {"kernel_dim", p.kernel_dim},
                           {"exact", p.equal}});
        }
        cj["positions"] = pos;
        cj["exact"] = c.exact;
        comps.push_back(cj);
    }
    out["components"] = comps;
    return out;
}

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

struct Run {
    json report;
    json timing = json::object();
    std::vector<std::string> failures;
    bool emit_bases = false;

    template <typename F>
    void analysis(const std::string& name, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        report["analyses"][name] = body();
        const auto stop = std::chrono::steady_clock::now();
        timing[name] =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    }

    void fail(const std::string& what) { failures.push_back(what); }
};

template <typename Groupoid>
void run_complex(Run& run, const Groupoid& g, std::size_t max_rows) {
    run.analysis("complex", [&] {
        json out;
        auto put = [&](const char* key, const CharacterSpace& s) {
            out[key] = subspace_to_json(s.space, run.emit_bases);
            if (run.emit_bases) out[key]["coordinates"] = s.coordinates;
        };
        if constexpr (std::is_same_v<Groupoid, ActionGroupoid>) {
            put("x0", x0_space(g));
            put("x1", x1_space(g, max_rows));
            put("x2", x2_space(g, max_rows));
        } else {
            put("x0", x0_space(g));
            put("x1", x1_space(g));
            put("x2", x2_space(g));
        }
        return out;
    });
}

template <typename Groupoid>
void run_exactness(Run& run, const Groupoid& g, std::size_t max_rows) {
    run.analysis("exactness", [&] {
        ExactnessReport r;
        if constexpr (std::is_same_v<Groupoid, ActionGroupoid>) {
            r = verify_exactness(g, max_rows);
        } else {
            r = verify_exactness(g);
        }
        if (!r.all_components_exact) run.fail("exactness: some component is not exact");
        return exactness_to_json(r);
    });
}

template <typename Groupoid>
void run_lift(Run& run, const Groupoid& g, std::size_t max_rows) {
    run.analysis("lift", [&] {
        Subspace x1;
        SparseMatrix phi2{0, 0, {}};
        if constexpr (std::is_same_v<Groupoid, ActionGroupoid>) {
            x1 = x1_space(g, max_rows).space;
            phi2 = boundary(2, g, max_rows).matrix;
        } else {
            x1 = x1_space(g).space;
            phi2 = boundary(2, g).matrix;
        }
        json out;
        bool projection_fixed = true, idempotent = true;
        json lifts = json::array();
        for (const Vec& c : x1.basis) {
            Vec lifted;
            if constexpr (std::is_same_v<Groupoid, ActionGroupoid>) {
                lifted = lift_two_character(g, c, max_rows);
            } else {
                lifted = lift_two_character(g, c);
            }
            Vec a = phi2.apply(lifted), b = phi2.apply(c);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) projection_fixed = false;
            }
            Vec again;
            if constexpr (std::is_same_v<Groupoid, ActionGroupoid>) {
                again = lift_two_character(g, lifted, max_rows);
            } else {
                again = lift_two_character(g, lifted);
            }
            if (again != lifted) idempotent = false;
            if (run.emit_bases) lifts.push_back(vec_to_json(lifted));
        }
        out["basis_size"] = x1.dim();
        out["projection_preserved"] = projection_fixed;
        out["idempotent"] = idempotent;
        if (run.emit_bases) out["lifted_basis"] = lifts;
        if (!projection_fixed) run.fail("lift: phi_2 . lift != phi_2 on the X1 basis");
        if (!idempotent) run.fail("lift: lift is not idempotent");
        return out;
    });
}

void run_derivations(Run& run, const DerivationTheory& t) {
    run.analysis("derivations", [&] {
        json out;
        out["derivation_dim"] = t.derivation_space().dim();
        out["character_dim"] = t.character_space().dim();
        out["weak_inner_dim"] = t.weak_inner_space().dim();
        const bool dims = t.derivation_space().dim() == t.character_space().dim();
        bool round_trip = true;
        for (const Vec& v : t.derivation_space().basis) {
            DerivationMatrix d{t.group().order, v};
            if (t.derivation_from_char(t.char_from_derivation(d)) != d) round_trip = false;
        }
        out["dimension_law_holds"] = dims;
        out["round_trip_identity"] = round_trip;
        if (run.emit_bases) {
            json basis = json::array();
            for (const Vec& v : t.derivation_space().basis) basis.push_back(vec_to_json(v));
            out["derivation_basis"] = basis;
        }
        if (!dims) run.fail("derivations: dim Der != dim X1");
        if (!round_trip) run.fail("derivations: dictionary round trip failed");
        return out;
    });
}

void run_bracket_table(Run& run, const DerivationTheory& t) {
    run.analysis("bracket-table", [&] {
        const GroupTable& g = t.group();
        json table = json::array();
        bool identity_holds = true;
        for (std::size_t a = 0; a < g.order; ++a) {
            for (std::size_t b = 0; b < g.order; ++b) {
                const std::size_t ab = g.product(a, b), ba = g.product(b, a);
                // {chi^a, chi^b} = chi^{ab} - chi^{ba}: structure constants
                // over the point generators.
                Vec lhs = t.bracket_characters(t.chi_point(a), t.chi_point(b));
                Vec rhs = t.chi_point(ab);
                const Vec sub = t.chi_point(ba);
                for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= sub[i];
                if (lhs != rhs) identity_holds = false;
                json entry;
                entry["a"] = g.labels[a];
                entry["b"] = g.labels[b];
                json terms = json::array();
                if (ab != ba) {
                    terms.push_back({{"generator", g.labels[ab]}, {"coefficient", "1"}});
                    terms.push_back({{"generator", g.labels[ba]}, {"coefficient", "-1"}});
                }
                entry["bracket"] = terms;
                table.push_back(entry);
            }
        }
        json out;
        out["generator_count"] = g.order;
        out["structure_constants_identity"] = identity_holds;
        out["table"] = table;
        if (!identity_holds) {
            run.fail("bracket-table: {chi^a, chi^b} != chi^{ab} - chi^{ba}");
        }
        return out;
    });
}

void run_ideal(Run& run, const DerivationTheory& t) {
    run.analysis("ideal", [&] {
        IdealReport r = t.verify_ideal();
        json out;
        out["brackets_stay_weak_inner"] = r.brackets_stay_weak_inner;
        out["loop_identity_holds"] = r.loop_identity_holds;
        out["composition_identity_holds"] = r.composition_identity_holds;
        out["checked_pairs"] = r.checked_pairs;
        out["checked_triples"] = r.checked_triples;
        out["verdict"] = r.verdict;
        if (!r.verdict) run.fail("ideal: weak-inner ideal verification failed");
        return out;
    });
}

void run_iso(Run& run, const DerivationTheory& t) {
    run.analysis("iso", [&] {
        IsoReport r = t.verify_quotient_isomorphism();
        OuterQuotient q = t.outer_quotient();
        json out;
        out["weak_inner_maps_onto_trivial_loops"] = r.weak_inner_maps_onto_trivial_loops;
        out["derivation_quotient_dim"] = r.derivation_quotient_dim;
        out["character_quotient_dim"] = r.character_quotient_dim;
        out["quotient_dims_match"] = r.quotient_dims_match;
        out["bracket_preserved_on_representatives"] = r.bracket_preserved_on_representatives;
        out["outer_dim"] = q.quotient_dim;
        out["verdict"] = r.verdict;
        if (!r.verdict) run.fail("iso: quotient isomorphism verification failed");
        return out;
    });
}

std::string to_csv(const json& report) {
    // Scalar dims only; structured results are JSON-only.
    std::ostringstream out;
    out << "analysis,key,value\n";
    for (const auto& [name, body] : report["analyses"].items()) {
        for (const auto& [key, value] : body.items()) {
            if (value.is_number()) {
                out << name << "," << key << "," << value << "\n";
            } else if (value.is_boolean()) {
                out << name << "," << key << "," << (value.get<bool>() ? "true" : "false")
                    << "\n";
            } else if (value.is_object() && value.contains("dim")) {
                out << name << "," << key << ".dim," << value["dim"] << "\n";
            }
        }
    }
    return out.str();
}

std::string to_text(const json& report) {
    std::ostringstream out;
    out << "input: " << report["input"].dump() << "\n";
    for (const auto& [name, body] : report["analyses"].items()) {
        out << name << ":\n";
        for (const auto& [key, value] : body.items()) {
            if (value.is_number() || value.is_boolean() || value.is_string()) {
                out << "  " << key << " = " << value.dump() << "\n";
            } else if (value.is_object() && value.contains("dim")) {
                out << "  " << key << ".dim = " << value["dim"] << "\n";
            }
        }
    }
    const auto& failures = report["failures"];
    if (failures.empty()) {
        out << "verdict: all requested verifications passed\n";
    } else {
        out << "verdict: FAILED\n";
        for (const auto& f : failures) out << "  " << f.get<std::string>() << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"character spaces and derivations of finite-group action 2-groupoids"};

    std::string group_arg, presentation_path, analyses_arg, format = "json", out_path;
    bool emit_bases = false;
    std::size_t max_rows = kDefaultMaxRows;
    std::size_t max_order = 10000;

    auto* group_opt = app.add_option("--group", group_arg,
                                     "named group (C<n>, D<n>, S<n>, A<n>, Q8) or path to "
                                     "a JSON group descriptor");
    auto* pres_opt = app.add_option("--presentation", presentation_path,
                                    "path to a JSON presentation descriptor");
    group_opt->excludes(pres_opt);
    app.add_option("--analyses", analyses_arg,
                   "comma-separated subset of complex,exactness,derivations,"
                   "bracket-table,ideal,iso,lift")
        ->required();
    app.add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--emit-bases", emit_bases, "include basis vectors in the report");
    app.add_option("--max-rows", max_rows, "constraint-row cap");
    app.add_option("--max-order", max_order, "group order cap");
    app.add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Run run;
    run.emit_bases = emit_bases;
    run.report["schema_version"] = kSchemaVersion;
    run.report["tool_version"] = kToolVersion;
    run.report["input"] = json::object();  // filled once the source is read

    try {
        if (group_arg.empty() && presentation_path.empty()) {
            throw ValidationError("one of --group or --presentation is required");
        }
        if (max_rows == 0 || max_order == 0) {
            throw ValidationError("size caps must be positive");
        }

        std::vector<std::string> requested;
        {
            std::stringstream ss(analyses_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) requested.push_back(item);
            }
        }
        if (requested.empty()) throw ValidationError("at least one analysis is required");
        const auto& allowed =
            presentation_path.empty() ? kAnalysisOrder : kPresentationAnalyses;
        for (const auto& a : requested) {
            if (std::find(allowed.begin(), allowed.end(), a) == allowed.end()) {
                throw ValidationError("unknown or unsupported analysis: " + a);
            }
        }
        auto wants = [&](const std::string& a) {
            return std::find(requested.begin(), requested.end(), a) != requested.end();
        };

        run.report["analyses"] = json::object();

        if (!presentation_path.empty()) {
            json desc = load_json_file(presentation_path);
            PresentedGroupoid g = presentation_from_descriptor(desc);
            run.report["input"] = {{"kind", "presentation"},
                                   {"path", presentation_path},
                                   {"objects", g.object_count()},
                                   {"edges", g.edge_count()},
                                   {"relations", g.relations.size()},
                                   {"components", g.component_count}};
            if (wants("complex")) run_complex(run, g, max_rows);
            if (wants("exactness")) run_exactness(run, g, max_rows);
            if (wants("lift")) run_lift(run, g, max_rows);
        } else {
            GroupTable table;
            json input_echo;
            if (group_arg.find('.') != std::string::npos ||
                group_arg.find('/') != std::string::npos) {
                json desc = load_json_file(group_arg);
                table = group_from_descriptor(desc, max_order);
                input_echo = {{"kind", "group-descriptor"}, {"path", group_arg}};
            } else {
                table = named_group(group_arg, max_order);
                input_echo = {{"kind", "named-group"}, {"name", group_arg}};
            }
            input_echo["order"] = table.order;
            input_echo["conjugacy_classes"] = conjugacy_classes(table).classes.size();
            run.report["input"] = input_echo;

            ActionGroupoid gpd(table);
            DerivationTheory theory(table, max_rows);
            if (wants("complex")) run_complex(run, gpd, max_rows);
            if (wants("exactness")) run_exactness(run, gpd, max_rows);
            if (wants("derivations")) run_derivations(run, theory);
            if (wants("bracket-table")) run_bracket_table(run, theory);
            if (wants("ideal")) run_ideal(run, theory);
            if (wants("iso")) run_iso(run, theory);
            if (wants("lift")) run_lift(run, gpd, max_rows);
        }
    } catch (const SizeLimitError& e) {
        std::cerr << "size cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    run.report["metadata"] = {{"scalar_field", "Q"},
                              {"inner_derivation_sign", DerivationTheory::inner_sign_convention},
                              {"morphism_index", "v*|G|+u"}};
    run.report["failures"] = run.failures;
    run.report["timing"] = run.timing;

    std::string rendered;
    if (format == "json") {
        rendered = run.report.dump(2) + "\n";
    } else if (format == "csv") {
        rendered = to_csv(run.report);
    } else {
        rendered = to_text(run.report);
    }

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "input error: cannot write " << out_path << "\n";
            return 2;
        }
        out << rendered;
    }
    return run.failures.empty() ? 0 : 1;
}
