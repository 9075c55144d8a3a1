// Acceptance suite: one pass/fail line per criterion. Exit 0 iff all pass.
// Usage: acceptance <path-to-groupchar_cli>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupchar/complex.hpp"
#include "groupchar/derivations.hpp"
#include "groupchar/group.hpp"
#include "groupchar/presented.hpp"

#include "oracle_dense.hpp"

using namespace groupchar;

namespace {

const std::vector<std::string> kGroups = {"C2", "C4", "S3", "D4", "Q8", "A4", "S4"};

std::size_t streamed_nullity(const SparseMatrix& m) {
    testing::DenseEliminator elim(m.cols);
    std::size_t at = 0;
    for (std::size_t r = 0; r < m.rows; ++r) {
        Vec row(m.cols, Rational(0));
        while (at < m.entries.size() && m.entries[at].row == r) {
            row[m.entries[at].col] = m.entries[at].value;
            ++at;
        }
        elim.add_row(std::move(row));
    }
    return elim.nullity();
}

// 1. Exactness of the four-position sequence on every conjugacy-class
// component of every test group.
bool criterion_exactness() {
    for (const auto& name : kGroups) {
        ActionGroupoid g{named_group(name)};
        ExactnessReport r = verify_exactness(g);
        if (!r.all_components_exact) return false;
        for (const auto& c : r.components) {
            if (c.positions.size() != 4) return false;
        }
    }
    return true;
}

// 2. dim X1 = |G| - #classes and dim X2 = 0, with dim X1 cross-checked
// against the naive dense elimination oracle.
bool criterion_dimensions() {
    for (const auto& name : kGroups) {
        ActionGroupoid g{named_group(name)};
        const std::size_t expected = g.group().order - g.classes().classes.size();
        if (x1_space(g).space.dim() != expected) return false;
        if (x2_space(g).space.dim() != 0) return false;
        SparseMatrix constraints = x1_constraint_matrix(g);
        if (streamed_nullity(constraints) != expected) return false;
    }
    return true;
}

// 3. Derivation dictionary: dims agree and the round trip is the identity
// on a full basis.
bool criterion_dictionary() {
    for (const auto& name : kGroups) {
        DerivationTheory t(named_group(name));
        if (t.derivation_space().dim() != t.character_space().dim()) return false;
        for (const Vec& v : t.derivation_space().basis) {
            DerivationMatrix d{t.group().order, v};
            Vec chi = t.char_from_derivation(d);
            if (!(t.derivation_from_char(chi) == d)) return false;
        }
    }
    return true;
}

// 4. Bracket of 100 pseudorandom rational derivation pairs over S3 equals
// the character of the coefficient-matrix commutator.
bool criterion_bracket() {
    DerivationTheory t(named_group("S3"));
    const std::size_t n = t.group().order;
    const auto& basis = t.derivation_space().basis;
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    auto random_derivation = [&] {
        Vec v(n * n, Rational(0));
        for (const Vec& b : basis) {
            Rational c(num(rng), den(rng));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        return v;
    };
    for (int trial = 0; trial < 100; ++trial) {
        Vec c1 = random_derivation(), c2 = random_derivation();
        DerivationMatrix d1{n, c1}, d2{n, c2};
        DerivationMatrix comm = DerivationMatrix::zero(n);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = 0; q < n; ++q) {
                Rational s = 0;
                for (std::size_t h = 0; h < n; ++h) {
                    s += d1.at(p, h) * d2.at(h, q) - d2.at(p, h) * d1.at(h, q);
                }
                comm.at(p, q) = s;
            }
        }
        if (t.bracket_characters(c1, c2) != t.char_from_derivation(comm)) return false;
    }
    return true;
}

// 5. chi^a = chi_{d_a} under the resolved sign and {chi^a, chi^b} =
// chi^{ab} - chi^{ba} on all ordered pairs, for S3 and D4.
bool criterion_inner_characters() {
    for (const char* name : {"S3", "D4"}) {
        DerivationTheory t(named_group(name));
        const GroupTable& g = t.group();
        for (std::size_t a = 0; a < g.order; ++a) {
            DerivationMatrix d = t.inner_derivation(GroupAlgebraElement::from_group_element(a));
            if (t.char_from_derivation(d) != t.chi_point(a)) return false;
        }
        for (std::size_t a = 0; a < g.order; ++a) {
            for (std::size_t b = 0; b < g.order; ++b) {
                Vec lhs = t.bracket_characters(t.chi_point(a), t.chi_point(b));
                Vec rhs = t.chi_point(g.product(a, b));
                Vec sub = t.chi_point(g.product(b, a));
                for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= sub[i];
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

// 6. Weak-inner ideal with the loop-vanishing and composition identities.
bool criterion_ideal() {
    for (const char* name : {"S3", "D4"}) {
        if (!DerivationTheory(named_group(name)).verify_ideal().verdict) return false;
    }
    return true;
}

// 7. Quotient isomorphism on every test group.
bool criterion_iso() {
    for (const auto& name : kGroups) {
        DerivationTheory t(named_group(name));
        IsoReport r = t.verify_quotient_isomorphism();
        if (!r.verdict) return false;
        if (r.derivation_quotient_dim != 0 || r.character_quotient_dim != 0) return false;
    }
    return true;
}

// 8. Nontrivial X2 on presented groupoids, with the lift round trip.
bool criterion_presented() {
    for (std::size_t r = 1; r <= 3; ++r) {
        Quiver q;
        q.objects = {"*"};
        for (std::size_t i = 0; i < r; ++i) {
            q.edges.push_back({"a" + std::to_string(i), 0, 0});
        }
        PresentedGroupoid g = validate_presentation(std::move(q), {});
        if (x0_space(g).space.dim() != 1) return false;
        if (x1_space(g).space.dim() != r) return false;
        if (x2_space(g).space.dim() != r) return false;
        SparseMatrix phi2 = boundary(2, g).matrix;
        for (const Vec& c : x1_space(g).space.basis) {
            Vec lifted = lift_two_character(g, c);
            if (phi2.apply(lifted) != phi2.apply(c)) return false;
        }
    }

    Quiver q;
    q.objects = {"x", "y"};
    q.edges = {{"f", 0, 1}, {"g", 0, 1}};
    PresentedGroupoid pair = validate_presentation(std::move(q), {});
    if (x0_space(pair).space.dim() != 2) return false;
    if (x1_space(pair).space.dim() != 2) return false;
    if (x2_space(pair).space.dim() != 1) return false;
    SparseMatrix phi2 = boundary(2, pair).matrix;
    SpanningForest forest = spanning_forest(pair);
    for (const Vec& c : x1_space(pair).space.basis) {
        Vec lifted = lift_two_character(pair, c);
        if (phi2.apply(lifted) != phi2.apply(c)) return false;
        for (std::size_t e : forest.tree_edges) {
            if (lifted[e] != 0) return false;  // canonical representative
        }
    }
    return true;
}

// 9. Interchange and identity laws on 500 pseudorandom valid 2-cell
// quadruples of the S3 groupoid.
bool criterion_two_category() {
    ActionGroupoid gpd{named_group("S3")};
    const GroupTable& g = gpd.group();
    std::mt19937 rng(314159);
    std::uniform_int_distribution<std::size_t> pick(0, g.order - 1);
    for (int trial = 0; trial < 500; ++trial) {
        // a vertically composable pair on Hom(a, b) and one on Hom(b, c)
        const std::size_t a = pick(rng);
        auto square = [&](std::size_t src) {
            const std::size_t v = pick(rng);
            Morphism base{g.product(v, src), v};
            auto hom = gpd.hom_set(gpd.source(base), gpd.target(base));
            std::uniform_int_distribution<std::size_t> h(0, hom.size() - 1);
            return std::array<Morphism, 3>{base, hom[h(rng)], hom[h(rng)]};
        };
        auto [f0, f1, f2] = square(a);
        TwoCell alpha{f0, f1}, beta{f1, f2};
        auto [h0, h1, h2] = square(gpd.target(f0));
        TwoCell gamma{h0, h1}, delta{h1, h2};

        // interchange
        if (gpd.hcompose(gpd.vcompose(alpha, beta), gpd.vcompose(gamma, delta)) !=
            gpd.vcompose(gpd.hcompose(alpha, gamma), gpd.hcompose(beta, delta))) {
            return false;
        }
        // vertical identities
        TwoCell id_f0{f0, f0}, id_f1{f1, f1};
        if (gpd.vcompose(id_f0, alpha) != alpha) return false;
        if (gpd.vcompose(alpha, id_f1) != alpha) return false;
        // horizontal identities on identity 1-maps
        Morphism id_src = gpd.identity_at(gpd.source(f0));
        Morphism id_dst = gpd.identity_at(gpd.target(f0));
        TwoCell lid{id_src, id_src}, rid{id_dst, id_dst};
        if (gpd.hcompose(lid, alpha) != alpha) return false;
        if (gpd.hcompose(alpha, rid) != alpha) return false;
    }
    return true;
}

// 10. Two runs of the full CLI suite are byte-identical modulo timing.
bool criterion_determinism(const std::string& cli) {
    const std::string args =
        " --group S3 --analyses complex,exactness,derivations,bracket-table,ideal,iso,lift"
        " --emit-bases --format json --out ";
    for (const char* path : {"/tmp/groupchar_run1.json", "/tmp/groupchar_run2.json"}) {
        const std::string cmd = cli + args + path;
        if (std::system(cmd.c_str()) != 0) return false;
    }
    auto load_stripped = [](const char* path) {
        std::ifstream in(path);
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
        j.erase("timing");
        return j.dump();
    };
    return load_stripped("/tmp/groupchar_run1.json") ==
           load_stripped("/tmp/groupchar_run2.json");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-groupchar_cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    struct Criterion {
        const char* label;
        bool (*check)();
    };
    const std::vector<Criterion> criteria = {
        {"1 exactness of the character sequence on all components", criterion_exactness},
        {"2 dimension law with dense nullspace oracle", criterion_dimensions},
        {"3 derivation dictionary round trip", criterion_dictionary},
        {"4 bracket equals matrix commutator on random pairs", criterion_bracket},
        {"5 inner characters and their brackets", criterion_inner_characters},
        {"6 weak-inner ideal with loop and composition identities", criterion_ideal},
        {"7 outer quotient isomorphism", criterion_iso},
        {"8 nontrivial X2 and canonical lift on presentations", criterion_presented},
        {"9 interchange and identity laws on random 2-cells", criterion_two_category},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const bool ok = c.check();
        all = all && ok;
        std::cout << "criterion " << c.label << ": " << (ok ? "PASS" : "FAIL") << "\n";
    }
    const bool det = criterion_determinism(cli);
    all = all && det;
    std::cout << "criterion 10 deterministic CLI reports: " << (det ? "PASS" : "FAIL")
              << "\n";
    return all ? 0 : 1;
}
