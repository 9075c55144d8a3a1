#include "groupchar/derivations.hpp"

#include <algorithm>

#include "groupchar/errors.hpp"

namespace groupchar {

GroupAlgebraElement GroupAlgebraElement::from_group_element(std::size_t g) {
    GroupAlgebraElement e;
    e.coefficients[g] = 1;
    return e;
}

void GroupAlgebraElement::add_term(std::size_t g, const Rational& c) {
    auto it = coefficients.find(g);
    if (it == coefficients.end()) {
        if (c != 0) coefficients.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second == 0) coefficients.erase(it);
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    GroupAlgebraElement out = a;
    for (const auto& [g, c] : b.coefficients) out.add_term(g, c);
    return out;
}

GroupAlgebraElement ga_scale(const Rational& c, const GroupAlgebraElement& a) {
    GroupAlgebraElement out;
    if (c == 0) return out;
    for (const auto& [g, v] : a.coefficients) out.coefficients[g] = c * v;
    return out;
}

GroupAlgebraElement ga_multiply(const GroupTable& g, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b) {
    GroupAlgebraElement out;
    for (const auto& [x, cx] : a.coefficients) {
        for (const auto& [y, cy] : b.coefficients) {
            out.add_term(g.product(x, y), cx * cy);
        }
    }
    return out;
}

DerivationMatrix DerivationMatrix::zero(std::size_t order) {
    return {order, Vec(order * order, Rational(0))};
}

DerivationTheory::DerivationTheory(GroupTable group, std::size_t max_rows)
    : groupoid_(std::move(group)), max_rows_(max_rows) {}

SparseMatrix DerivationTheory::leibniz_matrix() const {
    const GroupTable& g = group();
    const std::size_t n = g.order;
    const std::size_t rows = n * n * n;
    if (rows > max_rows_) {
        throw SizeLimitError("Leibniz system needs " + std::to_string(rows) +
                             " rows, cap is " + std::to_string(max_rows_));
    }
    // d^{g1 g2}_k - d^{g1}_{k g2^-1} - d^{g2}_{g1^-1 k} = 0, unknowns at h*n+g.
    std::vector<SparseMatrix::Entry> triplets;
    triplets.reserve(3 * rows);
    std::size_t row = 0;
    for (std::size_t g1 = 0; g1 < n; ++g1) {
        for (std::size_t g2 = 0; g2 < n; ++g2) {
            for (std::size_t k = 0; k < n; ++k) {
                triplets.push_back({row, g.product(g1, g2) * n + k, Rational(1)});
                triplets.push_back({row, g1 * n + g.product(k, g.inverse(g2)), Rational(-1)});
                triplets.push_back({row, g2 * n + g.product(g.inverse(g1), k), Rational(-1)});
                ++row;
            }
        }
    }
    return SparseMatrix::from_triplets(rows, n * n, std::move(triplets));
}

const Subspace& DerivationTheory::derivation_space() const {
    if (!derivations_) derivations_ = kernel_basis(leibniz_matrix());
    return *derivations_;
}

const Subspace& DerivationTheory::character_space() const {
    if (!characters_) characters_ = kernel_basis(x1_constraint_matrix(groupoid_, max_rows_));
    return *characters_;
}

const Subspace& DerivationTheory::weak_inner_space() const {
    if (!weak_inner_) {
        weak_inner_ = kernel_basis(vstack(leibniz_matrix(), loop_matrix(groupoid_)));
    }
    return *weak_inner_;
}

GroupAlgebraElement DerivationTheory::apply(const DerivationMatrix& d,
                                            const GroupAlgebraElement& u) const {
    if (d.order != group().order) throw ContractViolation("derivation order mismatch");
    GroupAlgebraElement out;
    for (const auto& [h, lambda] : u.coefficients) {
        for (std::size_t g = 0; g < d.order; ++g) {
            if (d.at(h, g) != 0) out.add_term(g, d.at(h, g) * lambda);
        }
    }
    return out;
}

Vec DerivationTheory::char_from_derivation(const DerivationMatrix& d) const {
    if (d.order != group().order) throw ContractViolation("derivation order mismatch");
    // chi((u, v)) = d^v_u and morphisms are indexed by v*n+u, so the
    // character vector is the flattened coefficient matrix.
    return d.coeff;
}

DerivationMatrix DerivationTheory::derivation_from_char(const Vec& c) const {
    if (c.size() != groupoid_.morphism_count() || !character_space().contains(c)) {
        throw ValidationError("vector is not a 1-character of the action groupoid");
    }
    return {group().order, c};
}

bool DerivationTheory::is_locally_finite(const Vec& c) const {
    const std::size_t n = group().order;
    if (c.size() != n * n) throw ContractViolation("level-1 vector has wrong length");
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t support = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (c[x * n + v] != 0) ++support;
        }
        if (support > n) return false;  // unreachable on finite coordinates
    }
    return true;
}

DerivationMatrix DerivationTheory::inner_derivation(const GroupAlgebraElement& a) const {
    const GroupTable& g = group();
    DerivationMatrix d = DerivationMatrix::zero(g.order);
    // d_a(x) = [x, a] = xa - ax.
    for (std::size_t h = 0; h < g.order; ++h) {
        for (const auto& [t, lambda] : a.coefficients) {
            d.at(h, g.product(h, t)) += lambda;
            d.at(h, g.product(t, h)) -= lambda;
        }
    }
    return d;
}

Vec DerivationTheory::chi_point(std::size_t a) const {
    const std::size_t n = group().order;
    Vec c(n * n, Rational(0));
    for (std::size_t i = 0; i < n * n; ++i) {
        const Morphism m = groupoid_.morphism_at(i);
        const std::size_t s = groupoid_.source(m), t = groupoid_.target(m);
        if (s == a && t != a) {
            c[i] = 1;
        } else if (t == a && s != a) {
            c[i] = -1;
        }
    }
    return c;
}

Vec DerivationTheory::bracket_characters(const Vec& c1, const Vec& c2) const {
    const std::size_t n = group().order;
    if (!character_space().contains(c1) || !character_space().contains(c2)) {
        throw ValidationError("bracket inputs must be 1-characters");
    }
    Vec out(n * n, Rational(0));
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
            Rational sum = 0;
            for (std::size_t h = 0; h < n; ++h) {
                if (c1[p * n + h] != 0 && c2[h * n + q] != 0) {
                    sum += c1[p * n + h] * c2[h * n + q];
                }
                if (c2[p * n + h] != 0 && c1[h * n + q] != 0) {
                    sum -= c2[p * n + h] * c1[h * n + q];
                }
            }
            out[p * n + q] = std::move(sum);
        }
    }
    return out;
}

IdealReport DerivationTheory::verify_ideal() const {
    const GroupTable& g = group();
    const std::size_t n = g.order;
    IdealReport report;

    report.brackets_stay_weak_inner = true;
    for (const auto& w : weak_inner_space().basis) {
        for (const auto& d : derivation_space().basis) {
            for (const Vec& b : {bracket_characters(w, d), bracket_characters(d, w)}) {
                if (!weak_inner_space().contains(b)) {
                    report.brackets_stay_weak_inner = false;
                }
            }
            ++report.checked_pairs;
        }
    }

    // Single bracket value at the pair (p, q), i.e. at coordinate p*n+q.
    auto bracket_at = [&](const Vec& c1, const Vec& c2, std::size_t p, std::size_t q) {
        Rational sum = 0;
        for (std::size_t h = 0; h < n; ++h) {
            sum += c1[p * n + h] * c2[h * n + q] - c2[p * n + h] * c1[h * n + q];
        }
        return sum;
    };

    report.loop_identity_holds = true;
    report.composition_identity_holds = true;
    std::vector<Vec> chi_points;
    for (std::size_t a = 0; a < n; ++a) chi_points.push_back(chi_point(a));
    for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t z : centralizer(g, b)) {
            const std::size_t bz = g.product(b, z);
            for (std::size_t a = 0; a < n; ++a) {
                for (const auto& d : derivation_space().basis) {
                    if (bracket_at(d, chi_points[a], bz, z) != 0) {
                        report.loop_identity_holds = false;
                    }
                }
                const std::size_t ai = g.inverse(a);
                const Morphism lhs1{g.product(g.product(ai, b), z), z};
                const Morphism lhs2{bz, g.product(z, a)};
                const Morphism rhs1{bz, g.product(a, z)};
                const Morphism rhs2{g.product(bz, ai), z};
                if (!groupoid_.composable(lhs1, lhs2) || !groupoid_.composable(rhs1, rhs2) ||
                    groupoid_.compose(lhs1, lhs2) != groupoid_.compose(rhs1, rhs2)) {
                    report.composition_identity_holds = false;
                }
                ++report.checked_triples;
            }
        }
    }

    report.verdict = report.brackets_stay_weak_inner && report.loop_identity_holds &&
                     report.composition_identity_holds;
    return report;
}

OuterQuotient DerivationTheory::outer_quotient() const {
    OuterQuotient out;
    out.derivation_dim = derivation_space().dim();
    out.weak_inner_dim = weak_inner_space().dim();
    out.quotient_dim = quotient_dim(derivation_space(), weak_inner_space());
    std::vector<Vec> residuals;
    for (const auto& b : derivation_space().basis) {
        residuals.push_back(weak_inner_space().reduce(b));
    }
    out.representatives =
        Subspace::from_spanning(derivation_space().ambient_dim, residuals).basis;
    return out;
}

IsoReport DerivationTheory::verify_quotient_isomorphism() const {
    IsoReport report;
    // Trivial-on-loops 1-characters, computed on the additivity route.
    Subspace trivial_chars =
        kernel_basis(vstack(x1_constraint_matrix(groupoid_, max_rows_), loop_matrix(groupoid_)));

    report.weak_inner_maps_onto_trivial_loops =
        subspace_equal(weak_inner_space(), trivial_chars);

    report.derivation_quotient_dim = quotient_dim(derivation_space(), weak_inner_space());
    report.character_quotient_dim = quotient_dim(character_space(), trivial_chars);
    report.quotient_dims_match =
        report.derivation_quotient_dim == report.character_quotient_dim;

    // Bracket preservation on canonical quotient representatives, compared
    // modulo the weak-inner subspace.
    report.bracket_preserved_on_representatives = true;
    const auto reps = outer_quotient().representatives;
    for (const auto& r1 : reps) {
        for (const auto& r2 : reps) {
            Vec lhs = bracket_characters(r1, r2);
            // Image side: reduce both inputs modulo the ideal first.
            Vec rhs = bracket_characters(weak_inner_space().reduce(r1),
                                         weak_inner_space().reduce(r2));
            Vec diff(lhs.size());
            for (std::size_t i = 0; i < lhs.size(); ++i) diff[i] = lhs[i] - rhs[i];
            if (!weak_inner_space().contains(diff)) {
                report.bracket_preserved_on_representatives = false;
            }
        }
    }

    report.verdict = report.weak_inner_maps_onto_trivial_loops &&
                     report.quotient_dims_match &&
                     report.bracket_preserved_on_representatives;
    return report;
}

}  // namespace groupchar
