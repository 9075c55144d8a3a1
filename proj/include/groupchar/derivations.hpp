#ifndef GROUPCHAR_DERIVATIONS_HPP
#define GROUPCHAR_DERIVATIONS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "groupchar/action_groupoid.hpp"
#include "groupchar/complex.hpp"
#include "groupchar/linalg.hpp"

namespace groupchar {

/// Finitely supported rational combination of group elements.
struct GroupAlgebraElement {
    std::map<std::size_t, Rational> coefficients;  // no explicit zeros

    static GroupAlgebraElement from_group_element(std::size_t g);
    void add_term(std::size_t g, const Rational& c);
    bool is_zero() const { return coefficients.empty(); }
    bool operator==(const GroupAlgebraElement&) const = default;
};

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const Rational& c, const GroupAlgebraElement& a);
GroupAlgebraElement ga_multiply(const GroupTable& g, const GroupAlgebraElement& a,
                                const GroupAlgebraElement& b);

/// Coefficient family of a derivation of the group algebra: coeff(h, g) is
/// the coefficient of basis element g in d(h).
struct DerivationMatrix {
    std::size_t order = 0;
    std::vector<Rational> coeff;  // order x order, row-major by h

    static DerivationMatrix zero(std::size_t order);
    Rational& at(std::size_t h, std::size_t g) { return coeff[h * order + g]; }
    const Rational& at(std::size_t h, std::size_t g) const { return coeff[h * order + g]; }
    bool operator==(const DerivationMatrix&) const = default;
};

struct IdealReport {
    bool brackets_stay_weak_inner = false;
    bool loop_identity_holds = false;        // {chi_d, chi^a}(bz, z) = 0
    bool composition_identity_holds = false; // (a^-1 b z, z) o (bz, za) = (bz, az) o (b z a^-1, z)
    std::size_t checked_pairs = 0;
    std::size_t checked_triples = 0;
    bool verdict = false;
};

struct OuterQuotient {
    std::size_t derivation_dim = 0;
    std::size_t weak_inner_dim = 0;
    std::size_t quotient_dim = 0;
    std::vector<Vec> representatives;  // canonical complement, character coords
};

struct IsoReport {
    bool weak_inner_maps_onto_trivial_loops = false;
    bool quotient_dims_match = false;
    bool bracket_preserved_on_representatives = false;
    std::size_t derivation_quotient_dim = 0;
    std::size_t character_quotient_dim = 0;
    bool verdict = false;
};

/// Derivations of Q[G] and their dictionary with locally finite
/// 1-characters of the action 2-groupoid. The morphism (u, v) carries the
/// coefficient coeff(v, u); with morphisms enumerated by v*|G|+u this makes
/// the character vector of a derivation literally its flattened coefficient
/// matrix. The inner derivation attached to an algebra element a is
/// d_a: x -> [x, a] = xa - ax; this is the sign under which chi^a equals
/// the character of d_a.
class DerivationTheory {
public:
    explicit DerivationTheory(GroupTable group, std::size_t max_rows = kDefaultMaxRows);

    const GroupTable& group() const { return groupoid_.group(); }
    const ActionGroupoid& groupoid() const { return groupoid_; }

    // One equation per (g1, g2, basis coordinate) from the Leibniz rule.
    SparseMatrix leibniz_matrix() const;

    const Subspace& derivation_space() const;   // kernel of the Leibniz system
    const Subspace& character_space() const;    // X1 of the action groupoid
    const Subspace& weak_inner_space() const;   // derivations with loop-trivial character

    GroupAlgebraElement apply(const DerivationMatrix& d, const GroupAlgebraElement& u) const;

    Vec char_from_derivation(const DerivationMatrix& d) const;
    // Throws ValidationError when c is not a 1-character.
    DerivationMatrix derivation_from_char(const Vec& c) const;

    bool is_locally_finite(const Vec& c) const;

    DerivationMatrix inner_derivation(const GroupAlgebraElement& a) const;
    Vec chi_point(std::size_t a) const;

    // Eq-by-eq convolution bracket on 1-characters; validates both inputs.
    Vec bracket_characters(const Vec& c1, const Vec& c2) const;

    IdealReport verify_ideal() const;
    OuterQuotient outer_quotient() const;
    IsoReport verify_quotient_isomorphism() const;

    static constexpr const char* inner_sign_convention = "[x,a]";

private:
    ActionGroupoid groupoid_;
    std::size_t max_rows_;
    mutable std::optional<Subspace> derivations_;
    mutable std::optional<Subspace> characters_;
    mutable std::optional<Subspace> weak_inner_;
};

}  // namespace groupchar

#endif
