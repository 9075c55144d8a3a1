#ifndef GROUPCHAR_ACTION_GROUPOID_HPP
#define GROUPCHAR_ACTION_GROUPOID_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "groupchar/group.hpp"

namespace groupchar {

/// 1-map of the action 2-groupoid: a pair (u, v) of group elements with
/// source v^-1 u and target u v^-1 (always conjugate).
struct Morphism {
    std::size_t u = 0;
    std::size_t v = 0;
    auto operator<=>(const Morphism&) const = default;
};

/// Parallel ordered pair of 1-maps. Primitivity: this is the unique 2-cell
/// between them, so the pair is the whole datum.
struct TwoCell {
    Morphism src;
    Morphism dst;
    auto operator<=>(const TwoCell&) const = default;
};

/// The 2-groupoid on a finite group: objects are group elements, 1-maps are
/// all |G|^2 pairs (u, v), 2-cells exist exactly between parallel 1-maps.
/// Connected components biject with conjugacy classes. Morphisms are
/// enumerated lexicographically by (v, u): index = v * |G| + u.
class ActionGroupoid {
public:
    explicit ActionGroupoid(GroupTable group);

    const GroupTable& group() const { return group_; }
    const ConjugacyClassification& classes() const { return classes_; }

    std::size_t object_count() const { return group_.order; }
    std::size_t morphism_count() const { return group_.order * group_.order; }

    std::size_t index_of(const Morphism& m) const { return m.v * group_.order + m.u; }
    Morphism morphism_at(std::size_t index) const {
        return {index % group_.order, index / group_.order};
    }

    std::size_t source(const Morphism& m) const;
    std::size_t target(const Morphism& m) const;
    bool composable(const Morphism& phi, const Morphism& psi) const;

    // Diagrammatic order: phi: a => b, psi: b => c, result in Hom(a, c).
    // Throws ContractViolation naming both morphisms when not composable.
    Morphism compose(const Morphism& phi, const Morphism& psi) const;
    Morphism identity_at(std::size_t a) const { return {a, GroupTable::identity}; }
    Morphism inverse_morphism(const Morphism& m) const;

    // All (u, v) with v^-1 u = a, u v^-1 = b; empty unless a ~ b, otherwise
    // of size |Z_G(a)|. Enumerated with v ascending.
    std::vector<Morphism> hom_set(std::size_t a, std::size_t b) const;

    // Objects grouped by conjugacy class; each group is one totally
    // connected component.
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> components() const;

    std::optional<TwoCell> two_cell(const Morphism& phi, const Morphism& psi) const;
    bool parallel(const Morphism& phi, const Morphism& psi) const;

    TwoCell vcompose(const TwoCell& a, const TwoCell& b) const;
    TwoCell hcompose(const TwoCell& a, const TwoCell& b) const;

    std::string morphism_label(const Morphism& m) const;

private:
    GroupTable group_;
    ConjugacyClassification classes_;
};

}  // namespace groupchar

#endif
