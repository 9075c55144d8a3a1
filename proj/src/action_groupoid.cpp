#include "groupchar/action_groupoid.hpp"

#include "groupchar/errors.hpp"

namespace groupchar {

ActionGroupoid::ActionGroupoid(GroupTable group)
    : group_(std::move(group)), classes_(conjugacy_classes(group_)) {}

std::size_t ActionGroupoid::source(const Morphism& m) const {
    return group_.product(group_.inverse(m.v), m.u);
}

std::size_t ActionGroupoid::target(const Morphism& m) const {
    return group_.product(m.u, group_.inverse(m.v));
}

bool ActionGroupoid::composable(const Morphism& phi, const Morphism& psi) const {
    return target(phi) == source(psi);
}

Morphism ActionGroupoid::compose(const Morphism& phi, const Morphism& psi) const {
    if (!composable(phi, psi)) {
        throw ContractViolation("morphisms not composable: " + morphism_label(phi) +
                                " then " + morphism_label(psi));
    }
    return {group_.product(psi.u, phi.v), group_.product(psi.v, phi.v)};
}

Morphism ActionGroupoid::inverse_morphism(const Morphism& m) const {
    const std::size_t vi = group_.inverse(m.v);
    return {group_.product(group_.product(vi, m.u), vi), vi};
}

std::vector<Morphism> ActionGroupoid::hom_set(std::size_t a, std::size_t b) const {
    std::vector<Morphism> out;
    for (std::size_t v = 0; v < group_.order; ++v) {
        if (group_.conjugate(v, a) == b) out.push_back({group_.product(v, a), v});
    }
    return out;
}

std::vector<std::pair<std::size_t, std::vector<std::size_t>>>
ActionGroupoid::components() const {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    for (std::size_t id = 0; id < classes_.classes.size(); ++id) {
        out.emplace_back(id, classes_.classes[id]);
    }
    return out;
}

bool ActionGroupoid::parallel(const Morphism& phi, const Morphism& psi) const {
    return source(phi) == source(psi) && target(phi) == target(psi);
}

std::optional<TwoCell> ActionGroupoid::two_cell(const Morphism& phi,
                                                const Morphism& psi) const {
    if (!parallel(phi, psi)) return std::nullopt;
    return TwoCell{phi, psi};
}

TwoCell ActionGroupoid::vcompose(const TwoCell& a, const TwoCell& b) const {
    if (a.dst != b.src) {
        throw ContractViolation("2-cells not vertically composable");
    }
    return {a.src, b.dst};
}

TwoCell ActionGroupoid::hcompose(const TwoCell& a, const TwoCell& b) const {
    return {compose(a.src, b.src), compose(a.dst, b.dst)};
}

std::string ActionGroupoid::morphism_label(const Morphism& m) const {
    return "(" + group_.labels[m.u] + ", " + group_.labels[m.v] + ")";
}

}  // namespace groupchar
