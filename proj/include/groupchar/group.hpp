#ifndef GROUPCHAR_GROUP_HPP
#define GROUPCHAR_GROUP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace groupchar {

/// A finite group as a validated Cayley table. Element 0 is always the
/// identity; everything downstream is O(1) table lookup.
struct GroupTable {
    std::size_t order = 0;
    std::vector<std::size_t> products;  // order x order, row-major
    std::vector<std::size_t> inverses;
    std::vector<std::string> labels;

    static constexpr std::size_t identity = 0;

    std::size_t product(std::size_t a, std::size_t b) const {
        return products[a * order + b];
    }
    std::size_t inverse(std::size_t a) const { return inverses[a]; }
    // a b a^-1
    std::size_t conjugate(std::size_t a, std::size_t b) const {
        return product(product(a, b), inverse(a));
    }
};

struct ConjugacyClassification {
    std::vector<std::size_t> class_of;
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> representatives;
};

// Validates associativity, identity, inverses and the Latin-square property;
// reindexes so the identity is element 0. Throws ValidationError naming the
// first failing row/triple.
GroupTable from_cayley_table(const std::vector<std::vector<std::size_t>>& table,
                             std::optional<std::vector<std::string>> labels = {});

// Closure under products, breadth-first from the identity with generators
// applied in input order. Composition convention: (s*t)(x) = s(t(x)).
GroupTable from_permutation_generators(std::size_t degree,
                                       const std::vector<std::vector<std::size_t>>& generators,
                                       std::size_t element_cap = 10000);

// C<n>, D<n> (order 2n), S<n>, A<n>, Q8.
GroupTable named_group(const std::string& name, std::size_t order_cap = 10000);

ConjugacyClassification conjugacy_classes(const GroupTable& g);
std::vector<std::size_t> centralizer(const GroupTable& g, std::size_t a);
std::vector<std::size_t> center(const GroupTable& g);

std::string cycle_notation(const std::vector<std::size_t>& permutation);

}  // namespace groupchar

#endif
