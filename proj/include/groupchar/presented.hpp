#ifndef GROUPCHAR_PRESENTED_HPP
#define GROUPCHAR_PRESENTED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groupchar/linalg.hpp"

namespace groupchar {

struct Quiver {
    struct Edge {
        std::string name;
        std::size_t src;
        std::size_t dst;
    };
    std::vector<std::string> objects;
    std::vector<Edge> edges;
};

/// A closed composable path written on the generator edges, exponents +-1.
struct RelationWord {
    std::vector<std::pair<std::size_t, int>> word;  // (edge index, exponent)
};

/// Finitely presented groupoid with the primitive 2-cell convention.
/// Characters live on the edge coordinates; the infinite morphism set is
/// never enumerated.
struct PresentedGroupoid {
    Quiver quiver;
    std::vector<RelationWord> relations;
    std::vector<std::size_t> component_of;  // per object
    std::size_t component_count = 0;

    std::size_t object_count() const { return quiver.objects.size(); }
    std::size_t edge_count() const { return quiver.edges.size(); }
};

/// Spanning tree data: breadth-first from the lowest-indexed object of each
/// component, edges scanned in declaration order.
struct SpanningForest {
    std::vector<std::size_t> tree_edges;                // ascending edge indices
    std::vector<std::size_t> root_of_component;
    // Per object: (edge index, +1 if traversed src->dst on the way down).
    std::vector<std::optional<std::pair<std::size_t, int>>> parent_edge;
    std::vector<std::size_t> parent;                    // parent object (self at roots)
};

// Checks endpoints, relation composability and closedness; reports the
// offending edge/position. Throws ValidationError.
PresentedGroupoid validate_presentation(Quiver q, std::vector<RelationWord> relations);

// Rows = relations, cols = edges, entry = signed exponent sum. Its kernel is
// the level-1 character space of the presentation.
SparseMatrix relation_matrix(const PresentedGroupoid& g);

SpanningForest spanning_forest(const PresentedGroupoid& g);

// Rows = edges, cols = objects; +1 at dst, -1 at src (zero row for loops).
SparseMatrix incidence_matrix(const PresentedGroupoid& g);

// One row per non-tree edge: the signed edge-value sum around its
// fundamental cycle. A level-1 vector is trivial on loops iff it is killed
// by every one of these rows.
SparseMatrix cycle_matrix(const PresentedGroupoid& g, const SpanningForest& forest);

}  // namespace groupchar

#endif
