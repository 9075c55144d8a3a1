#include "groupchar/presented.hpp"

#include <deque>
#include <set>

#include "groupchar/errors.hpp"

namespace groupchar {

namespace {

// Start/end objects of one signed step of a relation word.
std::pair<std::size_t, std::size_t> step_endpoints(const Quiver& q,
                                                   std::pair<std::size_t, int> step) {
    const auto& e = q.edges[step.first];
    return step.second > 0 ? std::pair{e.src, e.dst} : std::pair{e.dst, e.src};
}

}  // namespace

PresentedGroupoid validate_presentation(Quiver q, std::vector<RelationWord> relations) {
    std::set<std::string> names;
    for (const auto& name : q.objects) {
        if (!names.insert(name).second) {
            throw ValidationError("duplicate object name: " + name);
        }
    }
    names.clear();
    for (const auto& e : q.edges) {
        if (!names.insert(e.name).second) {
            throw ValidationError("duplicate edge name: " + e.name);
        }
        if (e.src >= q.objects.size() || e.dst >= q.objects.size()) {
            throw ValidationError("edge " + e.name + " has a dangling endpoint");
        }
    }

    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& word = relations[r].word;
        if (word.empty()) {
            throw ValidationError("relation " + std::to_string(r) + " is empty");
        }
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (word[i].first >= q.edges.size()) {
                throw ValidationError("relation " + std::to_string(r) +
                                      ": unknown edge at position " + std::to_string(i));
            }
            if (word[i].second != 1 && word[i].second != -1) {
                throw ValidationError("relation " + std::to_string(r) +
                                      ": exponent must be +1 or -1 at position " +
                                      std::to_string(i));
            }
        }
        auto [start, current] = step_endpoints(q, word[0]);
        for (std::size_t i = 1; i < word.size(); ++i) {
            auto [from, to] = step_endpoints(q, word[i]);
            if (from != current) {
                throw ValidationError("relation " + std::to_string(r) +
                                      " is not composable at position " +
                                      std::to_string(i));
            }
            current = to;
        }
        if (current != start) {
            throw ValidationError("relation " + std::to_string(r) + " is not closed");
        }
    }

    PresentedGroupoid g;
    g.quiver = std::move(q);
    g.relations = std::move(relations);

    const std::size_t n = g.quiver.objects.size();
    g.component_of.assign(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (g.component_of[root] != n) continue;
        std::size_t id = g.component_count++;
        std::deque<std::size_t> queue{root};
        g.component_of[root] = id;
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (const auto& e : g.quiver.edges) {
                for (auto [a, b] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}}) {
                    if (a == x && g.component_of[b] == n) {
                        g.component_of[b] = id;
                        queue.push_back(b);
                    }
                }
            }
        }
    }
    return g;
}

SparseMatrix relation_matrix(const PresentedGroupoid& g) {
    std::vector<SparseMatrix::Entry> triplets;
    for (std::size_t r = 0; r < g.relations.size(); ++r) {
        for (const auto& [edge, exp] : g.relations[r].word) {
            triplets.push_back({r, edge, Rational(exp)});
        }
    }
    return SparseMatrix::from_triplets(g.relations.size(), g.edge_count(),
                                       std::move(triplets));
}

SpanningForest spanning_forest(const PresentedGroupoid& g) {
    const std::size_t n = g.object_count();
    SpanningForest f;
    f.parent_edge.assign(n, std::nullopt);
    f.parent.resize(n);
    std::vector<bool> visited(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        f.root_of_component.push_back(root);
        visited[root] = true;
        f.parent[root] = root;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t e = 0; e < g.quiver.edges.size(); ++e) {
                const auto& edge = g.quiver.edges[e];
                if (edge.src == x && !visited[edge.dst]) {
                    visited[edge.dst] = true;
                    f.parent[edge.dst] = x;
                    f.parent_edge[edge.dst] = {e, 1};
                    f.tree_edges.push_back(e);
                    queue.push_back(edge.dst);
                } else if (edge.dst == x && !visited[edge.src]) {
                    visited[edge.src] = true;
                    f.parent[edge.src] = x;
                    f.parent_edge[edge.src] = {e, -1};
                    f.tree_edges.push_back(e);
                    queue.push_back(edge.src);
                }
            }
        }
    }
    std::sort(f.tree_edges.begin(), f.tree_edges.end());
    return f;
}

SparseMatrix incidence_matrix(const PresentedGroupoid& g) {
    std::vector<SparseMatrix::Entry> triplets;
    for (std::size_t e = 0; e < g.quiver.edges.size(); ++e) {
        triplets.push_back({e, g.quiver.edges[e].dst, Rational(1)});
        triplets.push_back({e, g.quiver.edges[e].src, Rational(-1)});
    }
    return SparseMatrix::from_triplets(g.edge_count(), g.object_count(),
                                       std::move(triplets));
}

SparseMatrix cycle_matrix(const PresentedGroupoid& g, const SpanningForest& forest) {
    const std::size_t n = g.object_count();
    // Signed tree path from the component root to each object, as an
    // edge-indexed integer vector.
    std::vector<std::vector<int>> potential(n, std::vector<int>(g.edge_count(), 0));
    // parents are always visited before children in BFS order, but process
    // until stable to stay independent of object numbering.
    std::vector<bool> done(n, false);
    for (std::size_t root : forest.root_of_component) done[root] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (done[x] || !forest.parent_edge[x] || !done[forest.parent[x]]) continue;
            potential[x] = potential[forest.parent[x]];
            potential[x][forest.parent_edge[x]->first] += forest.parent_edge[x]->second;
            done[x] = true;
            progress = true;
        }
    }

    std::set<std::size_t> tree(forest.tree_edges.begin(), forest.tree_edges.end());
    std::vector<SparseMatrix::Entry> triplets;
    std::size_t row = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (tree.count(e)) continue;
        const auto& edge = g.quiver.edges[e];
        std::vector<int> cycle = potential[edge.src];
        cycle[e] += 1;
        for (std::size_t j = 0; j < g.edge_count(); ++j) {
            cycle[j] -= potential[edge.dst][j];
            if (cycle[j] != 0) triplets.push_back({row, j, Rational(cycle[j])});
        }
        ++row;
    }
    return SparseMatrix::from_triplets(row, g.edge_count(), std::move(triplets));
}

}  // namespace groupchar
