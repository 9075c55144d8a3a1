#include "groupchar/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "groupchar/errors.hpp"

namespace groupchar {

namespace {

void check_latin(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n) {
            throw ValidationError("row " + std::to_string(r) + " has wrong length");
        }
        std::vector<bool> seen(n, false);
        for (std::size_t v : table[r]) {
            if (v >= n || seen[v]) {
                throw ValidationError("row " + std::to_string(r) + " not a permutation");
            }
            seen[v] = true;
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<bool> seen(n, false);
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t v = table[r][c];
            if (seen[v]) {
                throw ValidationError("column " + std::to_string(c) + " not a permutation");
            }
            seen[v] = true;
        }
    }
}

GroupTable finalize(std::vector<std::vector<std::size_t>> table,
                    std::vector<std::string> labels) {
    const std::size_t n = table.size();

    std::size_t e = n;
    for (std::size_t c = 0; c < n; ++c) {
        bool is_id = true;
        for (std::size_t x = 0; x < n && is_id; ++x) {
            is_id = table[c][x] == x && table[x][c] == x;
        }
        if (is_id) {
            e = c;
            break;
        }
    }
    if (e == n) throw ValidationError("no two-sided identity element");

    // Reindex so the identity sits at 0.
    std::vector<std::size_t> to_new(n);
    std::iota(to_new.begin(), to_new.end(), 0);
    std::swap(to_new[e], to_new[0]);  // involution: to_new == to_old

    GroupTable g;
    g.order = n;
    g.products.assign(n * n, 0);
    g.labels.assign(n, "");
    for (std::size_t a = 0; a < n; ++a) {
        g.labels[to_new[a]] = labels[a];
        for (std::size_t b = 0; b < n; ++b) {
            g.products[to_new[a] * n + to_new[b]] = to_new[table[a][b]];
        }
    }

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c))) {
                    throw ValidationError(
                        "non-associative triple (" + std::to_string(a) + ", " +
                        std::to_string(b) + ", " + std::to_string(c) + ")");
                }
            }
        }
    }

    g.inverses.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (g.product(a, b) == GroupTable::identity) {
                if (g.product(b, a) != GroupTable::identity) {
                    throw ValidationError("element " + std::to_string(a) +
                                          " has no two-sided inverse");
                }
                g.inverses[a] = b;
                break;
            }
        }
        if (g.inverses[a] == n) {
            throw ValidationError("element " + std::to_string(a) + " has no inverse");
        }
    }
    return g;
}

std::vector<std::size_t> compose_perm(const std::vector<std::size_t>& s,
                                      const std::vector<std::size_t>& t) {
    std::vector<std::size_t> r(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) r[x] = s[t[x]];
    return r;
}

std::vector<std::size_t> cycle(std::size_t degree, std::vector<std::size_t> pts) {
    std::vector<std::size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        p[pts[i]] = pts[(i + 1) % pts.size()];
    }
    return p;
}

GroupTable quaternion_group() {
    // 1, -1, i, -i, j, -j, k, -k as (sign, axis) pairs.
    auto mul = [](std::size_t a, std::size_t b) -> std::size_t {
        int sa = (a % 2 == 0) ? 1 : -1, sb = (b % 2 == 0) ? 1 : -1;
        std::size_t ua = a / 2, ub = b / 2;  // 0=1, 1=i, 2=j, 3=k
        static const int sign[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        static const std::size_t axis[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        int s = sa * sb * sign[ua][ub];
        return axis[ua][ub] * 2 + (s > 0 ? 0 : 1);
    };
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) table[a][b] = mul(a, b);
    }
    return from_cayley_table(table, std::vector<std::string>{"1", "-1", "i", "-i",
                                                             "j", "-j", "k", "-k"});
}

}  // namespace

std::string cycle_notation(const std::vector<std::size_t>& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == i) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out += " ";
            out += std::to_string(j);
            done[j] = true;
            first = false;
            j = p[j];
        } while (j != i);
        out += ")";
    }
    return out.empty() ? "e" : out;
}

GroupTable from_cayley_table(const std::vector<std::vector<std::size_t>>& table,
                             std::optional<std::vector<std::string>> labels) {
    const std::size_t n = table.size();
    if (n == 0) throw ValidationError("empty Cayley table");
    check_latin(table);
    std::vector<std::string> names;
    if (labels) {
        if (labels->size() != n) throw ValidationError("label count mismatch");
        names = *labels;
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    }
    return finalize(table, std::move(names));
}

GroupTable from_permutation_generators(std::size_t degree,
                                       const std::vector<std::vector<std::size_t>>& generators,
                                       std::size_t element_cap) {
    for (const auto& gen : generators) {
        if (gen.size() != degree) throw ValidationError("generator has wrong degree");
        std::vector<bool> seen(degree, false);
        for (std::size_t v : gen) {
            if (v >= degree || seen[v]) throw ValidationError("generator is not a bijection");
            seen[v] = true;
        }
    }

    std::vector<std::size_t> id(degree);
    std::iota(id.begin(), id.end(), 0);

    std::vector<std::vector<std::size_t>> elements{id};
    std::map<std::vector<std::size_t>, std::size_t> index{{id, 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& gen : generators) {
            auto next = compose_perm(elements[i], gen);
            if (index.emplace(next, elements.size()).second) {
                if (elements.size() >= element_cap) {
                    throw SizeLimitError("generated group exceeds element cap of " +
                                         std::to_string(element_cap));
                }
                elements.push_back(std::move(next));
            }
        }
    }

    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
        labels[a] = cycle_notation(elements[a]);
        for (std::size_t b = 0; b < n; ++b) {
            table[a][b] = index.at(compose_perm(elements[a], elements[b]));
        }
    }
    return finalize(std::move(table), std::move(labels));
}

GroupTable named_group(const std::string& name, std::size_t order_cap) {
    if (name == "Q8") return quaternion_group();
    if (name.size() < 2) throw ValidationError("unknown group name: " + name);
    char kind = name[0];
    std::size_t n = 0;
    try {
        n = std::stoul(name.substr(1));
    } catch (const std::exception&) {
        throw ValidationError("unknown group name: " + name);
    }
    if (n == 0) throw ValidationError("group parameter must be positive: " + name);

    std::vector<std::size_t> full(n);
    std::iota(full.begin(), full.end(), 0);

    auto guard = [&](std::size_t order) {
        if (order > order_cap) {
            throw SizeLimitError("group " + name + " exceeds order cap of " +
                                 std::to_string(order_cap));
        }
    };

    switch (kind) {
        case 'C':
            guard(n);
            if (n == 1) return from_permutation_generators(1, {});
            return from_permutation_generators(n, {cycle(n, full)});
        case 'D': {
            guard(2 * n);
            if (n == 1) return named_group("C2", order_cap);
            if (n == 2) return from_permutation_generators(4, {cycle(4, {0, 1}), cycle(4, {2, 3})});
            std::vector<std::size_t> reflect(n);
            for (std::size_t i = 0; i < n; ++i) reflect[i] = (n - i) % n;
            return from_permutation_generators(n, {cycle(n, full), reflect});
        }
        case 'S': {
            std::size_t order = 1;
            for (std::size_t i = 2; i <= n; ++i) order *= i;
            guard(order);
            if (n == 1) return from_permutation_generators(1, {});
            return from_permutation_generators(n, {cycle(n, {0, 1}), cycle(n, full)});
        }
        case 'A': {
            std::size_t order = 1;
            for (std::size_t i = 2; i <= n; ++i) order *= i;
            guard(order / 2);
            if (n <= 2) return from_permutation_generators(1, {});
            if (n % 2 == 1) {
                return from_permutation_generators(n, {cycle(n, {0, 1, 2}), cycle(n, full)});
            }
            std::vector<std::size_t> tail(full.begin() + 1, full.end());
            return from_permutation_generators(n, {cycle(n, {0, 1, 2}), cycle(n, tail)});
        }
        default:
            throw ValidationError("unknown group name: " + name);
    }
}

ConjugacyClassification conjugacy_classes(const GroupTable& g) {
    ConjugacyClassification c;
    c.class_of.assign(g.order, g.order);
    for (std::size_t a = 0; a < g.order; ++a) {
        if (c.class_of[a] != g.order) continue;
        std::size_t id = c.classes.size();
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < g.order; ++x) {
            std::size_t y = g.conjugate(x, a);
            if (c.class_of[y] == g.order) {
                c.class_of[y] = id;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        c.representatives.push_back(members.front());
        c.classes.push_back(std::move(members));
    }
    return c;
}

std::vector<std::size_t> centralizer(const GroupTable& g, std::size_t a) {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < g.order; ++z) {
        if (g.product(z, a) == g.product(a, z)) out.push_back(z);
    }
    return out;
}

std::vector<std::size_t> center(const GroupTable& g) {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < g.order; ++z) {
        bool central = true;
        for (std::size_t a = 0; a < g.order && central; ++a) {
            central = g.product(z, a) == g.product(a, z);
        }
        if (central) out.push_back(z);
    }
    return out;
}

}  // namespace groupchar
