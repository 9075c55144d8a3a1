#include "groupchar/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "groupchar/errors.hpp"

namespace groupchar {

namespace {

using IntRow = RrefBuilder::IntRow;

// a*x + b*y over sorted sparse integer rows, zeros dropped.
IntRow linear_combine(const Int& a, const IntRow& x, const Int& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            Int v = a * x[i].second + b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Divides by the content; flips signs so the leading coefficient is positive.
void make_primitive(IntRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (row.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [c, v] : row) v /= g;
    }
}

}  // namespace

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Entry> triplets) {
    for (const auto& e : triplets) {
        if (e.row >= rows || e.col >= cols) {
            throw ContractViolation("sparse matrix entry out of range");
        }
    }
    std::sort(triplets.begin(), triplets.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    SparseMatrix m;
    m.rows = rows;
    m.cols = cols;
    for (auto& e : triplets) {
        if (!m.entries.empty() && m.entries.back().row == e.row &&
            m.entries.back().col == e.col) {
            m.entries.back().value += e.value;
            if (m.entries.back().value == 0) m.entries.pop_back();
        } else if (e.value != 0) {
            m.entries.push_back(std::move(e));
        }
    }
    return m;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if (x.size() != cols) throw ContractViolation("matrix-vector size mismatch");
    Vec y(rows, Rational(0));
    for (const auto& e : entries) y[e.row] += e.value * x[e.col];
    return y;
}

SparseMatrix SparseMatrix::transpose() const {
    std::vector<Entry> t;
    t.reserve(entries.size());
    for (const auto& e : entries) t.push_back({e.col, e.row, e.value});
    return from_triplets(cols, rows, std::move(t));
}

SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.cols) throw ContractViolation("vstack column mismatch");
    std::vector<SparseMatrix::Entry> t = a.entries;
    t.reserve(a.entries.size() + b.entries.size());
    for (const auto& e : b.entries) t.push_back({e.row + a.rows, e.col, e.value});
    return SparseMatrix::from_triplets(a.rows + b.rows, a.cols, std::move(t));
}

bool RrefBuilder::insert(IntRow row) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, v] : row) {
        if (c >= cols_) throw ContractViolation("row entry past column count");
    }
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    make_primitive(row);

    // Reduce against existing pivots. Pivot rows only carry entries at
    // columns >= their pivot, so eliminations never reintroduce anything to
    // the left of the scan position.
    std::size_t i = 0;
    while (i < row.size()) {
        std::size_t col = row[i].first;
        std::size_t r = row_of_pivot_[col];
        if (r == npos) {
            ++i;
            continue;
        }
        const Int& p = rows_[r].front().second;
        row = linear_combine(p, row, -row[i].second, rows_[r]);
        make_primitive(row);
        i = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first <= c; }) -
            row.begin();
    }
    if (row.empty()) return false;

    std::size_t pivot = row.front().first;
    const Int pivot_coeff = row.front().second;
    // Jordan step: clear the new pivot column from every stored row.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& stored = rows_[r];
        auto it = std::lower_bound(
            stored.begin(), stored.end(), pivot,
            [](const auto& e, std::size_t c) { return e.first < c; });
        if (it == stored.end() || it->first != pivot) continue;
        stored = linear_combine(pivot_coeff, stored, -it->second, row);
        make_primitive(stored);
    }
    row_of_pivot_[pivot] = rows_.size();
    pivot_of_row_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
}

bool RrefBuilder::insert(const Vec& dense) {
    std::vector<std::pair<std::size_t, Rational>> sparse;
    for (std::size_t j = 0; j < dense.size(); ++j) {
        if (dense[j] != 0) sparse.emplace_back(j, dense[j]);
    }
    return insert_sparse(sparse);
}

bool RrefBuilder::insert_sparse(const std::vector<std::pair<std::size_t, Rational>>& row) {
    Int scale = 1;
    for (const auto& [c, v] : row) scale = lcm(scale, denominator(v));
    IntRow ints;
    ints.reserve(row.size());
    for (const auto& [c, v] : row) {
        ints.emplace_back(c, numerator(v) * (scale / denominator(v)));
    }
    return insert(std::move(ints));
}

Subspace RrefBuilder::row_space() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pivot_of_row_[a] < pivot_of_row_[b];
    });
    Subspace s;
    s.ambient_dim = cols_;
    for (std::size_t r : order) {
        const Rational lead(rows_[r].front().second);
        Vec v(cols_, Rational(0));
        for (const auto& [c, val] : rows_[r]) v[c] = Rational(val) / lead;
        s.basis.push_back(std::move(v));
        s.pivots.push_back(pivot_of_row_[r]);
    }
    return s;
}

Subspace RrefBuilder::kernel() const {
    std::vector<Vec> generators;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (row_of_pivot_[f] != npos) continue;
        Vec v(cols_, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            auto it = std::lower_bound(
                rows_[r].begin(), rows_[r].end(), f,
                [](const auto& e, std::size_t c) { return e.first < c; });
            if (it != rows_[r].end() && it->first == f) {
                v[pivot_of_row_[r]] =
                    -Rational(it->second) / Rational(rows_[r].front().second);
            }
        }
        generators.push_back(std::move(v));
    }
    return Subspace::from_spanning(cols_, generators);
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_dim) throw ContractViolation("reduce: ambient mismatch");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Rational c = v[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = pivots[i]; j < ambient_dim; ++j) {
            if (basis[i][j] != 0) v[j] -= c * basis[i][j];
        }
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

Subspace Subspace::zero(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_dim = ambient_dim;
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s;
    s.ambient_dim = ambient_dim;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec v(ambient_dim, Rational(0));
        v[i] = 1;
        s.basis.push_back(std::move(v));
        s.pivots.push_back(i);
    }
    return s;
}

Subspace Subspace::from_spanning(std::size_t ambient_dim,
                                 const std::vector<Vec>& vectors) {
    RrefBuilder b(ambient_dim);
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim) {
            throw ContractViolation("spanning vector has wrong length");
        }
        b.insert(v);
    }
    return b.row_space();
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) {
        throw ContractViolation("subspace_equal: ambient dimension mismatch");
    }
    return a.pivots == b.pivots && a.basis == b.basis;
}

std::size_t quotient_dim(const Subspace& whole, const Subspace& part) {
    if (whole.ambient_dim != part.ambient_dim) {
        throw ContractViolation("quotient_dim: ambient dimension mismatch");
    }
    for (const auto& v : part.basis) {
        if (!whole.contains(v)) {
            throw ContractViolation("quotient_dim: part is not contained in whole");
        }
    }
    return whole.dim() - part.dim();
}

Subspace kernel_basis(const SparseMatrix& m) {
    RrefBuilder b(m.cols);
    std::vector<std::pair<std::size_t, Rational>> row;
    std::size_t current = 0;
    for (const auto& e : m.entries) {
        if (e.row != current) {
            if (!row.empty()) b.insert_sparse(row);
            row.clear();
            current = e.row;
        }
        row.emplace_back(e.col, e.value);
    }
    if (!row.empty()) b.insert_sparse(row);
    return b.kernel();
}

Subspace image_basis(const SparseMatrix& m) {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(m.cols);
    for (const auto& e : m.entries) columns[e.col].emplace_back(e.row, e.value);
    RrefBuilder b(m.rows);
    for (const auto& col : columns) {
        if (!col.empty()) b.insert_sparse(col);
    }
    return b.row_space();
}

std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows) throw ContractViolation("solve: rhs length mismatch");
    RrefBuilder b(m.cols + 1);
    std::vector<std::pair<std::size_t, Rational>> row;
    auto flush = [&](std::size_t r) {
        if (rhs[r] != 0) row.emplace_back(m.cols, rhs[r]);
        if (!row.empty()) b.insert_sparse(row);
        row.clear();
    };
    std::size_t current = 0;
    for (const auto& e : m.entries) {
        while (current < e.row) flush(current++);
        row.emplace_back(e.col, e.value);
    }
    while (current < m.rows) flush(current++);

    Subspace rref = b.row_space();
    Vec x(m.cols, Rational(0));
    for (std::size_t i = 0; i < rref.basis.size(); ++i) {
        if (rref.pivots[i] == m.cols) return std::nullopt;  // 0 = nonzero
        x[rref.pivots[i]] = rref.basis[i][m.cols];
    }
    return x;
}

}  // namespace groupchar
