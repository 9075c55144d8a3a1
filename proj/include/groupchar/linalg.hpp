#ifndef GROUPCHAR_LINALG_HPP
#define GROUPCHAR_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "groupchar/rational.hpp"

namespace groupchar {

/// Coordinate-sorted sparse matrix over the rationals. No duplicate
/// positions, no explicit zeros.
struct SparseMatrix {
    struct Entry {
        std::size_t row;
        std::size_t col;
        Rational value;
    };

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Entry> entries;

    // Sorts, merges duplicate positions by summing, drops zeros. Throws
    // ContractViolation on out-of-range indices.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                      std::vector<Entry> triplets);

    Vec apply(const Vec& x) const;
    SparseMatrix transpose() const;
};

// Stacks b below a; both must have the same column count.
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);

/// A linear subspace of Q^ambient_dim held as a canonical RREF basis:
/// pivot columns strictly increasing, each pivot entry 1 and the only
/// nonzero in its column among the basis rows. Equality of subspaces is
/// therefore syntactic equality of bases.
struct Subspace {
    std::size_t ambient_dim = 0;
    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.size(); }

    // Residual of v after eliminating all pivot coordinates of this basis.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;

    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    // Canonicalizes an arbitrary spanning set.
    static Subspace from_spanning(std::size_t ambient_dim,
                                  const std::vector<Vec>& vectors);
};

bool subspace_equal(const Subspace& a, const Subspace& b);

// dim(whole) - dim(part); throws ContractViolation unless part is contained
// in whole.
std::size_t quotient_dim(const Subspace& whole, const Subspace& part);

Subspace kernel_basis(const SparseMatrix& m);
Subspace image_basis(const SparseMatrix& m);

// Some particular solution of m*x = rhs with all free coordinates zero, or
// nullopt when the system is inconsistent.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& rhs);

/// Incremental fraction-free row reduction. Rows are kept as primitive
/// integer vectors and mutually Jordan-reduced, so fill-in is bounded by
/// the nullity of the system and every output is the unique RREF of the
/// inserted row space. Pivot choice: lowest column index first, ties by
/// insertion order.
class RrefBuilder {
public:
    using IntRow = std::vector<std::pair<std::size_t, Int>>;

    explicit RrefBuilder(std::size_t cols) : cols_(cols), row_of_pivot_(cols, npos) {}

    // Returns true when the row increased the rank.
    bool insert(IntRow row);
    bool insert(const Vec& dense);
    bool insert_sparse(const std::vector<std::pair<std::size_t, Rational>>& row);

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    Subspace row_space() const;
    // Nullspace of the inserted rows viewed as a matrix.
    Subspace kernel() const;

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t cols_;
    std::vector<IntRow> rows_;               // entries col-sorted, primitive
    std::vector<std::size_t> pivot_of_row_;
    std::vector<std::size_t> row_of_pivot_;  // col -> row index or npos
};

}  // namespace groupchar

#endif
