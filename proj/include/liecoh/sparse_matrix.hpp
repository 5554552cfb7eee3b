#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Sparse matrix over the rationals. Only nonzero entries are stored;
/// iteration over entries() is row-major by (row, col).
class SparseMatrix {
public:
    using EntryMap = std::map<std::pair<int, int>, Rational>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    void set(int r, int c, Rational v);
    void add(int r, int c, const Rational& v);
    Rational at(int r, int c) const;

    const EntryMap& entries() const { return entries_; }

    SparseMatrix transposed() const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    static SparseMatrix identity(int n);
    /// Stacks blocks vertically; all blocks must share the column count.
    static SparseMatrix vstack(const std::vector<SparseMatrix>& blocks);
    /// Matrix whose rows are the given vectors.
    static SparseMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols);
    /// Matrix whose columns are the given vectors.
    static SparseMatrix from_cols(const std::vector<std::vector<Rational>>& cols, int rows);

    bool operator==(const SparseMatrix& o) const = default;

private:
    void check_range(int r, int c) const;

    int rows_ = 0, cols_ = 0;
    EntryMap entries_;
};

/// Exact rank over the rationals (fraction-free sparse elimination).
int rank(const SparseMatrix& m);

/// Basis of the right null space; each vector is primitive integer with the
/// first nonzero entry positive, ordered by ascending free column.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

/// Basis of the row space (primitive integer vectors, deterministic order).
std::vector<std::vector<Rational>> row_space_basis(const SparseMatrix& m);

/// Rank of m reduced modulo prime p. Empty when some denominator vanishes
/// mod p (caller should retry with another prime).
std::optional<int> rank_modulo(const SparseMatrix& m, std::uint64_t p);

/// Deterministic sequence of primes > 2^30 used by the modular fast path.
std::uint64_t nth_verification_prime(int index);

/// Two-prime modular rank with exact fallback on disagreement.
int rank_fast(const SparseMatrix& m);

}  // namespace liecoh
