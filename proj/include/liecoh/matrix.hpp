#pragma once

#include <optional>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Dense rational matrix for the small objects (action matrices, bilinear
/// forms). Large rank work goes through SparseMatrix instead.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const = default;

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix& operator*=(const Rational& s);
    RationalMatrix transposed() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);

/// Coordinates of each target vector in the span of the basis vectors
/// (all length n). Empty when some target lies outside the span.
std::optional<std::vector<std::vector<Rational>>> coordinates_in_span(
    const std::vector<std::vector<Rational>>& basis,
    const std::vector<std::vector<Rational>>& targets);

}  // namespace liecoh
