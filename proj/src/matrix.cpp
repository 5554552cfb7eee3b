#include "liecoh/matrix.hpp"

#include "liecoh/errors.hpp"

namespace liecoh {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) {
            const Rational& a = (*this)(i, j);
            if (!a.is_zero()) out[i] += a * v[j];
        }
    }
    return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b - b * a;
}

std::optional<std::vector<std::vector<Rational>>> coordinates_in_span(
    const std::vector<std::vector<Rational>>& basis,
    const std::vector<std::vector<Rational>>& targets) {
    const int k = static_cast<int>(basis.size());
    const int t = static_cast<int>(targets.size());
    const int n = basis.empty() ? (targets.empty() ? 0 : static_cast<int>(targets[0].size()))
                                : static_cast<int>(basis[0].size());
    // Augmented [B | T], Gauss-Jordan on the B part.
    RationalMatrix aug(n, k + t);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(basis[j].size()) != n)
            throw DimensionMismatch("coordinates_in_span: basis length mismatch");
        for (int i = 0; i < n; ++i) aug(i, j) = basis[j][i];
    }
    for (int j = 0; j < t; ++j) {
        if (static_cast<int>(targets[j].size()) != n)
            throw DimensionMismatch("coordinates_in_span: target length mismatch");
        for (int i = 0; i < n; ++i) aug(i, k + j) = targets[j][i];
    }

    std::vector<int> pivot_row_of_col(k, -1);
    int row = 0;
    for (int col = 0; col < k && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (!aug(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < k + t; ++j) std::swap(aug(pr, j), aug(row, j));
        const Rational inv = Rational(1) / aug(row, col);
        for (int j = 0; j < k + t; ++j) aug(row, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            const Rational f = aug(i, col);
            for (int j = 0; j < k + t; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_row_of_col[col] = row;
        ++row;
    }
    for (int col = 0; col < k; ++col)
        if (pivot_row_of_col[col] < 0) return std::nullopt;  // basis not independent
    // Residual rows below the pivots must vanish on every target column.
    for (int i = row; i < n; ++i)
        for (int j = 0; j < t; ++j)
            if (!aug(i, k + j).is_zero()) return std::nullopt;

    std::vector<std::vector<Rational>> coords(t, std::vector<Rational>(k));
    for (int j = 0; j < t; ++j)
        for (int col = 0; col < k; ++col) coords[j][col] = aug(pivot_row_of_col[col], k + j);
    return coords;
}

}  // namespace liecoh
