#include "liecoh/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/errors.hpp"
#include "liecoh/sparse_matrix.hpp"

namespace liecoh {

namespace {

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << v[i].str() << ")e" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

void add_scaled(Vec& acc, const Rational& c, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) acc[i] += c * v[i];
}

}  // namespace

LieAlgebra::Validation LieAlgebra::validate(int dim, std::string name, BracketMap brackets) {
    Validation result;
    if (dim < 0) {
        result.malformed.push_back("negative dimension");
        return result;
    }
    for (auto it = brackets.begin(); it != brackets.end();) {
        const auto& [ij, coeffs] = *it;
        const auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= dim || j >= dim || i >= j) {
            std::ostringstream os;
            os << "bracket index pair (" << (i + 1) << "," << (j + 1) << ") out of range or not i<j";
            result.malformed.push_back(os.str());
            return result;
        }
        if (static_cast<int>(coeffs.size()) != dim) {
            std::ostringstream os;
            os << "bracket (" << (i + 1) << "," << (j + 1) << ") coefficient vector has length "
               << coeffs.size() << ", expected " << dim;
            result.malformed.push_back(os.str());
            return result;
        }
        if (vec_is_zero(coeffs))
            it = brackets.erase(it);
        else
            ++it;
    }

    LieAlgebra g(dim, std::move(name), std::move(brackets));
    std::vector<Vec> basis(dim, Vec(dim));
    for (int i = 0; i < dim; ++i) basis[i][i] = Rational(1);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k) {
                Vec defect = g.bracket(g.bracket(i, j), basis[k]);
                add_scaled(defect, Rational(1), g.bracket(g.bracket(j, k), basis[i]));
                add_scaled(defect, Rational(1), g.bracket(g.bracket(k, i), basis[j]));
                if (!vec_is_zero(defect)) result.jacobi.push_back({i, j, k, std::move(defect)});
            }
    if (result.jacobi.empty()) result.algebra = std::move(g);
    return result;
}

LieAlgebra LieAlgebra::create(int dim, std::string name, BracketMap brackets) {
    Validation v = validate(dim, std::move(name), std::move(brackets));
    if (!v.malformed.empty()) throw DimensionMismatch(v.malformed.front());
    if (!v.jacobi.empty()) {
        const auto& d = v.jacobi.front();
        std::ostringstream os;
        os << "Jacobi identity fails on triple (" << (d.i + 1) << "," << (d.j + 1) << ","
           << (d.k + 1) << "); defect " << vec_to_string(d.defect) << " ["
           << v.jacobi.size() << " failing triple(s) total]";
        throw JacobiViolation(d.i, d.j, d.k, os.str());
    }
    return *std::move(v.algebra);
}

Vec LieAlgebra::bracket(int i, int j) const {
    Vec out(dim_);
    if (i == j) return out;
    const bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return out;
    out = it->second;
    if (flip)
        for (auto& x : out) x = -x;
    return out;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw DimensionMismatch("bracket operand length mismatch");
    Vec out(dim_);
    for (const auto& [ij, coeffs] : brackets_) {
        const auto [i, j] = ij;
        const Rational c = x[i] * y[j] - x[j] * y[i];
        if (!c.is_zero()) add_scaled(out, c, coeffs);
    }
    return out;
}

std::vector<Vec> LieAlgebra::ad_columns(int i) const {
    std::vector<Vec> cols(dim_);
    for (int v = 0; v < dim_; ++v) cols[v] = bracket(i, v);
    return cols;
}

LieAlgebra abelian(int dim, std::string name) {
    return LieAlgebra::create(dim, std::move(name), {});
}

std::vector<Vec> center(const LieAlgebra& g) {
    const int n = g.dim();
    SparseMatrix stacked(n * n, n);
    for (int i = 0; i < n; ++i) {
        const auto cols = g.ad_columns(i);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (!cols[v][u].is_zero()) stacked.set(i * n + u, v, cols[v][u]);
    }
    return kernel_basis(stacked);
}

std::vector<Vec> derived_subalgebra(const LieAlgebra& g) {
    std::vector<Vec> rows;
    for (const auto& [ij, coeffs] : g.brackets()) rows.push_back(coeffs);
    return row_space_basis(SparseMatrix::from_rows(rows, g.dim()));
}

bool is_perfect(const LieAlgebra& g) {
    return static_cast<int>(derived_subalgebra(g).size()) == g.dim();
}

Nilpotency is_nilpotent(const LieAlgebra& g) {
    Nilpotency res{false, 0, {}};
    const int n = g.dim();
    std::vector<Vec> current(n, Vec(n));
    for (int i = 0; i < n; ++i) current[i][i] = Rational(1);
    res.lower_central_dims.push_back(n);
    if (n == 0) {
        res.nilpotent = true;
        return res;
    }
    for (int step = 1; step <= n + 1; ++step) {
        std::vector<Vec> products;
        for (int i = 0; i < n; ++i) {
            Vec ei(n);
            ei[i] = Rational(1);
            for (const auto& u : current) products.push_back(g.bracket(ei, u));
        }
        std::vector<Vec> next = row_space_basis(SparseMatrix::from_rows(products, n));
        const int d = static_cast<int>(next.size());
        if (d == 0) {
            res.nilpotent = true;
            res.nil_class = step;
            return res;
        }
        res.lower_central_dims.push_back(d);
        if (d == res.lower_central_dims[res.lower_central_dims.size() - 2]) return res;
        current = std::move(next);
    }
    return res;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const int na = a.dim();
    LieAlgebra::BracketMap brackets;
    for (const auto& [ij, coeffs] : a.brackets()) {
        Vec v(na + b.dim());
        std::copy(coeffs.begin(), coeffs.end(), v.begin());
        brackets[ij] = std::move(v);
    }
    for (const auto& [ij, coeffs] : b.brackets()) {
        Vec v(na + b.dim());
        std::copy(coeffs.begin(), coeffs.end(), v.begin() + na);
        brackets[{ij.first + na, ij.second + na}] = std::move(v);
    }
    return LieAlgebra::create(na + b.dim(), a.name() + "+" + b.name(), std::move(brackets));
}

}  // namespace liecoh
