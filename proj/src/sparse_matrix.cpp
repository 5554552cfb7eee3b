#include "liecoh/sparse_matrix.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <set>

#include "liecoh/errors.hpp"

namespace liecoh {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

void SparseMatrix::check_range(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw DimensionMismatch("matrix index out of range");
}

void SparseMatrix::set(int r, int c, Rational v) {
    check_range(r, c);
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseMatrix::add(int r, int c, const Rational& v) {
    check_range(r, c);
    if (v.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

Rational SparseMatrix::at(int r, int c) const {
    check_range(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational() : it->second;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DimensionMismatch("matrix-vector size mismatch");
    std::vector<Rational> y(rows_);
    for (const auto& [rc, v] : entries_)
        if (!x[rc.second].is_zero()) y[rc.first] += v * x[rc.second];
    return y;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.entries_[{i, i}] = Rational(1);
    return m;
}

SparseMatrix SparseMatrix::vstack(const std::vector<SparseMatrix>& blocks) {
    int cols = blocks.empty() ? 0 : blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw DimensionMismatch("vstack: column counts differ");
        rows += b.rows();
    }
    SparseMatrix m(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
        for (const auto& [rc, v] : b.entries_) m.entries_[{rc.first + off, rc.second}] = v;
        off += b.rows();
    }
    return m;
}

SparseMatrix SparseMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw DimensionMismatch("from_rows: row length mismatch");
        for (int c = 0; c < cols; ++c)
            if (!rows[r][c].is_zero()) m.entries_[{r, c}] = rows[r][c];
    }
    return m;
}

SparseMatrix SparseMatrix::from_cols(const std::vector<std::vector<Rational>>& cols, int rows) {
    SparseMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw DimensionMismatch("from_cols: column length mismatch");
        for (int r = 0; r < rows; ++r)
            if (!cols[c][r].is_zero()) m.entries_[{r, c}] = cols[c][r];
    }
    return m;
}

namespace {

// Fraction-free elimination working on integer rows. Denominators are
// cleared up front and each combined row is divided by its content, so
// entries stay small without per-step exact-division bookkeeping.
using IntRow = std::vector<std::pair<int, mpz_class>>;  // sorted by column

void remove_content(IntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::vector<IntRow> integer_rows(const SparseMatrix& m) {
    std::vector<IntRow> rows(m.rows());
    auto it = m.entries().begin();
    while (it != m.entries().end()) {
        const int r = it->first.first;
        auto end = it;
        mpz_class lcm = 1;
        while (end != m.entries().end() && end->first.first == r) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), end->second.denominator().get_mpz_t());
            ++end;
        }
        IntRow& row = rows[r];
        for (auto jt = it; jt != end; ++jt) {
            mpz_class v = jt->second.numerator() * (lcm / jt->second.denominator());
            row.emplace_back(jt->first.second, std::move(v));
        }
        remove_content(row);
        it = end;
    }
    return rows;
}

// p*A - a*R (pivot column cancels exactly), content removed.
IntRow combine(const IntRow& A, const mpz_class& p, const IntRow& R, const mpz_class& a) {
    IntRow out;
    out.reserve(A.size() + R.size());
    std::size_t i = 0, j = 0;
    while (i < A.size() || j < R.size()) {
        if (j == R.size() || (i < A.size() && A[i].first < R[j].first)) {
            out.emplace_back(A[i].first, p * A[i].second);
            ++i;
        } else if (i == A.size() || R[j].first < A[i].first) {
            out.emplace_back(R[j].first, -(a * R[j].second));
            ++j;
        } else {
            mpz_class v = p * A[i].second - a * R[j].second;
            if (v != 0) out.emplace_back(A[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    remove_content(out);
    return out;
}

struct Elimination {
    int rank = 0;
    std::vector<std::pair<int, IntRow>> pivots;  // (pivot col, frozen row), in order
};

const mpz_class& entry_at(const IntRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return it->second;
}

Elimination eliminate(std::vector<IntRow> rows, int cols, bool keep_pivots) {
    const int nrows = static_cast<int>(rows.size());
    std::vector<char> active(nrows, 1);
    std::vector<std::set<int>> col_rows(cols);
    for (int r = 0; r < nrows; ++r) {
        if (rows[r].empty()) {
            active[r] = 0;
            continue;
        }
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
    }

    Elimination res;
    for (;;) {
        // Markowitz-style pivot: sparsest active row, then sparsest column in it.
        int pr = -1;
        std::size_t best = SIZE_MAX;
        for (int r = 0; r < nrows; ++r)
            if (active[r] && rows[r].size() < best) {
                best = rows[r].size();
                pr = r;
            }
        if (pr < 0) break;
        int pc = -1;
        std::size_t cbest = SIZE_MAX;
        for (const auto& [c, v] : rows[pr])
            if (col_rows[c].size() < cbest) {
                cbest = col_rows[c].size();
                pc = c;
            }

        const mpz_class p = entry_at(rows[pr], pc);
        const std::vector<int> victims(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : victims) {
            if (r == pr || !active[r]) continue;
            const mpz_class& a = entry_at(rows[r], pc);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
            IntRow next = combine(rows[r], mpz_class(p / g), rows[pr], mpz_class(a / g));
            for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
            for (const auto& [c, v] : next) col_rows[c].insert(r);
            rows[r] = std::move(next);
            if (rows[r].empty()) active[r] = 0;
        }

        for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
        active[pr] = 0;
        ++res.rank;
        if (keep_pivots) res.pivots.emplace_back(pc, std::move(rows[pr]));
    }
    return res;
}

void make_primitive(std::vector<Rational>& v) {
    mpz_class lcm = 1;
    for (const auto& x : v)
        if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        ints[i] = v[i].numerator() * (lcm / v[i].denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) return;
    int lead_sign = 0;
    for (std::size_t i = 0; i < v.size() && lead_sign == 0; ++i)
        if (ints[i] != 0) lead_sign = sgn(ints[i]);
    if (lead_sign < 0) g = -g;
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ints[i] == 0 ? Rational() : Rational(mpz_class(ints[i] / g));
}

}  // namespace

int rank(const SparseMatrix& m) {
    return eliminate(integer_rows(m), m.cols(), false).rank;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    Elimination elim = eliminate(integer_rows(m), m.cols(), true);
    std::vector<char> is_pivot(m.cols(), 0);
    for (const auto& [c, row] : elim.pivots) is_pivot[c] = 1;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = Rational(1);
        // Frozen pivot rows only touch their own pivot column, later pivot
        // columns and free columns, so reverse order back-substitutes cleanly.
        for (auto it = elim.pivots.rbegin(); it != elim.pivots.rend(); ++it) {
            const auto& [pc, row] = *it;
            Rational s, pval;
            for (const auto& [c, v] : row) {
                if (c == pc)
                    pval = Rational(mpz_class(v));
                else if (!x[c].is_zero())
                    s += Rational(mpz_class(v)) * x[c];
            }
            x[pc] = -(s / pval);
        }
        make_primitive(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<Rational>> row_space_basis(const SparseMatrix& m) {
    Elimination elim = eliminate(integer_rows(m), m.cols(), true);
    std::vector<std::vector<Rational>> basis;
    basis.reserve(elim.pivots.size());
    for (const auto& [pc, row] : elim.pivots) {
        std::vector<Rational> v(m.cols());
        for (const auto& [c, val] : row) v[c] = Rational(mpz_class(val));
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

using ModRow = std::vector<std::pair<int, std::uint64_t>>;

int eliminate_mod(std::vector<ModRow> rows, int cols, std::uint64_t p) {
    const int nrows = static_cast<int>(rows.size());
    std::vector<char> active(nrows, 1);
    std::vector<std::set<int>> col_rows(cols);
    for (int r = 0; r < nrows; ++r) {
        if (rows[r].empty()) {
            active[r] = 0;
            continue;
        }
        for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
    }
    int rank = 0;
    for (;;) {
        int pr = -1;
        std::size_t best = SIZE_MAX;
        for (int r = 0; r < nrows; ++r)
            if (active[r] && rows[r].size() < best) {
                best = rows[r].size();
                pr = r;
            }
        if (pr < 0) break;
        int pc = -1;
        std::size_t cbest = SIZE_MAX;
        for (const auto& [c, v] : rows[pr])
            if (col_rows[c].size() < cbest) {
                cbest = col_rows[c].size();
                pc = c;
            }
        std::uint64_t pval = 0;
        for (const auto& [c, v] : rows[pr])
            if (c == pc) pval = v;
        const std::uint64_t pinv = invmod(pval, p);

        const std::vector<int> victims(col_rows[pc].begin(), col_rows[pc].end());
        for (int r : victims) {
            if (r == pr || !active[r]) continue;
            std::uint64_t a = 0;
            for (const auto& [c, v] : rows[r])
                if (c == pc) a = v;
            const std::uint64_t factor = mulmod(a, pinv, p);
            ModRow next;
            next.reserve(rows[r].size() + rows[pr].size());
            std::size_t i = 0, j = 0;
            const ModRow& A = rows[r];
            const ModRow& R = rows[pr];
            while (i < A.size() || j < R.size()) {
                if (j == R.size() || (i < A.size() && A[i].first < R[j].first)) {
                    next.push_back(A[i++]);
                } else if (i == A.size() || R[j].first < A[i].first) {
                    next.emplace_back(R[j].first, p - mulmod(factor, R[j].second, p));
                    ++j;
                } else {
                    std::uint64_t v = (A[i].second + p - mulmod(factor, R[j].second, p)) % p;
                    if (v != 0) next.emplace_back(A[i].first, v);
                    ++i;
                    ++j;
                }
            }
            for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
            for (const auto& [c, v] : next) col_rows[c].insert(r);
            rows[r] = std::move(next);
            if (rows[r].empty()) active[r] = 0;
        }

        for (const auto& [c, v] : rows[pr]) col_rows[c].erase(pr);
        active[pr] = 0;
        ++rank;
    }
    return rank;
}

}  // namespace

std::optional<int> rank_modulo(const SparseMatrix& m, std::uint64_t p) {
    std::vector<ModRow> rows(m.rows());
    for (const auto& [rc, v] : m.entries()) {
        const std::uint64_t den = mpz_fdiv_ui(v.denominator().get_mpz_t(), p);
        if (den == 0) return std::nullopt;
        const std::uint64_t num = mpz_fdiv_ui(v.numerator().get_mpz_t(), p);
        const std::uint64_t val = mulmod(num, invmod(den, p), p);
        if (val != 0) rows[rc.first].emplace_back(rc.second, val);
    }
    return eliminate_mod(std::move(rows), m.cols(), p);
}

std::uint64_t nth_verification_prime(int index) {
    std::mt19937_64 gen(0x11EC0115EEDULL + static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ULL);
    const std::uint64_t base = (1ULL << 30) + gen() % (1ULL << 30);
    mpz_class p(static_cast<unsigned long>(base));
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p.get_ui();
}

int rank_fast(const SparseMatrix& m) {
    int index = 0;
    auto next_rank = [&](std::uint64_t avoid) {
        for (;;) {
            const std::uint64_t p = nth_verification_prime(index++);
            if (p == avoid) continue;
            if (auto r = rank_modulo(m, p)) return std::make_pair(*r, p);
        }
    };
    const auto [r1, p1] = next_rank(0);
    const auto [r2, p2] = next_rank(p1);
    if (r1 == r2) return r1;
    return rank(m);
}

}  // namespace liecoh
