#include "liecoh/sl2.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/errors.hpp"
#include "liecoh/qcombinatorics.hpp"
#include "liecoh/sparse_matrix.hpp"
#include "liecoh/subsets.hpp"

namespace liecoh {

Sl2Decomposition::Sl2Decomposition(std::map<int, long long> mult) : mult_(std::move(mult)) {
    for (auto it = mult_.begin(); it != mult_.end();) {
        if (it->first < 0 || it->second < 0)
            throw NotAModule("decomposition with negative weight or multiplicity");
        it = it->second == 0 ? mult_.erase(it) : std::next(it);
    }
}

void Sl2Decomposition::add(int m, long long count) {
    if (m < 0 || count < 0) throw NotAModule("decomposition with negative weight or multiplicity");
    if (count == 0) return;
    mult_[m] += count;
}

long long Sl2Decomposition::multiplicity(int m) const {
    auto it = mult_.find(m);
    return it == mult_.end() ? 0 : it->second;
}

long long Sl2Decomposition::total_dimension() const {
    long long d = 0;
    for (const auto& [m, c] : mult_) d += c * (m + 1);
    return d;
}

WeightMultiset Sl2Decomposition::weights() const {
    WeightMultiset w;
    for (const auto& [m, c] : mult_)
        for (int lam = -m; lam <= m; lam += 2) w[lam] += c;
    return w;
}

std::string Sl2Decomposition::str() const {
    if (mult_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : mult_) {
        if (!first) os << "+";
        if (c != 1) os << c;
        os << "V_" << m;
        first = false;
    }
    return os.str();
}

const LieAlgebra& sl2() {
    static const LieAlgebra g = [] {
        LieAlgebra::BracketMap b;
        Vec e3(3), e1(3), e2(3);
        e3[2] = Rational(1);
        e1[0] = Rational(-2);
        e2[1] = Rational(2);
        b[{0, 1}] = e3;
        b[{0, 2}] = e1;
        b[{1, 2}] = e2;
        return LieAlgebra::create(3, "sl2", std::move(b));
    }();
    return g;
}

Representation sl2_irrep(int m) {
    if (m < 0) throw Error("sl2_irrep: m must be >= 0");
    const int d = m + 1;
    RationalMatrix lower(d, d), raise(d, d), diag(d, d);
    for (int i = 0; i <= m; ++i) {
        diag(i, i) = Rational(m - 2 * i);
        if (i > 0) lower(i - 1, i) = Rational(i);
        if (i < m) raise(i + 1, i) = Rational(m - i);
    }
    std::ostringstream os;
    os << "V_" << m;
    return Representation::create(sl2(), {std::move(lower), std::move(raise), std::move(diag)},
                                  os.str());
}

Representation sl2_module(const std::vector<int>& ms) {
    if (ms.empty()) return Representation::trivial(sl2(), 0);
    Representation rep = sl2_irrep(ms.front());
    for (std::size_t i = 1; i < ms.size(); ++i) rep = direct_sum(rep, sl2_irrep(ms[i]));
    return rep;
}

WeightMultiset weight_multiplicities(const Representation& rho) {
    const int d = rho.dim();
    if (rho.algebra().dim() < 3)
        throw DimensionMismatch("weight_multiplicities expects an sl2-type acting algebra");
    const RationalMatrix& h = rho.action(2);
    WeightMultiset w;
    long long total = 0;

    bool diagonal = true;
    for (int r = 0; r < d && diagonal; ++r)
        for (int c = 0; c < d && diagonal; ++c)
            if (r != c && !h(r, c).is_zero()) diagonal = false;
    if (diagonal) {
        for (int i = 0; i < d; ++i) {
            const Rational& x = h(i, i);
            if (!x.is_integer())
                throw NotWeightDiagonalizable("non-integer weight on the diagonal");
            const mpz_class n = x.numerator();
            if (!n.fits_sint_p()) throw NotWeightDiagonalizable("weight out of range");
            ++w[static_cast<int>(n.get_si())];
        }
        return w;
    }

    // Gershgorin bound: every eigenvalue has |lambda| <= max row sum of |entries|.
    Rational bound;
    for (int r = 0; r < d; ++r) {
        Rational row_sum;
        for (int c = 0; c < d; ++c) row_sum += abs(h(r, c));
        bound = std::max(bound, row_sum);
    }
    const long cap = bound.is_zero() ? 0 : (bound.numerator() / bound.denominator()).get_si() + 1;
    for (long lam = -cap; lam <= cap; ++lam) {
        SparseMatrix m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                Rational v = h(r, c);
                if (r == c) v -= Rational(lam);
                if (!v.is_zero()) m.set(r, c, v);
            }
        const long long nullity = d - rank(m);
        if (nullity > 0) {
            w[static_cast<int>(lam)] = nullity;
            total += nullity;
        }
    }
    if (total != d)
        throw NotWeightDiagonalizable(
            "e_3 action is not diagonalizable with integer eigenvalues");
    return w;
}

Sl2Decomposition decompose(const WeightMultiset& input) {
    WeightMultiset w;
    for (const auto& [lam, c] : input) {
        if (c < 0) throw NotAModule("negative weight multiplicity");
        if (c > 0) w[lam] = c;
    }
    for (const auto& [lam, c] : w) {
        auto it = w.find(-lam);
        if ((it == w.end() ? 0 : it->second) != c)
            throw NotAModule("weight multiset is not symmetric");
    }
    Sl2Decomposition dec;
    auto at = [&](int lam) {
        auto it = w.find(lam);
        return it == w.end() ? 0LL : it->second;
    };
    const int top = w.empty() ? -1 : w.rbegin()->first;
    for (int m = top; m >= 0; --m) {
        const long long c = at(m) - at(m + 2);
        if (c < 0) throw NotAModule("negative multiplicity while peeling highest weights");
        if (c > 0) dec.add(m, c);
    }
    if (dec.weights() != w) throw NotAModule("weights do not reassemble to the input multiset");
    return dec;
}

Sl2Decomposition decompose(const Representation& rho) {
    return decompose(weight_multiplicities(rho));
}

namespace {

Sl2Decomposition exterior_brute(int m, int j) {
    const long long count = binomial(m + 1, j);
    if (count > 1000000)
        throw SizeLimitExceeded("brute-force exterior decomposition beyond 10^6 subsets");
    WeightMultiset sums;
    for (const auto& s : subsets_lex(m + 1, j)) {
        int total = 0;
        for (int i : s) total += m - 2 * i;
        ++sums[total];
    }
    return decompose(sums);
}

Sl2Decomposition exterior_formula(int m, int j) {
    const int k = m - j + 1;  // Lambda^j(V_{j+k-1})
    Sl2Decomposition dec;
    const long long jk = static_cast<long long>(j) * k;
    for (long long n = 0; 2 * n <= jk; ++n) {
        const long long c = multiplicity_N(j, k, n);
        if (c < 0) throw Error("negative multiplicity from the partition formula");
        if (c > 0) dec.add(static_cast<int>(jk - 2 * n), c);
    }
    return dec;
}

}  // namespace

Sl2Decomposition exterior_power_decomposition(int m, int j, PlethysmMethod method) {
    if (m < 0 || j < 0) throw Error("exterior_power_decomposition: negative argument");
    if (j > m + 1) return Sl2Decomposition();
    return method == PlethysmMethod::Brute ? exterior_brute(m, j) : exterior_formula(m, j);
}

Sl2Decomposition clebsch_gordan(int a, int b) {
    Sl2Decomposition dec;
    for (int m = a + b; m >= std::abs(a - b); m -= 2) dec.add(m, 1);
    return dec;
}

long long hom_dim(const Sl2Decomposition& a, const Sl2Decomposition& b) {
    long long total = 0;
    for (const auto& [m, c] : a.multiplicities()) total += c * b.multiplicity(m);
    return total;
}

std::vector<RationalMatrix> invariant_bilinear_forms(const Representation& rho,
                                                     FormParity parity) {
    const int d = rho.dim();
    // Unknowns: entries B(u,v) restricted to the requested parity class.
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < d; ++u)
        for (int v = (parity == FormParity::Symmetric ? u : u + 1); v < d; ++v)
            slots.emplace_back(u, v);
    auto slot_coeff = [&](int u, int v, int slot) {
        const auto [a, b] = slots[slot];
        if (u == a && v == b) return Rational(1);
        if (u == b && v == a && a != b)
            return parity == FormParity::Symmetric ? Rational(1) : Rational(-1);
        return Rational();
    };

    const int n = rho.algebra().dim();
    SparseMatrix system(n * d * d, static_cast<int>(slots.size()));
    for (int x = 0; x < n; ++x) {
        const RationalMatrix& act = rho.action(x);
        for (int u = 0; u < d; ++u)
            for (int v = 0; v < d; ++v) {
                const int row = (x * d + u) * d + v;
                // B(act u, v) + B(u, act v) = 0
                for (std::size_t slot = 0; slot < slots.size(); ++slot) {
                    Rational coeff;
                    for (int w = 0; w < d; ++w) {
                        if (!act(w, u).is_zero()) {
                            const Rational c = slot_coeff(w, v, static_cast<int>(slot));
                            if (!c.is_zero()) coeff += act(w, u) * c;
                        }
                        if (!act(w, v).is_zero()) {
                            const Rational c = slot_coeff(u, w, static_cast<int>(slot));
                            if (!c.is_zero()) coeff += act(w, v) * c;
                        }
                    }
                    if (!coeff.is_zero()) system.add(row, static_cast<int>(slot), coeff);
                }
            }
    }
    std::vector<RationalMatrix> forms;
    for (const auto& sol : kernel_basis(system)) {
        RationalMatrix B(d, d);
        for (std::size_t slot = 0; slot < slots.size(); ++slot) {
            const auto [a, b] = slots[slot];
            B(a, b) = sol[slot];
            if (a != b) B(b, a) = parity == FormParity::Symmetric ? sol[slot] : -sol[slot];
        }
        forms.push_back(std::move(B));
    }
    return forms;
}

}  // namespace liecoh
