#include "liecoh/representation.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/errors.hpp"
#include "liecoh/subsets.hpp"

namespace liecoh {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    for (;;) {
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::uint32_t subset_mask(const std::vector<int>& subset) {
    std::uint32_t m = 0;
    for (int i : subset) m |= (1u << i);
    return m;
}

std::unordered_map<std::uint32_t, int> subset_ranks(
    const std::vector<std::vector<int>>& subsets) {
    std::unordered_map<std::uint32_t, int> ranks;
    ranks.reserve(subsets.size() * 2);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        ranks.emplace(subset_mask(subsets[i]), static_cast<int>(i));
    return ranks;
}

Representation Representation::create(LieAlgebra algebra, std::vector<RationalMatrix> actions,
                                      std::string name) {
    const int n = algebra.dim();
    if (static_cast<int>(actions.size()) != n)
        throw DimensionMismatch("expected one action matrix per basis element");
    const int d = actions.empty() ? 0 : actions.front().rows();
    for (const auto& m : actions)
        if (m.rows() != d || m.cols() != d)
            throw DimensionMismatch("action matrices must be square of equal size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RationalMatrix expected(d, d);
            const Vec b = algebra.bracket(i, j);
            for (int l = 0; l < n; ++l) {
                if (b[l].is_zero()) continue;
                RationalMatrix term = actions[l];
                term *= b[l];
                expected = expected + term;
            }
            if (!(commutator(actions[i], actions[j]) - expected).is_zero()) {
                std::ostringstream os;
                os << "homomorphism law fails on basis pair (" << (i + 1) << "," << (j + 1) << ")";
                throw RepresentationMismatch(os.str());
            }
        }
    return Representation(std::move(algebra), std::move(actions), std::move(name), d);
}

Representation Representation::trivial(LieAlgebra algebra, int dim) {
    std::vector<RationalMatrix> actions(algebra.dim(), RationalMatrix(dim, dim));
    return create(std::move(algebra), std::move(actions), "trivial");
}

Representation adjoint_representation(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<RationalMatrix> actions;
    actions.reserve(n);
    for (int i = 0; i < n; ++i) {
        RationalMatrix m(n, n);
        const auto cols = g.ad_columns(i);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) m(u, v) = cols[v][u];
        actions.push_back(std::move(m));
    }
    return Representation::create(g, std::move(actions), "adjoint");
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(a.algebra() == b.algebra()))
        throw ModuleMismatch("direct sum of modules over different algebras");
    const int da = a.dim(), db = b.dim();
    std::vector<RationalMatrix> actions;
    for (int i = 0; i < a.algebra().dim(); ++i) {
        RationalMatrix m(da + db, da + db);
        for (int r = 0; r < da; ++r)
            for (int c = 0; c < da; ++c) m(r, c) = a.action(i)(r, c);
        for (int r = 0; r < db; ++r)
            for (int c = 0; c < db; ++c) m(da + r, da + c) = b.action(i)(r, c);
        actions.push_back(std::move(m));
    }
    return Representation::create(a.algebra(), std::move(actions), a.name() + "+" + b.name());
}

Representation exterior_power(const Representation& r, int k) {
    const auto subsets = subsets_lex(r.dim(), k);
    const auto ranks = subset_ranks(subsets);
    const int dim = static_cast<int>(subsets.size());
    std::vector<RationalMatrix> actions;
    for (int x = 0; x < r.algebra().dim(); ++x) {
        const RationalMatrix& act = r.action(x);
        RationalMatrix m(dim, dim);
        for (int col = 0; col < dim; ++col) {
            const auto& s = subsets[col];
            const std::uint32_t mask = subset_mask(s);
            for (int pos = 0; pos < k; ++pos) {
                const int si = s[pos];
                for (int u = 0; u < r.dim(); ++u) {
                    const Rational& c = act(u, si);
                    if (c.is_zero()) continue;
                    if (u == si) {
                        m(col, col) += c;
                        continue;
                    }
                    if (mask & (1u << u)) continue;  // repeated factor
                    const std::uint32_t tmask = (mask & ~(1u << si)) | (1u << u);
                    const int lo = std::min(si, u), hi = std::max(si, u);
                    int between = 0;
                    for (int e : s)
                        if (e > lo && e < hi && e != si) ++between;
                    const int row = ranks.at(tmask);
                    if (between % 2 == 0)
                        m(row, col) += c;
                    else
                        m(row, col) -= c;
                }
            }
        }
        actions.push_back(std::move(m));
    }
    std::ostringstream os;
    os << "ext^" << k << "(" << r.name() << ")";
    return Representation::create(r.algebra(), std::move(actions), os.str());
}

Representation tensor_product(const Representation& a, const Representation& b) {
    if (!(a.algebra() == b.algebra()))
        throw ModuleMismatch("tensor product of modules over different algebras");
    const int da = a.dim(), db = b.dim();
    std::vector<RationalMatrix> actions;
    for (int x = 0; x < a.algebra().dim(); ++x) {
        RationalMatrix m(da * db, da * db);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) {
                const int col = i * db + j;
                for (int u = 0; u < da; ++u)
                    if (!a.action(x)(u, i).is_zero()) m(u * db + j, col) += a.action(x)(u, i);
                for (int v = 0; v < db; ++v)
                    if (!b.action(x)(v, j).is_zero()) m(i * db + v, col) += b.action(x)(v, j);
            }
        actions.push_back(std::move(m));
    }
    return Representation::create(a.algebra(), std::move(actions),
                                  a.name() + "(x)" + b.name());
}

}  // namespace liecoh
