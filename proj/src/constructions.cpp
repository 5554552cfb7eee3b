#include "liecoh/constructions.hpp"

#include <algorithm>
#include <sstream>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

Vec column(const RationalMatrix& m, int c) {
    Vec v(m.rows());
    for (int r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

Vec vec_sum(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

void check_derivations(const LieAlgebra& n, const Representation& action) {
    if (action.dim() != n.dim())
        throw DimensionMismatch("action matrices do not match the radical dimension");
    const int d = n.dim();
    std::vector<Vec> basis(d, Vec(d));
    for (int i = 0; i < d; ++i) basis[i][i] = Rational(1);
    for (int x = 0; x < action.algebra().dim(); ++x) {
        const RationalMatrix& D = action.action(x);
        for (int u = 0; u < d; ++u)
            for (int v = u + 1; v < d; ++v) {
                Vec defect = D.apply(n.bracket(u, v));
                const Vec rhs = vec_sum(n.bracket(column(D, u), basis[v]),
                                        n.bracket(basis[u], column(D, v)));
                for (int i = 0; i < d; ++i) defect[i] -= rhs[i];
                if (!vec_is_zero(defect)) {
                    std::ostringstream os;
                    os << "basis action " << (x + 1) << " violates the Leibniz rule on the pair ("
                       << (u + 1) << "," << (v + 1) << ")";
                    throw NotADerivation(x, u, v, os.str());
                }
            }
    }
}

LieAlgebra assemble_semidirect(const LieAlgebra& s, const LieAlgebra& n,
                               const Representation& action, const std::string& name) {
    const int ns = s.dim(), nn = n.dim(), total = ns + nn;
    LieAlgebra::BracketMap brackets;
    auto widen_s = [&](const Vec& v) {
        Vec out(total);
        std::copy(v.begin(), v.end(), out.begin());
        return out;
    };
    auto widen_n = [&](const Vec& v) {
        Vec out(total);
        std::copy(v.begin(), v.end(), out.begin() + ns);
        return out;
    };
    for (const auto& [ij, coeffs] : s.brackets()) brackets[ij] = widen_s(coeffs);
    for (const auto& [ij, coeffs] : n.brackets())
        brackets[{ij.first + ns, ij.second + ns}] = widen_n(coeffs);
    for (int i = 0; i < ns; ++i) {
        const RationalMatrix& D = action.action(i);
        for (int a = 0; a < nn; ++a) {
            Vec col = column(D, a);
            if (!vec_is_zero(col)) brackets[{i, ns + a}] = widen_n(col);
        }
    }
    return LieAlgebra::create(total, name, std::move(brackets));
}

}  // namespace

SemidirectAlgebra semidirect_product(const LieAlgebra& s, const Representation& rho) {
    if (!(rho.algebra() == s))
        throw RepresentationMismatch("module is not over the given algebra");
    LieAlgebra n = abelian(rho.dim(), rho.name());
    LieAlgebra g = assemble_semidirect(s, n, rho, s.name() + "x|" + rho.name());
    return SemidirectAlgebra{std::move(g), s, std::move(n), rho};
}

SemidirectAlgebra semidirect_by_derivations(const LieAlgebra& s, const LieAlgebra& n,
                                            const Representation& action) {
    if (!(action.algebra() == s))
        throw RepresentationMismatch("action is not a module over the given algebra");
    check_derivations(n, action);
    LieAlgebra g = assemble_semidirect(s, n, action, s.name() + "x|" + n.name());
    return SemidirectAlgebra{std::move(g), s, n, action};
}

RadicalWithAction heisenberg_from_symplectic(const Representation& rho,
                                             const RationalMatrix& omega) {
    const int d = rho.dim();
    if (omega.rows() != d || omega.cols() != d)
        throw DimensionMismatch("form shape does not match the module");
    for (int u = 0; u < d; ++u)
        for (int v = u; v < d; ++v)
            if (!(omega(u, v) + omega(v, u)).is_zero())
                throw NotAntisymmetric("bilinear form is not antisymmetric");
    for (int x = 0; x < rho.algebra().dim(); ++x) {
        const RationalMatrix& act = rho.action(x);
        if (!(act.transposed() * omega + omega * act).is_zero()) {
            std::ostringstream os;
            os << "form is not invariant under basis action " << (x + 1);
            throw NotInvariant(os.str());
        }
    }

    LieAlgebra::BracketMap brackets;
    for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) {
            if (omega(u, v).is_zero()) continue;
            Vec coeffs(d + 1);
            coeffs[d] = omega(u, v);
            brackets[{u, v}] = std::move(coeffs);
        }
    LieAlgebra n = LieAlgebra::create(d + 1, "heis(" + rho.name() + ")", std::move(brackets));

    std::vector<RationalMatrix> actions;
    for (int x = 0; x < rho.algebra().dim(); ++x) {
        RationalMatrix m(d + 1, d + 1);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r, c) = rho.action(x)(r, c);
        actions.push_back(std::move(m));
    }
    Representation action = Representation::create(rho.algebra(), std::move(actions), n.name());
    check_derivations(n, action);
    return RadicalWithAction{std::move(n), std::move(action)};
}

RadicalWithAction free_nilpotent(const Representation& generators, int nil_class) {
    if (nil_class != 2 && nil_class != 3)
        throw UnsupportedClass("free_nilpotent supports classes 2 and 3 only");
    const int r = generators.dim();

    LieAlgebra f = [&] {
        if (nil_class == 2) {
            // Basis: generators, then pairs (a,b), a<b, lexicographic.
            const int dim = r + r * (r - 1) / 2;
            LieAlgebra::BracketMap brackets;
            int next = r;
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) {
                    Vec coeffs(dim);
                    coeffs[next++] = Rational(1);
                    brackets[{a, b}] = std::move(coeffs);
                }
            return LieAlgebra::create(dim, "f_{" + std::to_string(r) + ",2}",
                                      std::move(brackets));
        }
        if (r != 2)
            throw UnsupportedRank("class-3 free nilpotent is built on two generators");
        // Hall basis x, y, z=[x,y], [x,z], [y,z].
        LieAlgebra::BracketMap brackets;
        Vec z(5), xz(5), yz(5);
        z[2] = Rational(1);
        xz[3] = Rational(1);
        yz[4] = Rational(1);
        brackets[{0, 1}] = z;
        brackets[{0, 2}] = xz;
        brackets[{1, 2}] = yz;
        return LieAlgebra::create(5, "f_{2,3}", std::move(brackets));
    }();

    // Degree-1 columns come from the generator module; higher degrees are
    // forced by the Leibniz rule on the defining brackets.
    const int dim = f.dim();
    std::vector<RationalMatrix> actions;
    for (int x = 0; x < generators.algebra().dim(); ++x) {
        RationalMatrix D(dim, dim);
        for (int c = 0; c < r; ++c)
            for (int u = 0; u < r; ++u) D(u, c) = generators.action(x)(u, c);
        auto extend = [&](int target, int a, int b) {
            // target basis vector equals [e_a, e_b] in f
            Vec ea(dim), eb(dim);
            ea[a] = Rational(1);
            eb[b] = Rational(1);
            const Vec v = vec_sum(f.bracket(column(D, a), eb), f.bracket(ea, column(D, b)));
            for (int u = 0; u < dim; ++u) D(u, target) = v[u];
        };
        if (nil_class == 2) {
            int next = r;
            for (int a = 0; a < r; ++a)
                for (int b = a + 1; b < r; ++b) extend(next++, a, b);
        } else {
            extend(2, 0, 1);
            extend(3, 0, 2);
            extend(4, 1, 2);
        }
        actions.push_back(std::move(D));
    }
    Representation action =
        Representation::create(generators.algebra(), std::move(actions), f.name());
    check_derivations(f, action);
    return RadicalWithAction{std::move(f), std::move(action)};
}

RadicalWithAction radical_sum(const RadicalWithAction& a, const RadicalWithAction& b) {
    return RadicalWithAction{direct_sum(a.algebra, b.algebra),
                             direct_sum(a.action, b.action)};
}

RadicalWithAction abelian_radical(const Representation& rho) {
    return RadicalWithAction{abelian(rho.dim(), rho.name()), rho};
}

}  // namespace liecoh
