#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

using Vec = std::vector<Rational>;

/// Finite-dimensional Lie algebra given by structure constants on a fixed
/// basis e_0..e_{n-1}. Only brackets [e_i, e_j] with i < j are stored;
/// antisymmetry is structural. Construction validates the Jacobi identity.
class LieAlgebra {
public:
    /// Nonzero bracket expansions keyed by (i, j) with i < j.
    using BracketMap = std::map<std::pair<int, int>, Vec>;

    struct JacobiDefect {
        int i, j, k;
        Vec defect;
    };
    struct Validation {
        std::optional<LieAlgebra> algebra;
        std::vector<JacobiDefect> jacobi;
        std::vector<std::string> malformed;
        bool ok() const { return algebra.has_value(); }
    };

    /// Checks shapes and every Jacobi triple; collects all failures.
    static Validation validate(int dim, std::string name, BracketMap brackets);
    /// Like validate but throws (DimensionMismatch / JacobiViolation).
    static LieAlgebra create(int dim, std::string name, BracketMap brackets);

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const BracketMap& brackets() const { return brackets_; }

    /// [e_i, e_j] for any pair, with antisymmetry applied.
    Vec bracket(int i, int j) const;
    /// Bilinear extension.
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Matrix of ad(e_i): x maps to [e_i, x].
    std::vector<Vec> ad_columns(int i) const;

    bool operator==(const LieAlgebra& o) const {
        return dim_ == o.dim_ && brackets_ == o.brackets_;
    }

private:
    LieAlgebra(int dim, std::string name, BracketMap brackets)
        : dim_(dim), name_(std::move(name)), brackets_(std::move(brackets)) {}

    int dim_ = 0;
    std::string name_;
    BracketMap brackets_;
};

LieAlgebra abelian(int dim, std::string name = "abelian");

/// Basis of {x : [x, e_i] = 0 for all i}.
std::vector<Vec> center(const LieAlgebra& g);

/// Basis of the span of all brackets [e_i, e_j].
std::vector<Vec> derived_subalgebra(const LieAlgebra& g);

bool is_perfect(const LieAlgebra& g);

struct Nilpotency {
    bool nilpotent;
    int nil_class;                       // smallest c with g^{c+1} = 0; 0 for dim 0
    std::vector<int> lower_central_dims; // dims of g^1, g^2, ... until stable
};
Nilpotency is_nilpotent(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace liecoh
