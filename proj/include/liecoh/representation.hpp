#pragma once

#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/matrix.hpp"

namespace liecoh {

/// Module over a Lie algebra, given by the action matrix of each basis
/// element. Construction checks the homomorphism law
/// rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
class Representation {
public:
    static Representation create(LieAlgebra algebra, std::vector<RationalMatrix> actions,
                                 std::string name = "");
    static Representation trivial(LieAlgebra algebra, int dim);

    const LieAlgebra& algebra() const { return algebra_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const RationalMatrix& action(int i) const { return actions_[i]; }
    const std::vector<RationalMatrix>& actions() const { return actions_; }

    std::vector<Rational> apply(int i, const std::vector<Rational>& v) const {
        return actions_[i].apply(v);
    }

private:
    Representation(LieAlgebra algebra, std::vector<RationalMatrix> actions, std::string name,
                   int dim)
        : algebra_(std::move(algebra)), actions_(std::move(actions)), name_(std::move(name)),
          dim_(dim) {}

    LieAlgebra algebra_;
    std::vector<RationalMatrix> actions_;
    std::string name_;
    int dim_ = 0;
};

Representation adjoint_representation(const LieAlgebra& g);

/// Block sum of modules over the same algebra.
Representation direct_sum(const Representation& a, const Representation& b);

/// Exterior power on the basis of k-subsets in lexicographic order.
Representation exterior_power(const Representation& r, int k);

/// Tensor product on the basis (i, j), first factor index major.
Representation tensor_product(const Representation& a, const Representation& b);

}  // namespace liecoh
