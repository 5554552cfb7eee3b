#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecoh/representation.hpp"

namespace liecoh {

/// Weight-to-multiplicity map of an sl2-module (eigenvalues of the e_3 action).
using WeightMultiset = std::map<int, long long>;

/// Multiset of highest weights with positive multiplicities.
class Sl2Decomposition {
public:
    Sl2Decomposition() = default;
    explicit Sl2Decomposition(std::map<int, long long> mult);

    static Sl2Decomposition irreducible(int m) { return Sl2Decomposition({{m, 1}}); }

    void add(int m, long long count);
    long long multiplicity(int m) const;
    const std::map<int, long long>& multiplicities() const { return mult_; }
    long long total_dimension() const;
    WeightMultiset weights() const;

    /// "V_0+2V_4+V_6" style; "0" for the zero module.
    std::string str() const;

    bool operator==(const Sl2Decomposition& o) const = default;

private:
    std::map<int, long long> mult_;
};

/// The 3-dimensional algebra with [e1,e2]=e3, [e1,e3]=-2e1, [e2,e3]=2e2.
const LieAlgebra& sl2();

/// Irreducible sl2-module of dimension m+1 on basis v_0..v_m:
/// e_3 v_i = (m-2i) v_i, e_1 v_i = i v_{i-1}, e_2 v_i = (m-i) v_{i+1}.
Representation sl2_irrep(int m);

/// Direct sum V_{ms[0]} + V_{ms[1]} + ... (abelian-radical building block).
Representation sl2_module(const std::vector<int>& ms);

WeightMultiset weight_multiplicities(const Representation& rho);

/// Highest-weight peeling; throws NotAModule on asymmetric input or negative
/// intermediate multiplicities.
Sl2Decomposition decompose(const WeightMultiset& w);
Sl2Decomposition decompose(const Representation& rho);

enum class PlethysmMethod { Brute, Formula };

/// Decomposition of the j-th exterior power of V_m. Brute enumerates weight
/// sums over j-subsets; Formula uses the partition-count multiplicities.
Sl2Decomposition exterior_power_decomposition(int m, int j, PlethysmMethod method);

Sl2Decomposition clebsch_gordan(int a, int b);

long long hom_dim(const Sl2Decomposition& a, const Sl2Decomposition& b);

enum class FormParity { Symmetric, Antisymmetric };

/// Basis of bilinear forms B with B(x.u, v) + B(u, x.v) = 0 for every basis
/// element x of the acting algebra, of the requested parity.
std::vector<RationalMatrix> invariant_bilinear_forms(const Representation& rho,
                                                     FormParity parity);

}  // namespace liecoh
