#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "liecoh/constructions.hpp"
#include "liecoh/sparse_matrix.hpp"

namespace liecoh {

/// Basis bookkeeping for C^k(g; M): index = subset_rank * dim M + module
/// coordinate, subsets of {0..n-1} in lexicographic order.
struct CochainSpace {
    int degree = 0;
    int algebra_dim = 0;
    int module_dim = 0;
    std::vector<std::vector<int>> subsets;
    std::unordered_map<std::uint32_t, int> ranks;

    long long dimension() const {
        return static_cast<long long>(subsets.size()) * module_dim;
    }
    int index(int subset_rank, int module_idx) const {
        return subset_rank * module_dim + module_idx;
    }

    /// Refuses spaces above 2e6 basis elements.
    static CochainSpace make(int algebra_dim, int degree, int module_dim);
};

/// Standard Chevalley-Eilenberg differential C^k(g; M) -> C^{k+1}(g; M).
SparseMatrix ce_differential(const LieAlgebra& g, const Representation& m, int k);

struct BettiRow {
    int degree = 0;
    long long cochain_dim = 0;  // for assembled tables this equals h
    long long rank_out = 0;     // rank of the outgoing differential
    long long h = 0;
};

struct BettiTable {
    std::string algebra, module;
    int min_degree = 0;
    std::vector<BettiRow> rows;

    long long h(int k) const;
    std::vector<long long> h_values() const;
    /// Alternating sum of h over the stored rows (zero for full tables).
    long long euler_characteristic() const;
};

enum class RankMode { Exact, Modular };

BettiTable betti_numbers(const LieAlgebra& g, const Representation& m, int min_degree,
                         int max_degree, RankMode mode = RankMode::Exact);

/// Basis of the joint kernel of the given square matrices.
std::vector<Vec> invariant_subspace(const std::vector<RationalMatrix>& actions);

/// Data for cohomology of V with coefficients in W, restricted to the
/// subcomplex annihilated by an auxiliary semisimple action. The auxiliary
/// generators act on V by derivations and compatibly on W.
struct SInvariantSetup {
    LieAlgebra v;
    Representation w;                    // module over v
    std::vector<RationalMatrix> s_on_v;
    std::vector<RationalMatrix> s_on_w;
    std::string label;
};

void validate_invariant_setup(const SInvariantSetup& setup);

/// Action of auxiliary generator x on C^k(V; W) induced by its actions on V
/// and W (derivation on the exterior factor, module action on W).
SparseMatrix cochain_action(const RationalMatrix& on_v, const RationalMatrix& on_w,
                            const CochainSpace& space);

struct InvariantComplex {
    int min_degree = 0;
    std::vector<std::vector<Vec>> bases;          // invariant bases per degree
    std::vector<RationalMatrix> differentials;    // restricted d in invariant coords
};

BettiTable invariant_cohomology(const SInvariantSetup& setup, int min_degree, int max_degree,
                                InvariantComplex* complex_out = nullptr);

/// Setup for H^*(N, g)^s of a semidirect product (adjoint coefficients).
SInvariantSetup radical_adjoint_setup(const SemidirectAlgebra& sg);

/// Adjoint cohomology of sg.algebra assembled from the invariant cohomology
/// of the radical. Requires the Levi factor to be the standard sl2.
BettiTable hochschild_serre_adjoint(const SemidirectAlgebra& sg, int min_degree,
                                    int max_degree);

struct LesReport {
    int m = 0;
    int max_degree = 0;
    // per degree k: (H^k(V,V)^s, H^k(V,g)^s, H^k(V,g/V)^s)
    std::vector<std::array<long long, 3>> columns;
    bool alternating_sum_zero = false;
    bool odd_case = false;
    bool odd_vanishing_ok = false;            // V column even degrees, g/V column odd degrees
    std::vector<bool> four_term_ok;           // one per even k (odd case only)
    bool ok() const;
};

/// Three-column report for g = sl2 x| V_m with exactness verdicts.
LesReport les_report(int m, int max_degree);

/// dim Der(g): kernel dimension of the Leibniz constraint system.
long long derivation_dim(const LieAlgebra& g);

/// dim Der(g) - dim ad(g), an independent route to dim H^1(g, g).
long long outer_derivation_dim(const LieAlgebra& g);

}  // namespace liecoh
