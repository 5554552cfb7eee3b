#pragma once

#include <utility>

#include "liecoh/representation.hpp"

namespace liecoh {

/// A Lie algebra built as levi x| radical, keeping the construction data
/// needed by the invariant-subcomplex cohomology paths.
struct SemidirectAlgebra {
    LieAlgebra algebra;     // basis: levi first, then radical
    LieAlgebra levi;
    LieAlgebra radical;
    Representation action;  // levi acting on the radical by derivations
};

/// Radical together with the derivation action of the (future) Levi factor.
struct RadicalWithAction {
    LieAlgebra algebra;
    Representation action;
};

/// s x| V for an s-module V (abelian radical). Basis: s-basis then V-basis.
SemidirectAlgebra semidirect_product(const LieAlgebra& s, const Representation& rho);

/// s x| N where each action matrix must be a derivation of N.
SemidirectAlgebra semidirect_by_derivations(const LieAlgebra& s, const LieAlgebra& n,
                                            const Representation& action);

/// Heisenberg-type algebra on a symplectic module: dim rho.dim + 1 with
/// [u,v] = omega(u,v) z, z central; omega must be antisymmetric and
/// invariant, and may be degenerate.
RadicalWithAction heisenberg_from_symplectic(const Representation& rho,
                                             const RationalMatrix& omega);

/// Free-nilpotent algebra of the given class on the module of generators.
/// Class 2: V + ext^2(V). Class 3 (two generators): Hall basis
/// x, y, [x,y], [x,[x,y]], [y,[x,y]].
RadicalWithAction free_nilpotent(const Representation& generators, int nil_class);

/// Direct sum of radicals with the block action of the common acting algebra.
RadicalWithAction radical_sum(const RadicalWithAction& a, const RadicalWithAction& b);

/// Abelian radical carrying the module action.
RadicalWithAction abelian_radical(const Representation& rho);

}  // namespace liecoh
