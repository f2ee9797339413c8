#pragma once

#include "lps/lattice.hpp"
#include "lps/polytope.hpp"

#include <cstdint>
#include <vector>

namespace lps {

/// conv{0, e_1, ..., e_d}.
Polytope standardSimplex(std::size_t d);

/// The d pieces of [0,1]^d between consecutive hyperplanes sum(x) = k.
std::vector<Polytope> slabPieces(std::size_t d);

struct ReeveParams {
    std::int64_t n = 1;
};

/// conv{(0,0,0), (0,1,0), (1,0,0), (1,1,n)}.
Polytope reeveTetrahedron(ReeveParams params);

/// { x in [0,1]^d : 1 <= sum(x) <= d-1 }, the cube with two opposite corner
/// simplices removed.
Polytope centralSlab(std::size_t d);

/// conv{±e_1, ..., ±e_d}.
Polytope crossPolytope(std::size_t d);

/// p embedded in R^{d+1} with last coordinate 0, plus the segment [0, e_{d+1}].
Polytope prismOverEmbedded(const Polytope& p);

struct UnimodularMatrix {
    RMatrix matrix;
};

/// Product of `steps` random elementary row additions E_ij(±1). Steps whose
/// result would carry an entry above 10^6 in magnitude are redrawn.
UnimodularMatrix randomUnimodular(std::size_t d, std::uint64_t seed, int steps = 12);

/// Hull of `pointCount` uniform integer points of [-box, box]^d; non-full-
/// dimensional draws are rejected (DegenerateInput after 100 rejections).
Polytope randomLatticePolytope(std::size_t d, int pointCount, int box, std::uint64_t seed);

/// conv(Q ∪ -Q) for a random integer point set Q; symmetric about the origin.
Polytope randomSymmetricPolytope(std::size_t d, int pointCount, int box, std::uint64_t seed);

/// Random integer generators with entries in [-bound, bound] spanning R^d.
ZonotopeSpec randomZonotope(std::size_t d, int generators, int bound, std::uint64_t seed);

enum class DecompositionKind { Simplex, Polyhedron };

/// x -> matrix x + offset, carrying the standard simplex onto one simplex of
/// the base.
struct SimplexTransform {
    RMatrix matrix;
    RVector offset;
};

/// Tiling data for dilates of an integer polytope: n·base is partitioned
/// into integer translates of pieces[k-1], each used C(n-k+d, d) times.
struct ScalingDecomposition {
    Polytope base;
    std::size_t dim = 0;
    std::vector<PolytopeUnion> pieces;
    std::vector<SimplexTransform> transforms;
    /// Sum over the triangulation of d!·vol(simplex); the almost-sure value
    /// of the summed piece counts.
    Integer constantSum;

    /// C(n-k+d, d), zero when n < k.
    Integer multiplicityOf(std::int64_t k, std::int64_t n) const;
};

/// Pieces are images of slabPieces(d) under each simplex transform. Pieces
/// with index k > (d+1)/2 are translated by an integer vector so that
/// pieces[k-1] = -pieces[d-k] + (1,...,1) for every non-middle pair.
ScalingDecomposition scalingDecomposition(const Polytope& base, DecompositionKind kind);

} // namespace lps
