#pragma once

#include "lps/polytope.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lps {

struct SeedInfo {
    std::string generator = "mt19937_64";
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// A point of [0,1)^d with dyadic coordinates k / 2^64.
struct Shift {
    RVector coords;
    SeedInfo seedInfo;
};

/// Shift from raw 64-bit numerators.
Shift shiftFromRaw(const std::vector<std::uint64_t>& raw, SeedInfo info = {});
/// Shift from explicit coordinates; each must be dyadic with denominator
/// dividing 2^64 and lie in [0,1). Throws InputError otherwise.
Shift makeShift(RVector coords);

/// Deterministic stream of uniform dyadic shifts. Substreams of one seed are
/// independent engines keyed by (seed, stream).
class ShiftStream {
public:
    explicit ShiftStream(std::uint64_t seed, std::uint64_t stream = 0);

    Shift next(std::size_t dim);
    std::uint64_t nextRaw() { return engine_(); }
    const SeedInfo& info() const { return info_; }

private:
    SeedInfo info_;
    std::mt19937_64 engine_;
};

struct CountResult {
    std::int64_t count = 0;
    /// Counted lattice points that lie on the boundary of the shifted body.
    std::vector<RVector> boundaryHits;
};

/// |(p + offset) ∩ Z^d| with p closed; offset may be any rational vector.
CountResult countPoints(const Polytope& p, const RVector& offset);

CountResult countAt(const Polytope& p, const Shift& s);
CountResult countAt(const PolytopeUnion& u, const Shift& s);

bool isGeneric(const Polytope& p, const Shift& s);
bool isGeneric(const PolytopeUnion& u, const Shift& s);

/// Draws a shift from `stream` that is generic for every body in `bodies`,
/// redrawing on boundary hits. Throws DegenerateInput after `maxAttempts`.
Shift drawGenericShift(const std::vector<const Polytope*>& bodies, ShiftStream& stream,
                       int maxAttempts = 64);

/// The almost-sure lattice count of a body whose count is constant.
/// Compares `trials` generic shifts and throws NotConstant on disagreement.
std::int64_t genericCount(const Polytope& p, ShiftStream& stream, int trials = 8);

/// |det| of the generator matrix: the index of the sublattice they span and
/// the almost-sure count of the half-open parallelepiped.
Integer parallelepipedIndex(const std::vector<RVector>& generators);

struct ZonotopeSpec {
    std::size_t dim = 0;
    std::vector<RVector> generators;
};

/// Sum of |det| over all d-subsets of generators.
Integer zonotopeConstant(const ZonotopeSpec& z);

/// The zonotope [0,v_1] ⊕ ... ⊕ [0,v_n].
Polytope zonotopePolytope(const ZonotopeSpec& z);

} // namespace lps
