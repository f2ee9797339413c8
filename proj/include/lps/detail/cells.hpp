#pragma once

// Incremental halfspace clipping on vertex lists with tight-constraint
// incidence (a double-description update step). Shared by polytope
// intersection and the cell decomposition of the unit cube.

#include "lps/polytope.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <vector>

namespace lps {

/// Builds a polytope from its exact vertex set and irredundant constraints.
Polytope assemblePolytope(std::size_t dim, std::vector<RVector> vertices,
                          std::vector<HalfSpace> facets, std::vector<HalfSpace> equalities,
                          std::size_t affineDim);

} // namespace lps

namespace lps::detail {

using Bits = boost::dynamic_bitset<>;

/// Hyperplanes a . x = b. A clip keeps the side a . x <= b.
struct PlaneTable {
    std::size_t dim = 0;
    std::vector<HalfSpace> planes;

    std::size_t add(HalfSpace h) {
        planes.push_back(std::move(h));
        return planes.size() - 1;
    }
    std::size_t size() const { return planes.size(); }
};

/// Vertices of a convex region plus, per vertex, the table planes it lies on.
/// Only planes that were applied to (or seeded into) the cell are tracked.
struct Cell {
    std::vector<RVector> verts;
    std::vector<Bits> tight;
};

enum class Side { Empty, Face, Full };

struct SplitResult {
    Side belowKind = Side::Empty;
    Side aboveKind = Side::Empty;
    Cell below; // valid when belowKind == Full
    Cell above; // valid when aboveKind == Full
    std::vector<RVector> onPlane;
};

/// Seeds a cell from a polytope. Its facets and equalities are appended to the
/// table; the returned cell's bitsets are sized to `reserve` (>= final table size).
Cell seedCell(const Polytope& p, PlaneTable& table, std::size_t reserve);

/// Splits by plane `index`. When the plane does not cross the cell's interior
/// the cell is returned whole on one side.
SplitResult split(const Cell& cell, const PlaneTable& table, std::size_t index,
                  bool wantAbove = true);

/// True when some vertex lies strictly on each side of the plane.
bool crosses(const Cell& cell, const HalfSpace& plane);

std::size_t affineRank(const std::vector<RVector>& points);

/// Exact volume of a full-dimensional cell.
Rational cellVolume(const Cell& cell, const PlaneTable& table);

/// Converts a cell back into a polytope.
Polytope toPolytope(const Cell& cell, const PlaneTable& table);

/// Pulling triangulation from vertex/facet incidence.
std::vector<std::vector<std::size_t>>
triangulateIncidence(const std::vector<RVector>& verts,
                     const std::vector<std::vector<std::size_t>>& facetSets, std::size_t dim);

Rational simplexVolume(const std::vector<RVector>& verts, const std::vector<std::size_t>& simplex);

} // namespace lps::detail
