#pragma once

#include "lps/linalg.hpp"
#include "lps/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lps {

/// The closed halfspace { x : normal . x <= offset }.
struct HalfSpace {
    RVector normal;
    Rational offset;

    /// offset - normal . x; non-negative exactly on the halfspace.
    Rational slack(const RVector& x) const { return offset - dot(normal, x); }
    bool contains(const RVector& x) const { return slack(x) >= 0; }
    bool isTight(const RVector& x) const { return slack(x) == 0; }

    /// Same halfspace with a primitive integer normal (positive rescaling only).
    HalfSpace normalized() const;
    /// Same hyperplane, additionally sign-fixed so the first nonzero normal
    /// entry is positive. Used to key hyperplanes regardless of orientation.
    HalfSpace canonicalHyperplane() const;
    /// { x : normal . x >= offset }
    HalfSpace flipped() const { return {negate(normal), -offset}; }

    bool operator==(const HalfSpace& other) const = default;
};

bool operator<(const HalfSpace& a, const HalfSpace& b);

/// A nonempty convex polytope held in both representations.
///
/// Vertices are exactly the extreme points, sorted lexicographically. For a
/// full-dimensional polytope `facets` is the unique irredundant inequality
/// system (normalized, sorted) and `equalities` is empty. A lower-dimensional
/// polytope additionally carries equalities spanning the orthogonal
/// complement of its affine hull; its facets are then relative facets.
/// Instances are immutable after construction.
class Polytope {
public:
    /// Convex hull of a finite point set. Throws DegenerateInput when empty.
    static Polytope fromVertices(std::size_t dim, std::vector<RVector> points);

    std::size_t dim() const { return dim_; }
    std::size_t affineDim() const { return affineDim_; }
    bool isFullDim() const { return affineDim_ == dim_; }
    bool isLattice() const { return isLattice_; }

    const std::vector<RVector>& vertices() const { return vertices_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    const std::vector<HalfSpace>& equalities() const { return equalities_; }
    /// Indices of the vertices lying on each facet, parallel to facets().
    const std::vector<std::vector<std::size_t>>& facetVertices() const { return incidence_; }

    bool contains(const RVector& x) const;

    Polytope translated(const RVector& t) const;
    Polytope dilated(const Rational& factor) const;
    Polytope negated() const;

    /// Vertex-set equality.
    bool operator==(const Polytope& other) const {
        return dim_ == other.dim_ && vertices_ == other.vertices_;
    }

private:
    Polytope() = default;
    friend Polytope assemblePolytope(std::size_t, std::vector<RVector>, std::vector<HalfSpace>,
                                     std::vector<HalfSpace>, std::size_t);

    std::size_t dim_ = 0;
    std::size_t affineDim_ = 0;
    bool isLattice_ = false;
    std::vector<RVector> vertices_;
    std::vector<HalfSpace> facets_;
    std::vector<HalfSpace> equalities_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// A finite family of polytopes counted with multiplicity: the count of a
/// union is the sum of the counts of its parts.
struct PolytopeUnion {
    std::vector<Polytope> parts;
    std::string label;

    std::size_t dim() const { return parts.empty() ? 0 : parts.front().dim(); }
};

/// Irredundant facet list of a full-dimensional polytope.
/// Throws DegenerateInput for lower-dimensional input.
std::vector<HalfSpace> facetsFromVertices(const Polytope& p);

/// Polytope cut out by a bounded feasible inequality system.
/// Throws Unbounded or Infeasible.
Polytope verticesFromFacets(const std::vector<HalfSpace>& halfspaces, std::size_t dim);

std::optional<Polytope> clip(const Polytope& p, const HalfSpace& h);
std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);

/// vol(p ∩ q) without materializing lower-dimensional intersections.
Rational intersectionVolume(const Polytope& p, const Polytope& q);

/// Exact d-volume; zero for lower-dimensional polytopes.
Rational volume(const Polytope& p);
Rational volume(const PolytopeUnion& u);

Polytope minkowskiSum(const Polytope& p, const Polytope& q);

/// Image under x -> m x + t. Throws SingularMatrix when det(m) == 0.
Polytope affineImage(const Polytope& p, const RMatrix& m, const RVector& t);

std::pair<RVector, RVector> boundingBox(const Polytope& p);

/// Pulling triangulation: each entry lists dim+1 vertex indices of a
/// full-dimensional simplex. Empty for lower-dimensional polytopes.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p);

Polytope segment(const RVector& from, const RVector& to);
Polytope unitCube(std::size_t dim);

/// Same polytope sitting in R^{dim+1} with last coordinate zero.
Polytope embedWithZero(const Polytope& p);

} // namespace lps
