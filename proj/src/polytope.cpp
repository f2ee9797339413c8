#include "lps/polytope.hpp"

#include "lps/detail/cells.hpp"
#include "lps/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lps {

namespace {

// Advances `idx` to the next k-combination of {0..n-1}; false when exhausted.
bool nextCombination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> firstCombination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

// Normal of the hyperplane through k points in R^k via signed cofactors;
// zero when the points are affinely dependent.
RVector hyperplaneNormal(const std::vector<RVector>& pts, const std::vector<std::size_t>& idx,
                         std::size_t k) {
    std::vector<RVector> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i)
        diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    RVector n(k);
    for (std::size_t j = 0; j < k; ++j) {
        RMatrix minor(k - 1, k - 1);
        for (std::size_t r = 0; r + 1 < k; ++r)
            for (std::size_t c = 0, cc = 0; c < k; ++c) {
                if (c == j)
                    continue;
                minor(r, cc++) = diffs[r][c];
            }
        Rational d = determinant(minor);
        n[j] = (j % 2 == 0) ? d : Rational(-d);
    }
    return n;
}

bool isZero(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Exhaustive facet search for a full-dimensional point set in R^k.
std::vector<HalfSpace> hullFacets(const std::vector<RVector>& pts, std::size_t k) {
    std::set<HalfSpace> found;
    if (pts.size() < k)
        return {};
    auto idx = firstCombination(k);
    do {
        RVector n = hyperplaneNormal(pts, idx, k);
        if (isZero(n))
            continue;
        Rational b = dot(n, pts[idx[0]]);
        bool above = false, below = false;
        for (const auto& p : pts) {
            int s = cmp(dot(n, p), b);
            above |= s > 0;
            below |= s < 0;
            if (above && below)
                break;
        }
        if (above && below)
            continue;
        HalfSpace h{n, b};
        if (above)
            h = h.flipped();
        found.insert(h.normalized());
    } while (nextCombination(idx, pts.size()));
    return {found.begin(), found.end()};
}

RVector restrictTo(const RVector& v, const std::vector<std::size_t>& coords) {
    RVector r;
    r.reserve(coords.size());
    for (auto c : coords)
        r.push_back(v[c]);
    return r;
}

} // namespace

HalfSpace HalfSpace::normalized() const {
    Integer l = 1;
    for (const auto& a : normal)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    Integer g = 0;
    for (const auto& a : normal) {
        Integer v = a.get_num() * (l / a.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 0)
        throw InputError("halfspace with zero normal");
    Rational factor = makeRational(l, g);
    return {scale(normal, factor), offset * factor};
}

HalfSpace HalfSpace::canonicalHyperplane() const {
    HalfSpace h = normalized();
    for (const auto& a : h.normal) {
        if (a == 0)
            continue;
        if (a < 0)
            h = h.flipped();
        break;
    }
    return h;
}

bool operator<(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal)
        return lexLess(a.normal, b.normal);
    return a.offset < b.offset;
}

Polytope assemblePolytope(std::size_t dim, std::vector<RVector> vertices,
                          std::vector<HalfSpace> facets, std::vector<HalfSpace> equalities,
                          std::size_t affineDim) {
    Polytope p;
    p.dim_ = dim;
    p.affineDim_ = affineDim;
    std::sort(vertices.begin(), vertices.end(), lexLess);
    std::sort(facets.begin(), facets.end());
    std::sort(equalities.begin(), equalities.end());
    p.isLattice_ = std::all_of(vertices.begin(), vertices.end(), [](const RVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return isInteger(x); });
    });
    p.incidence_.resize(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (facets[f].isTight(vertices[v]))
                p.incidence_[f].push_back(v);
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);
    p.equalities_ = std::move(equalities);
    return p;
}

Polytope Polytope::fromVertices(std::size_t dim, std::vector<RVector> points) {
    if (points.empty())
        throw DegenerateInput("polytope needs at least one point");
    for (const auto& p : points)
        if (p.size() != dim)
            throw InputError("point dimension does not match ambient dimension " +
                             std::to_string(dim));
    std::sort(points.begin(), points.end(), lexLess);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const RVector& base = points.front();
    std::vector<RVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], base));
    Echelon ech = diffs.empty() ? Echelon{} : echelon(diffs, dim);
    const std::size_t k = ech.rank;

    std::vector<HalfSpace> equalities;
    if (k < dim) {
        for (auto& a : nullspace(diffs, dim)) {
            Rational b = dot(a, base);
            equalities.push_back(HalfSpace{std::move(a), b}.canonicalHyperplane());
        }
    }
    if (k == 0)
        return assemblePolytope(dim, {base}, {}, std::move(equalities), 0);

    // Coordinates at the pivot columns identify points of the affine hull.
    std::vector<RVector> projected;
    projected.reserve(points.size());
    for (const auto& p : points)
        projected.push_back(restrictTo(p, ech.pivots));
    auto projFacets = hullFacets(projected, k);

    std::vector<HalfSpace> facets;
    for (const auto& f : projFacets) {
        RVector n = zeros(dim);
        for (std::size_t i = 0; i < k; ++i)
            n[ech.pivots[i]] = f.normal[i];
        facets.push_back({std::move(n), f.offset});
    }

    std::vector<RVector> vertices;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<RVector> active;
        for (const auto& f : projFacets)
            if (f.isTight(projected[i]))
                active.push_back(f.normal);
        if (active.size() >= k && rank(active) == k)
            vertices.push_back(points[i]);
    }
    return assemblePolytope(dim, std::move(vertices), std::move(facets), std::move(equalities), k);
}

bool Polytope::contains(const RVector& x) const {
    for (const auto& e : equalities_)
        if (!e.isTight(x))
            return false;
    for (const auto& f : facets_)
        if (!f.contains(x))
            return false;
    return true;
}

Polytope Polytope::translated(const RVector& t) const {
    Polytope p = *this;
    for (auto& v : p.vertices_)
        v = add(v, t);
    for (auto& f : p.facets_)
        f.offset += dot(f.normal, t);
    for (auto& e : p.equalities_)
        e.offset += dot(e.normal, t);
    p.isLattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(), [](const RVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return isInteger(x); });
    });
    return p;
}

Polytope Polytope::dilated(const Rational& factor) const {
    if (factor <= 0) {
        std::vector<RVector> pts;
        for (const auto& v : vertices_)
            pts.push_back(scale(v, factor));
        return fromVertices(dim_, std::move(pts));
    }
    Polytope p = *this;
    for (auto& v : p.vertices_)
        v = scale(v, factor);
    for (auto& f : p.facets_)
        f.offset *= factor;
    for (auto& e : p.equalities_)
        e.offset *= factor;
    p.isLattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(), [](const RVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return isInteger(x); });
    });
    return p;
}

Polytope Polytope::negated() const {
    std::vector<RVector> pts;
    pts.reserve(vertices_.size());
    for (const auto& v : vertices_)
        pts.push_back(negate(v));
    return fromVertices(dim_, std::move(pts));
}

std::vector<HalfSpace> facetsFromVertices(const Polytope& p) {
    if (!p.isFullDim())
        throw DegenerateInput("facet enumeration needs a full-dimensional polytope");
    return p.facets();
}

Polytope verticesFromFacets(const std::vector<HalfSpace>& halfspaces, std::size_t dim) {
    std::vector<RVector> normals;
    for (const auto& h : halfspaces) {
        if (h.normal.size() != dim)
            throw InputError("halfspace dimension mismatch");
        if (isZero(h.normal))
            throw InputError("halfspace with zero normal");
        normals.push_back(h.normal);
    }
    if (rank(normals) < dim)
        throw Unbounded("inequality system has a lineality direction");

    std::set<RVector> found;
    auto idx = firstCombination(dim);
    do {
        RMatrix m(dim, dim);
        RVector rhs(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c)
                m(r, c) = halfspaces[idx[r]].normal[c];
            rhs[r] = halfspaces[idx[r]].offset;
        }
        auto x = solve(m, rhs);
        if (!x)
            continue;
        if (std::all_of(halfspaces.begin(), halfspaces.end(),
                        [&](const HalfSpace& h) { return h.contains(*x); }))
            found.insert(std::move(*x));
    } while (nextCombination(idx, halfspaces.size()));
    if (found.empty())
        throw Infeasible("inequality system is infeasible");

    // A pointed nonempty polyhedron is bounded iff no extreme ray exists.
    {
        auto ridx = firstCombination(dim - 1);
        do {
            std::vector<RVector> rows;
            for (auto i : ridx)
                rows.push_back(halfspaces[i].normal);
            auto ns = nullspace(rows, dim);
            if (ns.size() != 1)
                continue;
            for (int sgn : {1, -1}) {
                RVector r = scale(ns[0], sgn);
                if (std::all_of(halfspaces.begin(), halfspaces.end(),
                                [&](const HalfSpace& h) { return dot(h.normal, r) <= 0; }))
                    throw Unbounded("inequality system has a recession direction");
            }
        } while (nextCombination(ridx, halfspaces.size()));
    }
    return Polytope::fromVertices(dim, {found.begin(), found.end()});
}

std::optional<Polytope> clip(const Polytope& p, const HalfSpace& h) {
    if (h.normal.size() != p.dim())
        throw InputError("halfspace dimension mismatch");
    detail::PlaneTable table;
    table.dim = p.dim();
    const std::size_t reserve = p.facets().size() + 2 * p.equalities().size() + 1;
    detail::Cell cell = detail::seedCell(p, table, reserve);
    std::size_t hi = table.add(h);
    auto r = detail::split(cell, table, hi, false);
    switch (r.belowKind) {
    case detail::Side::Empty:
        return std::nullopt;
    case detail::Side::Face:
        return Polytope::fromVertices(p.dim(), std::move(r.onPlane));
    case detail::Side::Full:
        return detail::toPolytope(r.below, table);
    }
    return std::nullopt;
}

namespace {

// Clips p by every constraint of q. A lower-dimensional intermediate result
// is returned as the face's points in `face` instead of a cell.
struct ClipOutcome {
    detail::Side kind = detail::Side::Empty;
    detail::Cell cell;
    detail::PlaneTable table;
    std::vector<RVector> face;
};

ClipOutcome clipByAll(const Polytope& p, const Polytope& q) {
    ClipOutcome out;
    out.table.dim = p.dim();
    const std::size_t reserve = p.facets().size() + 2 * p.equalities().size() +
                                q.facets().size() + 2 * q.equalities().size();
    out.cell = detail::seedCell(p, out.table, reserve);
    std::vector<HalfSpace> cuts = q.facets();
    for (const auto& e : q.equalities()) {
        cuts.push_back(e);
        cuts.push_back(e.flipped());
    }
    for (const auto& h : cuts) {
        std::size_t hi = out.table.add(h);
        auto r = detail::split(out.cell, out.table, hi, false);
        if (r.belowKind != detail::Side::Full) {
            out.kind = r.belowKind;
            out.face = std::move(r.onPlane);
            return out;
        }
        out.cell = std::move(r.below);
    }
    out.kind = detail::Side::Full;
    return out;
}

} // namespace

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim())
        throw InputError("intersection of polytopes in different dimensions");
    if (!p.isFullDim()) {
        if (q.isFullDim())
            return intersect(q, p);
        // Both flat: clip vertex pairs directly.
        std::vector<HalfSpace> cuts = q.facets();
        for (const auto& e : q.equalities()) {
            cuts.push_back(e);
            cuts.push_back(e.flipped());
        }
        std::optional<Polytope> cur = p;
        for (const auto& h : cuts) {
            if (!cur)
                return std::nullopt;
            const auto& vs = cur->vertices();
            std::vector<RVector> kept;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                Rational si = h.slack(vs[i]);
                if (si >= 0)
                    kept.push_back(vs[i]);
                if (si <= 0)
                    continue;
                for (std::size_t j = 0; j < vs.size(); ++j) {
                    Rational sj = h.slack(vs[j]);
                    if (sj >= 0)
                        continue;
                    Rational t = si / (si - sj);
                    kept.push_back(add(vs[i], scale(sub(vs[j], vs[i]), t)));
                }
            }
            if (kept.empty())
                return std::nullopt;
            cur = Polytope::fromVertices(p.dim(), std::move(kept));
        }
        return cur;
    }
    auto res = clipByAll(p, q);
    switch (res.kind) {
    case detail::Side::Empty:
        return std::nullopt;
    case detail::Side::Face:
        return intersect(Polytope::fromVertices(p.dim(), std::move(res.face)), q);
    case detail::Side::Full:
        break;
    }
    return detail::toPolytope(res.cell, res.table);
}

Rational intersectionVolume(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim())
        throw InputError("intersection of polytopes in different dimensions");
    if (!p.isFullDim() || !q.isFullDim())
        return 0;
    auto [plo, phi] = boundingBox(p);
    auto [qlo, qhi] = boundingBox(q);
    for (std::size_t i = 0; i < p.dim(); ++i)
        if (phi[i] <= qlo[i] || qhi[i] <= plo[i])
            return 0;
    auto res = clipByAll(p, q);
    if (res.kind != detail::Side::Full)
        return 0;
    return detail::cellVolume(res.cell, res.table);
}

Rational volume(const Polytope& p) {
    if (!p.isFullDim())
        return 0;
    Rational total = 0;
    for (const auto& s : triangulate(p))
        total += detail::simplexVolume(p.vertices(), s);
    return total;
}

Rational volume(const PolytopeUnion& u) {
    Rational total = 0;
    for (const auto& p : u.parts)
        total += volume(p);
    return total;
}

Polytope minkowskiSum(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim())
        throw InputError("Minkowski sum of polytopes in different dimensions");
    std::vector<RVector> pts;
    pts.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            pts.push_back(add(a, b));
    return Polytope::fromVertices(p.dim(), std::move(pts));
}

Polytope affineImage(const Polytope& p, const RMatrix& m, const RVector& t) {
    if (!m.isSquare() || m.rows() != p.dim() || t.size() != p.dim())
        throw InputError("affine map dimension mismatch");
    if (determinant(m) == 0)
        throw SingularMatrix("affine map is singular");
    std::vector<RVector> pts;
    pts.reserve(p.vertices().size());
    for (const auto& v : p.vertices())
        pts.push_back(add(m.apply(v), t));
    return Polytope::fromVertices(p.dim(), std::move(pts));
}

std::pair<RVector, RVector> boundingBox(const Polytope& p) {
    RVector lo = p.vertices().front();
    RVector hi = lo;
    for (const auto& v : p.vertices())
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < lo[i])
                lo[i] = v[i];
            if (v[i] > hi[i])
                hi[i] = v[i];
        }
    return {lo, hi};
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p) {
    if (!p.isFullDim())
        return {};
    return detail::triangulateIncidence(p.vertices(), p.facetVertices(), p.dim());
}

Polytope segment(const RVector& from, const RVector& to) {
    return Polytope::fromVertices(from.size(), {from, to});
}

Polytope unitCube(std::size_t dim) {
    std::vector<RVector> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
        RVector v(dim);
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = (mask >> i) & 1U;
        pts.push_back(std::move(v));
    }
    return Polytope::fromVertices(dim, std::move(pts));
}

Polytope embedWithZero(const Polytope& p) {
    std::vector<RVector> pts;
    for (auto v : p.vertices()) {
        v.emplace_back(0);
        pts.push_back(std::move(v));
    }
    return Polytope::fromVertices(p.dim() + 1, std::move(pts));
}

} // namespace lps
