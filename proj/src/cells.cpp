#include "lps/detail/cells.hpp"

#include "lps/errors.hpp"

#include <algorithm>
#include <set>

namespace lps::detail {

namespace {

std::size_t rankOfPlanes(const PlaneTable& table, const Bits& bits) {
    std::vector<RVector> rows;
    for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i))
        rows.push_back(table.planes[i].normal);
    return rank(rows);
}

bool adjacent(const Cell& cell, const PlaneTable& table, std::size_t i, std::size_t j) {
    Bits common = cell.tight[i] & cell.tight[j];
    if (common.count() + 1 < table.dim)
        return false;
    return rankOfPlanes(table, common) + 1 == table.dim;
}

std::vector<std::size_t> intersectSorted(const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b) {
    std::vector<std::size_t> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::size_t affineRankOf(const std::vector<RVector>& verts, const std::vector<std::size_t>& idx) {
    if (idx.size() <= 1)
        return 0;
    std::vector<RVector> diffs;
    for (std::size_t i = 1; i < idx.size(); ++i)
        diffs.push_back(sub(verts[idx[i]], verts[idx[0]]));
    return rank(diffs);
}

void triangulateFace(const std::vector<RVector>& verts,
                     const std::vector<std::vector<std::size_t>>& facetSets,
                     const std::vector<std::size_t>& face, std::size_t k,
                     std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
    const std::size_t apex = face.front();
    if (k == 0) {
        prefix.push_back(apex);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    std::set<std::vector<std::size_t>> subfaces;
    for (const auto& f : facetSets) {
        auto s = intersectSorted(face, f);
        if (s.size() < k || s.size() == face.size() || s.front() == apex)
            continue;
        subfaces.insert(std::move(s));
    }
    prefix.push_back(apex);
    for (const auto& s : subfaces)
        if (affineRankOf(verts, s) + 1 == k)
            triangulateFace(verts, facetSets, s, k - 1, prefix, out);
    prefix.pop_back();
}

// Vertex sets of the planes that carry a facet of a full-dimensional cell.
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> cellFacets(const Cell& cell,
                                                                         const PlaneTable& table) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t p = 0; p < table.size(); ++p) {
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < cell.verts.size(); ++v)
            if (p < cell.tight[v].size() && cell.tight[v][p])
                on.push_back(v);
        if (on.size() < table.dim || seen.count(on))
            continue;
        if (affineRankOf(cell.verts, on) + 1 != table.dim)
            continue;
        seen.insert(on);
        out.emplace_back(p, std::move(on));
    }
    return out;
}

} // namespace

Cell seedCell(const Polytope& p, PlaneTable& table, std::size_t reserve) {
    table.dim = p.dim();
    const std::size_t first = table.size();
    for (const auto& f : p.facets())
        table.add(f);
    const std::size_t eqFirst = table.size();
    for (const auto& e : p.equalities())
        table.add(e);
    const std::size_t bitsSize = std::max(reserve, table.size());

    Cell cell;
    cell.verts = p.vertices();
    cell.tight.assign(cell.verts.size(), Bits(bitsSize));
    for (std::size_t f = 0; f < p.facets().size(); ++f)
        for (auto v : p.facetVertices()[f])
            cell.tight[v].set(first + f);
    for (std::size_t e = eqFirst; e < table.size(); ++e)
        for (auto& bits : cell.tight)
            bits.set(e);
    return cell;
}

bool crosses(const Cell& cell, const HalfSpace& plane) {
    bool neg = false, pos = false;
    for (const auto& v : cell.verts) {
        int s = sgn(plane.slack(v));
        neg |= s > 0;
        pos |= s < 0;
        if (neg && pos)
            return true;
    }
    return false;
}

SplitResult split(const Cell& cell, const PlaneTable& table, std::size_t index, bool wantAbove) {
    const HalfSpace& h = table.planes[index];
    const std::size_t n = cell.verts.size();
    std::vector<Rational> val(n);
    std::vector<int> sign(n);
    bool anyNeg = false, anyPos = false, anyZero = false;
    for (std::size_t i = 0; i < n; ++i) {
        val[i] = dot(h.normal, cell.verts[i]) - h.offset;
        sign[i] = sgn(val[i]);
        anyNeg |= sign[i] < 0;
        anyPos |= sign[i] > 0;
        anyZero |= sign[i] == 0;
    }

    SplitResult r;
    auto withPlaneBit = [&](Cell c) {
        for (std::size_t i = 0; i < c.verts.size(); ++i)
            if (sign[i] == 0)
                c.tight[i].set(index);
        return c;
    };
    for (std::size_t i = 0; i < n; ++i)
        if (sign[i] == 0)
            r.onPlane.push_back(cell.verts[i]);

    if (!anyPos) {
        r.belowKind = anyNeg ? Side::Full : Side::Face;
        r.aboveKind = anyZero ? Side::Face : Side::Empty;
        if (anyNeg)
            r.below = withPlaneBit(cell);
        return r;
    }
    if (!anyNeg) {
        r.aboveKind = Side::Full;
        r.belowKind = anyZero ? Side::Face : Side::Empty;
        if (wantAbove)
            r.above = withPlaneBit(cell);
        return r;
    }

    r.belowKind = Side::Full;
    r.aboveKind = Side::Full;
    std::vector<RVector> crossPts;
    std::vector<Bits> crossBits;
    for (std::size_t i = 0; i < n; ++i) {
        if (sign[i] >= 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sign[j] <= 0 || !adjacent(cell, table, i, j))
                continue;
            Rational t = val[i] / (val[i] - val[j]);
            crossPts.push_back(add(cell.verts[i], scale(sub(cell.verts[j], cell.verts[i]), t)));
            Bits b = cell.tight[i] & cell.tight[j];
            b.set(index);
            crossBits.push_back(std::move(b));
        }
    }
    for (const auto& p : crossPts)
        r.onPlane.push_back(p);

    auto build = [&](int keepSign) {
        Cell c;
        for (std::size_t i = 0; i < n; ++i) {
            if (sign[i] == -keepSign)
                continue;
            c.verts.push_back(cell.verts[i]);
            c.tight.push_back(cell.tight[i]);
            if (sign[i] == 0)
                c.tight.back().set(index);
        }
        for (std::size_t k = 0; k < crossPts.size(); ++k) {
            c.verts.push_back(crossPts[k]);
            c.tight.push_back(crossBits[k]);
        }
        return c;
    };
    r.below = build(-1);
    if (wantAbove)
        r.above = build(1);
    return r;
}

std::size_t affineRank(const std::vector<RVector>& points) {
    if (points.size() <= 1)
        return 0;
    std::vector<RVector> diffs;
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    return rank(diffs);
}

std::vector<std::vector<std::size_t>>
triangulateIncidence(const std::vector<RVector>& verts,
                     const std::vector<std::vector<std::size_t>>& facetSets, std::size_t dim) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> all(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        all[i] = i;
    std::vector<std::size_t> prefix;
    triangulateFace(verts, facetSets, all, dim, prefix, out);
    return out;
}

Rational simplexVolume(const std::vector<RVector>& verts, const std::vector<std::size_t>& simplex) {
    const std::size_t d = simplex.size() - 1;
    RMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            m(r, c) = verts[simplex[r + 1]][c] - verts[simplex[0]][c];
    Rational det = determinant(m);
    return abs(det) / Rational(factorial(static_cast<unsigned>(d)));
}

Rational cellVolume(const Cell& cell, const PlaneTable& table) {
    std::vector<std::vector<std::size_t>> facetSets;
    for (auto& [plane, on] : cellFacets(cell, table))
        facetSets.push_back(std::move(on));
    Rational total = 0;
    for (const auto& s : triangulateIncidence(cell.verts, facetSets, table.dim))
        total += simplexVolume(cell.verts, s);
    return total;
}

Polytope toPolytope(const Cell& cell, const PlaneTable& table) {
    if (affineRank(cell.verts) < table.dim)
        return Polytope::fromVertices(table.dim, cell.verts);
    std::set<HalfSpace> facets;
    for (const auto& [plane, on] : cellFacets(cell, table)) {
        HalfSpace h = table.planes[plane];
        for (const auto& v : cell.verts) {
            int s = sgn(h.slack(v));
            if (s != 0) {
                if (s < 0)
                    h = h.flipped();
                break;
            }
        }
        facets.insert(h.normalized());
    }
    return assemblePolytope(table.dim, cell.verts, {facets.begin(), facets.end()}, {},
                            table.dim);
}

} // namespace lps::detail
