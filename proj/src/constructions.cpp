#include "lps/constructions.hpp"

#include "lps/errors.hpp"

#include <random>

namespace lps {

namespace {

std::vector<HalfSpace> cubeHalfspaces(std::size_t d) {
    std::vector<HalfSpace> hs;
    for (std::size_t i = 0; i < d; ++i) {
        hs.push_back({unitVector(d, i), 1});
        hs.push_back({negate(unitVector(d, i)), 0});
    }
    return hs;
}

RVector ones(std::size_t d) { return RVector(d, Rational(1)); }

} // namespace

Polytope standardSimplex(std::size_t d) {
    if (d == 0)
        throw DegenerateInput("simplex dimension must be positive");
    std::vector<RVector> pts{zeros(d)};
    for (std::size_t i = 0; i < d; ++i)
        pts.push_back(unitVector(d, i));
    return Polytope::fromVertices(d, std::move(pts));
}

std::vector<Polytope> slabPieces(std::size_t d) {
    if (d == 0)
        throw DegenerateInput("slab dimension must be positive");
    std::vector<Polytope> pieces;
    for (std::size_t k = 1; k <= d; ++k) {
        auto hs = cubeHalfspaces(d);
        hs.push_back({ones(d), Rational(static_cast<long>(k))});
        hs.push_back({negate(ones(d)), -Rational(static_cast<long>(k) - 1)});
        pieces.push_back(verticesFromFacets(hs, d));
    }
    return pieces;
}

Polytope reeveTetrahedron(ReeveParams params) {
    if (params.n < 1)
        throw OutOfRange("Reeve parameter must be >= 1");
    return Polytope::fromVertices(
        3, {integerVector({0, 0, 0}), integerVector({0, 1, 0}), integerVector({1, 0, 0}),
            integerVector({1, 1, params.n})});
}

Polytope centralSlab(std::size_t d) {
    if (d < 2)
        throw DegenerateInput("central slab needs d >= 2");
    auto hs = cubeHalfspaces(d);
    hs.push_back({ones(d), Rational(static_cast<long>(d) - 1)});
    hs.push_back({negate(ones(d)), -1});
    return verticesFromFacets(hs, d);
}

Polytope crossPolytope(std::size_t d) {
    if (d == 0)
        throw DegenerateInput("cross-polytope dimension must be positive");
    std::vector<RVector> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(unitVector(d, i));
        pts.push_back(negate(unitVector(d, i)));
    }
    return Polytope::fromVertices(d, std::move(pts));
}

Polytope prismOverEmbedded(const Polytope& p) {
    if (!p.isFullDim())
        throw DegenerateInput("prism base must be full-dimensional");
    const std::size_t d = p.dim() + 1;
    return minkowskiSum(embedWithZero(p), segment(zeros(d), unitVector(d, d - 1)));
}

UnimodularMatrix randomUnimodular(std::size_t d, std::uint64_t seed, int steps) {
    if (d < 2)
        throw DegenerateInput("unimodular sampling needs d >= 2");
    static const Rational bound(1000000);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, d - 1);
    RMatrix m = RMatrix::identity(d);
    for (int s = 0; s < steps;) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        const int sign = (rng() & 1U) ? 1 : -1;
        RMatrix next = m;
        bool ok = true;
        for (std::size_t c = 0; c < d; ++c) {
            next(i, c) += sign * m(j, c);
            ok &= abs(next(i, c)) <= bound;
        }
        if (!ok)
            continue;
        m = std::move(next);
        ++s;
    }
    if (determinant(m) != 1)
        throw Error("elementary product lost unimodularity");
    return {std::move(m)};
}

Polytope randomLatticePolytope(std::size_t d, int pointCount, int box, std::uint64_t seed) {
    if (pointCount < static_cast<int>(d) + 1)
        throw DegenerateInput("need at least d+1 points");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-box, box);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<RVector> pts;
        for (int i = 0; i < pointCount; ++i) {
            RVector v;
            for (std::size_t j = 0; j < d; ++j)
                v.emplace_back(coord(rng));
            pts.push_back(std::move(v));
        }
        auto p = Polytope::fromVertices(d, std::move(pts));
        if (p.isFullDim())
            return p;
    }
    throw DegenerateInput("no full-dimensional draw after 100 attempts");
}

Polytope randomSymmetricPolytope(std::size_t d, int pointCount, int box, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-box, box);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<RVector> pts;
        for (int i = 0; i < pointCount; ++i) {
            RVector v;
            for (std::size_t j = 0; j < d; ++j)
                v.emplace_back(coord(rng));
            pts.push_back(negate(v));
            pts.push_back(std::move(v));
        }
        auto p = Polytope::fromVertices(d, std::move(pts));
        if (p.isFullDim())
            return p;
    }
    throw DegenerateInput("no full-dimensional draw after 100 attempts");
}

ZonotopeSpec randomZonotope(std::size_t d, int generators, int bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-bound, bound);
    for (int attempt = 0; attempt < 100; ++attempt) {
        ZonotopeSpec z{d, {}};
        for (int i = 0; i < generators; ++i) {
            RVector g;
            for (std::size_t j = 0; j < d; ++j)
                g.emplace_back(entry(rng));
            z.generators.push_back(std::move(g));
        }
        if (rank(z.generators) == d)
            return z;
    }
    throw DegenerateInput("no spanning generator draw after 100 attempts");
}

Integer ScalingDecomposition::multiplicityOf(std::int64_t k, std::int64_t n) const {
    const auto d = static_cast<std::int64_t>(dim);
    if (n - k + d < d)
        return 0;
    return binomial(n - k + d, d);
}

ScalingDecomposition scalingDecomposition(const Polytope& base, DecompositionKind kind) {
    if (!base.isFullDim())
        throw DegenerateInput("scaling decomposition needs a full-dimensional base");
    if (!base.isLattice())
        throw InputError("scaling decomposition needs an integer polytope");
    const std::size_t d = base.dim();

    std::vector<std::vector<std::size_t>> simplices;
    if (kind == DecompositionKind::Simplex) {
        if (base.vertices().size() != d + 1)
            throw DegenerateInput("base is not a simplex");
        std::vector<std::size_t> all(d + 1);
        for (std::size_t i = 0; i <= d; ++i)
            all[i] = i;
        simplices.push_back(std::move(all));
    } else {
        simplices = triangulate(base);
    }

    ScalingDecomposition out{base, d, std::vector<PolytopeUnion>(d), {}, 0};
    for (std::size_t k = 0; k < d; ++k)
        out.pieces[k].label = "P_" + std::to_string(k + 1);
    const auto slabs = slabPieces(d);
    for (const auto& s : simplices) {
        const auto& v0 = base.vertices()[s[0]];
        std::vector<RVector> cols;
        for (std::size_t i = 1; i <= d; ++i)
            cols.push_back(sub(base.vertices()[s[i]], v0));
        RMatrix m = RMatrix::fromColumns(cols);
        out.constantSum += Rational(abs(determinant(m))).get_num();
        // Reflection through the cube centre maps piece k onto piece d+1-k;
        // its image is x -> c - x with c = M·1 + 2·v0.
        RVector c = add(m.apply(ones(d)), scale(v0, 2));
        RVector fix = sub(ones(d), c);
        for (std::size_t k = 1; k <= d; ++k) {
            Polytope img = affineImage(slabs[k - 1], m, v0);
            if (2 * k > d + 1)
                img = img.translated(fix);
            out.pieces[k - 1].parts.push_back(std::move(img));
        }
        out.transforms.push_back({std::move(m), v0});
    }
    return out;
}

} // namespace lps
