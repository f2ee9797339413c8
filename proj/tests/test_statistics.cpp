#include "lps/constructions.hpp"
#include "lps/errors.hpp"
#include "lps/statistics.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace lps;
using namespace lps::testing;

namespace {

// Inequality a . y <= num/den with small integer data, written by hand so
// the grid oracle below never touches the library's hull code.
struct IntIneq {
    std::vector<long> a;
    long num;
    long den;
};

struct IntBody {
    std::vector<IntIneq> ineqs;
    long lo, hi; // integer bounding box, same in every coordinate

    Polytope polytope(std::size_t d) const {
        std::vector<HalfSpace> hs;
        for (const auto &i : ineqs) {
            RVector n;
            for (auto x : i.a)
                n.emplace_back(x);
            hs.push_back({n, q(i.num, i.den)});
        }
        return verticesFromFacets(hs, d);
    }
};

constexpr long kRes = 512;

// N(x) at the grid midpoint X / (2 kRes), counting z with a.(z - x) <= b in
// exact integer arithmetic.
long gridCount(const IntBody &body, const std::vector<long> &X) {
    const std::size_t d = X.size();
    std::vector<long> z(d, body.lo);
    long count = 0;
    for (;;) {
        bool inside = true;
        for (const auto &in : body.ineqs) {
            long lhs = 0;
            for (std::size_t i = 0; i < d; ++i)
                lhs += in.a[i] * (2 * kRes * (z[i]) - X[i]);
            if (lhs * in.den > 2 * kRes * in.num) {
                inside = false;
                break;
            }
        }
        count += inside;
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++z[i] <= body.hi + 1)
                break;
            z[i] = body.lo;
        }
        if (i == d)
            break;
    }
    return count;
}

// Midpoint Riemann estimate of cov(X_P, X_Q) over [0,1)^d.
double gridCovariance(const IntBody &p, const IntBody &qb, std::size_t d) {
    std::vector<long> X(d, 1);
    double sp = 0, sq = 0, spq = 0, n = 0;
    for (;;) {
        double a = static_cast<double>(gridCount(p, X));
        double b = static_cast<double>(gridCount(qb, X));
        sp += a;
        sq += b;
        spq += a * b;
        n += 1;
        std::size_t i = 0;
        for (; i < d; ++i) {
            if ((X[i] += 2) < 2 * kRes)
                break;
            X[i] = 1;
        }
        if (i == d)
            break;
    }
    return spq / n - (sp / n) * (sq / n);
}

void checkIdentity(const IntBody &p, const IntBody &qb, std::size_t d) {
    double grid = gridCovariance(p, qb, d);
    double exact = exactCovariance(p.polytope(d), qb.polytope(d)).get_d();
    CAPTURE(grid);
    CAPTURE(exact);
    CHECK(std::abs(grid - exact) <= 0.02 * std::abs(exact));
}

Polytope scaled(const Polytope &p, long n) { return p.dilated(Rational(n)); }

} // namespace

TEST_CASE("covariance lattice-sum identity against a midpoint grid") {
    IntBody seg32{{{{1}, 3, 2}, {{-1}, 0, 1}}, -1, 2};
    IntBody seg52{{{{1}, 5, 2}, {{-1}, 0, 1}}, -1, 3};
    IntBody seg13{{{{1}, 1, 3}, {{-1}, 0, 1}}, -1, 1};
    checkIdentity(seg32, seg32, 1);
    checkIdentity(seg32, seg52, 1);
    checkIdentity(seg13, seg13, 1);

    IntBody tri{{{{1, 1}, 1, 1}, {{-1, 0}, 0, 1}, {{0, -1}, 0, 1}}, -1, 2};
    IntBody quad{{{{1, 0}, 3, 2}, {{1, 2}, 2, 1}, {{-1, 0}, 0, 1}, {{0, -1}, 0, 1}}, -1, 2};
    IntBody rect{{{{1, 0}, 3, 2}, {{0, 1}, 1, 2}, {{-1, 0}, 0, 1}, {{0, -1}, 0, 1}}, -1, 2};
    checkIdentity(tri, tri, 2);
    checkIdentity(quad, quad, 2);
    checkIdentity(tri, rect, 2);
}

TEST_CASE("exactMean") {
    CHECK(exactMean(standardSimplex(3)) == q(1, 6));
    for (long n = 1; n <= 4; ++n)
        CHECK(exactMean(reeve(n)) == q(n, 6));
    for (std::size_t d = 1; d <= 3; ++d)
        CHECK(exactMean(unitCube(d)) == 1);
    CHECK_THROWS_AS(exactMean(segment(zeros(2), vec({1, 1}))), DegenerateInput);
}

TEST_CASE("exactCovariance and exactVariance") {
    auto tri = simplexD(2);
    CHECK(exactCovariance(tri, tri) == q(1, 4));
    CHECK(exactCovariance(tri, tri.translated(vec({3, -2}))) == q(1, 4));
    CHECK(exactCovariance(reeve(2), reeve(2)) == q(2, 9));
    CHECK(exactVariance(reeve(1)).variance == q(5, 36));
    CHECK(exactVariance(reeve(1)).mean == q(1, 6));
    for (std::size_t d = 1; d <= 3; ++d)
        CHECK(exactVariance(unitCube(d)).variance == 0);
}

TEST_CASE("variance of a dilated centrally symmetric body") {
    auto oct = crossPolytope(3);
    Rational v0 = exactVariance(oct).variance;
    CHECK(v0 > 0);
    CHECK(exactVariance(scaled(oct, 2)).variance == 4 * v0);
}

TEST_CASE("exactDistribution examples") {
    for (std::size_t d = 1; d <= 3; ++d) {
        auto dist = exactDistribution(simplexD(d));
        Rational p1 = Rational(1) / Rational(factorial(d));
        CHECK(dist.probability(1) == p1);
        CHECK(dist.probability(0) == 1 - p1);
        CHECK(dist.support().size() == (d == 1 ? 1u : 2u));
    }
    auto slab = exactDistribution(centralSlab(3));
    CHECK(slab.exact == std::map<std::int64_t, Rational>{{0, q(1, 3)}, {1, q(2, 3)}});
    auto tri = exactDistribution(simplexD(2));
    CHECK(tri.exact == std::map<std::int64_t, Rational>{{0, q(1, 2)}, {1, q(1, 2)}});
    auto t2 = exactDistribution(reeve(2));
    CHECK(t2.mean() == q(1, 3));
    CHECK(t2.variance() == q(2, 9));
    CHECK(exactDistribution(unitCube(3)).exact == std::map<std::int64_t, Rational>{{1, 1}});
    CHECK_THROWS_AS(exactDistribution(reeve(3), 3), CellBudgetExceeded);
}

TEST_CASE("exactDistribution of flat bodies and prisms") {
    auto flat = embedWithZero(centralSlab(3));
    CHECK(exactDistribution(flat).exact == std::map<std::int64_t, Rational>{{0, 1}});
    auto prism = exactDistribution(prismOverEmbedded(centralSlab(3)));
    CHECK(prism.exact == std::map<std::int64_t, Rational>{{0, q(1, 3)}, {1, q(2, 3)}});
}

TEST_CASE("property: mean and variance agree across both engines") {
    std::mt19937_64 gen(5);
    std::vector<Polytope> catalog{unitCube(2),
                                  simplexD(2),
                                  simplexD(3),
                                  reeve(1),
                                  reeve(2),
                                  reeve(3),
                                  centralSlab(3),
                                  crossPolytope(2),
                                  crossPolytope(3),
                                  scaled(simplexD(2), 3),
                                  poly(3, {{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 2}})};
    for (int i = 0; i < 6; ++i)
        catalog.push_back(randomLattice(gen, 2, 5, 3));
    for (int i = 0; i < 3; ++i)
        catalog.push_back(randomLattice(gen, 3, 5, 1));
    for (const auto &p : catalog) {
        CAPTURE(toString(p.vertices().front()));
        auto dist = exactDistribution(p);
        Rational mass = 0;
        for (const auto &[m, pr] : dist.exact) {
            CHECK(pr > 0);
            CHECK(m >= 0);
            mass += pr;
        }
        CHECK(mass == 1);
        auto mom = exactVariance(p);
        CHECK(dist.mean() == mom.mean);
        CHECK(dist.variance() == mom.variance);
        CHECK(mom.variance >= 0);
    }
}

TEST_CASE("property: planar distributions are symmetric about the mean") {
    std::mt19937_64 gen(12);
    int checked = 0;
    for (int i = 0; i < 30 && checked < 8; ++i) {
        auto p = randomLattice(gen, 2, 4, 3);
        auto dist = exactDistribution(p);
        Rational twice = 2 * dist.mean();
        REQUIRE(isInteger(twice));
        ++checked;
        for (const auto &[m, pr] : dist.exact)
            CHECK(dist.probability(twice.get_num().get_si() - m) == pr);
    }
    // Δ_3 has mean 1/6; its atoms 0 and 1 cannot pair up.
    auto d3 = exactDistribution(simplexD(3));
    CHECK(d3.probability(0) != d3.probability(1));
}

TEST_CASE("piece unions have constant total count") {
    auto dec = scalingDecomposition(reeve(2), DecompositionKind::Polyhedron);
    PolytopeUnion all;
    for (const auto &u : dec.pieces)
        for (const auto &p : u.parts)
            all.parts.push_back(p);
    auto dist = exactDistribution(all);
    CHECK(dist.exact == std::map<std::int64_t, Rational>{{dec.constantSum.get_si(), Rational(1)}});
}

TEST_CASE("mcDistribution") {
    auto cube = mcDistribution(unitCube(3), 500, 7);
    CHECK(cube.frequencies == std::map<std::int64_t, std::uint64_t>{{1, 500}});
    CHECK(cube.sampleSeed->seed == 7);

    const std::uint64_t n = 100000;
    auto tri = mcDistribution(simplexD(2), n, 1);
    CHECK(tri.sampleCount == n);
    CHECK(std::abs(tri.probability(1).get_d() - 0.5) <= 4 * std::sqrt(0.25 / n));
    CHECK(tri.frequencies == mcDistribution(simplexD(2), n, 1).frequencies);

    auto t5 = mcDistribution(reeve(5), n, 2);
    double var = exactVariance(reeve(5)).variance.get_d();
    CHECK(std::abs(t5.mean().get_d() - 5.0 / 6.0) <= 4 * std::sqrt(var / n));
}

TEST_CASE("compareDistributions") {
    auto d2 = exactDistribution(simplexD(2));
    CHECK(*compareDistributions(d2, d2).equal);
    CHECK(*compareDistributions(d2, exactDistribution(simplexD(2).negated())).equal);
    RMatrix a = RMatrix::fromIntegers({{1, 1}, {0, 1}});
    CHECK(
        *compareDistributions(d2, exactDistribution(affineImage(simplexD(2), a, zeros(2)))).equal);
    CHECK_FALSE(
        *compareDistributions(exactDistribution(reeve(2)), exactDistribution(reeve(3))).equal);

    for (const auto &p : {simplexD(2), reeve(3), centralSlab(3)}) {
        auto rep = compareDistributions(exactDistribution(p), mcDistribution(p, 100000, 3));
        CHECK(rep.method == "chi-square");
        CHECK(*rep.pValue > 0.001);
    }
    auto two = compareDistributions(mcDistribution(reeve(2), 20000, 1),
                                    mcDistribution(reeve(2), 20000, 2));
    CHECK(two.method == "two-sample-chi-square");
    CHECK(*two.pValue > 0.001);
    auto diff = compareDistributions(mcDistribution(reeve(2), 20000, 1),
                                     mcDistribution(reeve(3), 20000, 2));
    CHECK(*diff.pValue < 1e-6);

    // Observed mass outside the exact support.
    auto off =
        compareDistributions(exactDistribution(unitCube(2)), mcDistribution(simplexD(2), 50, 1));
    CHECK(std::isinf(*off.chi2));
    CHECK(*off.pValue == 0.0);
    CHECK_THROWS_AS(
        compareDistributions(exactDistribution(simplexD(3)), mcDistribution(simplexD(3), 20, 1)),
        InsufficientSamples);
}
