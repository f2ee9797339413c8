#include "lps/constructions.hpp"
#include "lps/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace lps;
using namespace lps::testing;

namespace {

// True when b = a + t for some integer vector t.
bool integerTranslate(const Polytope &a, const Polytope &b) {
    if (a.vertices().size() != b.vertices().size())
        return false;
    RVector t = sub(b.vertices().front(), a.vertices().front());
    for (const auto &x : t)
        if (!isInteger(x))
            return false;
    return a.translated(t) == b;
}

Rational unionVolume(const PolytopeUnion &u) {
    Rational v = 0;
    for (const auto &p : u.parts)
        v += volume(p);
    return v;
}

} // namespace

TEST_CASE("standardSimplex") {
    CHECK(standardSimplex(2) == poly(2, {{0, 0}, {1, 0}, {0, 1}}));
    for (std::size_t d = 1; d <= 4; ++d) {
        auto s = standardSimplex(d);
        CHECK(volume(s) == Rational(1) / Rational(factorial(d)));
        CHECK(s.facets().size() == d + 1);
    }
}

TEST_CASE("slabPieces") {
    auto two = slabPieces(2);
    REQUIRE(two.size() == 2);
    CHECK(volume(two[0]) == q(1, 2));
    CHECK(volume(two[1]) == q(1, 2));
    auto three = slabPieces(3);
    CHECK(volume(three[0]) == q(1, 6));
    CHECK(volume(three[1]) == q(4, 6));
    CHECK(volume(three[2]) == q(1, 6));
    for (std::size_t d = 1; d <= 4; ++d) {
        auto pieces = slabPieces(d);
        Rational total = 0;
        for (const auto &p : pieces)
            total += volume(p);
        CHECK(total == 1);
        for (std::size_t k = 0; k < d; ++k)
            CHECK(pieces[k].negated().translated(RVector(d, Rational(1))) == pieces[d - 1 - k]);
    }
}

TEST_CASE("reeveTetrahedron") {
    CHECK(volume(reeveTetrahedron({1})) == q(1, 6));
    CHECK(reeveTetrahedron({4}) == reeve(4));
    CHECK_THROWS_AS(reeveTetrahedron({0}), OutOfRange);
    for (long n = 1; n <= 6; ++n) {
        auto t = reeveTetrahedron({n});
        // Only the four vertices are lattice points and all are on the boundary.
        auto r = countPoints(t, zeros(3));
        CHECK(r.count == 4);
        CHECK(r.boundaryHits.size() == 4);
    }
    ShiftStream rng(2024);
    auto t20 = reeveTetrahedron({20});
    std::int64_t best = 0;
    for (int i = 0; i < 1000; ++i)
        best = std::max(best, countAt(t20, rng.next(3)).count);
    CHECK(best >= 4);
}

TEST_CASE("centralSlab") {
    auto s = centralSlab(3);
    CHECK(s.vertices().size() == 6);
    CHECK(volume(s) == q(2, 3));
    CHECK(s.negated().translated(RVector(3, Rational(1))) == s);
    CHECK(centralSlab(2).affineDim() == 1);
    CHECK_THROWS_AS(centralSlab(1), DegenerateInput);
}

TEST_CASE("crossPolytope and prismOverEmbedded") {
    CHECK(volume(crossPolytope(2)) == 2);
    CHECK(volume(crossPolytope(3)) == q(4, 3));
    CHECK(prismOverEmbedded(unitCube(2)) == unitCube(3));
    auto flat = embedWithZero(centralSlab(3));
    ShiftStream rng(8);
    for (int i = 0; i < 50; ++i)
        CHECK(countAt(flat, rng.next(4)).count == 0);
    CHECK(volume(prismOverEmbedded(centralSlab(3))) == q(2, 3));
}

TEST_CASE("randomUnimodular") {
    CHECK(randomUnimodular(3, 5, 0).matrix == RMatrix::identity(3));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto a = randomUnimodular(2 + seed % 3, seed);
        CHECK(determinant(a.matrix) == 1);
        CHECK(a.matrix.isIntegral());
    }
    CHECK(randomUnimodular(2, 77).matrix == randomUnimodular(2, 77).matrix);
    CHECK_THROWS_AS(randomUnimodular(1, 0), DegenerateInput);
}

TEST_CASE("randomLatticePolytope") {
    auto t = randomLatticePolytope(2, 3, 4, 11);
    CHECK(t.vertices().size() == 3);
    CHECK(t.isLattice());
    CHECK(t == randomLatticePolytope(2, 3, 4, 11));
    CHECK_THROWS_AS(randomLatticePolytope(2, 2, 4, 11), DegenerateInput);
    // A box of radius 0 only ever yields the origin.
    CHECK_THROWS_AS(randomLatticePolytope(2, 3, 0, 11), DegenerateInput);
    auto c = randomSymmetricPolytope(3, 3, 2, 4);
    CHECK(c.negated() == c);
}

TEST_CASE("scalingDecomposition of the standard simplex") {
    auto dec = scalingDecomposition(standardSimplex(3), DecompositionKind::Simplex);
    auto slabs = slabPieces(3);
    for (std::size_t k = 0; k < 3; ++k) {
        REQUIRE(dec.pieces[k].parts.size() == 1);
        CHECK(dec.pieces[k].parts[0] == slabs[k]);
    }
    CHECK(dec.multiplicityOf(1, 2) == 4);
    CHECK(dec.multiplicityOf(2, 2) == 1);
    CHECK(dec.multiplicityOf(3, 2) == 0);
    CHECK(dec.constantSum == 1);

    auto d2 = scalingDecomposition(standardSimplex(2), DecompositionKind::Simplex);
    CHECK(d2.multiplicityOf(1, 2) == 3);
    CHECK(d2.multiplicityOf(2, 2) == 1);
    CHECK(3 * unionVolume(d2.pieces[0]) + unionVolume(d2.pieces[1]) == 2);

    auto t1 = scalingDecomposition(reeveTetrahedron({1}), DecompositionKind::Simplex);
    CHECK(t1.constantSum == 1);
    CHECK_THROWS_AS(scalingDecomposition(unitCube(2), DecompositionKind::Simplex), DegenerateInput);
    CHECK_THROWS_AS(
        scalingDecomposition(segment(zeros(2), vec({1, 1})), DecompositionKind::Polyhedron),
        DegenerateInput);
}

TEST_CASE("property: scaling volume certificate") {
    std::vector<Polytope> bases{standardSimplex(2),
                                reeveTetrahedron({3}),
                                randomLatticePolytope(2, 5, 3, 1),
                                randomLatticePolytope(3, 5, 2, 2),
                                standardSimplex(4),
                                crossPolytope(3)};
    for (const auto &base : bases) {
        auto dec = scalingDecomposition(base, DecompositionKind::Polyhedron);
        const std::size_t d = base.dim();
        CHECK(Rational(dec.constantSum) == volume(base) * Rational(factorial(d)));
        for (std::int64_t n = 1; n <= 5; ++n) {
            Rational total = 0;
            for (std::size_t k = 1; k <= d; ++k)
                total += Rational(dec.multiplicityOf(static_cast<std::int64_t>(k), n)) *
                         unionVolume(dec.pieces[k - 1]);
            Rational nd = 1;
            for (std::size_t i = 0; i < d; ++i)
                nd *= n;
            CHECK(total == nd * volume(base));
        }
    }
}

TEST_CASE("property: negation pairing and piece constancy") {
    std::vector<Polytope> bases{reeveTetrahedron({2}), randomLatticePolytope(2, 6, 3, 5),
                                randomLatticePolytope(3, 6, 2, 6), standardSimplex(4)};
    ShiftStream rng(55);
    for (const auto &base : bases) {
        auto dec = scalingDecomposition(base, DecompositionKind::Polyhedron);
        const std::size_t d = base.dim();
        const RVector one(d, Rational(1));
        for (std::size_t k = 1; k <= d; ++k) {
            const auto &a = dec.pieces[k - 1].parts;
            const auto &b = dec.pieces[d - k].parts;
            REQUIRE(a.size() == b.size());
            for (std::size_t j = 0; j < a.size(); ++j) {
                auto reflected = b[j].negated().translated(one);
                if (2 * k == d + 1)
                    CHECK(integerTranslate(reflected, a[j]));
                else
                    CHECK(reflected == a[j]);
            }
        }
        // Piece 1 of each simplex is the simplex itself.
        Rational v0 = unionVolume(dec.pieces[0]);
        CHECK(v0 == volume(base));

        std::vector<const Polytope *> all;
        for (const auto &u : dec.pieces)
            for (const auto &p : u.parts)
                all.push_back(&p);
        for (int i = 0; i < 20; ++i) {
            auto s = drawGenericShift(all, rng);
            std::int64_t total = 0;
            for (const auto &u : dec.pieces)
                total += countAt(u, s).count;
            CHECK(total == dec.constantSum.get_si());
        }
    }
}

TEST_CASE("property: single-simplex constant is the parallelepiped index") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto t = randomLatticePolytope(3, 4, 2, 100 + seed);
        if (t.vertices().size() != 4)
            continue;
        auto dec = scalingDecomposition(t, DecompositionKind::Simplex);
        std::vector<RVector> edges;
        for (std::size_t i = 1; i <= 3; ++i)
            edges.push_back(sub(t.vertices()[i], t.vertices()[0]));
        CHECK(dec.constantSum == parallelepipedIndex(edges));
    }
}
