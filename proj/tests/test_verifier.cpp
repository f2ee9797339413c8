#include "lps/constructions.hpp"
#include "lps/errors.hpp"
#include "lps/verifier.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace lps;
using namespace lps::testing;

namespace {

// P(z ∈ T_n + X) summed over the lattice points z of layer x3 = k, i.e.
// Σ_z vol([0,1]^3 ∩ (z - T_n)); pairs intersect two such translates.
std::vector<Polytope> layerBodies(long n, long k) {
    Polytope neg = reeve(n).negated();
    std::vector<Polytope> out;
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            out.push_back(neg.translated(vec({a, b, k})));
    return out;
}

Rational layerMeanOracle(long n, long k) {
    Rational s = 0;
    for (const auto &body : layerBodies(n, k))
        s += intersectionVolume(body, unitCube(3));
    return s;
}

Rational pairOracle(long n, long k, long l) {
    Rational s = 0;
    for (const auto &a : layerBodies(n, k))
        for (const auto &b : layerBodies(n, l)) {
            auto ab = intersect(a, b);
            if (ab)
                s += intersectionVolume(*ab, unitCube(3));
        }
    return s;
}

VerifyOptions small(std::size_t instances, std::size_t shifts, std::uint64_t seed = 0) {
    VerifyOptions o;
    o.instances = instances;
    o.shifts = shifts;
    o.seed = seed;
    return o;
}

} // namespace

TEST_CASE("identity tags") {
    CHECK(allIdentities().size() == 14);
    for (auto k : allIdentities())
        CHECK(parseIdentity(tagOf(k)) == k);
    CHECK(tagOf(IdentityKind::Corollary3d) == "corollary-3d");
    CHECK_THROWS_AS(parseIdentity("corollary-5d"), UnknownIdentity);
    CHECK(isCounterexample(IdentityKind::CounterexampleSlab));
    CHECK_FALSE(isCounterexample(IdentityKind::Minkowski2d));
}

TEST_CASE("reeve layer tables") {
    CHECK(reeveLayerMean(2, 1) == q(7, 24));
    CHECK(reeveLayerMean(2, 2) == q(1, 24));
    for (long n = 1; n <= 6; ++n) {
        Rational s = 0;
        for (long k = 1; k <= n; ++k)
            s += reeveLayerMean(n, k);
        CHECK(s == q(n, 6));
    }
    CHECK(reevePairExpectation(3, 1, 2) == q(1, 54));
    CHECK(reevePairExpectation(2, 1, 2) == 0);
    CHECK(reevePairExpectation(5, 1, 3) == q(1, 150));
    for (long n = 2; n <= 6; ++n)
        for (long k = 1; k <= n; ++k)
            for (long l = k + 1; l <= n; ++l)
                if (2 * l >= k + n + 1)
                    CHECK(reevePairExpectation(n, k, l) == 0);
    CHECK_THROWS_AS(reeveLayerMean(3, 0), OutOfRange);
    CHECK_THROWS_AS(reeveLayerMean(3, 4), OutOfRange);
    CHECK_THROWS_AS(reevePairExpectation(3, 2, 2), OutOfRange);
    CHECK_THROWS_AS(reevePairExpectation(3, 1, 4), OutOfRange);
}

TEST_CASE("reeve layer tables match translate intersections") {
    for (long n = 1; n <= 4; ++n)
        for (long k = 1; k <= n; ++k) {
            CHECK(reeveLayerMean(n, k) == layerMeanOracle(n, k));
            for (long l = k + 1; l <= n; ++l)
                CHECK(reevePairExpectation(n, k, l) == pairOracle(n, k, l));
        }
}

TEST_CASE("reeveAudit") {
    auto a1 = reeveAudit(1);
    CHECK(a1.varClosedForm == q(5, 36));
    CHECK(a1.varLayerOracle == q(5, 36));
    CHECK(a1.varIntersectionEngine == q(5, 36));
    CHECK(*a1.varExactDistribution == q(5, 36));
    CHECK(a1.oraclesAgree);
    CHECK(a1.closedFormAgrees);
    CHECK(a1.discrepancies.empty());

    auto a2 = reeveAudit(2);
    CHECK(a2.varLayerOracle == q(2, 9));
    CHECK(a2.varIntersectionEngine == q(2, 9));
    CHECK(a2.varClosedForm == q(29, 144));
    CHECK(a2.oraclesAgree);
    CHECK_FALSE(a2.closedFormAgrees);
    CHECK(a2.discrepancies.size() == 3);
    CHECK(a2.meanTable.at(1) == q(7, 24));
    CHECK(a2.pairTable.at({1, 2}) == 0);

    auto a3 = reeveAudit(3, false);
    CHECK(a3.varLayerOracle == q(31, 108));
    CHECK(a3.varIntersectionEngine == q(31, 108));
    CHECK_FALSE(a3.varExactDistribution);
    CHECK(a3.oraclesAgree);
}

TEST_CASE("verify: spec instances") {
    VerifyOptions o;
    o.body = standardSimplex(2);
    o.n = 2;
    o.shifts = 50;
    auto r = verify(IdentityKind::ScalingSimplex, o);
    CHECK(r.status == VerificationStatus::Pass);
    CHECK(r.instances == 1);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().lhs == r.witnesses.front().rhs);

    o.body = reeveTetrahedron({1});
    auto c = verify(IdentityKind::Corollary3d, o);
    CHECK(c.status == VerificationStatus::Pass);

    auto m = verify(IdentityKind::CounterexampleMinkowski, VerifyOptions{});
    CHECK(m.status == VerificationStatus::ExpectedFailureConfirmed);
    bool violated = false;
    for (const auto &w : m.witnesses)
        violated |= !w.holds;
    CHECK(violated);

    VerifyOptions z;
    z.zonotope = ZonotopeSpec{2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}};
    z.shifts = 100;
    auto zr = verify(IdentityKind::ZonotopeConstancy, z);
    CHECK(zr.status == VerificationStatus::Pass);
    CHECK(zr.witnesses.front().rhs == "3");
}

TEST_CASE("verify: every tag on small workloads") {
    for (auto kind : allIdentities()) {
        CAPTURE(tagOf(kind));
        VerifyOptions o = small(2, 15, 9);
        if (kind == IdentityKind::Corollary4dSymmetric ||
            kind == IdentityKind::Corollary3dSymmetric)
            o.instances = 1;
        auto r = verify(kind, o);
        if (isCounterexample(kind))
            CHECK(r.status == VerificationStatus::ExpectedFailureConfirmed);
        else
            CHECK(r.status == VerificationStatus::Pass);
        CHECK(r.identity == kind);
        CHECK_FALSE(r.witnesses.empty());
    }
}

TEST_CASE("verify: failures are reported") {
    VerifyOptions o;
    o.body = standardSimplex(3);
    auto r = verify(IdentityKind::SymmetricDistribution2d, o);
    CHECK(r.status == VerificationStatus::Fail);

    // A body that satisfies a counterexample tag's identity does not confirm it.
    o.body = unitCube(3);
    o.shifts = 20;
    CHECK(verify(IdentityKind::CounterexampleSlab, o).status == VerificationStatus::Fail);
}

TEST_CASE("verify: deterministic per seed") {
    auto a = verify(IdentityKind::Minkowski2d, small(3, 10, 4));
    auto b = verify(IdentityKind::Minkowski2d, small(3, 10, 4));
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        CHECK(a.witnesses[i].instance == b.witnesses[i].instance);
        CHECK(a.witnesses[i].shift == b.witnesses[i].shift);
    }
    auto c = verify(IdentityKind::Minkowski2d, small(3, 10, 5));
    CHECK(c.witnesses.front().instance != a.witnesses.front().instance);
}
