#pragma once

#include "lps/lattice.hpp"
#include "lps/polytope.hpp"
#include "lps/statistics.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lps {

enum class IdentityKind {
    ScalingSimplex,
    ScalingPolyhedron,
    Corollary3d,
    Corollary3dSymmetric,
    Corollary4dSymmetric,
    ZonotopeConstancy,
    SlInvariance,
    NegationInvariance,
    Minkowski2d,
    SymmetricDistribution2d,
    CentrallySymmetric2dConstancy,
    CounterexampleSlab,
    CounterexampleMinkowski,
    CounterexampleSymmetry,
};

const std::vector<IdentityKind>& allIdentities();
std::string tagOf(IdentityKind kind);
/// Throws UnknownIdentity.
IdentityKind parseIdentity(const std::string& tag);
/// Tags whose identity is expected to fail on their bodies.
bool isCounterexample(IdentityKind kind);

enum class VerificationStatus { Pass, Fail, ExpectedFailureConfirmed };
std::string statusName(VerificationStatus status);

struct Witness {
    std::string instance;
    /// Empty for checks that do not sample shifts.
    RVector shift;
    std::string lhs;
    std::string rhs;
    bool holds = true;
};

struct VerificationReport {
    IdentityKind identity = IdentityKind::ScalingSimplex;
    std::size_t instances = 0;
    std::size_t shiftsPerInstance = 0;
    std::uint64_t seed = 0;
    VerificationStatus status = VerificationStatus::Pass;
    /// The first check of every instance plus the violations found.
    std::vector<Witness> witnesses;
};

struct VerifyOptions {
    /// Unset fields take the per-tag defaults.
    std::optional<std::size_t> instances;
    std::optional<std::size_t> shifts;
    std::uint64_t seed = 0;
    /// Dilation factor; defaults to the tag's range.
    std::optional<std::int64_t> n;
    /// Replaces the generated instances with a single given body.
    std::optional<Polytope> body;
    std::optional<ZonotopeSpec> zonotope;
    std::size_t cellBudget = kDefaultCellBudget;
};

struct IdentityDefaults {
    std::size_t instances;
    std::size_t shifts;
    std::vector<std::int64_t> nRange;
};
IdentityDefaults defaultsFor(IdentityKind kind);

VerificationReport verify(IdentityKind kind, const VerifyOptions& options);
VerificationReport verify(IdentityKind kind, std::size_t instances, std::size_t shifts,
                          std::uint64_t seed);

/// E I_k for the Reeve tetrahedron T_n: ((n-k+1)^3 - (n-k)^3) / (6 n^2).
/// Throws OutOfRange unless 1 <= k <= n.
Rational reeveLayerMean(std::int64_t n, std::int64_t k);

/// E I_k I_l for k < l: ((c+1)^3 - c^3) / (6 n^2) with c = k - 2l + n, and 0
/// when 2l > k + n. Throws OutOfRange unless 1 <= k < l <= n.
Rational reevePairExpectation(std::int64_t n, std::int64_t k, std::int64_t l);

/// (n^3 + 12n - 3) / (72n), the closed form as printed.
Rational reeveClosedForm(std::int64_t n);

struct ReeveDiscrepancy {
    std::string against;
    Rational closedForm;
    Rational value;
};

struct ReeveAudit {
    std::int64_t n = 1;
    Rational varClosedForm;
    Rational varLayerOracle;
    Rational varIntersectionEngine;
    std::optional<Rational> varExactDistribution;
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> pairTable;
    std::map<std::int64_t, Rational> meanTable;
    /// Layer oracle, intersection engine and (when present) distribution agree.
    bool oraclesAgree = false;
    bool closedFormAgrees = false;
    std::vector<ReeveDiscrepancy> discrepancies;
};

/// Computes the four variance values for T_n. The distribution engine runs
/// only when `withDistribution` is set.
ReeveAudit reeveAudit(std::int64_t n, bool withDistribution = true,
                      std::size_t cellBudget = kDefaultCellBudget);

} // namespace lps
