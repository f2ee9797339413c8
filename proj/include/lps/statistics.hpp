#pragma once

#include "lps/lattice.hpp"
#include "lps/polytope.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace lps {

enum class DistributionKind { Exact, Empirical };

/// Law of the lattice count of a uniformly shifted body.
struct CountDistribution {
    DistributionKind kind = DistributionKind::Exact;
    /// Exact probabilities; entries with probability 0 are absent.
    std::map<std::int64_t, Rational> exact;
    /// Empirical frequencies.
    std::map<std::int64_t, std::uint64_t> frequencies;
    std::uint64_t sampleCount = 0;
    std::optional<SeedInfo> sampleSeed;
    /// Samples discarded because the shift put a lattice point on the boundary.
    std::uint64_t redraws = 0;

    /// Probability (exact) or relative frequency (empirical) of `m`.
    Rational probability(std::int64_t m) const;
    std::vector<std::int64_t> support() const;
    Rational mean() const;
    /// Population variance of the law (exact) or of the sample (empirical).
    Rational variance() const;
};

struct MomentReport {
    Rational mean;
    Rational variance;
    std::optional<Rational> covariance;
};

struct ComparisonReport {
    /// "exact", "chi-square" or "two-sample-chi-square".
    std::string method;
    std::optional<bool> equal;
    std::optional<double> chi2;
    std::optional<double> pValue;
    int degreesOfFreedom = 0;
};

/// vol(p). Throws DegenerateInput for lower-dimensional p.
Rational exactMean(const Polytope& p);

/// Σ_t vol(p ∩ (q + t)) - vol(p) vol(q) over integer t.
Rational exactCovariance(const Polytope& p, const Polytope& q);

MomentReport exactVariance(const Polytope& p);

constexpr std::size_t kDefaultCellBudget = 1000000;

/// Exact law via a decomposition of [0,1)^d into cells on which the count is
/// constant. Lower-dimensional parts count 0 almost surely and are ignored.
/// Throws CellBudgetExceeded once more than `cellBudget` cells are created.
CountDistribution exactDistribution(const Polytope& p, std::size_t cellBudget = kDefaultCellBudget);
CountDistribution exactDistribution(const PolytopeUnion& u,
                                    std::size_t cellBudget = kDefaultCellBudget);

/// Empirical law from `samples` generic shifts of ShiftStream(seed).
CountDistribution mcDistribution(const Polytope& p, std::uint64_t samples, std::uint64_t seed);
CountDistribution mcDistribution(const PolytopeUnion& u, std::uint64_t samples,
                                 std::uint64_t seed);

/// Exact/exact: equality. Otherwise Pearson chi-square; bins whose expected
/// count is below 5 are pooled into one tail bucket, and InsufficientSamples
/// is thrown if that bucket still expects fewer than 5.
ComparisonReport compareDistributions(const CountDistribution& a, const CountDistribution& b);

} // namespace lps
