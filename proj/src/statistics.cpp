#include "lps/statistics.hpp"

#include "lps/detail/cells.hpp"
#include "lps/errors.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <functional>
#include <limits>
#include <set>

namespace lps {

Rational CountDistribution::probability(std::int64_t m) const {
    if (kind == DistributionKind::Exact) {
        auto it = exact.find(m);
        return it == exact.end() ? Rational(0) : it->second;
    }
    auto it = frequencies.find(m);
    if (it == frequencies.end() || sampleCount == 0)
        return 0;
    return makeRational(Integer(std::to_string(it->second)), Integer(std::to_string(sampleCount)));
}

std::vector<std::int64_t> CountDistribution::support() const {
    std::vector<std::int64_t> out;
    if (kind == DistributionKind::Exact)
        for (const auto &[m, p] : exact)
            out.push_back(m);
    else
        for (const auto &[m, f] : frequencies)
            out.push_back(m);
    return out;
}

Rational CountDistribution::mean() const {
    Rational s = 0;
    for (auto m : support())
        s += probability(m) * m;
    return s;
}

Rational CountDistribution::variance() const {
    const Rational mu = mean();
    Rational s = 0;
    for (auto m : support()) {
        Rational dev = Rational(m) - mu;
        s += probability(m) * dev * dev;
    }
    return s;
}

Rational exactMean(const Polytope &p) {
    if (!p.isFullDim())
        throw DegenerateInput("mean of a lower-dimensional body is 0 almost surely");
    return volume(p);
}

Rational exactCovariance(const Polytope &p, const Polytope &q) {
    if (p.dim() != q.dim())
        throw InputError("covariance of bodies in different dimensions");
    if (!p.isFullDim() || !q.isFullDim())
        throw DegenerateInput("covariance needs full-dimensional bodies");
    const std::size_t d = p.dim();
    auto [plo, phi] = boundingBox(p);
    auto [qlo, qhi] = boundingBox(q);
    std::vector<std::int64_t> lo(d), hi(d), t(d);
    for (std::size_t i = 0; i < d; ++i) {
        lo[i] = toInt64(ceilOf(plo[i] - qhi[i]));
        hi[i] = toInt64(floorOf(phi[i] - qlo[i]));
        if (hi[i] < lo[i])
            return -volume(p) * volume(q);
        t[i] = lo[i];
    }
    Rational sum = 0;
    for (;;) {
        RVector shift;
        for (auto x : t)
            shift.emplace_back(static_cast<long>(x));
        sum += intersectionVolume(p, q.translated(shift));
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++t[i] <= hi[i])
                break;
            t[i] = lo[i];
        }
        if (i == d)
            break;
    }
    return sum - volume(p) * volume(q);
}

MomentReport exactVariance(const Polytope &p) {
    return {exactMean(p), exactCovariance(p, p), std::nullopt};
}

CountDistribution exactDistribution(const Polytope &p, std::size_t cellBudget) {
    return exactDistribution(PolytopeUnion{{p}, ""}, cellBudget);
}

CountDistribution exactDistribution(const PolytopeUnion &u, std::size_t cellBudget) {
    using namespace detail;
    CountDistribution out;
    std::vector<const Polytope *> parts;
    for (const auto &p : u.parts)
        if (p.isFullDim())
            parts.push_back(&p);
    if (parts.empty()) {
        out.exact[0] = 1;
        return out;
    }
    const std::size_t d = u.dim();
    const Polytope cube = unitCube(d);

    // N(x) changes only on facets of the translates z - P meeting the cube.
    std::set<HalfSpace> planeSet;
    for (const Polytope *p : parts) {
        const Polytope neg = p->negated();
        auto [lo, hi] = boundingBox(*p);
        std::vector<std::int64_t> zlo(d), zhi(d), z(d);
        for (std::size_t i = 0; i < d; ++i) {
            zlo[i] = toInt64(ceilOf(lo[i]));
            zhi[i] = toInt64(floorOf(hi[i] + 1));
            z[i] = zlo[i];
        }
        for (;;) {
            RVector zv;
            for (auto x : z)
                zv.emplace_back(static_cast<long>(x));
            Polytope body = neg.translated(zv);
            if (intersectionVolume(body, cube) > 0)
                for (const auto &f : body.facets())
                    planeSet.insert(f.canonicalHyperplane());
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (++z[i] <= zhi[i])
                    break;
                z[i] = zlo[i];
            }
            if (i == d)
                break;
        }
    }

    PlaneTable table;
    Cell root = seedCell(cube, table, 2 * d + planeSet.size());
    std::vector<std::size_t> candidates;
    for (const auto &h : planeSet)
        candidates.push_back(table.add(h));

    std::size_t cells = 1;
    Rational mass = 0;
    std::function<void(const Cell &, const std::vector<std::size_t> &)> visit =
        [&](const Cell &cell, const std::vector<std::size_t> &cands) {
            std::vector<std::size_t> live;
            for (auto c : cands)
                if (crosses(cell, table.planes[c]))
                    live.push_back(c);
            if (live.empty()) {
                RVector centroid = zeros(d);
                for (const auto &v : cell.verts)
                    centroid = add(centroid, v);
                centroid =
                    scale(centroid, Rational(1) / Rational(static_cast<long>(cell.verts.size())));
                std::int64_t count = 0;
                for (const Polytope *p : parts) {
                    auto r = countPoints(*p, centroid);
                    if (!r.boundaryHits.empty())
                        throw Error("cell centroid " + toString(centroid) +
                                    " lies on a translate boundary");
                    count += r.count;
                }
                Rational vol = cellVolume(cell, table);
                out.exact[count] += vol;
                mass += vol;
                return;
            }
            if (++cells > cellBudget)
                throw CellBudgetExceeded("cell budget of " + std::to_string(cellBudget) +
                                         " exceeded");
            auto halves = split(cell, table, live.front());
            std::vector<std::size_t> rest(live.begin() + 1, live.end());
            visit(halves.below, rest);
            visit(halves.above, rest);
        };
    visit(root, candidates);
    if (mass != 1)
        throw Error("cell volumes sum to " + toString(mass));
    return out;
}

CountDistribution mcDistribution(const PolytopeUnion &u, std::uint64_t samples,
                                 std::uint64_t seed) {
    if (samples == 0)
        throw InputError("samples must be positive");
    CountDistribution out;
    out.kind = DistributionKind::Empirical;
    ShiftStream stream(seed);
    out.sampleSeed = stream.info();
    const std::size_t d = u.dim();
    while (out.sampleCount < samples) {
        auto r = countAt(u, stream.next(d));
        if (!r.boundaryHits.empty()) {
            ++out.redraws;
            continue;
        }
        ++out.frequencies[r.count];
        ++out.sampleCount;
    }
    return out;
}

CountDistribution mcDistribution(const Polytope &p, std::uint64_t samples, std::uint64_t seed) {
    return mcDistribution(PolytopeUnion{{p}, ""}, samples, seed);
}

namespace {

struct Bin {
    std::vector<double> observed;
    std::vector<double> expected;
};

double minOf(const std::vector<double> &v) { return *std::min_element(v.begin(), v.end()); }

// Pools the bins whose smallest expectation is below 5 into one tail bucket
// and evaluates the Pearson statistic over the remaining table.
ComparisonReport pearson(std::vector<Bin> bins, const std::string &method) {
    ComparisonReport rep;
    rep.method = method;
    const std::size_t width = bins.front().observed.size();
    Bin tail{std::vector<double>(width, 0.0), std::vector<double>(width, 0.0)};
    std::vector<Bin> kept;
    for (auto &b : bins) {
        if (minOf(b.expected) >= 5) {
            kept.push_back(std::move(b));
            continue;
        }
        for (std::size_t j = 0; j < width; ++j) {
            tail.observed[j] += b.observed[j];
            tail.expected[j] += b.expected[j];
        }
    }
    double tailExpected = 0, tailObserved = 0;
    for (std::size_t j = 0; j < width; ++j) {
        tailExpected += tail.expected[j];
        tailObserved += tail.observed[j];
    }
    if (tailExpected == 0 && tailObserved > 0) {
        // Mass where the reference law has none.
        rep.chi2 = std::numeric_limits<double>::infinity();
        rep.pValue = 0.0;
        rep.degreesOfFreedom = static_cast<int>(kept.size());
        return rep;
    }
    if (tailExpected > 0) {
        if (minOf(tail.expected) < 5)
            throw InsufficientSamples("pooled tail bucket expects fewer than 5 samples");
        kept.push_back(std::move(tail));
    }
    double chi2 = 0;
    for (const auto &b : kept)
        for (std::size_t j = 0; j < width; ++j) {
            const double diff = b.observed[j] - b.expected[j];
            chi2 += diff * diff / b.expected[j];
        }
    rep.chi2 = chi2;
    rep.degreesOfFreedom = static_cast<int>(kept.size()) - 1;
    if (rep.degreesOfFreedom <= 0) {
        rep.pValue = 1.0;
        return rep;
    }
    boost::math::chi_squared dist(rep.degreesOfFreedom);
    rep.pValue = boost::math::cdf(boost::math::complement(dist, chi2));
    return rep;
}

ComparisonReport exactVsEmpirical(const CountDistribution &ex, const CountDistribution &em) {
    if (em.sampleCount == 0)
        throw InsufficientSamples("empty sample");
    const double n = static_cast<double>(em.sampleCount);
    std::vector<Bin> bins;
    for (const auto &[m, p] : ex.exact) {
        auto it = em.frequencies.find(m);
        double obs = it == em.frequencies.end() ? 0.0 : static_cast<double>(it->second);
        bins.push_back({{obs}, {n * p.get_d()}});
    }
    for (const auto &[m, f] : em.frequencies)
        if (!ex.exact.count(m))
            bins.push_back({{static_cast<double>(f)}, {0.0}});
    return pearson(std::move(bins), "chi-square");
}

ComparisonReport twoSample(const CountDistribution &a, const CountDistribution &b) {
    if (a.sampleCount == 0 || b.sampleCount == 0)
        throw InsufficientSamples("empty sample");
    const double na = static_cast<double>(a.sampleCount);
    const double nb = static_cast<double>(b.sampleCount);
    std::set<std::int64_t> values;
    for (const auto &[m, f] : a.frequencies)
        values.insert(m);
    for (const auto &[m, f] : b.frequencies)
        values.insert(m);
    std::vector<Bin> bins;
    for (auto m : values) {
        auto ia = a.frequencies.find(m);
        auto ib = b.frequencies.find(m);
        double oa = ia == a.frequencies.end() ? 0.0 : static_cast<double>(ia->second);
        double ob = ib == b.frequencies.end() ? 0.0 : static_cast<double>(ib->second);
        double row = oa + ob;
        bins.push_back({{oa, ob}, {na * row / (na + nb), nb * row / (na + nb)}});
    }
    return pearson(std::move(bins), "two-sample-chi-square");
}

} // namespace

ComparisonReport compareDistributions(const CountDistribution &a, const CountDistribution &b) {
    const bool ea = a.kind == DistributionKind::Exact;
    const bool eb = b.kind == DistributionKind::Exact;
    if (ea && eb) {
        ComparisonReport rep;
        rep.method = "exact";
        rep.equal = a.exact == b.exact;
        return rep;
    }
    if (ea)
        return exactVsEmpirical(a, b);
    if (eb)
        return exactVsEmpirical(b, a);
    return twoSample(a, b);
}

} // namespace lps
