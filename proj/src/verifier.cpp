#include "lps/verifier.hpp"

#include "lps/constructions.hpp"
#include "lps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lps {

namespace {

struct TagEntry {
    IdentityKind kind;
    const char *tag;
};

constexpr TagEntry kTags[] = {
    {IdentityKind::ScalingSimplex, "scaling-simplex"},
    {IdentityKind::ScalingPolyhedron, "scaling-polyhedron"},
    {IdentityKind::Corollary3d, "corollary-3d"},
    {IdentityKind::Corollary3dSymmetric, "corollary-3d-symmetric"},
    {IdentityKind::Corollary4dSymmetric, "corollary-4d-symmetric"},
    {IdentityKind::ZonotopeConstancy, "zonotope-constancy"},
    {IdentityKind::SlInvariance, "sl-invariance"},
    {IdentityKind::NegationInvariance, "negation-invariance"},
    {IdentityKind::Minkowski2d, "minkowski-2d"},
    {IdentityKind::SymmetricDistribution2d, "symmetric-distribution-2d"},
    {IdentityKind::CentrallySymmetric2dConstancy, "centrally-symmetric-2d-constancy"},
    {IdentityKind::CounterexampleSlab, "counterexample-slab"},
    {IdentityKind::CounterexampleMinkowski, "counterexample-minkowski"},
    {IdentityKind::CounterexampleSymmetry, "counterexample-symmetry"},
};

constexpr std::size_t kViolationsPerInstance = 5;

std::string describe(const Polytope &p) {
    std::string s = "conv{";
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        if (i)
            s += ",";
        s += toString(p.vertices()[i]);
    }
    return s + "}";
}

std::string describe(const RMatrix &m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r)
        s += toString(m.row(r));
    return s + "]";
}

std::string describe(const CountDistribution &d) {
    std::string s = "{";
    bool first = true;
    for (const auto &[m, p] : d.exact) {
        if (!first)
            s += ", ";
        first = false;
        s += std::to_string(m) + ": " + toString(p);
    }
    return s + "}";
}

Integer power(std::int64_t n, unsigned e) {
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= n;
    return r;
}

class Runner {
  public:
    Runner(IdentityKind kind, const VerifyOptions &opt) : opt_(opt) {
        const auto def = defaultsFor(kind);
        report_.identity = kind;
        report_.seed = opt.seed;
        report_.instances = (opt.body || opt.zonotope) ? 1 : opt.instances.value_or(def.instances);
        report_.shiftsPerInstance = opt.shifts.value_or(def.shifts);
        nRange_ = opt.n ? std::vector<std::int64_t>{*opt.n} : def.nRange;
    }

    std::size_t instances() const { return report_.instances; }
    std::size_t shifts() const { return report_.shiftsPerInstance; }
    const std::vector<std::int64_t> &nRange() const { return nRange_; }
    const VerifyOptions &options() const { return opt_; }

    /// Deterministic seed for drawing instance i.
    std::uint64_t instanceSeed(std::size_t i) const {
        return ShiftStream(opt_.seed, (std::uint64_t{1} << 32) | i).nextRaw();
    }
    ShiftStream shiftStream(std::size_t i) const { return ShiftStream(opt_.seed, i + 1); }

    void beginInstance() { recorded_ = 0; }

    void record(Witness w) {
        if (!w.holds)
            ++violations_;
        if (recorded_ == 0 || (!w.holds && recorded_ <= kViolationsPerInstance)) {
            report_.witnesses.push_back(std::move(w));
            ++recorded_;
        }
    }

    VerificationReport finish() {
        const bool counter = isCounterexample(report_.identity);
        if (counter)
            report_.status = violations_ > 0 ? VerificationStatus::ExpectedFailureConfirmed
                                             : VerificationStatus::Fail;
        else
            report_.status = violations_ == 0 ? VerificationStatus::Pass : VerificationStatus::Fail;
        return std::move(report_);
    }

  private:
    VerifyOptions opt_;
    VerificationReport report_;
    std::vector<std::int64_t> nRange_;
    std::size_t recorded_ = 0;
    std::size_t violations_ = 0;
};

// Checks that `value` is the same at every generic shift; the first shift's
// value is the reference (or `expected` when given).
void checkConstant(Runner &run, std::size_t index, const std::string &desc,
                   const std::vector<const Polytope *> &bodies,
                   const std::function<std::int64_t(const Shift &)> &value,
                   std::optional<std::int64_t> expected = std::nullopt) {
    auto stream = run.shiftStream(index);
    for (std::size_t k = 0; k < run.shifts(); ++k) {
        Shift s = drawGenericShift(bodies, stream);
        const std::int64_t v = value(s);
        if (!expected)
            expected = v;
        run.record({desc, s.coords, std::to_string(v), std::to_string(*expected), v == *expected});
    }
}

Polytope bodyOr(const Runner &run, const std::function<Polytope()> &make) {
    return run.options().body ? *run.options().body : make();
}

void scaling(Runner &run, bool simplexOnly) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        const std::size_t d = 2 + i % 2;
        const auto seed = run.instanceSeed(i);
        Polytope base = bodyOr(run, [&] {
            return simplexOnly ? randomLatticePolytope(d, static_cast<int>(d) + 1, 3, seed)
                               : randomLatticePolytope(d, static_cast<int>(d) + 3, 3, seed);
        });
        auto dec = scalingDecomposition(base, simplexOnly ? DecompositionKind::Simplex
                                                          : DecompositionKind::Polyhedron);
        std::vector<const Polytope *> pieces;
        for (const auto &u : dec.pieces)
            for (const auto &p : u.parts)
                pieces.push_back(&p);
        auto stream = run.shiftStream(i);
        for (auto n : run.nRange()) {
            if (n < 1)
                throw OutOfRange("dilation factor must be >= 1");
            Polytope scaled = base.dilated(Rational(n));
            auto bodies = pieces;
            bodies.push_back(&scaled);
            const std::string desc = "n=" + std::to_string(n) + " base=" + describe(base);
            for (std::size_t k = 0; k < run.shifts(); ++k) {
                Shift s = drawGenericShift(bodies, stream);
                Integer rhs = 0;
                std::int64_t total = 0;
                for (std::size_t j = 0; j < dec.pieces.size(); ++j) {
                    auto c = countAt(dec.pieces[j], s).count;
                    total += c;
                    rhs += dec.multiplicityOf(static_cast<std::int64_t>(j + 1), n) * c;
                }
                const auto lhs = countAt(scaled, s).count;
                run.record(
                    {desc, s.coords, std::to_string(lhs), rhs.get_str(), Integer(lhs) == rhs});
                if (Integer(total) != dec.constantSum)
                    run.record({desc + " piece sum", s.coords, std::to_string(total),
                                dec.constantSum.get_str(), false});
            }
        }
    }
}

void corollary3d(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope p =
            bodyOr(run, [&] { return randomLatticePolytope(3, 5, 2, run.instanceSeed(i)); });
        if (p.dim() != 3)
            throw InputError("corollary-3d needs a 3-dimensional body");
        // Generic for every piece so the underlying partition applies.
        auto dec = scalingDecomposition(p, DecompositionKind::Polyhedron);
        std::vector<const Polytope *> pieces;
        for (const auto &u : dec.pieces)
            for (const auto &q : u.parts)
                pieces.push_back(&q);
        Polytope neg = p.negated();
        const Rational vol = volume(p);
        auto stream = run.shiftStream(i);
        for (auto n : run.nRange()) {
            Polytope scaled = p.dilated(Rational(n));
            auto bodies = pieces;
            bodies.push_back(&scaled);
            bodies.push_back(&neg);
            const Rational constant = Rational(binomial(n + 1, 3)) * 6 * vol;
            const std::string desc = "n=" + std::to_string(n) + " P=" + describe(p);
            for (std::size_t k = 0; k < run.shifts(); ++k) {
                Shift s = drawGenericShift(bodies, stream);
                Rational rhs = Rational(binomial(n + 1, 2)) * countAt(p, s).count -
                               Rational(binomial(n, 2)) * countAt(neg, s).count + constant;
                Rational lhs(countAt(scaled, s).count);
                run.record({desc, s.coords, toString(lhs), toString(rhs), lhs == rhs});
            }
        }
    }
}

void symmetricScaling(Runner &run, std::size_t d) {
    const unsigned exponent = d == 3 ? 2 : 4;
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope p = bodyOr(run, [&] {
            return i == 0 ? crossPolytope(d)
                          : randomSymmetricPolytope(d, 2, 1, run.instanceSeed(i));
        });
        if (p.dim() != d)
            throw InputError("body dimension does not match the identity");
        const Rational base = exactVariance(p).variance;
        for (auto n : run.nRange()) {
            Rational lhs = exactVariance(p.dilated(Rational(n))).variance;
            Rational rhs = Rational(power(n, exponent)) * base;
            run.record({"n=" + std::to_string(n) + " P=" + describe(p),
                        {},
                        toString(lhs),
                        toString(rhs),
                        lhs == rhs});
        }
    }
}

void invariance(Runner &run, bool unimodular) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        const std::size_t d = 2 + i % 2;
        const auto seed = run.instanceSeed(i);
        Polytope p = bodyOr(run, [&] {
            return d == 2 ? randomLatticePolytope(2, 4, 2, seed)
                          : randomLatticePolytope(3, 5, 1, seed);
        });
        Polytope image = p;
        std::string desc = "P=" + describe(p);
        if (unimodular) {
            RMatrix a = randomUnimodular(p.dim(), seed).matrix;
            image = affineImage(p, a, zeros(p.dim()));
            desc += " A=" + describe(a);
        } else {
            image = p.negated();
        }
        Rational lhs = exactVariance(image).variance;
        Rational rhs = exactVariance(p).variance;
        run.record({desc + " variance", {}, toString(lhs), toString(rhs), lhs == rhs});
        if (p.dim() <= 3) {
            auto a = exactDistribution(image, run.options().cellBudget);
            auto b = exactDistribution(p, run.options().cellBudget);
            run.record({desc + " distribution", {}, describe(a), describe(b), a.exact == b.exact});
        }
    }
}

// Every atom m must be matched by an atom 2·mean - m of equal probability.
void checkSymmetry(Runner &run, const std::string &desc, const CountDistribution &dist) {
    const Rational twice = 2 * dist.mean();
    bool any = false;
    for (const auto &[m, pr] : dist.exact) {
        Rational mirror = twice - m;
        Rational other =
            isInteger(mirror) ? dist.probability(toInt64(mirror.get_num())) : Rational(0);
        if (other != pr) {
            any = true;
            run.record({desc + " m=" + std::to_string(m) + " mirror=" + toString(mirror),
                        {},
                        toString(pr),
                        toString(other),
                        false});
        }
    }
    if (!any)
        run.record({desc, {}, describe(dist), "symmetric about " + toString(twice / 2), true});
}

// Generators of a centrally symmetric polygon: the first half of its edges
// in cyclic order.
ZonotopeSpec polygonGenerators(const Polytope &p) {
    const auto &vs = p.vertices();
    RVector c = zeros(2);
    for (const auto &v : vs)
        c = add(c, v);
    c = scale(c, Rational(1) / Rational(static_cast<long>(vs.size())));
    std::vector<RVector> cyc = vs;
    std::sort(cyc.begin(), cyc.end(), [&](const RVector &a, const RVector &b) {
        return std::atan2(Rational(a[1] - c[1]).get_d(), Rational(a[0] - c[0]).get_d()) <
               std::atan2(Rational(b[1] - c[1]).get_d(), Rational(b[0] - c[0]).get_d());
    });
    ZonotopeSpec z{2, {}};
    for (std::size_t i = 0; i < cyc.size() / 2; ++i)
        z.generators.push_back(sub(cyc[i + 1], cyc[i]));
    return z;
}

void zonotopeConstancy(Runner &run) {
    if (run.options().body)
        throw InputError("zonotope-constancy takes a zonotope input");
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        ZonotopeSpec z =
            run.options().zonotope
                ? *run.options().zonotope
                : randomZonotope(2 + i % 2, 3 + static_cast<int>(i % 3), 3, run.instanceSeed(i));
        Polytope p = zonotopePolytope(z);
        const Integer constant = zonotopeConstant(z);
        const std::string desc = "Z=" + describe(p);
        run.record({desc + " volume",
                    {},
                    toString(volume(p)),
                    constant.get_str(),
                    volume(p) == Rational(constant)});
        checkConstant(
            run, i, desc, {&p}, [&](const Shift &s) { return countAt(p, s).count; },
            constant.get_si());
    }
}

void symmetricConstancy2d(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope p =
            bodyOr(run, [&] { return randomSymmetricPolytope(2, 2, 2, run.instanceSeed(i)); });
        if (p.dim() != 2)
            throw InputError("centrally-symmetric-2d-constancy needs a polygon");
        const Integer constant = zonotopeConstant(polygonGenerators(p));
        const std::string desc = "P=" + describe(p);
        run.record({desc + " volume",
                    {},
                    toString(volume(p)),
                    constant.get_str(),
                    volume(p) == Rational(constant)});
        checkConstant(
            run, i, desc, {&p}, [&](const Shift &s) { return countAt(p, s).count; },
            constant.get_si());
    }
}

void minkowskiDifference(Runner &run, std::size_t index, const Polytope &p, const Polytope &q,
                         const Polytope &sum) {
    checkConstant(run, index, "P=" + describe(p) + " Q=" + describe(q), {&p, &q, &sum},
                  [&](const Shift &s) {
                      return countAt(sum, s).count - countAt(p, s).count - countAt(q, s).count;
                  });
}

void minkowski2d(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        const auto seed = run.instanceSeed(i);
        Polytope p = bodyOr(run, [&] { return randomLatticePolytope(2, 3, 2, seed); });
        Polytope q = randomLatticePolytope(p.dim(), static_cast<int>(p.dim()) + 1, 2, seed + 1);
        minkowskiDifference(run, i, p, q, minkowskiSum(p, q));
    }
}

void symmetricDistribution2d(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope p =
            bodyOr(run, [&] { return randomLatticePolytope(2, 4, 2, run.instanceSeed(i)); });
        checkSymmetry(run, "P=" + describe(p), exactDistribution(p, run.options().cellBudget));
    }
}

void counterexampleSlab(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope p = bodyOr(run, [&] { return centralSlab(3 + i % 2); });
        checkConstant(run, i, "P=" + describe(p), {&p},
                      [&](const Shift &s) { return countAt(p, s).count; });
    }
}

void counterexampleMinkowski(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope slab = bodyOr(run, [&] { return centralSlab(3 + i % 2); });
        Polytope p = embedWithZero(slab);
        const std::size_t d = p.dim();
        Polytope e = segment(zeros(d), unitVector(d, d - 1));
        minkowskiDifference(run, i, p, e, prismOverEmbedded(slab));
    }
}

void counterexampleSymmetry(Runner &run) {
    for (std::size_t i = 0; i < run.instances(); ++i) {
        run.beginInstance();
        Polytope p = bodyOr(run, [&] {
            return i == 0 ? standardSimplex(3) : reeveTetrahedron({static_cast<std::int64_t>(i)});
        });
        checkSymmetry(run, "P=" + describe(p), exactDistribution(p, run.options().cellBudget));
    }
}

} // namespace

const std::vector<IdentityKind> &allIdentities() {
    static const std::vector<IdentityKind> all = [] {
        std::vector<IdentityKind> v;
        for (const auto &e : kTags)
            v.push_back(e.kind);
        return v;
    }();
    return all;
}

std::string tagOf(IdentityKind kind) {
    for (const auto &e : kTags)
        if (e.kind == kind)
            return e.tag;
    throw UnknownIdentity("unknown identity kind");
}

IdentityKind parseIdentity(const std::string &tag) {
    for (const auto &e : kTags)
        if (tag == e.tag)
            return e.kind;
    throw UnknownIdentity("unknown identity tag: " + tag);
}

bool isCounterexample(IdentityKind kind) {
    return kind == IdentityKind::CounterexampleSlab ||
           kind == IdentityKind::CounterexampleMinkowski ||
           kind == IdentityKind::CounterexampleSymmetry;
}

std::string statusName(VerificationStatus status) {
    switch (status) {
    case VerificationStatus::Pass:
        return "pass";
    case VerificationStatus::Fail:
        return "fail";
    case VerificationStatus::ExpectedFailureConfirmed:
        return "expected-failure-confirmed";
    }
    return "fail";
}

IdentityDefaults defaultsFor(IdentityKind kind) {
    switch (kind) {
    case IdentityKind::ScalingSimplex:
        return {10, 200, {1, 2, 3, 4, 5}};
    case IdentityKind::ScalingPolyhedron:
        return {6, 200, {1, 2, 3, 4, 5}};
    case IdentityKind::Corollary3d:
        return {5, 100, {2, 3}};
    case IdentityKind::Corollary3dSymmetric:
        return {1, 0, {1, 2, 3}};
    case IdentityKind::Corollary4dSymmetric:
        return {1, 0, {2}};
    case IdentityKind::ZonotopeConstancy:
        return {10, 100, {}};
    case IdentityKind::SlInvariance:
    case IdentityKind::NegationInvariance:
        return {40, 0, {}};
    case IdentityKind::Minkowski2d:
    case IdentityKind::CentrallySymmetric2dConstancy:
        return {10, 100, {}};
    case IdentityKind::SymmetricDistribution2d:
        return {10, 0, {}};
    case IdentityKind::CounterexampleSlab:
    case IdentityKind::CounterexampleMinkowski:
        return {2, 100, {}};
    case IdentityKind::CounterexampleSymmetry:
        return {2, 0, {}};
    }
    throw UnknownIdentity("unknown identity kind");
}

VerificationReport verify(IdentityKind kind, const VerifyOptions &options) {
    Runner run(kind, options);
    switch (kind) {
    case IdentityKind::ScalingSimplex:
        scaling(run, true);
        break;
    case IdentityKind::ScalingPolyhedron:
        scaling(run, false);
        break;
    case IdentityKind::Corollary3d:
        corollary3d(run);
        break;
    case IdentityKind::Corollary3dSymmetric:
        symmetricScaling(run, 3);
        break;
    case IdentityKind::Corollary4dSymmetric:
        symmetricScaling(run, 4);
        break;
    case IdentityKind::ZonotopeConstancy:
        zonotopeConstancy(run);
        break;
    case IdentityKind::SlInvariance:
        invariance(run, true);
        break;
    case IdentityKind::NegationInvariance:
        invariance(run, false);
        break;
    case IdentityKind::Minkowski2d:
        minkowski2d(run);
        break;
    case IdentityKind::SymmetricDistribution2d:
        symmetricDistribution2d(run);
        break;
    case IdentityKind::CentrallySymmetric2dConstancy:
        symmetricConstancy2d(run);
        break;
    case IdentityKind::CounterexampleSlab:
        counterexampleSlab(run);
        break;
    case IdentityKind::CounterexampleMinkowski:
        counterexampleMinkowski(run);
        break;
    case IdentityKind::CounterexampleSymmetry:
        counterexampleSymmetry(run);
        break;
    }
    return run.finish();
}

VerificationReport verify(IdentityKind kind, std::size_t instances, std::size_t shifts,
                          std::uint64_t seed) {
    VerifyOptions opt;
    opt.instances = instances;
    opt.shifts = shifts;
    opt.seed = seed;
    return verify(kind, opt);
}

Rational reeveLayerMean(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1 || k > n)
        throw OutOfRange("layer index must satisfy 1 <= k <= n");
    const Integer a = n - k + 1, b = n - k;
    return Rational(a * a * a - b * b * b) / Rational(Integer(6 * n) * n);
}

Rational reevePairExpectation(std::int64_t n, std::int64_t k, std::int64_t l) {
    if (n < 1 || k < 1 || l <= k || l > n)
        throw OutOfRange("layer pair must satisfy 1 <= k < l <= n");
    if (2 * l > k + n)
        return 0;
    const Integer c = k - 2 * l + n, c1 = c + 1;
    return Rational(c1 * c1 * c1 - c * c * c) / Rational(Integer(6 * n) * n);
}

Rational reeveClosedForm(std::int64_t n) {
    if (n < 1)
        throw OutOfRange("Reeve parameter must be >= 1");
    const Integer m = n;
    return Rational(m * m * m + 12 * m - 3) / Rational(72 * m);
}

ReeveAudit reeveAudit(std::int64_t n, bool withDistribution, std::size_t cellBudget) {
    ReeveAudit a;
    a.n = n;
    a.varClosedForm = reeveClosedForm(n);

    Rational meanSum = 0, pairSum = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        a.meanTable[k] = reeveLayerMean(n, k);
        meanSum += a.meanTable[k];
        for (std::int64_t l = k + 1; l <= n; ++l) {
            a.pairTable[{k, l}] = reevePairExpectation(n, k, l);
            pairSum += a.pairTable[{k, l}];
        }
    }
    // E I_k^2 = E I_k, so the diagonal contributes the plain layer means.
    a.varLayerOracle = 2 * pairSum + meanSum - meanSum * meanSum;

    Polytope t = reeveTetrahedron({n});
    a.varIntersectionEngine = exactVariance(t).variance;
    if (withDistribution)
        a.varExactDistribution = exactDistribution(t, cellBudget).variance();

    a.oraclesAgree = a.varLayerOracle == a.varIntersectionEngine &&
                     (!a.varExactDistribution || *a.varExactDistribution == a.varLayerOracle);
    a.closedFormAgrees = a.varClosedForm == a.varLayerOracle;
    auto note = [&](const std::string &label, const Rational &v) {
        if (v != a.varClosedForm)
            a.discrepancies.push_back({label, a.varClosedForm, v});
    };
    note("layer-oracle", a.varLayerOracle);
    note("intersection-engine", a.varIntersectionEngine);
    if (a.varExactDistribution)
        note("exact-distribution", *a.varExactDistribution);
    return a;
}

} // namespace lps
