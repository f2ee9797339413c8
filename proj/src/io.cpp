#include "lps/io.hpp"

#include "lps/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lps::io {

namespace {

Rational rationalFrom(const Json &j) {
    if (j.is_string())
        return parseRational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

std::size_t dimFrom(const Json &j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError("missing integer \"dim\"");
    const long d = j["dim"].get<long>();
    if (d < 1)
        throw InputError("\"dim\" must be positive");
    return static_cast<std::size_t>(d);
}

std::vector<RVector> pointList(const Json &j, const char *key, std::size_t dim, bool integral) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError(std::string("missing array \"") + key + "\"");
    std::vector<RVector> out;
    for (const auto &row : j[key]) {
        if (!row.is_array() || row.size() != dim)
            throw InputError(std::string("every entry of \"") + key + "\" needs " +
                             std::to_string(dim) + " coordinates");
        RVector v;
        for (const auto &x : row) {
            v.push_back(rationalFrom(x));
            if (integral && !isInteger(v.back()))
                throw InputError(std::string("\"") + key + "\" must be integer vectors");
        }
        out.push_back(std::move(v));
    }
    return out;
}

Json frequencyJson(const CountDistribution &d) {
    Json rows = Json::array();
    for (const auto &[m, f] : d.frequencies)
        rows.push_back(
            {{"count", m}, {"frequency", f}, {"probability", toString(d.probability(m))}});
    return rows;
}

} // namespace

Json rationalVector(const RVector &v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(toString(x));
    return a;
}

Polytope polytopeFromJson(const Json &j) {
    const std::size_t dim = dimFrom(j);
    auto pts = pointList(j, "vertices", dim, false);
    if (pts.empty())
        throw InputError("\"vertices\" is empty");
    return Polytope::fromVertices(dim, std::move(pts));
}

Json polytopeToJson(const Polytope &p) {
    Json verts = Json::array();
    for (const auto &v : p.vertices())
        verts.push_back(rationalVector(v));
    return {{"dim", p.dim()}, {"vertices", verts}};
}

ZonotopeSpec zonotopeFromJson(const Json &j) {
    const std::size_t dim = dimFrom(j);
    auto gens = pointList(j, "generators", dim, true);
    if (gens.empty())
        throw InputError("\"generators\" is empty");
    return {dim, std::move(gens)};
}

Json zonotopeToJson(const ZonotopeSpec &z) {
    Json gens = Json::array();
    for (const auto &g : z.generators) {
        Json row = Json::array();
        for (const auto &x : g)
            row.push_back(x.get_num().get_si());
        gens.push_back(row);
    }
    return {{"dim", z.dim}, {"generators", gens}};
}

Json readJsonFile(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

std::string distributionCsv(const CountDistribution &d) {
    std::ostringstream os;
    os << "count,probability\n";
    for (auto m : d.support())
        os << m << "," << toString(d.probability(m)) << "\n";
    return os.str();
}

Json distributionJson(const CountDistribution &d) {
    Json j;
    if (d.kind == DistributionKind::Exact) {
        j["kind"] = "exact";
        Json rows = Json::array();
        for (const auto &[m, p] : d.exact)
            rows.push_back({{"count", m}, {"probability", toString(p)}});
        j["entries"] = rows;
    } else {
        j["kind"] = "empirical";
        j["samples"] = d.sampleCount;
        j["redraws"] = d.redraws;
        j["entries"] = frequencyJson(d);
        if (d.sampleSeed)
            j["sampleSeed"] = {{"generator", d.sampleSeed->generator},
                               {"seed", d.sampleSeed->seed},
                               {"stream", d.sampleSeed->stream}};
    }
    j["mean"] = toString(d.mean());
    j["variance"] = toString(d.variance());
    return j;
}

Json comparisonJson(const ComparisonReport &r) {
    Json j{{"method", r.method}};
    if (r.equal)
        j["equal"] = *r.equal;
    if (r.chi2) {
        // JSON has no infinity; mass outside the reference support is null.
        if (std::isfinite(*r.chi2))
            j["chi2"] = *r.chi2;
        else
            j["chi2"] = nullptr;
        j["pValue"] = *r.pValue;
        j["degreesOfFreedom"] = r.degreesOfFreedom;
    }
    return j;
}

Json momentsJson(const MomentReport &m) {
    Json j{{"mean", toString(m.mean)}, {"variance", toString(m.variance)}};
    if (m.covariance)
        j["covariance"] = toString(*m.covariance);
    return j;
}

Json verificationJson(const VerificationReport &r) {
    Json witnesses = Json::array();
    for (const auto &w : r.witnesses) {
        Json wj{{"instance", w.instance}};
        if (!w.shift.empty())
            wj["shift"] = rationalVector(w.shift);
        wj["lhs"] = w.lhs;
        wj["rhs"] = w.rhs;
        wj["holds"] = w.holds;
        witnesses.push_back(std::move(wj));
    }
    return {{"identity", tagOf(r.identity)},
            {"instances", r.instances},
            {"shiftsPerInstance", r.shiftsPerInstance},
            {"seed", r.seed},
            {"status", statusName(r.status)},
            {"witnesses", witnesses}};
}

Json reeveAuditJson(const ReeveAudit &a) {
    Json means = Json::array();
    for (const auto &[k, v] : a.meanTable)
        means.push_back({{"k", k}, {"value", toString(v)}});
    Json pairs = Json::array();
    for (const auto &[kl, v] : a.pairTable)
        pairs.push_back({{"k", kl.first}, {"l", kl.second}, {"value", toString(v)}});
    Json disc = Json::array();
    for (const auto &d : a.discrepancies)
        disc.push_back({{"against", d.against},
                        {"closedForm", toString(d.closedForm)},
                        {"value", toString(d.value)},
                        {"difference", toString(d.value - d.closedForm)}});
    Json j{{"n", a.n},
           {"varClosedForm", toString(a.varClosedForm)},
           {"varLayerOracle", toString(a.varLayerOracle)},
           {"varIntersectionEngine", toString(a.varIntersectionEngine)}};
    j["varExactDistribution"] =
        a.varExactDistribution ? Json(toString(*a.varExactDistribution)) : Json(nullptr);
    j["oraclesAgree"] = a.oraclesAgree;
    j["closedFormAgrees"] = a.closedFormAgrees;
    j["meanTable"] = means;
    j["pairTable"] = pairs;
    j["discrepancies"] = disc;
    return j;
}

} // namespace lps::io
