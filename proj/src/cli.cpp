#include "lps/cli.hpp"

#include "lps/constructions.hpp"
#include "lps/errors.hpp"
#include "lps/io.hpp"
#include "lps/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace lps::cli {

namespace {

using io::Json;

const char* const kConstructions[] = {"simplex:d", "slab:d:k", "reeve:n", "central-slab:d",
                                      "zonotope:<path>", "file:<path>"};

std::vector<std::string> splitSpec(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = spec.find(':', start);
        parts.push_back(spec.substr(start, pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

long positiveInt(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used == text.size() && v >= 1)
            return v;
    } catch (const std::exception&) {
    }
    throw InputError(what + " must be a positive integer, got \"" + text + "\"");
}

Json bodyJson(const Body& body) {
    if (auto p = std::get_if<Polytope>(&body))
        return io::polytopeToJson(*p);
    if (auto z = std::get_if<ZonotopeSpec>(&body))
        return io::zonotopeToJson(*z);
    Json parts = Json::array();
    for (const auto& p : std::get<PolytopeUnion>(body).parts)
        parts.push_back(io::polytopeToJson(p));
    return {{"parts", parts}};
}

PolytopeUnion asUnion(const Body& body) {
    if (auto p = std::get_if<Polytope>(&body))
        return {{*p}, ""};
    if (auto z = std::get_if<ZonotopeSpec>(&body))
        return {{zonotopePolytope(*z)}, ""};
    return std::get<PolytopeUnion>(body);
}

Polytope asPolytope(const Body& body) {
    auto u = asUnion(body);
    if (u.parts.size() != 1)
        throw InputError("this command needs a single polytope");
    return u.parts.front();
}

Body requireInput(const RunConfig& cfg) {
    if (cfg.input.empty())
        throw InputError("--input is required");
    return parsePolytopeInput(cfg.input);
}

Json header(const RunConfig& cfg) {
    Json j;
    if (!cfg.input.empty())
        j["input"] = cfg.input;
    j["seed"] = cfg.seed;
    return j;
}

struct Output {
    std::string text;
    int status = 0;
};

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Format formatOf(const RunConfig& cfg, Format fallback) { return cfg.format.value_or(fallback); }

Output runVolume(const RunConfig& cfg) {
    auto u = asUnion(requireInput(cfg));
    Json j = header(cfg);
    j["dim"] = u.dim();
    j["volume"] = toString(volume(u));
    return {render(j)};
}

Output runCount(const RunConfig& cfg) {
    Body body = requireInput(cfg);
    auto u = asUnion(body);
    ShiftStream stream(cfg.seed);
    Json rows = Json::array();
    const std::size_t n = cfg.shifts.value_or(1);
    for (std::size_t i = 0; i < n; ++i) {
        Shift s = stream.next(u.dim());
        auto r = countAt(u, s);
        rows.push_back({{"shift", io::rationalVector(s.coords)},
                        {"count", r.count},
                        {"generic", r.boundaryHits.empty()}});
    }
    Json j = header(cfg);
    j["dim"] = u.dim();
    if (auto z = std::get_if<ZonotopeSpec>(&body))
        j["zonotopeConstant"] = zonotopeConstant(*z).get_str();
    j["counts"] = rows;
    return {render(j)};
}

Output runMoments(const RunConfig& cfg) {
    Body body = requireInput(cfg);
    MomentReport m;
    Json j;
    if (cfg.method == Method::Mc) {
        auto d = mcDistribution(asUnion(body), cfg.samples, cfg.seed);
        m = {d.mean(), d.variance(), std::nullopt};
        j = io::momentsJson(m);
        j["method"] = "mc";
        j["samples"] = d.sampleCount;
    } else {
        auto u = asUnion(body);
        if (u.parts.size() == 1) {
            m = exactVariance(u.parts.front());
        } else {
            auto d = exactDistribution(u, cfg.cellBudget);
            m = {d.mean(), d.variance(), std::nullopt};
        }
        j = io::momentsJson(m);
        j["method"] = "exact";
    }
    j.update(header(cfg));
    return {render(j)};
}

Output runDistribution(const RunConfig& cfg, std::ostream& err) {
    auto u = asUnion(requireInput(cfg));
    CountDistribution d = cfg.method == Method::Mc ? mcDistribution(u, cfg.samples, cfg.seed)
                                                   : exactDistribution(u, cfg.cellBudget);
    if (d.redraws > 0)
        err << "redrew " << d.redraws << " samples with boundary hits\n";
    if (formatOf(cfg, Format::Csv) == Format::Csv) {
        // The CSV body is fixed to `count,probability`; the seed goes to stderr.
        err << "seed " << cfg.seed << "\n";
        return {io::distributionCsv(d)};
    }
    Json j = header(cfg);
    j["method"] = cfg.method == Method::Mc ? "mc" : "exact";
    j["distribution"] = io::distributionJson(d);
    return {render(j)};
}

Output runVerify(const RunConfig& cfg) {
    if (!cfg.identity)
        throw InputError("--identity is required");
    IdentityKind kind = parseIdentity(*cfg.identity);
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.instances = cfg.instances;
    opt.shifts = cfg.shifts;
    opt.n = cfg.n;
    opt.cellBudget = cfg.cellBudget;
    if (!cfg.input.empty()) {
        Body body = parsePolytopeInput(cfg.input);
        if (auto z = std::get_if<ZonotopeSpec>(&body))
            opt.zonotope = *z;
        else
            opt.body = asPolytope(body);
    }
    auto report = verify(kind, opt);
    Json j = io::verificationJson(report);
    if (!cfg.input.empty())
        j["input"] = cfg.input;
    return {render(j), report.status == VerificationStatus::Fail ? 1 : 0};
}

Output runReeveAudit(const RunConfig& cfg) {
    const std::int64_t n = cfg.n.value_or(1);
    if (n < 1)
        throw OutOfRange("--n must be >= 1");
    // The cell decomposition of T_n is only run at desk scale.
    auto audit = reeveAudit(n, n <= 4, cfg.cellBudget);
    Json j = io::reeveAuditJson(audit);
    j["seed"] = cfg.seed;
    return {render(j), audit.oraclesAgree ? 0 : 1};
}

Output runCatalog(const RunConfig& cfg) {
    if (cfg.dump) {
        Json j = bodyJson(requireInput(cfg));
        return {render(j)};
    }
    Json names = Json::array();
    for (const char* c : kConstructions)
        names.push_back(c);
    Json tags = Json::array();
    for (auto k : allIdentities())
        tags.push_back(tagOf(k));
    Json j = header(cfg);
    j["constructions"] = names;
    j["identities"] = tags;
    return {render(j)};
}

Output dispatch(const RunConfig& cfg, std::ostream& err) {
    switch (cfg.command) {
    case Command::Volume:
        return runVolume(cfg);
    case Command::Count:
        return runCount(cfg);
    case Command::Moments:
        return runMoments(cfg);
    case Command::Distribution:
        return runDistribution(cfg, err);
    case Command::Verify:
        return runVerify(cfg);
    case Command::ReeveAudit:
        return runReeveAudit(cfg);
    case Command::Catalog:
        return runCatalog(cfg);
    }
    throw InputError("unknown command");
}

std::string errorJson(const std::string& message) {
    return render(Json{{"error", message}});
}

} // namespace

Body parsePolytopeInput(const std::string& spec) {
    auto parts = splitSpec(spec);
    const std::string& kind = parts.front();
    auto rest = [&] { return spec.substr(kind.size() + 1); };
    auto arity = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw InputError("malformed input spec \"" + spec + "\"");
    };
    if (kind == "simplex") {
        arity(1);
        return standardSimplex(positiveInt(parts[1], "simplex dimension"));
    }
    if (kind == "slab") {
        arity(2);
        const long d = positiveInt(parts[1], "slab dimension");
        const long k = positiveInt(parts[2], "slab index");
        if (k > d)
            throw InputError("slab index must be at most the dimension");
        return slabPieces(d)[k - 1];
    }
    if (kind == "reeve") {
        arity(1);
        return reeveTetrahedron({positiveInt(parts[1], "Reeve parameter")});
    }
    if (kind == "central-slab") {
        arity(1);
        return centralSlab(positiveInt(parts[1], "central slab dimension"));
    }
    if (kind == "zonotope" && parts.size() >= 2)
        return io::zonotopeFromJson(io::readJsonFile(rest()));
    if (kind == "file" && parts.size() >= 2) {
        Json j = io::readJsonFile(rest());
        if (j.is_object() && j.contains("parts")) {
            PolytopeUnion u;
            for (const auto& p : j["parts"])
                u.parts.push_back(io::polytopeFromJson(p));
            if (u.parts.empty())
                throw InputError("\"parts\" is empty");
            for (const auto& p : u.parts)
                if (p.dim() != u.dim())
                    throw InputError("union parts differ in dimension");
            return u;
        }
        return io::polytopeFromJson(j);
    }
    throw InputError("unknown input spec \"" + spec + "\"");
}

int runCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Output result;
    try {
        result = dispatch(cfg, err);
    } catch (const InputError& e) {
        out << errorJson(e.what());
        return 2;
    } catch (const std::exception& e) {
        out << errorJson(e.what());
        return 1;
    }
    if (cfg.outputPath) {
        std::ofstream file(*cfg.outputPath, std::ios::binary);
        if (!file) {
            out << errorJson("cannot write " + *cfg.outputPath);
            return 2;
        }
        file << result.text;
    } else {
        out << result.text;
    }
    return result.status;
}

int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice point counts of randomly shifted polytopes"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig cfg;
    std::string method = "exact";
    std::string format;
    std::string out_path;
    std::int64_t n = 0;
    std::size_t shifts = 0, instances = 0;
    std::string identity;

    app.add_option("--input", cfg.input, "simplex:d | slab:d:k | reeve:n | central-slab:d | "
                                         "zonotope:<path> | file:<path>");
    app.add_option("--seed", cfg.seed, "64-bit seed (default 0)");
    app.add_option("--samples", cfg.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    app.add_option("--method", method, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    app.add_option("--identity", identity, "identity tag for verify");
    auto* nOpt = app.add_option("--n", n, "dilation factor or Reeve parameter");
    auto* shiftsOpt = app.add_option("--shifts", shifts, "shifts per instance");
    auto* instOpt = app.add_option("--instances", instances, "instances for verify");
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write the report to this file");
    app.add_option("--cell-budget", cfg.cellBudget, "cell cap for exact distributions")
        ->check(CLI::PositiveNumber);

    struct Sub {
        const char* name;
        Command cmd;
        const char* help;
    };
    const Sub commands[] = {
        {"volume", Command::Volume, "exact volume of the input body"},
        {"count", Command::Count, "lattice point counts at seeded generic shifts"},
        {"moments", Command::Moments, "mean and variance of the shifted count"},
        {"distribution", Command::Distribution, "law of the shifted count"},
        {"verify", Command::Verify, "check an identity tag on generated or given bodies"},
        {"reeve-audit", Command::ReeveAudit, "variance of the Reeve tetrahedron by three methods"},
        {"catalog", Command::Catalog, "list constructions and identity tags"},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& c : commands)
        subs.emplace_back(app.add_subcommand(c.name, c.help), c.cmd);
    subs.back().first->add_flag("--dump", cfg.dump, "print the --input body as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        out << errorJson(e.what());
        return 2;
    }
    for (const auto& [sub, cmd] : subs)
        if (sub->parsed())
            cfg.command = cmd;
    cfg.method = method == "mc" ? Method::Mc : Method::Exact;
    if (!format.empty())
        cfg.format = format == "csv" ? Format::Csv : Format::Json;
    if (!out_path.empty())
        cfg.outputPath = out_path;
    if (!identity.empty())
        cfg.identity = identity;
    if (nOpt->count())
        cfg.n = n;
    if (shiftsOpt->count())
        cfg.shifts = shifts;
    if (instOpt->count())
        cfg.instances = instances;
    return runCommand(cfg, out, err);
}

} // namespace lps::cli
