#include "lps/lattice.hpp"

#include "lps/errors.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace lps {

namespace {

const Integer& twoTo64() {
    static const Integer v = [] {
        Integer r;
        mpz_ui_pow_ui(r.get_mpz_t(), 2, 64);
        return r;
    }();
    return v;
}

Integer fromU64(std::uint64_t x) {
    Integer r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
    return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Constraint {
    RVector normal;
    Rational rhs; // offset + normal . shift
};

void scanLine(const std::vector<Constraint>& cons, const std::vector<std::int64_t>& prefix,
              bool allBoundary, CountResult& out) {
    const std::size_t last = prefix.size();
    std::optional<Rational> lo, hi;
    std::vector<Rational> tightAt;
    bool lineTight = allBoundary;
    Rational r;
    for (const auto& c : cons) {
        r = c.rhs;
        for (std::size_t i = 0; i < last; ++i)
            if (c.normal[i] != 0)
                r -= c.normal[i] * prefix[i];
        const Rational& a = c.normal[last];
        if (a == 0) {
            int s = sgn(r);
            if (s < 0)
                return;
            lineTight |= s == 0;
            continue;
        }
        Rational bound = r / a;
        if (a > 0) {
            if (!hi || bound < *hi)
                hi = bound;
        } else {
            if (!lo || bound > *lo)
                lo = bound;
        }
        if (isInteger(bound))
            tightAt.push_back(std::move(bound));
    }
    if (!lo || !hi)
        throw Error("lattice count of an unbounded region");
    const std::int64_t zlo = toInt64(ceilOf(*lo));
    const std::int64_t zhi = toInt64(floorOf(*hi));
    if (zhi < zlo)
        return;
    out.count += zhi - zlo + 1;

    auto hit = [&](std::int64_t z) {
        RVector pt;
        for (auto v : prefix)
            pt.emplace_back(static_cast<long>(v));
        pt.emplace_back(static_cast<long>(z));
        out.boundaryHits.push_back(std::move(pt));
    };
    if (lineTight) {
        for (std::int64_t z = zlo; z <= zhi; ++z)
            hit(z);
        return;
    }
    std::set<std::int64_t> tight;
    for (const auto& t : tightAt) {
        std::int64_t z = toInt64(t.get_num());
        if (z >= zlo && z <= zhi)
            tight.insert(z);
    }
    for (auto z : tight)
        hit(z);
}

} // namespace

Shift shiftFromRaw(const std::vector<std::uint64_t>& raw, SeedInfo info) {
    Shift s;
    s.seedInfo = std::move(info);
    s.coords.reserve(raw.size());
    for (auto k : raw)
        s.coords.push_back(makeRational(fromU64(k), twoTo64()));
    return s;
}

Shift makeShift(RVector coords) {
    for (const auto& c : coords) {
        if (c < 0 || c >= 1)
            throw InputError("shift coordinate outside [0,1): " + toString(c));
        if (twoTo64() % c.get_den() != 0)
            throw InputError("shift coordinate is not dyadic with denominator <= 2^64: " +
                             toString(c));
    }
    Shift s;
    s.coords = std::move(coords);
    return s;
}

ShiftStream::ShiftStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {
    info_.seed = seed;
    info_.stream = stream;
}

Shift ShiftStream::next(std::size_t dim) {
    std::vector<std::uint64_t> raw(dim);
    for (auto& r : raw)
        r = engine_();
    return shiftFromRaw(raw, info_);
}

CountResult countPoints(const Polytope& p, const RVector& offset) {
    const std::size_t d = p.dim();
    if (offset.size() != d)
        throw InputError("offset dimension mismatch");
    std::vector<Constraint> cons;
    auto addCon = [&](const HalfSpace& h) {
        cons.push_back({h.normal, h.offset + dot(h.normal, offset)});
    };
    for (const auto& f : p.facets())
        addCon(f);
    for (const auto& e : p.equalities()) {
        addCon(e);
        addCon(e.flipped());
    }
    // Bodies of dimension 0 have no facets; pin each coordinate directly.
    if (p.affineDim() == 0) {
        cons.clear();
        for (std::size_t i = 0; i < d; ++i) {
            addCon({unitVector(d, i), p.vertices().front()[i]});
            addCon(HalfSpace{unitVector(d, i), p.vertices().front()[i]}.flipped());
        }
    }

    auto [lo, hi] = boundingBox(p);
    std::vector<std::int64_t> zlo(d), zhi(d);
    for (std::size_t i = 0; i < d; ++i) {
        zlo[i] = toInt64(ceilOf(lo[i] + offset[i]));
        zhi[i] = toInt64(floorOf(hi[i] + offset[i]));
    }
    CountResult out;
    const bool allBoundary = !p.isFullDim();
    if (d == 0)
        return out;
    std::vector<std::int64_t> prefix(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        if (zhi[i] < zlo[i])
            return out;
        prefix[i] = zlo[i];
    }
    for (;;) {
        scanLine(cons, prefix, allBoundary, out);
        std::size_t i = 0;
        for (; i + 1 < d; ++i) {
            if (++prefix[i] <= zhi[i])
                break;
            prefix[i] = zlo[i];
        }
        if (i + 1 >= d)
            break;
    }
    return out;
}

CountResult countAt(const Polytope& p, const Shift& s) { return countPoints(p, s.coords); }

CountResult countAt(const PolytopeUnion& u, const Shift& s) {
    CountResult total;
    for (const auto& part : u.parts) {
        auto r = countAt(part, s);
        total.count += r.count;
        for (auto& h : r.boundaryHits)
            total.boundaryHits.push_back(std::move(h));
    }
    return total;
}

bool isGeneric(const Polytope& p, const Shift& s) { return countAt(p, s).boundaryHits.empty(); }

bool isGeneric(const PolytopeUnion& u, const Shift& s) {
    return std::all_of(u.parts.begin(), u.parts.end(),
                       [&](const Polytope& p) { return isGeneric(p, s); });
}

Shift drawGenericShift(const std::vector<const Polytope*>& bodies, ShiftStream& stream,
                       int maxAttempts) {
    if (bodies.empty())
        throw InputError("no bodies to draw a shift for");
    const std::size_t d = bodies.front()->dim();
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        Shift s = stream.next(d);
        if (std::all_of(bodies.begin(), bodies.end(),
                        [&](const Polytope* p) { return isGeneric(*p, s); }))
            return s;
    }
    throw DegenerateInput("no generic shift found after " + std::to_string(maxAttempts) +
                          " attempts");
}

std::int64_t genericCount(const Polytope& p, ShiftStream& stream, int trials) {
    std::optional<std::int64_t> value;
    for (int t = 0; t < std::max(trials, 1); ++t) {
        Shift s = drawGenericShift({&p}, stream);
        auto c = countAt(p, s).count;
        if (value && *value != c)
            throw NotConstant("generic counts differ: " + std::to_string(*value) + " vs " +
                              std::to_string(c));
        value = c;
    }
    return *value;
}

Integer parallelepipedIndex(const std::vector<RVector>& generators) {
    const std::size_t d = generators.size();
    for (const auto& g : generators)
        if (g.size() != d)
            throw InputError("parallelepiped needs d generators in R^d");
    Rational det = determinant(RMatrix::fromColumns(generators));
    if (det == 0)
        throw DegenerateInput("parallelepiped generators are linearly dependent");
    Rational a = abs(det);
    if (!isInteger(a))
        throw InputError("parallelepiped generators must be integer vectors");
    return a.get_num();
}

Integer zonotopeConstant(const ZonotopeSpec& z) {
    const std::size_t d = z.dim;
    for (const auto& g : z.generators) {
        if (g.size() != d)
            throw InputError("generator dimension mismatch");
        for (const auto& x : g)
            if (!isInteger(x))
                throw InputError("zonotope generators must be integer vectors");
    }
    if (rank(z.generators) < d)
        throw DegenerateInput("zonotope generators do not span the ambient space");
    Integer total = 0;
    const std::size_t n = z.generators.size();
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i)
        idx[i] = i;
    for (;;) {
        std::vector<RVector> cols;
        for (auto i : idx)
            cols.push_back(z.generators[i]);
        total += Rational(abs(determinant(RMatrix::fromColumns(cols)))).get_num();
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1)
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return total;
}

Polytope zonotopePolytope(const ZonotopeSpec& z) {
    Polytope acc = Polytope::fromVertices(z.dim, {zeros(z.dim)});
    for (const auto& g : z.generators)
        acc = minkowskiSum(acc, segment(zeros(z.dim), g));
    return acc;
}

} // namespace lps
