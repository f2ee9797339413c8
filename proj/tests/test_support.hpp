#pragma once

// Instance generators and brute-force oracles shared by the unit tests. They
// deliberately avoid the library's construction catalog.

#include "lps/polytope.hpp"

#include <random>
#include <vector>

namespace lps::testing {

inline Rational q(long n, long d = 1) { return makeRational(n, d); }

inline RVector vec(std::initializer_list<long> coords) {
    RVector v;
    for (auto c : coords)
        v.emplace_back(c);
    return v;
}

inline Polytope poly(std::size_t dim, std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<RVector> v;
    for (auto p : pts)
        v.push_back(vec(p));
    return Polytope::fromVertices(dim, std::move(v));
}

inline Polytope simplexD(std::size_t d) {
    std::vector<RVector> v{zeros(d)};
    for (std::size_t i = 0; i < d; ++i)
        v.push_back(unitVector(d, i));
    return Polytope::fromVertices(d, std::move(v));
}

inline Polytope reeve(long n) { return poly(3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, n}}); }

// Hull of `count` integer points in [-box, box]^d, redrawn until full-dimensional.
inline Polytope randomLattice(std::mt19937_64& rng, std::size_t d, int count, int box) {
    std::uniform_int_distribution<int> coord(-box, box);
    for (;;) {
        std::vector<RVector> pts;
        for (int i = 0; i < count; ++i) {
            RVector v;
            for (std::size_t j = 0; j < d; ++j)
                v.emplace_back(coord(rng));
            pts.push_back(std::move(v));
        }
        auto p = Polytope::fromVertices(d, std::move(pts));
        if (p.isFullDim())
            return p;
    }
}

// Twice the signed area of a polygon listed in cyclic order.
inline Rational shoelace(const std::vector<RVector>& cyc) {
    Rational s = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& a = cyc[i];
        const auto& b = cyc[(i + 1) % cyc.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s / 2;
}

} // namespace lps::testing
