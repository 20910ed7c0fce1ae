#pragma once

#include "lrn/core.hpp"

#include <string>
#include <vector>

namespace lrn::quartic {

/// A V^2 = c4 U^4 + c2 U^2 + c0, searched for points with U = u0/w,
/// V = v0/w^2 and w composed of the primes in `denominators` (empty: w = 1).
struct QuarticCurve {
    Int A;
    Int c4;
    Int c2;
    Int c0;
    std::vector<unsigned long> denominators;

    std::string to_string() const;
    friend bool operator==(const QuarticCurve&, const QuarticCurve&) = default;
};

struct SRationalPoint {
    Int u0;
    Int w;   // > 0, gcd(u0, w) = 1
    Int v0;

    std::string to_string() const;
    friend bool operator==(const SRationalPoint&, const SRationalPoint&) = default;
};

/// Ordered by (w, u0, v0).
bool operator<(const SRationalPoint& a, const SRationalPoint& b);

/// Exact membership: w > 0 built from the curve's denominators, gcd(u0, w) = 1
/// and A v0^2 = c4 u0^4 + c2 u0^2 w^2 + c0 w^4.
bool verify_point(const QuarticCurve& curve, const SRationalPoint& pt);

/// Every point with w <= height and |u0| <= height * w. Sorted, closed under
/// u0 -> -u0 and v0 -> -v0. Throws std::invalid_argument for A = 0 or height = 0.
std::vector<SRationalPoint> find_points(const QuarticCurve& curve, unsigned long height,
                                        unsigned jobs = 1);

}  // namespace lrn::quartic
