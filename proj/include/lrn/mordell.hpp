#pragma once

#include "lrn/core.hpp"

#include <string>
#include <vector>

namespace lrn::mordell {

/// X^2 = Y^e - D with D = 2^a 11^b 19^c, each exponent below 2e.
struct MordellInstance {
    unsigned e = 3;
    Int D;
    Exponents d_exponents{};

    std::string to_string() const;
};

/// All 216 (e = 3) or 64 (e = 4) instances. Throws unless e is 3 or 4.
std::vector<MordellInstance> instances(unsigned e);

/// X = x0 / w^3, Y = y0 / w^2 for e = 3; X = x0 / w^2, Y = y0 / w for e = 4.
/// X is stored up to sign (x0 >= 0), Y > 0, gcd(y0, w) = 1.
struct MordellPoint {
    Int x0;
    Int y0;
    Int w;

    std::string to_string(unsigned e) const;
    friend bool operator==(const MordellPoint&, const MordellPoint&) = default;
};

bool verify_point(const MordellInstance& inst, const MordellPoint& pt);

/// Points with S-smooth w <= height and 1 <= y0 <= max_y0, sorted by (w, y0).
std::vector<MordellPoint> search_points(const MordellInstance& inst, unsigned long height,
                                        const Int& max_y0);

/// Same, with max_y0 = floor(max_rhs^(1/e)).
std::vector<MordellPoint> search_points(const MordellInstance& inst, const SearchBounds& bounds);

/// The instance and point a tuple (x, y, k, l, m, e) lies on: D and z from
/// 2^k 11^l 19^m = D z^(2e), X = x / z^e, Y = y / z^2 (e = 3) or y / z (e = 4).
struct CurveMembership {
    MordellInstance instance;
    MordellPoint point;
};
CurveMembership membership(const Solution& s);

struct MordellReport {
    unsigned e = 3;
    SearchBounds bounds;
    std::size_t curves = 0;
    std::size_t points = 0;           // distinct (D, point) pairs found
    std::size_t points_x_zero = 0;
    std::size_t points_gcd = 0;       // x0 >= 1 but gcd(x0, y0) > 1
    std::size_t points_outside_caps = 0;
    std::vector<Solution> curve_solutions;
    std::vector<Solution> oracle_solutions;
    std::vector<Solution> solutions;  // union
    std::vector<Solution> curve_only;
    std::vector<Solution> oracle_only;
};

/// Curve search over every instance merged with the oracle under the same bounds.
MordellReport solve_n3_n4(unsigned e, const SearchBounds& bounds);

}  // namespace lrn::mordell
