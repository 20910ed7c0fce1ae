#include "lrn/quartic.hpp"

#include "wide.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lrn::quartic {

namespace {

using detail::i128;
using detail::maybe_square;
using detail::to_i128;
using detail::to_int;

bool smooth_over(Int w, const std::vector<unsigned long>& primes)
{
    if (w <= 0)
        return false;
    for (unsigned long p : primes)
        if (p >= 2)
            while (mpz_divisible_ui_p(w.get_mpz_t(), p))
                w /= p;
    return w == 1;
}

void emit(std::vector<SRationalPoint>& out, const Int& u0, const Int& w, const Int& v0)
{
    for (int su : {1, -1}) {
        if (su < 0 && u0 == 0)
            continue;
        for (int sv : {1, -1}) {
            if (sv < 0 && v0 == 0)
                continue;
            out.push_back({su * u0, w, sv * v0});
        }
    }
}

std::vector<SRationalPoint> scan_w_fast(const QuarticCurve& c, unsigned long w,
                                        unsigned long height)
{
    std::vector<SRationalPoint> out;
    const i128 A = to_i128(c.A), c4 = to_i128(c.c4), c2 = to_i128(c.c2), c0 = to_i128(c.c0);
    const i128 w2 = static_cast<i128>(w) * w;
    const i128 c2w2 = c2 * w2, c0w4 = c0 * w2 * w2;
    const unsigned long umax = height * w;
    for (unsigned long u = 0; u <= umax; ++u) {
        if (std::gcd(u, w) != 1)
            continue;
        const i128 u2 = static_cast<i128>(u) * u;
        const i128 f = (c4 * u2 + c2w2) * u2 + c0w4;
        if (f % A != 0)
            continue;
        const i128 q = f / A;
        if (q < 0 || !maybe_square(static_cast<detail::u128>(q)))
            continue;
        if (auto r = is_perfect_square(to_int(static_cast<detail::u128>(q))))
            emit(out, Int(u), Int(w), *r);
    }
    return out;
}

std::vector<SRationalPoint> scan_w_exact(const QuarticCurve& c, const Int& w, unsigned long height)
{
    std::vector<SRationalPoint> out;
    const Int w2 = w * w;
    const Int c2w2 = c.c2 * w2, c0w4 = c.c0 * w2 * w2;
    const Int umax = Int(height) * w;
    Int u2, f, q;
    for (Int u = 0; u <= umax; ++u) {
        if (gcd(u, w) != 1)
            continue;
        u2 = u * u;
        f = (c.c4 * u2 + c2w2) * u2 + c0w4;
        if (!mpz_divisible_p(f.get_mpz_t(), c.A.get_mpz_t()))
            continue;
        mpz_divexact(q.get_mpz_t(), f.get_mpz_t(), c.A.get_mpz_t());
        if (q < 0)
            continue;
        if (auto r = is_perfect_square(q))
            emit(out, u, w, *r);
    }
    return out;
}

}  // namespace

std::string QuarticCurve::to_string() const
{
    std::ostringstream os;
    os << A << "*V^2 = " << c4 << "*U^4 + " << c2 << "*U^2 + " << c0 << " over {";
    if (denominators.empty())
        os << '1';
    for (std::size_t i = 0; i < denominators.size(); ++i)
        os << (i ? "," : "") << denominators[i];
    os << '}';
    return os.str();
}

std::string SRationalPoint::to_string() const
{
    std::ostringstream os;
    os << "(U, V) = (" << u0;
    if (w != 1)
        os << '/' << w;
    os << ", " << v0;
    if (w != 1)
        os << '/' << w * w;
    os << ')';
    return os.str();
}

bool operator<(const SRationalPoint& a, const SRationalPoint& b)
{
    if (a.w != b.w)
        return a.w < b.w;
    if (a.u0 != b.u0)
        return a.u0 < b.u0;
    return a.v0 < b.v0;
}

bool verify_point(const QuarticCurve& c, const SRationalPoint& pt)
{
    if (!smooth_over(pt.w, c.denominators) || gcd(pt.u0, pt.w) != 1)
        return false;
    const Int u2 = pt.u0 * pt.u0, w2 = pt.w * pt.w;
    return c.A * pt.v0 * pt.v0 == c.c4 * u2 * u2 + c.c2 * u2 * w2 + c.c0 * w2 * w2;
}

std::vector<SRationalPoint> find_points(const QuarticCurve& curve, unsigned long height,
                                        unsigned jobs)
{
    if (curve.A == 0)
        throw std::invalid_argument("find_points: A must be nonzero");
    if (height == 0)
        throw std::invalid_argument("find_points: height must be positive");
    if (jobs == 0)
        jobs = 1;

    const auto ws = smooth_numbers_up_to(curve.denominators, Int(height));
    const Int m = Int(height) * Int(height);
    const Int worst = (abs(curve.c4) + abs(curve.c2) + abs(curve.c0)) * m * m * m * m;
    const bool fast = mpz_sizeinbase(worst.get_mpz_t(), 2) < 120 &&
                      mpz_sizeinbase(curve.A.get_mpz_t(), 2) < 120 &&
                      height <= (1UL << 31);

    auto shard = [&](unsigned first) {
        std::vector<SRationalPoint> out;
        for (std::size_t i = first; i < ws.size(); i += jobs) {
            auto part = fast ? scan_w_fast(curve, ws[i].get_ui(), height)
                             : scan_w_exact(curve, ws[i], height);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    };

    std::vector<SRationalPoint> points;
    if (jobs == 1 || ws.size() < 2) {
        points = shard(0);
    } else {
        std::vector<std::future<std::vector<SRationalPoint>>> futs;
        for (unsigned j = 0; j < jobs && j < ws.size(); ++j)
            futs.push_back(std::async(std::launch::async, shard, j));
        for (auto& f : futs) {
            auto part = f.get();
            points.insert(points.end(), part.begin(), part.end());
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace lrn::quartic
