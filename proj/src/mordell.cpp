#include "lrn/mordell.hpp"

#include "lrn/decompose.hpp"
#include "lrn/oracle.hpp"
#include "wide.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace lrn::mordell {

namespace {

using detail::u128;

void require_e(unsigned e)
{
    if (e != 3 && e != 4)
        throw std::invalid_argument("mordell: e must be 3 or 4");
}

unsigned w_power(unsigned e)
{
    return e == 3 ? 6 : 4;
}

std::vector<unsigned long> primes_of(const Int& w)
{
    std::vector<unsigned long> out;
    for (unsigned long p : kDefaultBase)
        if (mpz_divisible_ui_p(w.get_mpz_t(), p))
            out.push_back(p);
    return out;
}

bool coprime_to(unsigned long y, const std::vector<unsigned long>& ps)
{
    for (unsigned long p : ps)
        if (y % p == 0)
            return false;
    return true;
}

void scan_fast(const MordellInstance& inst, const Int& w, const Int& dw, unsigned long ymax,
               std::vector<MordellPoint>& out)
{
    const auto ps = primes_of(w);
    const u128 target = static_cast<u128>(detail::to_i128(dw));
    unsigned long y0 = integer_nth_root(dw, inst.e).root.get_ui();
    for (; y0 <= ymax; ++y0) {
        if (!coprime_to(y0, ps))
            continue;
        u128 ye = static_cast<u128>(y0) * y0 * y0;
        if (inst.e == 4)
            ye *= y0;
        if (ye < target)
            continue;
        const u128 r = ye - target;
        if (!detail::maybe_square(r))
            continue;
        if (auto x = is_perfect_square(detail::to_int(r)))
            out.push_back({*x, Int(y0), w});
    }
}

void scan_exact(const MordellInstance& inst, const Int& w, const Int& dw, const Int& ymax,
                std::vector<MordellPoint>& out)
{
    for (Int y0 = integer_nth_root(dw, inst.e).root; y0 <= ymax; ++y0) {
        if (y0 == 0 || gcd(y0, w) != 1)
            continue;
        const Int r = pow(y0, inst.e) - dw;
        if (r < 0)
            continue;
        if (auto x = is_perfect_square(r))
            out.push_back({*x, y0, w});
    }
}

}  // namespace

std::string MordellInstance::to_string() const
{
    std::ostringstream os;
    os << "X^2 = Y^" << e << " - " << D;
    return os.str();
}

std::vector<MordellInstance> instances(unsigned e)
{
    require_e(e);
    std::vector<MordellInstance> out;
    for (auto& c : decompose::enumerate_curve_constants(w_power(e)))
        out.push_back({e, c.value, c.exponents});
    return out;
}

std::string MordellPoint::to_string(unsigned e) const
{
    std::ostringstream os;
    os << "(X, Y) = (" << x0;
    if (w != 1)
        os << '/' << pow(w, e == 3 ? 3 : 2);
    os << ", " << y0;
    if (w != 1)
        os << '/' << pow(w, e == 3 ? 2 : 1);
    os << ')';
    return os.str();
}

bool verify_point(const MordellInstance& inst, const MordellPoint& pt)
{
    if (pt.w < 1 || pt.y0 < 1 || gcd(pt.y0, pt.w) != 1)
        return false;
    if (s_factor(pt.w).cofactor != 1)
        return false;
    return pt.x0 * pt.x0 == pow(pt.y0, inst.e) - inst.D * pow(pt.w, w_power(inst.e));
}

std::vector<MordellPoint> search_points(const MordellInstance& inst, unsigned long height,
                                        const Int& max_y0)
{
    require_e(inst.e);
    if (height == 0)
        throw std::invalid_argument("search_points: height must be positive");
    std::vector<MordellPoint> out;
    const Int ye_max = pow(max_y0, inst.e);
    const bool fast = detail::fits_bits(ye_max, 120) && max_y0.fits_ulong_p();
    for (const Int& w : smooth_numbers_up_to({kDefaultBase.begin(), kDefaultBase.end()},
                                             Int(height))) {
        const Int dw = inst.D * pow(w, w_power(inst.e));
        if (dw > ye_max)
            break;
        if (fast)
            scan_fast(inst, w, dw, max_y0.get_ui(), out);
        else
            scan_exact(inst, w, dw, max_y0, out);
    }
    return out;
}

std::vector<MordellPoint> search_points(const MordellInstance& inst, const SearchBounds& bounds)
{
    return search_points(inst, bounds.height, integer_nth_root(bounds.max_rhs, inst.e).root);
}

CurveMembership membership(const Solution& s)
{
    require_e(s.n);
    const auto dec = decompose::decompose(s.k, s.l, s.m, w_power(s.n));
    CurveMembership out{{s.n, dec.D, dec.d_exponents}, {s.x, s.y, dec.z}};
    return out;
}

MordellReport solve_n3_n4(unsigned e, const SearchBounds& bounds)
{
    require_e(e);
    bounds.validate();
    MordellReport rep;
    rep.e = e;
    rep.bounds = bounds;

    auto oracle_job = std::async(std::launch::async,
                                 [e, &bounds] { return oracle::enumerate_solutions(e, bounds); });

    const auto insts = instances(e);
    rep.curves = insts.size();
    const Int max_y0 = integer_nth_root(bounds.max_rhs, e).root;
    const unsigned jobs = std::max(1u, bounds.job_count);

    struct Tally {
        std::size_t points = 0, x_zero = 0, gcd = 0, outside = 0;
        std::vector<Solution> found;
    };
    auto shard = [&](unsigned first) {
        Tally t;
        for (std::size_t i = first; i < insts.size(); i += jobs) {
            const auto& inst = insts[i];
            for (const auto& pt : search_points(inst, bounds.height, max_y0)) {
                ++t.points;
                if (pt.x0 == 0) {
                    ++t.x_zero;
                    continue;
                }
                if (gcd(pt.x0, pt.y0) != 1) {
                    ++t.gcd;
                    continue;
                }
                const auto wf = s_factor(pt.w);
                const unsigned wp = w_power(e);
                Solution s{pt.x0, pt.y0, inst.d_exponents[0] + wp * wf.exponents[0],
                           inst.d_exponents[1] + wp * wf.exponents[1],
                           inst.d_exponents[2] + wp * wf.exponents[2], e};
                if (s.k > bounds.max_exponent_k || s.l > bounds.max_exponent_l ||
                    s.m > bounds.max_exponent_m) {
                    ++t.outside;
                    continue;
                }
                t.found.push_back(std::move(s));
            }
        }
        return t;
    };

    std::vector<std::future<Tally>> futs;
    for (unsigned j = 0; j < jobs && j < insts.size(); ++j)
        futs.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, shard, j));
    for (auto& f : futs) {
        auto t = f.get();
        rep.points += t.points;
        rep.points_x_zero += t.x_zero;
        rep.points_gcd += t.gcd;
        rep.points_outside_caps += t.outside;
        rep.curve_solutions.insert(rep.curve_solutions.end(), t.found.begin(), t.found.end());
    }
    sort_unique(rep.curve_solutions);
    for (const auto& s : rep.curve_solutions)
        if (!oracle::verify_solution(s))
            throw std::logic_error("curve search produced an invalid tuple " + s.to_string());

    rep.oracle_solutions = oracle_job.get().found;
    std::set_union(rep.curve_solutions.begin(), rep.curve_solutions.end(),
                   rep.oracle_solutions.begin(), rep.oracle_solutions.end(),
                   std::back_inserter(rep.solutions));
    std::set_difference(rep.curve_solutions.begin(), rep.curve_solutions.end(),
                        rep.oracle_solutions.begin(), rep.oracle_solutions.end(),
                        std::back_inserter(rep.curve_only));
    std::set_difference(rep.oracle_solutions.begin(), rep.oracle_solutions.end(),
                        rep.curve_solutions.begin(), rep.curve_solutions.end(),
                        std::back_inserter(rep.oracle_only));
    return rep;
}

}  // namespace lrn::mordell
