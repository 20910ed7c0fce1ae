#include "lrn/descent.hpp"

#include "lrn/decompose.hpp"
#include "lrn/oracle.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lrn::descent {

namespace {

Int binomial(unsigned n, unsigned k)
{
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long mod(long a, long m)
{
    a %= m;
    return a < 0 ? a + m : a;
}

long pow_mod(long b, unsigned long e, long m)
{
    long r = 1 % m;
    b = mod(b, m);
    for (; e; e >>= 1, b = b * b % m)
        if (e & 1)
            r = r * b % m;
    return r;
}

bool parity_ok(long r, Parity p)
{
    if (p == Parity::Any)
        return true;
    return (r % 2 == 0) == (p == Parity::Even);
}

std::string parity_word(Parity p)
{
    return p == Parity::Even ? "even" : p == Parity::Odd ? "odd" : "any";
}

bool within(const Solution& s, const SearchBounds& b)
{
    return s.k <= b.max_exponent_k && s.l <= b.max_exponent_l && s.m <= b.max_exponent_m &&
           pow(s.y, s.n) <= b.max_rhs;
}

void require_prime_at_least_5(unsigned p, const char* what)
{
    if (p < 5 || !lucas::is_prime(p))
        throw std::invalid_argument(std::string(what) + ": p must be a prime >= 5");
}

std::string join_primes(const std::vector<unsigned long>& ps)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ps.size(); ++i)
        os << (i ? "," : "") << ps[i];
    os << '}';
    return os.str();
}

}  // namespace

Int ImPartPolynomial::evaluate(const Int& u, const Int& v) const
{
    Int sum = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j)
        sum += coefficients[j] * pow(u, p - 1 - 2 * j) * pow(v, 2 * j);
    return sum;
}

long ImPartPolynomial::evaluate_mod(long u, long v, long m) const
{
    long sum = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        Int c = coefficients[j] % m;
        const long term = mod(c.get_si(), m) * pow_mod(u, p - 1 - 2 * j, m) % m *
                          pow_mod(v, 2 * j, m) % m;
        sum = (sum + term) % m;
    }
    return sum;
}

ImPartPolynomial im_part_polynomial(unsigned p, unsigned long d)
{
    if (p < 3 || !lucas::is_prime(p))
        throw std::invalid_argument("im_part_polynomial: p must be an odd prime");
    ImPartPolynomial out{p, d, {}};
    for (unsigned j = 0; 2 * j + 1 <= p; ++j) {
        Int c = binomial(p, 2 * j + 1) * pow(Int(d), j);
        out.coefficients.push_back(j % 2 ? Int(-c) : c);
    }
    return out;
}

Int re_part(unsigned p, unsigned long d, const Int& u, const Int& v)
{
    Int sum = 0;
    for (unsigned j = 0; 2 * j <= p; ++j) {
        Int term = binomial(p, 2 * j) * pow(Int(d), j) * pow(u, p - 2 * j) * pow(v, 2 * j);
        sum += j % 2 ? Int(-term) : term;
    }
    return sum;
}

std::vector<Int> Assignment::square_classes() const
{
    std::vector<unsigned> e_parities;
    if (e_exact || e_period % 2 == 0)
        e_parities = {e % 2};
    else
        e_parities = {0, 1};
    std::vector<Int> out;
    for (unsigned ep : e_parities)
        out.push_back(sign * pow(2UL, ep) * pow(11UL, f_parity) * pow(19UL, g_parity));
    return out;
}

std::string Assignment::to_string() const
{
    std::ostringstream os;
    os << "sign " << (sign > 0 ? '+' : '-') << ", e ";
    if (e_exact)
        os << "= " << e;
    else
        os << ">= " << e << " with e = " << e % e_period << " mod " << e_period;
    os << ", f = " << f_parity << " mod 2, g = " << g_parity << " mod 2";
    return os.str();
}

std::vector<int> SieveResult::signs() const
{
    std::set<int> s;
    for (const auto& a : survivors)
        s.insert(a.sign);
    return {s.begin(), s.end()};
}

std::vector<unsigned> SieveResult::fg_parities() const
{
    std::set<unsigned> s;
    for (const auto& a : survivors)
        s.insert((a.f_parity + a.g_parity) % 2);
    return {s.begin(), s.end()};
}

bool SieveResult::e_is_zero() const
{
    return std::all_of(survivors.begin(), survivors.end(),
                       [](const Assignment& a) { return a.e_exact && a.e == 0; });
}

std::vector<Int> SieveResult::square_classes() const
{
    std::vector<Int> out;
    for (const auto& a : survivors)
        for (auto& c : a.square_classes())
            out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> SieveResult::conclusions() const
{
    if (survivors.empty())
        return {"no right-hand side survives modulo " + std::to_string(modulus) +
                " (contradiction)"};
    std::vector<std::string> out;
    const auto s = signs();
    out.push_back(s.size() == 2 ? "sign +-" : s[0] > 0 ? "sign +" : "sign -");
    if (e_is_zero())
        out.push_back("e = 0");
    const auto fg = fg_parities();
    if (fg.size() == 1)
        out.push_back(fg[0] ? "f + g odd" : "f + g even");
    std::ostringstream os;
    os << "square classes {";
    const auto cls = square_classes();
    for (std::size_t i = 0; i < cls.size(); ++i)
        os << (i ? ", " : "") << cls[i];
    os << '}';
    out.push_back(os.str());
    return out;
}

SieveResult congruence_sieve(const CongruenceQuery& q, unsigned modulus)
{
    if (modulus < 2)
        throw std::invalid_argument("congruence_sieve: modulus must be at least 2");
    const long m = modulus;
    if (121 % m != 1 % m || 361 % m != 1 % m)
        throw std::invalid_argument("congruence_sieve: 11 and 19 must square to 1 mod modulus");
    unsigned t = 0;
    long odd = m;
    while (odd % 2 == 0) {
        odd /= 2;
        ++t;
    }
    unsigned period = 1;
    for (long x = 2 % odd; odd > 1 && x != 1; x = x * 2 % odd)
        ++period;

    std::vector<long> foreign;  // primes of the modulus that cannot divide v
    for (long r = m, f = 2; r > 1; ++f) {
        if (r % f != 0)
            continue;
        if (f != 2 && f != 11 && f != 19)
            foreign.push_back(f);
        while (r % f == 0)
            r /= f;
    }
    const bool even_modulus = m % 2 == 0;

    std::vector<long> vs;
    for (long r = 0; r < m; ++r) {
        if (q.v_value && mod(*q.v_value, m) != r && mod(-*q.v_value, m) != r)
            continue;
        if (even_modulus && !parity_ok(r, q.v_parity))
            continue;
        if (std::any_of(foreign.begin(), foreign.end(), [r](long f) { return r % f == 0; }))
            continue;
        vs.push_back(r);
    }
    std::vector<char> attained(m, 0);
    for (long u = 0; u < m; ++u) {
        if (even_modulus && !parity_ok(u, q.u_parity))
            continue;
        for (long v : vs)
            attained[q.poly.evaluate_mod(u, v, m)] = 1;
    }

    SieveResult out;
    out.modulus = modulus;
    const unsigned e_hi = q.e_max ? *q.e_max : ~0u;
    for (int sign : q.signs) {
        for (unsigned rep = 0; rep < t + period; ++rep) {
            Assignment a;
            a.sign = sign;
            a.e_period = period;
            if (rep < t) {
                if (rep < q.e_min || rep > e_hi)
                    continue;
                a.e = rep;
            } else {
                unsigned e = std::max(t, q.e_min);
                while (e % period != rep % period)
                    ++e;
                if (e > e_hi)
                    continue;
                a.e = e;
                a.e_exact = q.e_max && e + period > *q.e_max;
            }
            for (unsigned f = 0; f < 2; ++f) {
                if (!parity_ok(f, q.f_parity))
                    continue;
                for (unsigned g = 0; g < 2; ++g) {
                    if (!parity_ok(g, q.g_parity))
                        continue;
                    const long rhs = mod(sign * pow_mod(2, a.e, m) * pow_mod(11, f, m) % m *
                                             pow_mod(19, g, m),
                                         m);
                    if (!attained[rhs])
                        continue;
                    a.f_parity = f;
                    a.g_parity = g;
                    out.survivors.push_back(a);
                }
            }
        }
    }
    return out;
}

std::vector<quartic::QuarticCurve> DescentCase::target_curves() const
{
    std::vector<quartic::QuarticCurve> out;
    for (const auto& b : branches)
        for (const auto& c : b.curves)
            if (std::find(out.begin(), out.end(), c) == out.end())
                out.push_back(c);
    return out;
}

std::vector<DescentCase> build_cases(unsigned p)
{
    require_prime_at_least_5(p, "build_cases");
    std::vector<DescentCase> cases;
    for (unsigned long d : decompose::kDescentFields) {
        const auto h = qfield::class_number(d).h;
        if (std::gcd<unsigned long>(p, h) != 1)
            continue;
        for (unsigned long q : {kDefaultBase[1], kDefaultBase[2]}) {
            if ((2 * d) % q == 0)
                continue;
            const int s = lucas::primitive_divisor_sign(Int(q), d);
            if ((static_cast<long>(q) - s) % static_cast<long>(p) != 0)
                continue;
            if (p != 5)
                throw std::logic_error("build_cases: only the quartic reduction (p = 5) is implemented");

            DescentCase c;
            c.p = p;
            c.d = d;
            c.q = q;
            for (unsigned long r : kDefaultBase)
                if (r != q)
                    c.v_primes.push_back(r);
            std::vector<unsigned long> odd_primes(c.v_primes.begin() + 1, c.v_primes.end());

            struct Shape {
                Parity u, v;
                bool half;
            };
            std::vector<Shape> shapes;
            if (d % 2) {
                shapes = {{Parity::Odd, Parity::Even, false}, {Parity::Even, Parity::Odd, false}};
                if (d % 4 == 3)
                    shapes.push_back({Parity::Odd, Parity::Odd, true});
            } else {
                shapes = {{Parity::Odd, Parity::Even, false}, {Parity::Odd, Parity::Odd, false}};
            }

            const auto poly = im_part_polynomial(p, d);
            for (const auto& sh : shapes) {
                CaseBranch b;
                b.u_parity = sh.u;
                b.v_parity = sh.v;
                b.half = sh.half;
                const auto& den = sh.v == Parity::Even ? c.v_primes : odd_primes;
                std::ostringstream os;
                os << (sh.half ? "alpha = (u + v*sqrt(-" : "alpha = u + v*sqrt(-") << d
                   << (sh.half ? "))/2" : ")") << ", u " << parity_word(sh.u) << ", v "
                   << parity_word(sh.v) << " supported on " << join_primes(den);
                b.shape = os.str();

                CongruenceQuery query;
                query.poly = poly;
                query.u_parity = sh.u;
                query.v_parity = sh.v;
                query.e_min = sh.half ? 5 : 0;
                b.sieve = congruence_sieve(query, 40);
                for (const Int& A : b.sieve.square_classes())
                    b.curves.push_back({A, poly.coefficients[0], poly.coefficients[1],
                                        poly.coefficients[2], den});
                c.branches.push_back(std::move(b));
            }
            cases.push_back(std::move(c));
        }
    }
    std::sort(cases.begin(), cases.end(), [](const DescentCase& a, const DescentCase& b) {
        return a.q != b.q ? a.q > b.q : a.d < b.d;
    });
    return cases;
}

std::optional<Solution> back_substitute(const DescentCase& c, const quartic::QuarticCurve& curve,
                                        const quartic::SRationalPoint& pt)
{
    if (!quartic::verify_point(curve, pt))
        throw std::invalid_argument("back_substitute: point is not on the curve");
    const Int& u = pt.u0;
    const Int& v = pt.w;
    const bool both_odd = mpz_odd_p(u.get_mpz_t()) && mpz_odd_p(v.get_mpz_t());
    const auto alpha = both_odd && c.d % 4 == 3 ? qfield::QuadInt::from_half(c.d, u, v)
                                                : qfield::QuadInt::from_integral(c.d, u, v);
    const auto power = qfield::quad_pow(alpha, c.p);
    if (mpz_odd_p(power.U().get_mpz_t()) || mpz_odd_p(power.V().get_mpz_t()))
        return std::nullopt;
    const Int x = abs(power.U()) / 2;
    const Int z = abs(power.V()) / 2;
    if (x == 0 || z == 0)
        return std::nullopt;
    const auto f = s_factor(Int(c.d) * z * z);
    if (f.cofactor != 1)
        return std::nullopt;
    Solution s{x, qfield::quad_norm(alpha), f.exponents[0], f.exponents[1], f.exponents[2], c.p};
    if (!oracle::verify_solution(s))
        return std::nullopt;
    return s;
}

std::vector<LemmaHit> lemma_fixed_rhs_search(const Int& N)
{
    if (N < 2)
        throw std::invalid_argument("lemma_fixed_rhs_search: N must be at least 2");
    const auto bits = static_cast<unsigned>(mpz_sizeinbase(N.get_mpz_t(), 2));
    std::vector<LemmaHit> out;
    for (const auto& c : smooth_values_below(N, {bits, bits, bits}))
        if (auto r = is_perfect_square(N - c.value); r && *r >= 1)
            out.push_back({*r, c.exponents[0], c.exponents[1], c.exponents[2]});
    std::sort(out.begin(), out.end(), [](const LemmaHit& a, const LemmaHit& b) { return a.x < b.x; });
    return out;
}

PrimeCaseReport solve_prime_case(unsigned p, const SearchBounds& bounds)
{
    require_prime_at_least_5(p, "solve_prime_case");
    bounds.validate();
    PrimeCaseReport rep;
    rep.p = p;
    rep.bounds = bounds;

    std::vector<unsigned long> excluded, open;
    for (unsigned kp = 0; kp < 2; ++kp)
        for (unsigned lp = 0; lp < 2; ++lp)
            for (unsigned mp = 0; mp < 2; ++mp) {
                ClassVerdict v;
                v.parity = {kp, lp, mp};
                v.d = decompose::d_class(kp, lp, mp);
                v.h = qfield::class_number(v.d).h;
                std::ostringstream os;
                if (std::gcd<unsigned long>(p, v.h) != 1) {
                    v.rigor = Rigor::Excluded;
                    os << "h(" << v.d << ") = " << v.h << " is divisible by p = " << p
                       << "; x + z*sqrt(-" << v.d << ") need not be a p-th power";
                    excluded.push_back(v.d);
                } else {
                    os << "gcd(p, h(" << v.d << ")) = 1 and " << qfield::unit_group_order(v.d)
                       << " units: x + z*sqrt(-" << v.d << ") = alpha^p";
                    open.push_back(v.d);
                }
                v.reason = os.str();
                rep.classes.push_back(v);
            }

    std::sort(open.begin(), open.end());
    auto is_excluded = [&](const Solution& s) {
        const auto d = decompose::d_class(s.k, s.l, s.m);
        return std::find(excluded.begin(), excluded.end(), d) != excluded.end();
    };

    std::future<oracle::OracleReport> excluded_scan;
    if (!excluded.empty())
        excluded_scan = std::async(std::launch::async,
                                   [p, bounds] { return oracle::enumerate_solutions(p, bounds); });

    std::vector<Solution> found;

    rep.defective = lucas::scan_defective_pairs(open, p, kDefectiveScanBound);
    {
        std::ostringstream os;
        os << rep.defective.size() << " defective Lucas pair(s) at n = " << p
           << " with coordinates <= " << kDefectiveScanBound << " over d in " << join_primes(open);
        rep.ledger.push_back({"defective pairs", Rigor::Rigorous, os.str()});
    }
    for (const auto& dp : rep.defective) {
        DefectiveRoute route{dp.alpha, qfield::quad_norm(dp.alpha), 0, {}, {}};
        route.N = pow(route.y, p);
        route.hits = lemma_fixed_rhs_search(route.N);
        for (const auto& h : route.hits) {
            Solution s{h.x, route.y, h.k, h.l, h.m, p};
            if (gcd(s.x, s.y) == 1)
                route.solutions.push_back(s);
        }
        std::ostringstream os;
        os << "alpha = " << dp.alpha.to_string() << ", y = " << route.y << ": x^2 + C = "
           << route.N << " has " << route.hits.size() << " solution(s), "
           << route.solutions.size() << " coprime";
        rep.ledger.push_back({"fixed right-hand side", Rigor::Rigorous, os.str()});
        found.insert(found.end(), route.solutions.begin(), route.solutions.end());
        rep.routes.push_back(std::move(route));
    }

    const auto cases = build_cases(p);
    if (cases.empty()) {
        std::ostringstream os;
        os << "no q in {11, 19} satisfies q = (-d | q) (mod " << p
           << ") for d in " << join_primes(open)
           << ", so alpha^p has no admissible primitive divisor";
        rep.ledger.push_back({"primitive divisors", Rigor::Rigorous, os.str()});
    }

    auto run_case = [&bounds](const DescentCase& c) {
        CaseTrace trace{c, {}};
        for (const auto& curve : c.target_curves()) {
            CurveTrace ct{curve, quartic::find_points(curve, bounds.height, 1), {}};
            for (const auto& pt : ct.points)
                if (auto s = back_substitute(c, curve, pt))
                    ct.solutions.push_back(*s);
            sort_unique(ct.solutions);
            trace.curves.push_back(std::move(ct));
        }
        return trace;
    };
    if (bounds.job_count > 1) {
        std::vector<std::future<CaseTrace>> futs;
        for (const auto& c : cases)
            futs.push_back(std::async(std::launch::async, run_case, std::cref(c)));
        for (auto& f : futs)
            rep.cases.push_back(f.get());
    } else {
        for (const auto& c : cases)
            rep.cases.push_back(run_case(c));
    }
    for (const auto& t : rep.cases) {
        std::size_t points = 0;
        for (const auto& ct : t.curves) {
            points += ct.points.size();
            found.insert(found.end(), ct.solutions.begin(), ct.solutions.end());
        }
        std::ostringstream os;
        os << "d = " << t.descent_case.d << ", q = " << t.descent_case.q << ": "
           << t.curves.size() << " quartic curve(s) searched to height " << bounds.height
           << ", " << points << " point(s)";
        rep.ledger.push_back({"quartic search", Rigor::Bounded, os.str()});
        for (auto& v : rep.classes)
            if (v.d == t.descent_case.d && v.rigor == Rigor::Rigorous) {
                v.rigor = Rigor::Bounded;
                v.reason += "; completeness rests on quartic searches to height " +
                            std::to_string(bounds.height);
            }
    }

    for (auto& s : found)
        if (within(s, bounds) && !is_excluded(s))
            rep.solutions.push_back(s);
    sort_unique(rep.solutions);
    for (const auto& s : rep.solutions)
        if (!oracle::verify_solution(s))
            throw std::logic_error("solve_prime_case produced an invalid tuple " + s.to_string());

    if (excluded_scan.valid()) {
        for (auto& s : excluded_scan.get().found)
            if (is_excluded(s))
                rep.excluded_solutions.push_back(s);
        for (const auto& v : rep.classes) {
            if (v.rigor != Rigor::Excluded)
                continue;
            std::size_t n = std::count_if(rep.excluded_solutions.begin(),
                                          rep.excluded_solutions.end(), [&](const Solution& s) {
                                              return decompose::d_class(s.k, s.l, s.m) == v.d;
                                          });
            std::ostringstream os;
            os << "class d = " << v.d << " not covered by the descent; oracle scan with y^" << p
               << " <= " << bounds.max_rhs << " finds " << n << " solution(s)";
            rep.ledger.push_back({"excluded class", Rigor::Excluded, os.str()});
        }
    }
    for (const auto& v : rep.classes)
        rep.ledger.push_back({"parity class d = " + std::to_string(v.d), v.rigor, v.reason});
    return rep;
}

}  // namespace lrn::descent
