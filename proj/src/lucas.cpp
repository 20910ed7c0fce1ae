#include "lrn/lucas.hpp"

#include <future>
#include <stdexcept>

namespace lrn::lucas {

LucasContext LucasContext::from_pq(Int P, Int Q, unsigned long d)
{
    Int disc = P * P - 4 * Q;
    if (disc >= 0)
        throw std::invalid_argument("LucasContext: P^2 - 4Q must be negative");
    return {std::move(P), std::move(Q), std::move(disc), d};
}

LucasContext LucasContext::from_alpha(const qfield::QuadInt& alpha)
{
    return from_pq(qfield::quad_trace(alpha), qfield::quad_norm(alpha), alpha.d());
}

bool LucasContext::is_lucas_pair() const
{
    if (P == 0 || gcd(P, Q) != 1)
        return false;
    // alpha/conj(alpha) is a root of unity iff P^2 is 0, Q, 2Q, 3Q or 4Q.
    const Int p2 = P * P;
    return p2 != Q && p2 != 2 * Q && p2 != 3 * Q;
}

std::vector<Int> lucas_terms(const LucasContext& ctx, unsigned n)
{
    std::vector<Int> t;
    t.reserve(n + 1);
    t.emplace_back(0);
    if (n >= 1)
        t.emplace_back(1);
    for (unsigned i = 2; i <= n; ++i)
        t.push_back(ctx.P * t[i - 1] - ctx.Q * t[i - 2]);
    return t;
}

Int lucas_term(const LucasContext& ctx, unsigned n)
{
    return lucas_terms(ctx, n).back();
}

Int primitive_part(const LucasContext& ctx, unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("primitive_part: n must be at least 2");
    const auto t = lucas_terms(ctx, n);
    Int rest = abs(t[n]);
    if (rest == 0)
        return 1;
    Int earlier = abs(ctx.disc);
    for (unsigned i = 1; i < n; ++i)
        earlier *= abs(t[i]);
    for (Int g = gcd(rest, earlier); g != 1; g = gcd(rest, earlier))
        rest /= g;
    return rest;
}

std::vector<Int> primitive_divisors(const LucasContext& ctx, unsigned n)
{
    const Int rest = primitive_part(ctx, n);
    if (rest == 1)
        return {};
    return prime_divisors(rest);
}

bool is_defective(const LucasContext& ctx, unsigned n)
{
    return primitive_part(ctx, n) == 1;
}

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

std::vector<DefectivePair> scan_defective_pairs(std::span<const unsigned long> fields, unsigned p,
                                                unsigned long bound)
{
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("scan_defective_pairs: p must be a prime >= 5");

    auto scan_field = [p, bound](unsigned long d) {
        std::vector<DefectivePair> out;
        const bool halves = d % 4 == 3;
        for (unsigned long U = 0; U <= bound; ++U) {
            for (unsigned long V = 1; V <= bound; ++V) {
                if ((U + V) % 2 != 0 || (!halves && U % 2 != 0))
                    continue;
                auto alpha = qfield::QuadInt::from_half(d, U, V);
                auto ctx = LucasContext::from_alpha(alpha);
                if (ctx.is_lucas_pair() && is_defective(ctx, p))
                    out.push_back({std::move(alpha), std::move(ctx)});
            }
        }
        return out;
    };

    std::vector<std::future<std::vector<DefectivePair>>> jobs;
    for (unsigned long d : fields)
        jobs.push_back(std::async(std::launch::async, scan_field, d));
    std::vector<DefectivePair> out;
    for (auto& j : jobs)
        for (auto& hit : j.get())
            out.push_back(std::move(hit));
    return out;
}

int primitive_divisor_sign(const Int& q, unsigned long d)
{
    if (q < 3 || mpz_even_p(q.get_mpz_t()) || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("primitive_divisor_sign: q must be an odd prime");
    if (Int(d) % q == 0)
        throw std::invalid_argument("primitive_divisor_sign: q divides d");
    return legendre(-Int(d), q);
}

}  // namespace lrn::lucas
