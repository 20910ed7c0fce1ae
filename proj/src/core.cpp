#include "lrn/core.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace lrn {

namespace {

constexpr unsigned long kTrialDivisionBound = 1UL << 16;

template <unsigned long M>
constexpr std::array<bool, M> square_residues()
{
    std::array<bool, M> table{};
    for (unsigned long i = 0; i < M; ++i)
        table[(i * i) % M] = true;
    return table;
}

constexpr auto kSq64 = square_residues<64>();
constexpr auto kSq63 = square_residues<63>();
constexpr auto kSq65 = square_residues<65>();

Int pollard_brent(const Int& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, q = 1, g = 1, ys, t;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto f = [&](Int& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    f(y);
                    t = x - y;
                    q = q * abs(t);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                f(ys);
                t = x - ys;
                g = gcd(abs(t), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(const Int& n, std::vector<Int>& primes)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(Int(n / d), primes);
}

}  // namespace

std::string Solution::to_string() const
{
    std::ostringstream os;
    os << '(' << x << ", " << y << ", " << k << ", " << l << ", " << m << ", " << n << ')';
    return os.str();
}

bool operator==(const Solution& a, const Solution& b)
{
    return a.n == b.n && a.k == b.k && a.l == b.l && a.m == b.m && a.x == b.x && a.y == b.y;
}

bool operator<(const Solution& a, const Solution& b)
{
    if (a.n != b.n)
        return a.n < b.n;
    if (int c = cmp(a.y, b.y); c != 0)
        return c < 0;
    if (std::tie(a.k, a.l, a.m) != std::tie(b.k, b.l, b.m))
        return std::tie(a.k, a.l, a.m) < std::tie(b.k, b.l, b.m);
    return cmp(a.x, b.x) < 0;
}

void sort_unique(std::vector<Solution>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Int SFactorization::value(const PrimeBase& base) const
{
    Int v = cofactor;
    for (std::size_t i = 0; i < 3; ++i)
        v *= pow(base[i], exponents[i]);
    return v;
}

void SearchBounds::validate() const
{
    if (max_rhs <= 0)
        throw std::invalid_argument("max_rhs must be positive");
    if (height == 0)
        throw std::invalid_argument("height must be positive");
    if (job_count == 0)
        throw std::invalid_argument("job_count must be positive");
}

unsigned default_job_count()
{
    if (const char* env = std::getenv("LRN_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Int pow(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int pow(unsigned long base, unsigned long e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

SFactorization s_factor(const Int& n, const PrimeBase& base)
{
    if (n < 1)
        throw std::invalid_argument("s_factor: argument must be positive");
    SFactorization f;
    f.cofactor = n;
    for (std::size_t i = 0; i < 3; ++i) {
        while (mpz_divisible_ui_p(f.cofactor.get_mpz_t(), base[i]) != 0) {
            mpz_divexact_ui(f.cofactor.get_mpz_t(), f.cofactor.get_mpz_t(), base[i]);
            ++f.exponents[i];
        }
    }
    return f;
}

NthRoot integer_nth_root(const Int& n, unsigned long e)
{
    if (e == 0)
        throw std::invalid_argument("integer_nth_root: exponent must be positive");
    if (n < 0)
        throw std::invalid_argument("integer_nth_root: argument must be non-negative");
    if (n == 0)
        return {Int(0), true};
    if (e == 1)
        return {n, true};

    // 2^(bits-1) <= n < 2^bits brackets the root between powers of two.
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t shift = (bits - 1) / e;
    Int lo = 1, hi = 1;
    lo <<= shift;
    hi <<= shift + 1;  // exclusive
    Int mid, p;
    while (hi - lo > 1) {
        mid = (lo + hi) >> 1;
        mpz_pow_ui(p.get_mpz_t(), mid.get_mpz_t(), e);
        if (p <= n)
            lo = mid;
        else
            hi = mid;
    }
    mpz_pow_ui(p.get_mpz_t(), lo.get_mpz_t(), e);
    return {lo, p == n};
}

std::optional<Int> is_perfect_square(const Int& n)
{
    if (n < 0)
        return std::nullopt;
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 64UL * 63UL * 65UL);
    if (!kSq64[r % 64] || !kSq63[r % 63] || !kSq65[r % 65])
        return std::nullopt;
    auto root = integer_nth_root(n, 2);
    if (!root.exact)
        return std::nullopt;
    return std::move(root.root);
}

std::vector<PrimePower> factor(const Int& n)
{
    if (n == 0)
        throw std::invalid_argument("factor: argument must be non-zero");
    Int rest = abs(n);
    std::vector<Int> primes;
    for (unsigned long p = 2; p <= kTrialDivisionBound && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            primes.emplace_back(p);
        }
    }
    factor_into(rest, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<PrimePower> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().prime == p)
            ++out.back().exponent;
        else
            out.push_back({p, 1});
    }
    return out;
}

std::vector<Int> prime_divisors(const Int& n)
{
    std::vector<Int> out;
    for (auto& pp : factor(n))
        out.push_back(std::move(pp.prime));
    return out;
}

Int largest_prime_factor(const Int& t)
{
    if (t == 0)
        throw std::invalid_argument("largest_prime_factor: argument must be non-zero");
    auto f = factor(t);
    return f.empty() ? Int(1) : f.back().prime;
}

std::vector<SmoothValue> smooth_values_below(const Int& limit, const Exponents& caps,
                                             const PrimeBase& base)
{
    std::vector<SmoothValue> out;
    Int a = 1;
    for (unsigned i = 0; i <= caps[0] && a < limit; ++i, a *= base[0]) {
        Int b = a;
        for (unsigned j = 0; j <= caps[1] && b < limit; ++j, b *= base[1]) {
            Int c = b;
            for (unsigned k = 0; k <= caps[2] && c < limit; ++k, c *= base[2])
                out.push_back({c, {i, j, k}});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SmoothValue& l, const SmoothValue& r) { return l.value < r.value; });
    return out;
}

std::vector<Int> smooth_numbers_up_to(const std::vector<unsigned long>& primes, const Int& limit)
{
    std::vector<Int> out{1};
    for (unsigned long p : primes) {
        if (p < 2)
            continue;
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            Int v = out[i] * p;
            while (v <= limit) {
                out.push_back(v);
                v *= p;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_squarefree(unsigned long n)
{
    if (n == 0)
        return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

int legendre(const Int& a, const Int& q)
{
    Int r = a % q;
    if (r < 0)
        r += q;
    if (r == 0)
        return 0;
    Int e = (q - 1) / 2, out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    return out == 1 ? 1 : -1;
}

std::string rigor_name(Rigor r)
{
    switch (r) {
    case Rigor::Rigorous:
        return "RIGOROUS";
    case Rigor::Bounded:
        return "BOUNDED";
    case Rigor::Excluded:
        return "EXCLUDED";
    }
    return "?";
}

}  // namespace lrn
