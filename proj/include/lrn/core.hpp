#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrn {

using Int = mpz_class;

/// Prime base of the S-smooth part. The descent pipeline always uses
/// (2, 11, 19); the oracle accepts any triple of distinct primes.
using PrimeBase = std::array<unsigned long, 3>;
inline constexpr PrimeBase kDefaultBase{2, 11, 19};

using Exponents = std::array<unsigned, 3>;

/// A tuple (x, y, k, l, m, n) with x^2 + 2^k 11^l 19^m = y^n.
/// Exponents are relative to the base the tuple was produced under.
struct Solution {
    Int x;
    Int y;
    unsigned k = 0;
    unsigned l = 0;
    unsigned m = 0;
    unsigned n = 0;

    Exponents exponents() const { return {k, l, m}; }
    std::string to_string() const;
};

bool operator==(const Solution& a, const Solution& b);
inline bool operator!=(const Solution& a, const Solution& b) { return !(a == b); }
// Lexicographic on (n, y, k, l, m, x).
bool operator<(const Solution& a, const Solution& b);

void sort_unique(std::vector<Solution>& v);

struct SFactorization {
    Exponents exponents{};  // over the prime base
    Int cofactor = 1;       // coprime to every base prime

    Int value(const PrimeBase& base = kDefaultBase) const;
};

struct SearchBounds {
    unsigned max_exponent_k = 40;
    unsigned max_exponent_l = 40;
    unsigned max_exponent_m = 40;
    Int max_rhs{"1000000000000"};
    unsigned long height = 256;
    unsigned job_count = 1;
    PrimeBase base = kDefaultBase;

    Exponents caps() const { return {max_exponent_k, max_exponent_l, max_exponent_m}; }
    // Throws std::invalid_argument when max_rhs, height or job_count is zero.
    void validate() const;
};

/// Job count from LRN_JOBS, else hardware concurrency (at least 1).
unsigned default_job_count();

struct NthRoot {
    Int root;
    bool exact = false;
};

Int pow(const Int& base, unsigned long e);
Int pow(unsigned long base, unsigned long e);
Int gcd(const Int& a, const Int& b);

SFactorization s_factor(const Int& n, const PrimeBase& base = kDefaultBase);

/// floor(n^(1/e)) by binary search on exact integers.
NthRoot integer_nth_root(const Int& n, unsigned long e);

/// Residue filter modulo 64*63*65 followed by an exact square root.
std::optional<Int> is_perfect_square(const Int& n);

/// Largest prime dividing |t|; 1 for t = +-1. Throws on t = 0.
Int largest_prime_factor(const Int& t);

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
};

/// Full factorization of |n| (n != 0): trial division up to 2^16, then
/// probable-prime test and Pollard-Brent rho on what remains.
std::vector<PrimePower> factor(const Int& n);

/// Distinct primes dividing |n|, ascending.
std::vector<Int> prime_divisors(const Int& n);

/// One S-smooth value together with its exponent vector.
struct SmoothValue {
    Int value;
    Exponents exponents{};
};

/// All base[0]^a base[1]^b base[2]^c < limit with exponents within caps,
/// sorted by value.
std::vector<SmoothValue> smooth_values_below(const Int& limit, const Exponents& caps,
                                             const PrimeBase& base = kDefaultBase);

/// All S-smooth integers in [1, limit] whose primes lie in `primes`.
std::vector<Int> smooth_numbers_up_to(const std::vector<unsigned long>& primes,
                                      const Int& limit);

bool is_squarefree(unsigned long n);

/// Legendre symbol (a | q) by Euler's criterion; q an odd prime.
int legendre(const Int& a, const Int& q);

/// How firmly a conclusion is established.
enum class Rigor { Rigorous, Bounded, Excluded };

std::string rigor_name(Rigor r);

struct RigorEntry {
    std::string claim;
    Rigor rigor = Rigor::Rigorous;
    std::string detail;
};

}  // namespace lrn
