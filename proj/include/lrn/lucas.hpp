#pragma once

#include "lrn/core.hpp"
#include "lrn/qfield.hpp"

#include <span>
#include <vector>

namespace lrn::lucas {

/// The pair (alpha, conj(alpha)) through its trace P and norm Q.
struct LucasContext {
    Int P;
    Int Q;
    Int disc;  // P^2 - 4Q = (alpha - conj(alpha))^2, negative
    unsigned long d = 0;

    /// Throws std::invalid_argument unless P^2 - 4Q < 0.
    static LucasContext from_pq(Int P, Int Q, unsigned long d = 0);
    static LucasContext from_alpha(const qfield::QuadInt& alpha);

    /// gcd(P, Q) = 1 and alpha / conj(alpha) is not a root of unity.
    bool is_lucas_pair() const;
};

/// L_0 .. L_n by L_i = P L_(i-1) - Q L_(i-2).
std::vector<Int> lucas_terms(const LucasContext& ctx, unsigned n);
Int lucas_term(const LucasContext& ctx, unsigned n);

/// Largest divisor of |L_n| coprime to (alpha - conj(alpha))^2 L_1 ... L_(n-1).
/// Exact, no factoring. Throws for n < 2.
Int primitive_part(const LucasContext& ctx, unsigned n);

/// Primes dividing L_n but not (alpha - conj(alpha))^2 L_1 ... L_(n-1), ascending.
std::vector<Int> primitive_divisors(const LucasContext& ctx, unsigned n);

bool is_defective(const LucasContext& ctx, unsigned n);

struct DefectivePair {
    qfield::QuadInt alpha;
    LucasContext ctx;
};

/// Every alpha = (U + V sqrt(-d))/2 with 0 <= U <= bound, 0 < V <= bound, d in
/// `fields`, forming a Lucas pair whose L_p has no primitive divisor.
/// Normalized up to sign and conjugation by U >= 0, V > 0.
/// Throws unless p is a prime >= 5.
std::vector<DefectivePair> scan_defective_pairs(std::span<const unsigned long> fields, unsigned p,
                                                unsigned long bound);

/// (-d | q) by Euler's criterion: the sign s with q = s (mod p) for a primitive
/// divisor q of L_p. Throws when q is not an odd prime or q | d.
int primitive_divisor_sign(const Int& q, unsigned long d);

bool is_prime(unsigned long n);

}  // namespace lrn::lucas
