#pragma once

#include "lrn/core.hpp"
#include "lrn/lucas.hpp"
#include "lrn/qfield.hpp"
#include "lrn/quartic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrn::descent {

/// Im((u + v sqrt(-d))^p) = v * sum_j c_j u^(p-1-2j) v^(2j), c_j = binom(p, 2j+1) (-d)^j.
struct ImPartPolynomial {
    unsigned p = 0;
    unsigned long d = 0;
    std::vector<Int> coefficients;

    Int evaluate(const Int& u, const Int& v) const;
    long evaluate_mod(long u, long v, long modulus) const;
};

/// Throws std::invalid_argument unless p is an odd prime.
ImPartPolynomial im_part_polynomial(unsigned p, unsigned long d);

/// Re((u + v sqrt(-d))^p) = sum_j binom(p, 2j) (-d)^j u^(p-2j) v^(2j).
Int re_part(unsigned p, unsigned long d, const Int& u, const Int& v);

enum class Parity { Any, Even, Odd };

/// F(u, v) = sign * 2^e * 11^f * 19^g, F the imaginary-part polynomial.
struct CongruenceQuery {
    ImPartPolynomial poly;
    Parity u_parity = Parity::Any;
    Parity v_parity = Parity::Any;
    std::optional<long> v_value;  // v = +-v_value
    std::vector<int> signs{1, -1};
    unsigned e_min = 0;
    std::optional<unsigned> e_max;
    Parity f_parity = Parity::Any;
    Parity g_parity = Parity::Any;
};

/// One residue class of right-hand sides. For e below the 2-adic valuation t of
/// the modulus, e is exact; otherwise it stands for every e' >= t with
/// e' = e (mod e_period), and e is the least such value allowed by the query.
struct Assignment {
    int sign = 1;
    unsigned e = 0;
    bool e_exact = true;
    unsigned e_period = 1;
    unsigned f_parity = 0;
    unsigned g_parity = 0;

    /// Square-free part sign * 2^(e mod 2) * 11^f * 19^g; two values when the
    /// class does not fix the parity of e.
    std::vector<Int> square_classes() const;
    std::string to_string() const;
    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct SieveResult {
    unsigned modulus = 0;
    std::vector<Assignment> survivors;

    bool contradiction() const { return survivors.empty(); }
    std::vector<int> signs() const;
    /// Possible values of (f + g) mod 2, ascending.
    std::vector<unsigned> fg_parities() const;
    bool e_is_zero() const;
    std::vector<Int> square_classes() const;
    std::vector<std::string> conclusions() const;
};

/// Exhausts residues of (u, v) modulo `modulus` under the query's parity and
/// v constraints (v is S-smooth, so coprime to 5) and keeps the right-hand
/// assignments that are attained. The modulus must satisfy 11^2 = 19^2 = 1.
SieveResult congruence_sieve(const CongruenceQuery& query, unsigned modulus = 40);

/// One admissible shape of (u, v) in a case, with its sieve and curves.
struct CaseBranch {
    std::string shape;
    Parity u_parity = Parity::Any;
    Parity v_parity = Parity::Any;
    bool half = false;  // alpha = (u + v sqrt(-d))/2 with u, v odd
    SieveResult sieve;
    std::vector<quartic::QuarticCurve> curves;
};

struct DescentCase {
    unsigned p = 5;
    unsigned long d = 0;
    unsigned long q = 0;  // the primitive divisor forced into {11, 19}
    std::vector<unsigned long> v_primes;  // primes allowed in v
    std::vector<CaseBranch> branches;

    std::vector<quartic::QuarticCurve> target_curves() const;
};

/// The cases forced by the congruence law for prime p: pairs (d, q) with
/// q in {11, 19}, q does not divide 2d, and q = (-d | q) (mod p), for every
/// descent field with gcd(p, h(d)) = 1. Exactly four cases for p = 5, none for
/// larger primes.
std::vector<DescentCase> build_cases(unsigned p = 5);

/// Recovers (u, v) = (u0, w) from a curve point and lifts alpha^p back to a
/// solution. Throws std::invalid_argument if the point is not on the curve.
std::optional<Solution> back_substitute(const DescentCase& c, const quartic::QuarticCurve& curve,
                                        const quartic::SRationalPoint& pt);

struct LemmaHit {
    Int x;
    unsigned k = 0;
    unsigned l = 0;
    unsigned m = 0;
    friend bool operator==(const LemmaHit&, const LemmaHit&) = default;
};

/// All x >= 1 with x^2 + 2^k 11^l 19^m = N. Throws for N < 2.
std::vector<LemmaHit> lemma_fixed_rhs_search(const Int& N);

struct ClassVerdict {
    Exponents parity{};  // (k, l, m) mod 2
    unsigned long d = 0;
    unsigned long h = 0;
    Rigor rigor = Rigor::Rigorous;
    std::string reason;
};

struct DefectiveRoute {
    qfield::QuadInt alpha;
    Int y;
    Int N;
    std::vector<LemmaHit> hits;
    std::vector<Solution> solutions;
};

struct CurveTrace {
    quartic::QuarticCurve curve;
    std::vector<quartic::SRationalPoint> points;
    std::vector<Solution> solutions;
};

struct CaseTrace {
    DescentCase descent_case;
    std::vector<CurveTrace> curves;
};

struct PrimeCaseReport {
    unsigned p = 0;
    SearchBounds bounds;
    std::vector<Solution> solutions;           // outside the excluded classes
    std::vector<Solution> excluded_solutions;  // oracle scan of the excluded classes
    std::vector<ClassVerdict> classes;         // all 8 parity classes
    std::vector<lucas::DefectivePair> defective;
    std::vector<DefectiveRoute> routes;
    std::vector<CaseTrace> cases;
    std::vector<RigorEntry> ledger;
};

inline constexpr unsigned long kDefectiveScanBound = 20;

/// Throws std::invalid_argument unless p is a prime >= 5.
PrimeCaseReport solve_prime_case(unsigned p, const SearchBounds& bounds);

}  // namespace lrn::descent
