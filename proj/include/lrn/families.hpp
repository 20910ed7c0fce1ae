#pragma once

#include "lrn/core.hpp"

#include <vector>

namespace lrn::families {

enum class N2Case {
    XEven,    // k = 0, l = m (mod 2)
    XOdd,     // k = 0, l != m (mod 2)
    BothOdd,  // k >= 3, (y - x)/2 * (y + x)/2 = 2^(k-2) 11^l 19^m
};

struct N2CaseSelector {
    N2Case kind = N2Case::XEven;
    unsigned k1 = 0;  // always 0 unless BothOdd
    unsigned l1 = 0;
    unsigned m1 = 0;
};

struct N2Entry {
    Solution solution;
    N2CaseSelector selector;
};

/// (x, y) = (t, t^2 + 2^k 11^l 19^m). Throws for t = 0.
Solution family_n1(const Int& t, unsigned k, unsigned l, unsigned m);

/// Every coprime positive solution of x^2 + 2^k 11^l 19^m = y^2, with the
/// divisor split that produced it. Empty whenever k is 1 or 2.
std::vector<N2Entry> enumerate_n2_cases(unsigned k, unsigned l, unsigned m);
std::vector<Solution> enumerate_n2(unsigned k, unsigned l, unsigned m);

/// x^2 + C = 1 has no solution with x >= 1; kept as a documented case.
constexpr bool n0_has_no_solution(unsigned, unsigned, unsigned) { return true; }

/// All n = 2 solutions with y^2 <= bounds.max_rhs and exponents within caps.
std::vector<Solution> solve_n2(const SearchBounds& bounds);

/// Instances of the n = 1 family with y <= limit and exponents within caps.
std::vector<Solution> list_n1(const SearchBounds& bounds, const Int& limit);

}  // namespace lrn::families
