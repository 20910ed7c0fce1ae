#pragma once

#include "lrn/core.hpp"

#include <array>
#include <vector>

namespace lrn::decompose {

/// 2^k 11^l 19^m = D * z^e with D e-th-power-free.
struct PowerFreeDecomposition {
    unsigned e = 0;
    Int D;
    Int z;
    Exponents d_exponents{};  // (k mod e, l mod e, m mod e)
    Exponents z_exponents{};  // floors
};

/// The squarefree parts d of 2^k 11^l 19^m over all parity classes.
inline constexpr std::array<unsigned long, 8> kDescentFields{1, 2, 11, 19, 22, 38, 209, 418};

/// e must be 2, 4 or 6.
PowerFreeDecomposition decompose(unsigned k, unsigned l, unsigned m, unsigned e);

/// All e-th-power-free 2^a 11^b 19^c (e = 4 or 6), e^3 of them, ordered by
/// exponent triple.
std::vector<SmoothValue> enumerate_curve_constants(unsigned e);

/// d = 2^(k mod 2) 11^(l mod 2) 19^(m mod 2).
unsigned long d_class(unsigned k, unsigned l, unsigned m);

}  // namespace lrn::decompose
