#include "lrn/decompose.hpp"

#include <stdexcept>

namespace lrn::decompose {

PowerFreeDecomposition decompose(unsigned k, unsigned l, unsigned m, unsigned e)
{
    if (e != 2 && e != 4 && e != 6)
        throw std::invalid_argument("decompose: e must be 2, 4 or 6");
    PowerFreeDecomposition out;
    out.e = e;
    out.d_exponents = {k % e, l % e, m % e};
    out.z_exponents = {k / e, l / e, m / e};
    out.D = pow(2UL, k % e) * pow(11UL, l % e) * pow(19UL, m % e);
    out.z = pow(2UL, k / e) * pow(11UL, l / e) * pow(19UL, m / e);
    return out;
}

std::vector<SmoothValue> enumerate_curve_constants(unsigned e)
{
    if (e != 4 && e != 6)
        throw std::invalid_argument("enumerate_curve_constants: e must be 4 or 6");
    std::vector<SmoothValue> out;
    out.reserve(e * e * e);
    for (unsigned a = 0; a < e; ++a)
        for (unsigned b = 0; b < e; ++b)
            for (unsigned c = 0; c < e; ++c)
                out.push_back({pow(2UL, a) * pow(11UL, b) * pow(19UL, c), {a, b, c}});
    return out;
}

unsigned long d_class(unsigned k, unsigned l, unsigned m)
{
    return (k % 2 ? 2UL : 1UL) * (l % 2 ? 11UL : 1UL) * (m % 2 ? 19UL : 1UL);
}

}  // namespace lrn::decompose
