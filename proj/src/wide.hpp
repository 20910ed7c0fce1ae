#pragma once

#include "lrn/core.hpp"

#include <bitset>

namespace lrn::detail {

using i128 = __int128;
using u128 = unsigned __int128;

template <unsigned M>
std::bitset<M> square_residues()
{
    std::bitset<M> s;
    for (unsigned i = 0; i < M; ++i)
        s.set(i * i % M);
    return s;
}

inline bool maybe_square(u128 q)
{
    static const std::bitset<64> sq64 = square_residues<64>();
    static const std::bitset<63> sq63 = square_residues<63>();
    static const std::bitset<65> sq65 = square_residues<65>();
    return sq64[static_cast<unsigned>(q % 64)] && sq63[static_cast<unsigned>(q % 63)] &&
           sq65[static_cast<unsigned>(q % 65)];
}

inline Int to_int(u128 m)
{
    const unsigned long words[2] = {static_cast<unsigned long>(m),
                                    static_cast<unsigned long>(m >> 64)};
    Int out;
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(unsigned long), 0, 0, words);
    return out;
}

inline Int to_int(i128 v)
{
    return v < 0 ? Int(-to_int(-static_cast<u128>(v))) : to_int(static_cast<u128>(v));
}

inline i128 to_i128(const Int& v)
{
    unsigned long words[2] = {0, 0};
    Int m = abs(v);
    mpz_export(words, nullptr, -1, sizeof(unsigned long), 0, 0, m.get_mpz_t());
    i128 out = (static_cast<i128>(words[1]) << 64) | words[0];
    return v < 0 ? -out : out;
}

inline bool fits_bits(const Int& v, std::size_t bits)
{
    return mpz_sizeinbase(v.get_mpz_t(), 2) < bits;
}

}  // namespace lrn::detail
