#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/decompose.hpp"

#include <algorithm>
#include <random>

using lrn::Int;
using lrn::Exponents;
using lrn::pow;
using lrn::decompose::d_class;
using lrn::decompose::enumerate_curve_constants;
using lrn::decompose::kDescentFields;
constexpr auto decompose = lrn::decompose::decompose;

TEST_CASE("decompose examples")
{
    auto a = decompose(7, 2, 1, 6);
    CHECK(a.D == 2 * 121 * 19);
    CHECK(a.z == 2);
    CHECK(a.d_exponents == Exponents{1, 2, 1});
    CHECK(a.z_exponents == Exponents{1, 0, 0});
    auto b = decompose(0, 0, 0, 6);
    CHECK(b.D == 1);
    CHECK(b.z == 1);
    auto c = decompose(3, 2, 0, 2);
    CHECK(c.D == 2);
    CHECK(c.z == 22);
    CHECK_THROWS(decompose(1, 1, 1, 3));
}

TEST_CASE("reconstruction")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<unsigned> ex(0, 40);
    for (int i = 0; i < 10000; ++i) {
        const unsigned k = ex(rng), l = ex(rng), m = ex(rng);
        for (unsigned e : {2u, 4u, 6u}) {
            const auto r = decompose(k, l, m, e);
            CHECK(r.D * pow(r.z, e) == pow(2ul, k) * pow(11ul, l) * pow(19ul, m));
            for (int j = 0; j < 3; ++j)
                CHECK(r.d_exponents[j] < e);
        }
        CHECK(d_class(k, l, m) == decompose(k, l, m, 2).D);
    }
}

TEST_CASE("d_class")
{
    CHECK(d_class(1, 2, 0) == 2);
    CHECK(d_class(0, 0, 1) == 19);
    CHECK(d_class(2, 1, 1) == 209);
    for (unsigned k = 0; k < 2; ++k)
        for (unsigned l = 0; l < 2; ++l)
            for (unsigned m = 0; m < 2; ++m)
                CHECK(std::count(kDescentFields.begin(), kDescentFields.end(), d_class(k, l, m)) == 1);
}

TEST_CASE("curve constants")
{
    const auto six = enumerate_curve_constants(6);
    const auto four = enumerate_curve_constants(4);
    CHECK(six.size() == 216);
    CHECK(four.size() == 64);
    const Int top = pow(2ul, 5) * pow(11ul, 5) * pow(19ul, 5);
    CHECK(std::any_of(six.begin(), six.end(), [&](auto& s) { return s.value == top; }));
    for (auto& s : four)
        CHECK(decompose(s.exponents[0], s.exponents[1], s.exponents[2], 4).D == s.value);
    CHECK_THROWS(enumerate_curve_constants(3));
}
