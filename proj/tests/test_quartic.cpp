#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/quartic.hpp"
#include "quartic_regression.hpp"

using namespace lrn;
using namespace lrn::quartic;

TEST_CASE("verify_point examples")
{
    CHECK(verify_point({-19, 5, -10, 1, {2}}, {1, 2, 1}));
    CHECK(verify_point({-11, 5, -20, 4, {2, 19}}, {15, 8, 41}));
    CHECK(verify_point({1, 5, -110, 121, {2, 11}}, {0, 1, 11}));
    CHECK_FALSE(verify_point({1, 5, -110, 121, {2, 11}}, {0, 1, 12}));
    CHECK_FALSE(verify_point({-19, 5, -10, 1, {}}, {1, 2, 1}));
    CHECK_FALSE(verify_point({-19, 5, -10, 1, {2}}, {2, 4, 4}));
}

TEST_CASE("find_points examples")
{
    std::vector<SRationalPoint> quarter{{-1, 2, -1}, {-1, 2, 1}, {1, 2, -1}, {1, 2, 1}};
    std::sort(quarter.begin(), quarter.end());
    CHECK(find_points({-19, 5, -10, 1, {2}}, 64) == quarter);
    CHECK(find_points({-11, 5, -110, 121, {2, 11}}, 64).empty());
    const auto iv = find_points({1, 5, -190, 361, {2, 19}}, 64, 4);
    CHECK(iv.size() == 6);
    for (auto& p : iv)
        CHECK(p.w == 1);
    CHECK(SRationalPoint{15, 8, 41}.to_string() == "(U, V) = (15/8, 41/64)");
}

TEST_CASE("height monotonicity and job independence")
{
    const QuarticCurve c{-11, 5, -20, 4, {2, 19}};
    auto prev = find_points(c, 1);
    for (unsigned long h : {2ul, 4ul, 8ul, 16ul, 32ul}) {
        auto cur = find_points(c, h);
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        CHECK(find_points(c, h, 3) == cur);
        prev = cur;
    }
}

TEST_CASE("invalid arguments")
{
    CHECK_THROWS_AS(find_points({0, 5, -10, 1, {2}}, 8), std::invalid_argument);
    CHECK_THROWS_AS(find_points({1, 5, -10, 1, {2}}, 0), std::invalid_argument);
}

TEST_CASE("regression at height 64")
{
    for (const auto& inst : regression::instances()) {
        const auto got = find_points(inst.curve, regression::kHeight);
        CHECK_MESSAGE(got == inst.expected, inst.curve.to_string());
        for (auto& p : got)
            CHECK(verify_point(inst.curve, p));
    }
}
