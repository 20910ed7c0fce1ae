#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/mordell.hpp"
#include "lrn/oracle.hpp"

#include <algorithm>

using namespace lrn;
using namespace lrn::mordell;

namespace {

std::vector<Solution> verified_rows(oracle::TableId id)
{
    return oracle::verify_table(id, oracle::TableStore{LRN_TEST_TABLE_DIR}).verified;
}

MordellInstance instance(unsigned e, const Int& D)
{
    for (auto& i : instances(e))
        if (i.D == D)
            return i;
    throw std::runtime_error("no instance");
}

bool has_point(const std::vector<MordellPoint>& pts, long x0, long y0, long w = 1)
{
    return std::find(pts.begin(), pts.end(), MordellPoint{Int(x0), Int(y0), Int(w)}) != pts.end();
}

}  // namespace

TEST_CASE("instances")
{
    CHECK(instances(3).size() == 216);
    CHECK(instances(4).size() == 64);
    CHECK_THROWS(instances(5));
    CHECK(instance(3, Int(19)).to_string() == "X^2 = Y^3 - 19");
}

TEST_CASE("point searches")
{
    const auto a = search_points(instance(3, Int(19)), 1, Int(100));
    CHECK(has_point(a, 18, 7));
    const auto b = search_points(instance(4, Int(2)), 2, Int(100));
    CHECK(has_point(b, 7, 3, 2));
    const auto c = search_points(instance(3, Int(1)), 16, Int(10000));
    CHECK(std::all_of(c.begin(), c.end(), [](auto& p) { return p.x0 == 0; }));
    for (auto* pts : {&a, &b})
        for (auto& p : *pts)
            CHECK(verify_point(pts == &a ? instance(3, Int(19)) : instance(4, Int(2)), p));
    CHECK_THROWS(search_points(instance(3, Int(19)), 0, Int(100)));
}

TEST_CASE("membership")
{
    for (auto id : {oracle::TableId::T3, oracle::TableId::T4})
        for (auto& s : verified_rows(id)) {
            const auto m = membership(s);
            CHECK(verify_point(m.instance, m.point));
            CHECK(m.instance.D == instance(s.n, m.instance.D).D);
            CHECK(m.point.x0 == s.x);
        }
    CHECK_THROWS(membership({Int(41), Int(5), 2, 0, 2, 5}));
}

TEST_CASE("solve_n3_n4 against the tables")
{
    const auto three = solve_n3_n4(3, SearchBounds{});
    CHECK(three.curve_only.empty());
    CHECK(three.oracle_only.empty());
    for (auto& s : verified_rows(oracle::TableId::T3))
        if (pow(s.y, 3) <= SearchBounds{}.max_rhs)
            CHECK(std::binary_search(three.solutions.begin(), three.solutions.end(), s));
    CHECK(three.points == three.points_x_zero + three.points_gcd + three.points_outside_caps +
                              three.curve_solutions.size());

    SearchBounds b;
    b.job_count = 4;
    const auto four = solve_n3_n4(4, b);
    auto t4 = verified_rows(oracle::TableId::T4);
    sort_unique(t4);
    CHECK(four.solutions == t4);
    CHECK(four.oracle_only.empty());

    SearchBounds tiny;
    tiny.max_rhs = 26;
    CHECK(solve_n3_n4(3, tiny).solutions.empty());
    CHECK_THROWS(solve_n3_n4(5, SearchBounds{}));
}
