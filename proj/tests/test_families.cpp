#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/families.hpp"
#include "lrn/oracle.hpp"

#include <algorithm>
#include <map>

using namespace lrn;
using namespace lrn::families;

namespace {

bool contains(const std::vector<Solution>& v, const Solution& s)
{
    return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("n = 1 family")
{
    CHECK(family_n1(Int(1), 0, 0, 0) == Solution{Int(1), Int(2), 0, 0, 0, 1});
    CHECK(family_n1(Int(3), 1, 0, 0) == Solution{Int(3), Int(11), 1, 0, 0, 1});
    CHECK(family_n1(Int(2), 0, 1, 0) == Solution{Int(2), Int(15), 0, 1, 0, 1});
    CHECK_THROWS(family_n1(Int(0), 0, 0, 0));

    SearchBounds b;
    b.max_exponent_k = b.max_exponent_l = b.max_exponent_m = 1;
    for (auto& s : list_n1(b, Int(100))) {
        CHECK(s.y <= 100);
        CHECK(s.n == 1);
        CHECK(oracle::identity_holds(s));
    }
}

TEST_CASE("n = 2 examples")
{
    CHECK(contains(enumerate_n2(0, 2, 0), {Int(60), Int(61), 0, 2, 0, 2}));
    CHECK(enumerate_n2(2, 1, 0).empty());
    CHECK(contains(enumerate_n2(3, 0, 0), {Int(1), Int(3), 3, 0, 0, 2}));
    for (unsigned l = 0; l < 5; ++l)
        for (unsigned m = 0; m < 5; ++m) {
            CHECK(enumerate_n2(1, l, m).empty());
            CHECK(enumerate_n2(2, l, m).empty());
        }
    CHECK(enumerate_n2(0, 0, 0).empty());
}

TEST_CASE("n = 0 has no solution")
{
    CHECK(n0_has_no_solution(0, 0, 0));
    CHECK(n0_has_no_solution(5, 1, 1));
    CHECK(n0_has_no_solution(1, 0, 0));
}

TEST_CASE("n = 2 cases against a direct scan up to 10^6")
{
    const Exponents caps{40, 40, 40};
    std::map<Exponents, std::vector<Solution>> scanned;
    for (auto& s : oracle::enumerate_n2_by_scan(Int(1000000), caps))
        scanned[s.exponents()].push_back(s);
    for (auto& c : smooth_values_below(Int(1000001), caps)) {
        auto got = enumerate_n2(c.exponents[0], c.exponents[1], c.exponents[2]);
        auto want = scanned[c.exponents];
        sort_unique(got);
        sort_unique(want);
        CHECK_MESSAGE(got == want, "C = " << c.value);
    }
}

TEST_CASE("n = 2 parity invariant")
{
    for (unsigned k = 0; k <= 8; ++k)
        for (unsigned l = 0; l <= 4; ++l)
            for (unsigned m = 0; m <= 4; ++m)
                for (auto& e : enumerate_n2_cases(k, l, m)) {
                    const auto& s = e.solution;
                    CHECK(oracle::verify_solution(s));
                    const bool x_even = mpz_even_p(s.x.get_mpz_t()) != 0;
                    switch (e.selector.kind) {
                    case N2Case::XEven:
                        CHECK(k == 0);
                        CHECK((l + m) % 2 == 0);
                        CHECK(x_even);
                        break;
                    case N2Case::XOdd:
                        CHECK(k == 0);
                        CHECK((l + m) % 2 == 1);
                        CHECK_FALSE(x_even);
                        break;
                    case N2Case::BothOdd:
                        CHECK(k >= 3);
                        CHECK_FALSE(x_even);
                        CHECK(mpz_odd_p(s.y.get_mpz_t()));
                        break;
                    }
                }
}

TEST_CASE("solve_n2 respects bounds")
{
    SearchBounds b;
    b.max_rhs = 100000;
    const auto sols = solve_n2(b);
    CHECK_FALSE(sols.empty());
    for (auto& s : sols) {
        CHECK(s.y * s.y <= 100000);
        CHECK(oracle::verify_solution(s));
    }
    CHECK(contains(sols, {Int(60), Int(61), 0, 2, 0, 2}));
}
