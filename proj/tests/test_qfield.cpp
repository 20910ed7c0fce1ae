#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/decompose.hpp"
#include "lrn/lucas.hpp"
#include "lrn/qfield.hpp"
#include "properties.hpp"

using namespace lrn;
using namespace lrn::qfield;

TEST_CASE("powers and norms")
{
    const auto a = QuadInt::from_half(11, Int(1), Int(1));
    const auto a5 = quad_pow(a, 5);
    CHECK(quad_norm(a) == 3);
    CHECK(quad_norm(a5) == 243);
    CHECK(a5.d() == 11);
    const auto b = QuadInt::from_integral(19, Int(6), Int(1));
    CHECK(quad_norm(b) == 55);
    CHECK(quad_norm(quad_pow(b, 5)) == pow(55ul, 5));
    CHECK(quad_trace(b) == 12);
    CHECK(quad_conj(b) == QuadInt::from_integral(19, Int(6), Int(-1)));
    CHECK(quad_pow(b, 1) == b);
}

TEST_CASE("invariants are enforced")
{
    CHECK_THROWS_AS(QuadInt::from_half(2, Int(1), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt::from_half(11, Int(1), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(quad_mul(QuadInt::from_integral(2, Int(1), Int(1)),
                             QuadInt::from_integral(1, Int(1), Int(1))),
                    std::invalid_argument);
    CHECK(QuadInt::from_half(11, Int(1), Int(1)).is_half());
    CHECK_FALSE(QuadInt::from_integral(11, Int(1), Int(1)).is_half());
}

TEST_CASE("norm multiplicativity")
{
    const auto o = props::norm_multiplicativity();
    CHECK(o.cases >= 1000);
    CHECK(o.ok());
}

TEST_CASE("closure: products stay integral")
{
    const auto a = QuadInt::from_half(19, Int(1), Int(1));
    auto x = a;
    for (int i = 0; i < 20; ++i) {
        x = x * a;
        CHECK(((x.U() - x.V()) % 2) == 0);
    }
    CHECK(x == quad_pow(a, 21));
}

TEST_CASE("class numbers")
{
    const std::vector<unsigned long> expected{1, 1, 1, 1, 2, 6, 20, 8};
    for (std::size_t i = 0; i < decompose::kDescentFields.size(); ++i) {
        const unsigned long d = decompose::kDescentFields[i];
        const auto r = class_number(d);
        CHECK(r.h == expected[i]);
        CHECK(r.forms.size() == r.h);
        CHECK(largest_prime_factor(Int(r.h)) <= 5);
        for (unsigned p = 7; p < 100; ++p)
            if (lucas::is_prime(p))
                CHECK(gcd(Int(p), Int(r.h)) == 1);
    }
    CHECK(gcd(Int(5), Int(class_number(209).h)) == 5);
    CHECK(field_discriminant(11) == -11);
    CHECK(field_discriminant(2) == -8);
    CHECK(class_number(1).forms == std::vector<Form>{{1, 0, 1}});
    CHECK(class_number(23).h == 3);
    CHECK(class_number(5).h == 2);
    CHECK_THROWS(class_number(4));
    CHECK_THROWS(class_number(0));
}

TEST_CASE("units")
{
    CHECK(unit_group_order(1) == 4);
    CHECK(unit_group_order(3) == 6);
    CHECK(unit_group_order(2) == 2);
    CHECK(descent_units_check(1));
    CHECK(descent_units_check(2));
    CHECK(descent_units_check(19));
    CHECK_FALSE(descent_units_check(3));
}
