#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/descent.hpp"
#include "lrn/oracle.hpp"
#include "lrn/qfield.hpp"

#include <algorithm>
#include <random>

using namespace lrn;
using namespace lrn::descent;
using quartic::QuarticCurve;
using quartic::SRationalPoint;

namespace {

std::vector<Solution> table_tp()
{
    std::vector<Solution> out;
    for (auto& r : oracle::TableStore{LRN_TEST_TABLE_DIR}.load(oracle::TableId::TP))
        out.push_back(r.solution);
    sort_unique(out);
    return out;
}

const CaseBranch& branch(const DescentCase& c, Parity u, Parity v, bool half = false)
{
    for (auto& b : c.branches)
        if (b.u_parity == u && b.v_parity == v && b.half == half)
            return b;
    throw std::runtime_error("no such branch");
}

}  // namespace

TEST_CASE("imaginary-part polynomials")
{
    CHECK(im_part_polynomial(5, 1).coefficients == std::vector<Int>{5, -10, 1});
    CHECK(im_part_polynomial(5, 11).coefficients == std::vector<Int>{5, -110, 121});
    CHECK(im_part_polynomial(5, 19).coefficients == std::vector<Int>{5, -190, 361});
    CHECK(im_part_polynomial(7, 2).coefficients.size() == 4);
    CHECK_THROWS(im_part_polynomial(9, 1));
    CHECK_THROWS(im_part_polynomial(2, 1));
}

TEST_CASE("real and imaginary parts against powers")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> c(-300, 300);
    for (unsigned p : {3u, 5u, 7u, 11u, 13u})
        for (unsigned long d : {1ul, 2ul, 11ul, 19ul, 22ul, 38ul, 209ul, 418ul})
            for (int i = 0; i < 30; ++i) {
                const Int u = c(rng), v = c(rng);
                const auto a = qfield::quad_pow(qfield::QuadInt::from_integral(d, u, v), p);
                const auto poly = im_part_polynomial(p, d);
                CHECK(poly.evaluate(u, v) * v * 2 == a.V());
                CHECK(re_part(p, d, u, v) * 2 == a.U());
                const long m = 40;
                const long r = poly.evaluate_mod(u.get_si(), v.get_si(), m);
                CHECK(Int(r) == ((poly.evaluate(u, v) % m) + m) % m);
            }
}

TEST_CASE("congruence sieve")
{
    CongruenceQuery one{im_part_polynomial(5, 1)};
    one.u_parity = Parity::Even;
    one.v_value = 1;
    const auto r1 = congruence_sieve(one);
    CHECK(r1.signs() == std::vector<int>{1});
    CHECK(r1.fg_parities() == std::vector<unsigned>{0});
    CHECK(r1.e_is_zero());
    CHECK(r1.square_classes() == std::vector<Int>{1});

    CongruenceQuery excluded{im_part_polynomial(5, 1)};
    excluded.signs = {1};
    excluded.e_max = 0;
    excluded.f_parity = Parity::Odd;
    excluded.g_parity = Parity::Odd;
    CHECK(congruence_sieve(excluded, 5).contradiction());

    CongruenceQuery three{im_part_polynomial(5, 2)};
    three.u_parity = Parity::Odd;
    const auto r3 = congruence_sieve(three);
    CHECK(r3.signs() == std::vector<int>{-1});
    CHECK(r3.fg_parities() == std::vector<unsigned>{1});

    CHECK_THROWS(congruence_sieve(one, 7));
    CHECK_NOTHROW(congruence_sieve(one, 8));
}

TEST_CASE("case construction")
{
    const auto cases = build_cases(5);
    REQUIRE(cases.size() == 4);
    CHECK(cases[0].d == 1);
    CHECK(cases[0].q == 19);
    CHECK(cases[1].d == 11);
    CHECK(cases[1].q == 19);
    CHECK(cases[2].d == 2);
    CHECK(cases[2].q == 11);
    CHECK(cases[3].d == 19);
    CHECK(cases[3].q == 11);
    for (auto& c : cases)
        CHECK(lucas::primitive_divisor_sign(Int(c.q), c.d) == (c.q % 5 == 1 ? 1 : -1));

    const auto& i_even = branch(cases[0], Parity::Odd, Parity::Even);
    CHECK(i_even.curves == std::vector<QuarticCurve>{{-19, 5, -10, 1, {2, 11}}});
    const auto& iii = branch(cases[2], Parity::Odd, Parity::Even);
    CHECK(iii.curves == std::vector<QuarticCurve>{{-11, 5, -20, 4, {2, 19}}});
    const auto& iv = branch(cases[3], Parity::Even, Parity::Odd);
    CHECK(iv.curves == std::vector<QuarticCurve>{{1, 5, -190, 361, {19}}});
    CHECK(branch(cases[1], Parity::Odd, Parity::Odd, true).curves.size() == 8);

    CHECK(build_cases(7).empty());
    CHECK(build_cases(11).empty());
}

TEST_CASE("back substitution")
{
    const auto cases = build_cases(5);
    const QuarticCurve iii{-11, 5, -20, 4, {2, 19}};
    CHECK(back_substitute(cases[2], iii, {1, 2, 1}) == Solution{Int(241), Int(9), 3, 2, 0, 5});
    CHECK(back_substitute(cases[2], iii, {1, 1, 1}) == Solution{Int(1), Int(3), 1, 2, 0, 5});
    const QuarticCurve iv{1, 5, -190, 361, {19}};
    CHECK(back_substitute(cases[3], iv, {6, 1, 1}) == Solution{Int(22434), Int(55), 0, 0, 1, 5});
    CHECK_FALSE(back_substitute(cases[3], iv, {0, 1, 19}));
    CHECK_THROWS_AS(back_substitute(cases[3], iv, {6, 1, 2}), std::invalid_argument);
}

TEST_CASE("fixed right-hand sides")
{
    CHECK(lemma_fixed_rhs_search(Int(243)) == std::vector<LemmaHit>{{Int(1), 1, 2, 0}});
    CHECK(lemma_fixed_rhs_search(pow(55ul, 5)) == std::vector<LemmaHit>{{Int(22434), 0, 0, 1}});
    CHECK(lemma_fixed_rhs_search(pow(5ul, 7)).empty());
    CHECK(lemma_fixed_rhs_search(Int(9)) == std::vector<LemmaHit>{{Int(1), 3, 0, 0}});
    CHECK_THROWS(lemma_fixed_rhs_search(Int(1)));
}

TEST_CASE("prime case p = 5")
{
    const auto r = solve_prime_case(5, SearchBounds{});
    CHECK(r.solutions == table_tp());
    std::vector<Solution> excl{{Int(54), Int(5), 0, 1, 1, 5}, {Int(13573), Int(45), 2, 1, 3, 5}};
    sort_unique(excl);
    CHECK(r.excluded_solutions == excl);
    REQUIRE(r.classes.size() == 8);
    for (auto& c : r.classes)
        CHECK((c.rigor == Rigor::Excluded) == (c.d == 209));
    CHECK(r.defective.size() == 2);
    CHECK(r.cases.size() == 4);
    for (auto& s : r.solutions)
        CHECK(oracle::verify_solution(s));
}

TEST_CASE("prime cases p = 7, 11, 13")
{
    const auto seven = solve_prime_case(7, SearchBounds{});
    CHECK(seven.solutions.empty());
    REQUIRE(seven.routes.size() == 1);
    CHECK(seven.routes[0].N == pow(5ul, 7));
    CHECK(seven.routes[0].hits.empty());
    for (unsigned p : {11u, 13u}) {
        const auto r = solve_prime_case(p, SearchBounds{});
        CHECK(r.solutions.empty());
        CHECK(r.defective.empty());
        for (auto& c : r.classes)
            CHECK(c.rigor != Rigor::Excluded);
    }
    CHECK_THROWS_AS(solve_prime_case(3, SearchBounds{}), std::invalid_argument);
    CHECK_THROWS_AS(solve_prime_case(9, SearchBounds{}), std::invalid_argument);
}
