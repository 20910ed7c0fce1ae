#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrn/decompose.hpp"
#include "lrn/oracle.hpp"
#include "fixtures.hpp"
#include "properties.hpp"


using namespace lrn;
using namespace lrn::oracle;

namespace {

std::vector<Solution> rows_of(TableId id, std::optional<unsigned> n = std::nullopt)
{
    std::vector<Solution> out;
    for (auto& r : TableStore{LRN_TEST_TABLE_DIR}.load(id))
        if (!n || r.solution.n == *n)
            out.push_back(r.solution);
    sort_unique(out);
    return out;
}

SearchBounds bounds(const char* max_rhs, unsigned caps)
{
    SearchBounds b;
    b.max_rhs = Int(max_rhs);
    b.max_exponent_k = b.max_exponent_l = b.max_exponent_m = caps;
    return b;
}

}  // namespace

TEST_CASE("verify_solution examples")
{
    CHECK(verify_solution({Int(241), Int(3), 3, 2, 0, 10}));
    CHECK(verify_solution({Int(22434), Int(55), 0, 0, 1, 5}));
    CHECK_FALSE(verify_solution({Int(2), Int(2), 0, 0, 0, 3}));
    CHECK(identity_holds({Int(250173), Int(3971), 1, 2, 4, 3}));
    CHECK_FALSE(verify_solution({Int(250173), Int(3971), 1, 2, 4, 3}));
    CHECK(verify_solution({Int(4), Int(3), 0, 1, 0, 3}));
    CHECK(verify_solution({Int(3), Int(5), 0, 0, 0, 1}, {3, 5, 7}) == false);
}

TEST_CASE("n = 5 up to 10^9")
{
    const auto rep = enumerate_solutions(5, bounds("1000000000", 30));
    std::vector<Solution> outside, inside;
    for (auto& s : rep.found)
        (decompose::d_class(s.k, s.l, s.m) == 209 ? inside : outside).push_back(s);
    CHECK(outside == rows_of(TableId::TP));
    std::vector<Solution> expected_inside{{Int(54), Int(5), 0, 1, 1, 5},
                                          {Int(13573), Int(45), 2, 1, 3, 5}};
    sort_unique(expected_inside);
    CHECK(inside == expected_inside);
    for (auto& s : rep.found)
        CHECK(verify_solution(s));
}

TEST_CASE("small searches")
{
    CHECK(enumerate_solutions(13, bounds("1000000000", 40)).found.empty());
    const auto three = enumerate_solutions(3, bounds("27", 1)).found;
    std::vector<Solution> expected{{Int(4), Int(3), 0, 1, 0, 3}, {Int(5), Int(3), 1, 0, 0, 3}};
    sort_unique(expected);
    CHECK(three == expected);
    CHECK_THROWS_AS(enumerate_solutions(2, SearchBounds{}), std::invalid_argument);
}

TEST_CASE("even y is impossible for the default base")
{
    CHECK(even_y_impossible(kDefaultBase));
    CHECK_FALSE(even_y_impossible({3, 5, 7}));
    for (auto id : kAllTables)
        for (auto& r : TableStore{LRN_TEST_TABLE_DIR}.load(id))
            CHECK(mpz_odd_p(r.solution.y.get_mpz_t()));
}

TEST_CASE("partition independence")
{
    for (unsigned n : {3u, 4u, 5u}) {
        const auto o = props::partition_independence(n, bounds("100000000", 40));
        CHECK(o.ok());
    }
}

TEST_CASE("n = 2 scan agrees with the x-major search")
{
    const auto scan = enumerate_n2_by_scan(Int(1000), {40, 40, 40});
    for (auto& s : scan) {
        CHECK(s.n == 2);
        CHECK(verify_solution(s));
    }
    CHECK(std::find(scan.begin(), scan.end(), Solution{Int(60), Int(61), 0, 2, 0, 2}) !=
          scan.end());
}

TEST_CASE("table assets")
{
    const TableStore store{LRN_TEST_TABLE_DIR};
    for (auto id : kAllTables)
        CHECK(store.load(id).size() == expected_rows(id));
    CHECK(verify_table(TableId::T4, store).ok());
    CHECK(verify_table(TableId::T612, store).ok());
    CHECK(verify_table(TableId::TP, store).ok());
    const auto extra = verify_table(TableId::Extra, store);
    CHECK(extra.ok());
    REQUIRE(extra.verified.size() == 1);
    CHECK(extra.verified[0] == Solution{Int(241), Int(3), 3, 2, 0, 10});

    const auto t3 = verify_table(TableId::T3, store);
    REQUIRE(t3.failures.size() == 3);
    CHECK(t3.verified.size() == 49);
    CHECK(t3.failures[0].row.solution.x == 250173);
    CHECK(t3.failures[0].identity);
    CHECK(t3.failures[0].gcd == 3971);
    CHECK_FALSE(t3.failures[1].identity);
    CHECK_FALSE(t3.failures[2].identity);
    CHECK_FALSE(t3.failures[1].hints.empty());
    CHECK_FALSE(t3.failures[2].hints.empty());
    CHECK(parse_table_id("T612") == TableId::T612);
    CHECK_THROWS(parse_table_id("t5"));
}

TEST_CASE("corrupted table fixture")
{
    const auto dir = fixtures::table_copy("oracle");
    const auto rows = TableStore{dir}.load(TableId::T4);
    fixtures::corrupt_first_row(dir, TableId::T4);
    const auto rep = verify_table(TableId::T4, TableStore{dir});
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].row.solution.x == rows[0].solution.x + 1);
    CHECK(rep.failures[0].row.line == 2);
    CHECK(rep.verified.size() == rows.size() - 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("csv parsing")
{
    const auto rows = parse_table_csv("x,y,k,l,m,n\n4,3,0,1,0,3\n\n5,3,1,0,0,3\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].line == 4);
    CHECK_THROWS(parse_table_csv("a,b,c\n1,2,3\n"));
    CHECK_THROWS(parse_table_csv("x,y,k,l,m,n\n4,3,0,1\n"));
    CHECK_THROWS(parse_table_csv("x,y,k,l,m,n\n4,3,0,1,0,z\n"));
    CHECK_THROWS(TableStore{"/nonexistent"}.load(TableId::T3));
}
