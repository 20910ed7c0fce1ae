#include "lrn/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>

#ifndef LRN_DEFAULT_TABLE_DIR
#define LRN_DEFAULT_TABLE_DIR "data/tables"
#endif

namespace lrn::oracle {

namespace {

Int s_value(const Exponents& e, const PrimeBase& base)
{
    return pow(base[0], e[0]) * pow(base[1], e[1]) * pow(base[2], e[2]);
}

struct ShardResult {
    std::vector<Solution> found;
    std::size_t gcd_rejected = 0;
};

ShardResult scan_shard(unsigned n, const std::vector<Int>& ys,
                       const std::vector<SmoothValue>& cs)
{
    ShardResult out;
    Int yn, r, g;
    for (const Int& y : ys) {
        mpz_pow_ui(yn.get_mpz_t(), y.get_mpz_t(), n);
        for (const auto& c : cs) {
            if (c.value >= yn)
                break;
            mpz_sub(r.get_mpz_t(), yn.get_mpz_t(), c.value.get_mpz_t());
            auto x = is_perfect_square(r);
            if (!x)
                continue;
            mpz_gcd(g.get_mpz_t(), x->get_mpz_t(), y.get_mpz_t());
            if (g != 1) {
                ++out.gcd_rejected;
                continue;
            }
            out.found.push_back({*x, y, c.exponents[0], c.exponents[1], c.exponents[2], n});
        }
    }
    return out;
}

double millis_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

bool identity_holds(const Solution& s, const PrimeBase& base)
{
    if (s.x < 1 || s.y < 1)
        return false;
    return s.x * s.x + s_value(s.exponents(), base) == pow(s.y, s.n);
}

bool verify_solution(const Solution& s, const PrimeBase& base)
{
    return identity_holds(s, base) && gcd(s.x, s.y) == 1;
}

bool even_y_impossible(const PrimeBase& base)
{
    // Closure of the odd base primes in (Z/8)^*.
    std::array<bool, 8> reach{};
    reach[1] = true;
    for (bool grew = true; grew;) {
        grew = false;
        for (unsigned long p : base) {
            if (p % 2 == 0)
                continue;
            for (unsigned r = 1; r < 8; r += 2) {
                if (!reach[r])
                    continue;
                unsigned t = static_cast<unsigned>((r * (p % 8)) % 8);
                if (!reach[t])
                    reach[t] = grew = true;
            }
        }
    }
    return !reach[7];
}

OracleReport enumerate_solutions(unsigned n, const SearchBounds& bounds)
{
    return enumerate_solutions(n, bounds, bounds.job_count);
}

OracleReport enumerate_solutions(unsigned n, const SearchBounds& bounds, unsigned partitions)
{
    if (n < 3)
        throw std::invalid_argument("enumerate_solutions: n must be at least 3");
    bounds.validate();
    if (partitions == 0)
        throw std::invalid_argument("enumerate_solutions: partitions must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    OracleReport report;
    report.n = n;
    report.bounds = bounds;
    report.partitions = partitions;

    const Int y_max = integer_nth_root(bounds.max_rhs, n).root;
    const auto cs = smooth_values_below(pow(y_max, n), bounds.caps(), bounds.base);
    const bool odd_only = even_y_impossible(bounds.base);

    std::vector<Int> ys;
    for (Int y = 2; y <= y_max; ++y) {
        if (odd_only && mpz_even_p(y.get_mpz_t()))
            continue;
        ys.push_back(y);
    }

    // Strided shards keep the (growing) per-y cost balanced.
    std::vector<std::vector<Int>> shards(partitions);
    for (std::size_t i = 0; i < ys.size(); ++i)
        shards[i % partitions].push_back(ys[i]);

    const unsigned threads = std::max(1u, std::min(bounds.job_count, partitions));
    std::vector<ShardResult> results(partitions);
    for (unsigned base = 0; base < partitions; base += threads) {
        std::vector<std::future<ShardResult>> running;
        for (unsigned i = base; i < std::min(partitions, base + threads); ++i)
            running.push_back(std::async(std::launch::async, scan_shard, n, std::cref(shards[i]),
                                         std::cref(cs)));
        for (unsigned i = 0; i < running.size(); ++i)
            results[base + i] = running[i].get();
    }

    for (auto& r : results) {
        report.gcd_rejected += r.gcd_rejected;
        report.found.insert(report.found.end(), std::make_move_iterator(r.found.begin()),
                            std::make_move_iterator(r.found.end()));
    }
    sort_unique(report.found);
    for (const auto& s : report.found)
        if (!verify_solution(s, bounds.base))
            throw std::logic_error("oracle emitted an invalid solution " + s.to_string());
    report.elapsed_ms = millis_since(t0);
    return report;
}

std::vector<Solution> enumerate_n2_by_scan(const Int& max_c, const Exponents& caps,
                                           const PrimeBase& base)
{
    std::vector<Solution> out;
    Int r;
    for (const auto& c : smooth_values_below(max_c + 1, caps, base)) {
        const Int x_max = (c.value - 1) / 2;
        for (Int x = 1; x <= x_max; ++x) {
            r = x * x + c.value;
            auto y = is_perfect_square(r);
            if (y && gcd(x, *y) == 1)
                out.push_back({x, *y, c.exponents[0], c.exponents[1], c.exponents[2], 2});
        }
    }
    sort_unique(out);
    return out;
}

// ---------------------------------------------------------------------------

std::string_view table_name(TableId id)
{
    switch (id) {
    case TableId::T3: return "T3";
    case TableId::T612: return "T612";
    case TableId::T4: return "T4";
    case TableId::TP: return "TP";
    case TableId::Extra: return "EXTRA";
    }
    return "?";
}

std::string_view table_file(TableId id)
{
    switch (id) {
    case TableId::T3: return "t3.csv";
    case TableId::T612: return "t612.csv";
    case TableId::T4: return "t4.csv";
    case TableId::TP: return "tp.csv";
    case TableId::Extra: return "extra.csv";
    }
    return "";
}

TableId parse_table_id(std::string_view s)
{
    const std::string v = lower(s);
    for (TableId id : kAllTables)
        if (lower(table_name(id)) == v)
            return id;
    throw std::invalid_argument("unknown table id '" + std::string(s) + "'");
}

std::size_t expected_rows(TableId id)
{
    switch (id) {
    case TableId::T3: return 52;
    case TableId::T612: return 5;
    case TableId::T4: return 5;
    case TableId::TP: return 4;
    case TableId::Extra: return 1;
    }
    return 0;
}

TableStore::TableStore()
{
    const char* env = std::getenv("LRN_TABLE_DIR");
    dir_ = (env != nullptr && *env != '\0') ? env : LRN_DEFAULT_TABLE_DIR;
}

TableStore::TableStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path TableStore::path(TableId id) const
{
    return dir_ / std::string(table_file(id));
}

std::vector<TableRow> TableStore::load(TableId id) const
{
    std::ifstream in(path(id));
    if (!in)
        throw std::runtime_error("table asset not found: " + path(id).string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table_csv(ss.str());
}

std::vector<TableRow> parse_table_csv(std::string_view text)
{
    std::vector<TableRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (lineno == 1) {
            if (line != "x,y,k,l,m,n")
                throw std::runtime_error("table header must be x,y,k,l,m,n");
            continue;
        }
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        for (std::string f; std::getline(ls, f, ',');)
            fields.push_back(f);
        if (fields.size() != 6)
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected 6 fields");
        TableRow row;
        row.line = lineno;
        try {
            row.solution.x = Int(fields[0]);
            row.solution.y = Int(fields[1]);
            row.solution.k = static_cast<unsigned>(std::stoul(fields[2]));
            row.solution.l = static_cast<unsigned>(std::stoul(fields[3]));
            row.solution.m = static_cast<unsigned>(std::stoul(fields[4]));
            row.solution.n = static_cast<unsigned>(std::stoul(fields[5]));
        } catch (const std::exception&) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed number");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RowFailure diagnose_row(const TableRow& row)
{
    const Solution& s = row.solution;
    RowFailure f;
    f.row = row;
    f.identity = identity_holds(s);
    f.gcd = gcd(s.x, s.y);
    if (f.identity)
        return f;

    const Int c = s_value(s.exponents(), kDefaultBase);
    const Int yn = pow(s.y, s.n);

    if (auto root = integer_nth_root(s.x * s.x + c, s.n); root.exact) {
        std::ostringstream os;
        os << "y = " << root.root << " satisfies the identity (gcd " << gcd(s.x, root.root) << ")";
        f.hints.push_back(os.str());
    }
    if (yn > c) {
        if (auto x = is_perfect_square(yn - c); x && *x > 0) {
            std::ostringstream os;
            os << "x = " << *x << " satisfies the identity (gcd " << gcd(*x, s.y) << ")";
            f.hints.push_back(os.str());
        }
    }
    if (yn > s.x * s.x) {
        auto sf = s_factor(yn - s.x * s.x);
        if (sf.cofactor == 1) {
            std::ostringstream os;
            os << "(k, l, m) = (" << sf.exponents[0] << ", " << sf.exponents[1] << ", "
               << sf.exponents[2] << ") satisfies the identity (gcd " << f.gcd << ")";
            f.hints.push_back(os.str());
        }
    }
    return f;
}

TableReport verify_table(TableId id, const TableStore& store)
{
    const auto t0 = std::chrono::steady_clock::now();
    TableReport report;
    report.id = id;
    const auto rows = store.load(id);
    report.rows = rows.size();
    for (const auto& row : rows) {
        if (verify_solution(row.solution))
            report.verified.push_back(row.solution);
        else
            report.failures.push_back(diagnose_row(row));
    }
    report.elapsed_ms = millis_since(t0);
    return report;
}

}  // namespace lrn::oracle
