#include "lrn/pipeline.hpp"

#include "lrn/families.hpp"
#include "lrn/lucas.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lrn::pipeline {

using json = nlohmann::ordered_json;

namespace {

const Int kN1ListingCap = 10000;

std::string str(const Int& v)
{
    return v.get_str();
}

json solutions_json(const std::vector<Solution>& v)
{
    json a = json::array();
    for (const auto& s : v)
        a.push_back(solution_json(s));
    return a;
}

std::string tuple_list(const std::vector<Solution>& v)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i].to_string();
    os << '}';
    return os.str();
}

void require_verified(const SolveReport& r)
{
    for (const auto& s : r.solutions)
        if (!oracle::verify_solution(s))
            throw std::logic_error("report lists an invalid tuple " + s.to_string());
}

void solve_families(unsigned n, SolveReport& r)
{
    r.branch = "families";
    if (n == 0) {
        r.ledger.push_back({"n = 0", Rigor::Rigorous,
                            "x^2 + 2^k 11^l 19^m = 1 has no solution with x >= 1"});
        r.details["family"] = "none";
        return;
    }
    if (n == 1) {
        const Int cap = std::min(r.bounds.max_rhs, kN1ListingCap);
        r.solutions = families::list_n1(r.bounds, cap);
        r.ledger.push_back({"n = 1", Rigor::Rigorous,
                            "y = x^2 + 2^k 11^l 19^m for every x >= 1 coprime to the S-part"});
        r.ledger.push_back({"n = 1 listing", Rigor::Bounded,
                            "infinite family; instances listed for y <= " + str(cap)});
        r.details["family"] = "y = x^2 + 2^k 11^l 19^m, gcd(x, 2^k 11^l 19^m) = 1";
        r.details["listed_up_to"] = str(cap);
        return;
    }
    r.solutions = families::solve_n2(r.bounds);
    r.ledger.push_back({"n = 2", Rigor::Rigorous,
                        "(y - x)(y + x) = 2^k 11^l 19^m split over every divisor pair; "
                        "C ranges over y^2 <= " + str(r.bounds.max_rhs)});
    r.details["family"] = "divisor splits of (y - x)(y + x)";
}

void solve_mordell(unsigned e, SolveReport& r, json& details)
{
    const auto m = mordell::solve_n3_n4(e, r.bounds);
    r.solutions = m.solutions;
    std::ostringstream os;
    os << m.curves << " curves X^2 = Y^" << e << " - D searched with S-smooth w <= "
       << r.bounds.height << " and y0^" << e << " <= " << r.bounds.max_rhs << "; "
       << m.curve_solutions.size() << " solution(s)";
    r.ledger.push_back({"curve search", Rigor::Bounded, os.str()});
    r.ledger.push_back({"oracle scan", Rigor::Bounded,
                        "exhaustive over y^" + std::to_string(e) + " <= " + str(r.bounds.max_rhs) +
                            "; " + std::to_string(m.oracle_solutions.size()) + " solution(s), " +
                            std::to_string(m.curve_only.size() + m.oracle_only.size()) +
                            " disagreement(s) with the curve search"});
    details = mordell_json(m);
}

}  // namespace

json solution_json(const Solution& s)
{
    return json{{"x", str(s.x)}, {"y", str(s.y)}, {"k", s.k},
                {"l", s.l},      {"m", s.m},      {"n", s.n}};
}

json bounds_json(const SearchBounds& b)
{
    return json{{"max_exponent_k", b.max_exponent_k},
                {"max_exponent_l", b.max_exponent_l},
                {"max_exponent_m", b.max_exponent_m},
                {"max_rhs", str(b.max_rhs)},
                {"height", b.height},
                {"jobs", b.job_count}};
}

json ledger_json(const std::vector<RigorEntry>& ledger)
{
    json a = json::array();
    for (const auto& e : ledger)
        a.push_back({{"claim", e.claim}, {"rigor", rigor_name(e.rigor)}, {"detail", e.detail}});
    return a;
}

json descent_json(const descent::PrimeCaseReport& r)
{
    json out;
    out["p"] = r.p;
    json classes = json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"parity", {c.parity[0], c.parity[1], c.parity[2]}},
                           {"d", c.d},
                           {"h", c.h},
                           {"rigor", rigor_name(c.rigor)},
                           {"reason", c.reason}});
    out["classes"] = classes;
    json routes = json::array();
    for (const auto& rt : r.routes) {
        json hits = json::array();
        for (const auto& h : rt.hits)
            hits.push_back({{"x", str(h.x)}, {"k", h.k}, {"l", h.l}, {"m", h.m}});
        routes.push_back({{"alpha", rt.alpha.to_string()},
                          {"y", str(rt.y)},
                          {"N", str(rt.N)},
                          {"hits", hits},
                          {"solutions", solutions_json(rt.solutions)}});
    }
    out["defective"] = routes;
    json cases = json::array();
    for (const auto& t : r.cases) {
        const auto& c = t.descent_case;
        json branches = json::array();
        for (const auto& b : c.branches) {
            json survivors = json::array(), curves = json::array();
            for (const auto& a : b.sieve.survivors)
                survivors.push_back(a.to_string());
            for (const auto& cv : b.curves)
                curves.push_back(cv.to_string());
            branches.push_back({{"shape", b.shape},
                                {"modulus", b.sieve.modulus},
                                {"conclusions", b.sieve.conclusions()},
                                {"survivors", survivors},
                                {"curves", curves}});
        }
        json curves = json::array();
        for (const auto& ct : t.curves) {
            json pts = json::array();
            for (const auto& pt : ct.points)
                pts.push_back(pt.to_string());
            curves.push_back({{"curve", ct.curve.to_string()},
                              {"points", pts},
                              {"solutions", solutions_json(ct.solutions)}});
        }
        cases.push_back({{"d", c.d},
                         {"q", c.q},
                         {"v_primes", c.v_primes},
                         {"branches", branches},
                         {"curves", curves}});
    }
    out["cases"] = cases;
    out["solutions"] = solutions_json(r.solutions);
    out["excluded_solutions"] = solutions_json(r.excluded_solutions);
    out["ledger"] = ledger_json(r.ledger);
    return out;
}

json mordell_json(const mordell::MordellReport& r)
{
    return json{{"e", r.e},
                {"curves", r.curves},
                {"points", r.points},
                {"points_x_zero", r.points_x_zero},
                {"points_gcd_gt_1", r.points_gcd},
                {"points_outside_caps", r.points_outside_caps},
                {"curve_solutions", r.curve_solutions.size()},
                {"oracle_solutions", r.oracle_solutions.size()},
                {"curve_only", solutions_json(r.curve_only)},
                {"oracle_only", solutions_json(r.oracle_only)}};
}

std::vector<Solution> power_filter(const std::vector<Solution>& sols, unsigned t)
{
    if (t == 0)
        throw std::invalid_argument("power_filter: t must be positive");
    std::vector<Solution> out;
    for (const auto& s : sols) {
        const auto r = integer_nth_root(s.y, t);
        if (r.exact)
            out.push_back({s.x, r.root, s.k, s.l, s.m, s.n * t});
    }
    sort_unique(out);
    return out;
}

unsigned descent_prime(unsigned n)
{
    unsigned best = 0;
    for (unsigned q = 5; q <= n; ++q)
        if (n % q == 0 && lucas::is_prime(q))
            best = q;
    return best;
}

SolveReport solve(unsigned n, const SearchBounds& bounds)
{
    bounds.validate();
    SolveReport r;
    r.subject = "x^2 + 2^k 11^l 19^m = y^" + std::to_string(n);
    r.n = n;
    r.bounds = bounds;

    if (n <= 2) {
        solve_families(n, r);
    } else if (n == 3 || n == 4) {
        r.branch = "mordell";
        solve_mordell(n, r, r.details["mordell"]);
    } else if (lucas::is_prime(n)) {
        r.branch = "descent";
        const auto d = descent::solve_prime_case(n, bounds);
        r.solutions = d.solutions;
        r.excluded = d.excluded_solutions;
        r.ledger = d.ledger;
        r.details["descent"] = descent_json(d);
    } else if (const unsigned p = descent_prime(n)) {
        r.branch = "composite";
        const unsigned t = n / p;
        const auto d = descent::solve_prime_case(p, bounds);
        r.solutions = power_filter(d.solutions, t);
        r.excluded = power_filter(d.excluded_solutions, t);
        r.ledger = d.ledger;
        r.ledger.push_back({"reduction", Rigor::Rigorous,
                            "n = " + std::to_string(p) + " * " + std::to_string(t) +
                                ": Y = y^" + std::to_string(t) +
                                " solves the exponent-" + std::to_string(p) +
                                " equation; kept when Y has an exact root of index " +
                                std::to_string(t)});
        r.details["reduction"] = {{"p", p}, {"t", t}};
        r.details["descent"] = descent_json(d);
    } else {
        r.branch = "composite";
        const unsigned e = n % 3 == 0 ? 3 : 4;
        const unsigned t = n / e;
        SolveReport base = r;
        solve_mordell(e, base, r.details["mordell"]);
        r.solutions = power_filter(base.solutions, t);
        r.ledger = base.ledger;
        r.ledger.push_back({"reduction", Rigor::Rigorous,
                            "n = " + std::to_string(e) + " * " + std::to_string(t) +
                                ": solutions at exponent " + std::to_string(e) +
                                " whose y has an exact root of index " + std::to_string(t)});
        r.details["reduction"] = {{"e", e}, {"t", t}};
    }
    sort_unique(r.solutions);
    sort_unique(r.excluded);
    require_verified(r);
    return r;
}

SolveReport verify_tables(std::span<const oracle::TableId> ids, const oracle::TableStore& store,
                          std::optional<unsigned> m_restriction)
{
    SolveReport r;
    r.subject = "table verification";
    r.branch = "tables";
    auto keep = [&](const Solution& s) { return !m_restriction || s.m == *m_restriction; };

    std::map<oracle::TableId, std::vector<Solution>> verified;
    json tables = json::object();
    for (auto id : ids) {
        const auto tr = oracle::verify_table(id, store);
        const std::string name{oracle::table_name(id)};
        json fails = json::array();
        for (const auto& s : tr.verified)
            if (keep(s)) {
                verified[id].push_back(s);
                r.solutions.push_back(s);
            }
        for (const auto& f : tr.failures) {
            if (!keep(f.row.solution))
                continue;
            std::ostringstream os;
            os << name << " line " << f.row.line << ": " << f.row.solution.to_string();
            if (!f.identity)
                os << " does not satisfy the identity";
            else
                os << " satisfies the identity but gcd(x, y) = " << f.gcd;
            for (const auto& h : f.hints)
                os << "; " << h;
            r.failures.push_back(os.str());
            fails.push_back({{"line", f.row.line},
                             {"row", solution_json(f.row.solution)},
                             {"identity", f.identity},
                             {"gcd", str(f.gcd)},
                             {"hints", f.hints}});
        }
        const std::size_t shown = verified[id].size() + fails.size();
        r.ledger.push_back({name, Rigor::Rigorous,
                            std::to_string(verified[id].size()) + " of " + std::to_string(shown) +
                                " row(s) satisfy the identity with gcd(x, y) = 1"});
        tables[name] = {{"rows", tr.rows},
                        {"verified", verified[id].size()},
                        {"failures", fails},
                        {"elapsed_ms", tr.elapsed_ms}};
    }
    r.details["tables"] = tables;
    if (m_restriction)
        r.details["m_restriction"] = *m_restriction;

    const bool everything = std::all_of(std::begin(oracle::kAllTables), std::end(oracle::kAllTables),
                                        [&](oracle::TableId id) {
                                            return std::find(ids.begin(), ids.end(), id) != ids.end();
                                        });
    if (everything) {
        using oracle::TableId;
        auto filtered = [&](std::vector<Solution> v) {
            std::vector<Solution> out;
            for (auto& s : v)
                if (keep(s))
                    out.push_back(std::move(s));
            sort_unique(out);
            return out;
        };
        auto of_n = [&](TableId id, unsigned n) {
            std::vector<Solution> out;
            for (const auto& s : verified[id])
                if (s.n == n)
                    out.push_back(s);
            return filtered(out);
        };
        auto compare = [&](const std::string& claim, Rigor rigor, std::vector<Solution> got,
                           std::vector<Solution> want) {
            got = filtered(std::move(got));
            want = filtered(std::move(want));
            const bool same = got == want;
            r.ledger.push_back({claim, rigor,
                                same ? "reproduced " + std::to_string(want.size()) + " row(s)"
                                     : "mismatch: derived " + tuple_list(got) + ", table " +
                                           tuple_list(want)});
            if (!same)
                r.failures.push_back("cross-check " + claim + ": derived " + tuple_list(got) +
                                     ", table " + tuple_list(want));
            return same;
        };

        compare("n = 6 from square y at n = 3", Rigor::Rigorous, power_filter(verified[TableId::T3], 2),
                of_n(TableId::T612, 6));
        auto twelve = power_filter(verified[TableId::T3], 4);
        for (auto& s : power_filter(verified[TableId::T4], 3))
            twelve.push_back(s);
        compare("n = 12 from fourth-power y at n = 3 and cube y at n = 4", Rigor::Rigorous, twelve,
                of_n(TableId::T612, 12));

        SearchBounds b;
        b.job_count = default_job_count();
        const auto d5 = descent::solve_prime_case(5, b);
        compare("descent at n = 5", Rigor::Bounded, d5.solutions, verified[TableId::TP]);
        compare("n = 10 by reduction to n = 5", Rigor::Bounded, solve(10, b).solutions,
                verified[TableId::Extra]);
        r.bounds = b;
    }
    sort_unique(r.solutions);
    require_verified(r);
    return r;
}

SolveReport verify_all_tables(const oracle::TableStore& store, std::optional<unsigned> m_restriction)
{
    return verify_tables(oracle::kAllTables, store, m_restriction);
}

Format parse_format(std::string_view s)
{
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    if (s == "text")
        return Format::Text;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (json, csv, text)");
}

std::string emit_report(const SolveReport& r, Format format)
{
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "x,y,k,l,m,n\n";
        for (const auto& s : r.solutions)
            os << s.x << ',' << s.y << ',' << s.k << ',' << s.l << ',' << s.m << ',' << s.n << '\n';
        return os.str();
    }
    if (format == Format::Json) {
        json j;
        j["version"] = 1;
        j["solutions"] = solutions_json(r.solutions);
        j["excluded"] = solutions_json(r.excluded);
        j["ledger"] = ledger_json(r.ledger);
        j["failures"] = r.failures;
        j["subject"] = r.subject;
        j["n"] = r.n ? json(*r.n) : json(nullptr);
        j["branch"] = r.branch;
        j["bounds"] = bounds_json(r.bounds);
        j["details"] = r.details;
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << (r.subject.empty() ? "report" : r.subject) << '\n';
    if (!r.branch.empty())
        os << "branch: " << r.branch << '\n';
    os << "bounds: max_rhs " << r.bounds.max_rhs << ", exponent caps (" << r.bounds.max_exponent_k
       << ", " << r.bounds.max_exponent_l << ", " << r.bounds.max_exponent_m << "), height "
       << r.bounds.height << '\n';
    os << "solutions (" << r.solutions.size() << "):\n";
    for (const auto& s : r.solutions)
        os << "  " << s.to_string() << '\n';
    if (!r.excluded.empty()) {
        os << "found by the oracle in excluded classes (" << r.excluded.size() << "):\n";
        for (const auto& s : r.excluded)
            os << "  " << s.to_string() << '\n';
    }
    if (!r.failures.empty()) {
        os << "failures (" << r.failures.size() << "):\n";
        for (const auto& f : r.failures)
            os << "  " << f << '\n';
    }
    os << "rigor ledger:\n";
    for (const auto& e : r.ledger)
        os << "  [" << rigor_name(e.rigor) << "] " << e.claim << ": " << e.detail << '\n';
    return os.str();
}

}  // namespace lrn::pipeline
