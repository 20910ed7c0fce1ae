#include "lrn/core.hpp"
#include "lrn/descent.hpp"
#include "lrn/lucas.hpp"
#include "lrn/mordell.hpp"
#include "lrn/oracle.hpp"
#include "lrn/pipeline.hpp"
#include "lrn/qfield.hpp"
#include "lrn/quartic.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace lrn;
namespace pl = lrn::pipeline;

namespace {

// Decimal integer, optionally written as AeB.
Int parse_int(const std::string& text)
{
    Int v;
    const auto e = text.find_first_of("eE");
    const std::string mant = text.substr(0, e);
    if (mant.empty() || v.set_str(mant, 10) != 0)
        throw std::invalid_argument("not an integer: " + text);
    if (e != std::string::npos) {
        const std::string ex = text.substr(e + 1);
        if (ex.empty() || ex.size() > 4 || ex.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("not an integer: " + text);
        v *= pow(10ul, std::stoul(ex));
    }
    return v;
}

struct BoundsFlags {
    std::string max_rhs = "1000000000000";
    std::optional<unsigned> max_exp, max_k, max_l, max_m;
    unsigned long height = 256;
    unsigned jobs = 0;

    void attach(CLI::App* app)
    {
        app->add_option("--max-rhs", max_rhs, "Upper bound on y^n")->capture_default_str();
        app->add_option("--max-exp", max_exp, "Cap for all of k, l, m (default 40)");
        app->add_option("--max-k", max_k, "Cap for k");
        app->add_option("--max-l", max_l, "Cap for l");
        app->add_option("--max-m", max_m, "Cap for m");
        app->add_option("--height", height, "Denominator cap for curve searches")
            ->capture_default_str();
        app->add_option("--jobs", jobs, "Worker threads (default: LRN_JOBS or all cores)");
    }

    SearchBounds bounds() const
    {
        SearchBounds b;
        if (max_exp)
            b.max_exponent_k = b.max_exponent_l = b.max_exponent_m = *max_exp;
        if (max_k)
            b.max_exponent_k = *max_k;
        if (max_l)
            b.max_exponent_l = *max_l;
        if (max_m)
            b.max_exponent_m = *max_m;
        b.max_rhs = parse_int(max_rhs);
        b.height = height;
        b.job_count = jobs ? jobs : default_job_count();
        b.validate();
        return b;
    }
};

std::string format_help = "Output format: json, csv or text";

int print(const pl::SolveReport& r, const std::string& format)
{
    std::cout << pl::emit_report(r, pl::parse_format(format));
    return r.ok() ? 0 : 1;
}

std::vector<unsigned long> parse_prime_list(const std::string& s)
{
    std::vector<unsigned long> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        if (item.empty())
            continue;
        const unsigned long p = std::stoul(item);
        if (p != 1)
            out.push_back(p);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solver for x^2 + 2^k 11^l 19^m = y^n"};
    app.require_subcommand(1);
    std::string table_dir;
    app.add_option("--tables", table_dir, "Directory holding the table CSV files");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve for one exponent n");
    unsigned solve_n = 0;
    std::string solve_fmt = "text";
    BoundsFlags solve_bounds;
    solve->add_option("--n", solve_n, "Exponent n")->required();
    solve->add_option("--format", solve_fmt, format_help)->capture_default_str();
    solve_bounds.attach(solve);

    // verify
    auto* verify = app.add_subcommand("verify", "Verify the table assets");
    std::string verify_table = "all", verify_fmt = "text";
    std::optional<unsigned> verify_m;
    verify->add_option("--table", verify_table, "t3, t612, t4, tp, extra or all")
        ->capture_default_str();
    verify->add_option("--m", verify_m, "Keep only rows with this m");
    verify->add_option("--format", verify_fmt, format_help)->capture_default_str();

    // oracle
    auto* orc = app.add_subcommand("oracle", "Brute-force enumeration over y");
    unsigned oracle_n = 3, oracle_parts = 0;
    std::string oracle_fmt = "text";
    BoundsFlags oracle_bounds;
    orc->add_option("--n", oracle_n, "Exponent n >= 3")->required();
    orc->add_option("--partitions", oracle_parts, "Number of y-shards (default: jobs)");
    orc->add_option("--format", oracle_fmt, format_help)->capture_default_str();
    oracle_bounds.attach(orc);

    // lucas
    auto* luc = app.add_subcommand("lucas", "Lucas sequence of alpha = u + v sqrt(-d)");
    unsigned long luc_d = 1;
    std::string luc_u, luc_v;
    unsigned luc_n = 5;
    bool luc_half = false;
    luc->add_option("--d", luc_d, "Field parameter d")->required();
    luc->add_option("--u", luc_u, "Rational part u")->required();
    luc->add_option("--v", luc_v, "Coefficient v of sqrt(-d)")->required();
    luc->add_option("--n", luc_n, "Index n")->required();
    luc->add_flag("--half", luc_half, "Read (u, v) as alpha = (u + v sqrt(-d))/2");

    // quartic
    auto* qrt = app.add_subcommand("quartic", "Points on A V^2 = c4 U^4 + c2 U^2 + c0");
    std::string q_A, q_c4, q_c2, q_c0, q_s = "1";
    unsigned long q_height = 64;
    qrt->add_option("--A", q_A, "Coefficient A")->required();
    qrt->add_option("--c4", q_c4, "Coefficient c4")->required();
    qrt->add_option("--c2", q_c2, "Coefficient c2")->required();
    qrt->add_option("--c0", q_c0, "Coefficient c0")->required();
    qrt->add_option("--s", q_s, "Denominator primes, comma separated (1: integral)")
        ->capture_default_str();
    qrt->add_option("--height", q_height, "Height bound")->capture_default_str();

    // mordell
    auto* mor = app.add_subcommand("mordell", "Points on X^2 = Y^e - D");
    unsigned mor_e = 3;
    std::string mor_D, mor_max_rhs = "1000000000000";
    unsigned long mor_height = 16;
    mor->add_option("--e", mor_e, "3 or 4")->capture_default_str();
    mor->add_option("--D", mor_D, "Curve constant D")->required();
    mor->add_option("--height", mor_height, "Denominator cap")->capture_default_str();
    mor->add_option("--max-rhs", mor_max_rhs, "Bound on y0^e")->capture_default_str();

    // descend
    auto* des = app.add_subcommand("descend", "Per-case descent trace for a prime p >= 5");
    unsigned des_p = 5;
    std::string des_fmt = "text";
    BoundsFlags des_bounds;
    des->add_option("--p", des_p, "Prime p >= 5")->required();
    des->add_option("--format", des_fmt, "json or text")->capture_default_str();
    des_bounds.attach(des);

    // class-number
    auto* cls = app.add_subcommand("class-number", "Class number of Q(sqrt(-d))");
    std::vector<unsigned long> cls_d;
    cls->add_option("--d", cls_d, "Squarefree d (repeatable)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const oracle::TableStore store =
            table_dir.empty() ? oracle::TableStore{} : oracle::TableStore{table_dir};

        if (*solve)
            return print(pl::solve(solve_n, solve_bounds.bounds()), solve_fmt);

        if (*verify) {
            std::vector<oracle::TableId> ids;
            if (verify_table == "all")
                ids.assign(std::begin(oracle::kAllTables), std::end(oracle::kAllTables));
            else
                ids.push_back(oracle::parse_table_id(verify_table));
            return print(pl::verify_tables(ids, store, verify_m), verify_fmt);
        }

        if (*orc) {
            const auto b = oracle_bounds.bounds();
            const auto rep = oracle::enumerate_solutions(oracle_n, b,
                                                         oracle_parts ? oracle_parts : b.job_count);
            pl::SolveReport r;
            r.subject = "oracle scan, n = " + std::to_string(oracle_n);
            r.n = oracle_n;
            r.branch = "oracle";
            r.bounds = b;
            r.solutions = rep.found;
            r.ledger.push_back({"oracle scan", Rigor::Bounded,
                                "exhaustive over y^" + std::to_string(oracle_n) +
                                    " <= " + b.max_rhs.get_str() + "; " +
                                    std::to_string(rep.gcd_rejected) + " hit(s) with gcd(x, y) > 1"});
            r.details["partitions"] = rep.partitions;
            r.details["elapsed_ms"] = rep.elapsed_ms;
            return print(r, oracle_fmt);
        }

        if (*luc) {
            const auto alpha = luc_half ? qfield::QuadInt::from_half(luc_d, Int(luc_u), Int(luc_v))
                                        : qfield::QuadInt::from_integral(luc_d, Int(luc_u), Int(luc_v));
            const auto ctx = lucas::LucasContext::from_alpha(alpha);
            const Int term = lucas::lucas_term(ctx, luc_n);
            std::cout << "alpha = " << alpha.to_string() << "\n";
            std::cout << "P = " << ctx.P << ", Q = " << ctx.Q << ", (alpha - conj)^2 = " << ctx.disc
                      << "\n";
            std::cout << "Lucas pair: " << (ctx.is_lucas_pair() ? "yes" : "no") << "\n";
            std::cout << "L_" << luc_n << " = " << term << "\n";
            std::cout << "factorization:";
            if (term == 0 || abs(term) == 1)
                std::cout << ' ' << term;
            else
                for (const auto& pp : factor(term))
                    std::cout << ' ' << pp.prime << (pp.exponent > 1 ? "^" + std::to_string(pp.exponent) : "");
            std::cout << "\n";
            if (luc_n >= 2) {
                const auto prim = lucas::primitive_divisors(ctx, luc_n);
                std::cout << "primitive divisors:";
                for (const auto& q : prim)
                    std::cout << ' ' << q;
                std::cout << (prim.empty() ? " none (defective)" : "") << "\n";
            }
            return 0;
        }

        if (*qrt) {
            quartic::QuarticCurve c{parse_int(q_A), parse_int(q_c4), parse_int(q_c2), parse_int(q_c0), parse_prime_list(q_s)};
            const auto pts = quartic::find_points(c, q_height, default_job_count());
            std::cout << c.to_string() << ", height " << q_height << ": " << pts.size()
                      << " point(s)\n";
            for (const auto& p : pts)
                std::cout << "  " << p.to_string() << "\n";
            return 0;
        }

        if (*mor) {
            const Int D = parse_int(mor_D);
            const auto f = s_factor(D);
            mordell::MordellInstance inst{mor_e, D, f.exponents};
            const Int ymax = integer_nth_root(parse_int(mor_max_rhs), mor_e).root;
            const auto pts = mordell::search_points(inst, mor_height, ymax);
            std::cout << inst.to_string() << ", height " << mor_height << ": " << pts.size()
                      << " point(s), X up to sign\n";
            for (const auto& p : pts)
                std::cout << "  " << p.to_string(mor_e) << "\n";
            return 0;
        }

        if (*des) {
            const auto b = des_bounds.bounds();
            const auto r = descent::solve_prime_case(des_p, b);
            const auto j = pl::descent_json(r);
            if (des_fmt == "json") {
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            if (des_fmt != "text")
                throw std::invalid_argument("descend: format must be json or text");
            for (const auto& t : r.cases) {
                const auto& c = t.descent_case;
                std::cout << "case d = " << c.d << ", q = " << c.q << "\n";
                for (const auto& br : c.branches) {
                    std::cout << "  " << br.shape << "\n   ";
                    for (const auto& s : br.sieve.conclusions())
                        std::cout << ' ' << s << ';';
                    std::cout << "\n";
                }
                for (const auto& ct : t.curves) {
                    std::cout << "  " << ct.curve.to_string() << ": " << ct.points.size()
                              << " point(s)\n";
                    for (const auto& p : ct.points)
                        std::cout << "    " << p.to_string() << "\n";
                    for (const auto& s : ct.solutions)
                        std::cout << "    -> " << s.to_string() << "\n";
                }
            }
            for (const auto& rt : r.routes) {
                std::cout << "defective alpha = " << rt.alpha.to_string() << ", y = " << rt.y << ":";
                for (const auto& s : rt.solutions)
                    std::cout << ' ' << s.to_string();
                std::cout << (rt.solutions.empty() ? " no solution" : "") << "\n";
            }
            std::cout << "solutions:";
            for (const auto& s : r.solutions)
                std::cout << ' ' << s.to_string();
            std::cout << "\nexcluded classes (oracle):";
            for (const auto& s : r.excluded_solutions)
                std::cout << ' ' << s.to_string();
            std::cout << "\nrigor ledger:\n";
            for (const auto& e : r.ledger)
                std::cout << "  [" << rigor_name(e.rigor) << "] " << e.claim << ": " << e.detail << "\n";
            return 0;
        }

        if (*cls) {
            for (unsigned long d : cls_d) {
                const auto r = qfield::class_number(d);
                std::cout << "d = " << d << ", discriminant " << r.discriminant << ", h = " << r.h
                          << ", primes of h:";
                if (r.h > 1)
                    for (const auto& p : prime_divisors(Int(r.h)))
                        std::cout << ' ' << p;
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
