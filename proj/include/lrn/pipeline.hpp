#pragma once

#include "lrn/core.hpp"
#include "lrn/descent.hpp"
#include "lrn/mordell.hpp"
#include "lrn/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrn::pipeline {

struct SolveReport {
    std::string subject;
    std::optional<unsigned> n;
    std::string branch;  // families | mordell | descent | composite | tables
    SearchBounds bounds;
    std::vector<Solution> solutions;  // each passes verify_solution
    std::vector<Solution> excluded;   // found by the oracle inside excluded classes
    std::vector<RigorEntry> ledger;
    std::vector<std::string> failures;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    bool ok() const { return failures.empty(); }
};

/// Solutions whose y is a perfect t-th power, rewritten as (x, y^(1/t), k, l, m, n t).
std::vector<Solution> power_filter(const std::vector<Solution>& sols, unsigned t);

/// Largest prime p >= 5 dividing n, or 0.
unsigned descent_prime(unsigned n);

/// Dispatches n to the families (n <= 2), the curve searches (n = 3, 4), the
/// descent (prime n >= 5) or a reduction to one of those (composite n).
SolveReport solve(unsigned n, const SearchBounds& bounds);

/// Verifies the given tables row by row. With every table selected, the
/// cross-checks (perfect-power filter between tables, descent at n = 5 and
/// n = 10) run as well. `m_restriction` keeps only rows with that m.
SolveReport verify_tables(std::span<const oracle::TableId> ids,
                          const oracle::TableStore& store = oracle::TableStore{},
                          std::optional<unsigned> m_restriction = std::nullopt);

SolveReport verify_all_tables(const oracle::TableStore& store = oracle::TableStore{},
                              std::optional<unsigned> m_restriction = std::nullopt);

enum class Format { Json, Csv, Text };

/// Throws std::invalid_argument for anything but json, csv or text.
Format parse_format(std::string_view s);

/// json: versioned object with stable field order; csv: solutions only, under
/// the table header x,y,k,l,m,n; text: summary with the rigor ledger.
std::string emit_report(const SolveReport& report, Format format);

nlohmann::ordered_json solution_json(const Solution& s);
nlohmann::ordered_json bounds_json(const SearchBounds& b);
nlohmann::ordered_json ledger_json(const std::vector<RigorEntry>& ledger);
nlohmann::ordered_json descent_json(const descent::PrimeCaseReport& r);
nlohmann::ordered_json mordell_json(const mordell::MordellReport& r);

}  // namespace lrn::pipeline
