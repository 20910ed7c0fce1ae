#pragma once

#include "lrn/core.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrn::oracle {

/// x^2 + b0^k b1^l b2^m == y^n exactly and gcd(x, y) == 1 (x, y >= 1).
bool verify_solution(const Solution& s, const PrimeBase& base = kDefaultBase);

/// The defining identity alone, ignoring coprimality.
bool identity_holds(const Solution& s, const PrimeBase& base = kDefaultBase);

struct OracleReport {
    unsigned n = 0;
    SearchBounds bounds;
    std::vector<Solution> found;  // sorted, duplicate-free
    std::size_t gcd_rejected = 0;  // square hits with gcd(x, y) > 1
    double elapsed_ms = 0;
    unsigned partitions = 1;
};

/// Even y admits no solution when the odd base primes generate a subgroup of
/// (Z/8)^* avoiding 7 (true for 2, 11, 19): x^2 + C is then 2 or 4 mod 8.
bool even_y_impossible(const PrimeBase& base);

/// Brute force: y-major over y^n <= max_rhs, C-minor over the S-smooth values
/// below y^n. Work is split into `bounds.job_count` disjoint y-shards.
/// Throws std::invalid_argument for n < 3 or invalid bounds.
OracleReport enumerate_solutions(unsigned n, const SearchBounds& bounds);

/// Like enumerate_solutions but with an explicit shard count, independent of
/// the thread count. Used to check partition independence.
OracleReport enumerate_solutions(unsigned n, const SearchBounds& bounds, unsigned partitions);

/// n = 2 by a direct x-scan: for each S-smooth C <= max_c, every x with
/// x^2 + C a square (x <= (C - 1) / 2). Coprime solutions only.
std::vector<Solution> enumerate_n2_by_scan(const Int& max_c, const Exponents& caps,
                                           const PrimeBase& base = kDefaultBase);

// ---------------------------------------------------------------------------
// Table assets

enum class TableId { T3, T612, T4, TP, Extra };

inline constexpr TableId kAllTables[] = {TableId::T3, TableId::T612, TableId::T4, TableId::TP,
                                         TableId::Extra};

std::string_view table_name(TableId id);
std::string_view table_file(TableId id);
/// Case-insensitive "t3" | "t612" | "t4" | "tp" | "extra"; throws otherwise.
TableId parse_table_id(std::string_view s);
/// Number of rows the published table has.
std::size_t expected_rows(TableId id);

struct TableRow {
    Solution solution;
    std::size_t line = 0;  // 1-based line in the CSV, header is line 1
};

class TableStore {
public:
    /// LRN_TABLE_DIR if set, else the data directory of the source tree.
    TableStore();
    explicit TableStore(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path(TableId id) const;
    /// Throws std::runtime_error if the asset is missing or malformed.
    std::vector<TableRow> load(TableId id) const;

private:
    std::filesystem::path dir_;
};

std::vector<TableRow> parse_table_csv(std::string_view text);

struct RowFailure {
    TableRow row;
    bool identity = false;
    Int gcd;
    std::vector<std::string> hints;  // nearby tuples that satisfy the identity
};

struct TableReport {
    TableId id = TableId::T3;
    std::vector<Solution> verified;
    std::vector<RowFailure> failures;
    std::size_t rows = 0;
    double elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

/// Re-verifies every row of one table asset.
TableReport verify_table(TableId id, const TableStore& store = TableStore{});

/// Explains a failing row: gcd, and single-field corrections (y, x, or the
/// exponent triple) that would satisfy the identity.
RowFailure diagnose_row(const TableRow& row);

}  // namespace lrn::oracle
