#pragma once

#include "lrn/oracle.hpp"

#include <filesystem>
#include <fstream>
#include <string>

namespace lrn::fixtures {

// Fresh copy of the table assets under the temp directory.
inline std::filesystem::path table_copy(const std::string& name)
{
    using namespace lrn::oracle;
    auto dir = std::filesystem::temp_directory_path() / ("lrn_fixture_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (auto id : kAllTables)
        std::filesystem::copy_file(TableStore{LRN_TEST_TABLE_DIR}.path(id),
                                   dir / std::string(table_file(id)));
    return dir;
}

// Rewrites the asset with x + 1 in its first data row.
inline void corrupt_first_row(const std::filesystem::path& dir, oracle::TableId id)
{
    using namespace lrn::oracle;
    auto rows = TableStore{dir}.load(id);
    rows[0].solution.x += 1;
    std::ofstream out(dir / std::string(table_file(id)));
    out << "x,y,k,l,m,n\n";
    for (auto& r : rows) {
        const auto& s = r.solution;
        out << s.x << ',' << s.y << ',' << s.k << ',' << s.l << ',' << s.m << ',' << s.n << '\n';
    }
}

}  // namespace lrn::fixtures
