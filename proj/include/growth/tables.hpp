#pragma once

#include <string>
#include <vector>

namespace growth {

// One row of a reference table: a key (n, k or level) and its expected columns.
struct GoldenRow {
    int key = 0;
    std::vector<std::string> values;
};

struct GoldenTable {
    int id = 0;
    std::vector<std::string> header;
    std::vector<GoldenRow> rows;
};

// Tables shipped in data/golden, compiled into the library.
const GoldenTable& golden_table(int id);
GoldenTable parse_golden_csv(int id, const std::string& text);

struct ReproducedRow {
    int key = 0;
    std::vector<std::string> computed;
    std::vector<std::string> expected;
    bool match = false;
    std::string note;
};

struct Reproduction {
    int id = 0;
    std::vector<std::string> header;
    std::vector<ReproducedRow> rows;
    std::vector<int> skipped;  // golden keys above the size limit
    bool ok() const;
};

// Default largest key recomputed per table; the remaining rows are expensive.
int default_table_limit(int id);

// Recomputes every golden row with key <= limit (default_table_limit if < 0).
// Counts must match exactly, bounds within `tol`.
Reproduction reproduce_table(int id, int limit = -1, double tol = 2e-5);

// Deterministic CSV: header plus computed, expected and status per row.
std::string to_csv(const Reproduction& r);

}  // namespace growth
