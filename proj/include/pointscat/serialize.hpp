#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pointscat/errors.hpp"

namespace pointscat {

// Homogeneous numeric result table; complex columns are split into _re/_im
// pairs in CSV and emitted as {"re":..., "im":...} objects in JSON. All
// output is deterministic: fixed column order, floats at 17 significant
// digits, no locale dependence.
struct Table {
    struct Column {
        std::string name;
        bool is_complex = false;
    };
    std::vector<Column> columns;
    std::vector<std::vector<std::complex<double>>> rows;

    void add_row(const std::vector<std::complex<double>>& row);
};

// 17-significant-digit float formatting shared by both writers.
std::string format_double(double v);

// CSV with a header row; `preamble` lines are emitted first, each prefixed
// with "# ". Throws IoFailure on non-finite values.
std::string to_csv(const Table& t, const std::vector<std::string>& preamble = {});

// JSON array of objects, one per row.
std::string rows_to_json(const Table& t);

} // namespace pointscat
