#include "pointscat/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace pointscat {

void Table::add_row(const std::vector<std::complex<double>>& row) {
    if (row.size() != columns.size())
        throw IoFailure("table row width does not match the column count");
    rows.push_back(row);
}

std::string format_double(double v) {
    if (!std::isfinite(v)) throw IoFailure("non-finite value in serialized output");
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const Table& t, const std::vector<std::string>& preamble) {
    std::string out;
    for (const std::string& line : preamble) {
        out += "# ";
        out += line;
        out += "\n";
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ",";
        if (t.columns[c].is_complex) {
            out += t.columns[c].name + "_re," + t.columns[c].name + "_im";
        } else {
            out += t.columns[c].name;
        }
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out += ",";
            out += format_double(row[c].real());
            if (t.columns[c].is_complex) {
                out += ",";
                out += format_double(row[c].imag());
            }
        }
        out += "\n";
    }
    return out;
}

std::string rows_to_json(const Table& t) {
    std::string out = "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n  {" : "\n  {";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out += ", ";
            out += "\"" + t.columns[c].name + "\": ";
            if (t.columns[c].is_complex) {
                out += "{\"re\": " + format_double(t.rows[r][c].real()) +
                       ", \"im\": " + format_double(t.rows[r][c].imag()) + "}";
            } else {
                out += format_double(t.rows[r][c].real());
            }
        }
        out += "}";
    }
    out += t.rows.empty() ? "]" : "\n]";
    return out;
}

} // namespace pointscat
