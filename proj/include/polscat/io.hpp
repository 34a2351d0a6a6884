/**
 * @file io.hpp
 * @brief Matrix-file parsing, the analyze report, and output formatting
 *        shared by the command-line tool.
 *
 * Input formats (auto-detected):
 *  - CSV: four text lines of four comma-separated decimal numbers;
 *  - JSON: an object with key "mueller" holding a 4x4 row array.
 * Both are locale-independent (dot decimal separator; parsing uses
 * std::from_chars).  Files must contain exactly 16 finite numbers.
 *
 * Emitted tables print numbers with 12 significant digits ("%.12g"), enough
 * for re-parsing to reproduce derived quantities to well below 1e-9.
 */

#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polscat/bounds.hpp"
#include "polscat/mueller.hpp"

namespace polscat {

/// Malformed input file or value; the CLI maps this to exit code 1.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_number(std::string field, const char* context) {
    // Trim surrounding whitespace; tolerate a leading '+'.
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!field.empty() && is_space(field.front())) field.erase(field.begin());
    while (!field.empty() && is_space(field.back())) field.pop_back();
    if (!field.empty() && field.front() == '+') field.erase(field.begin());
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty())
        throw ParseError(std::string(context) + ": cannot parse number '" + field + "'");
    if (!std::isfinite(value))
        throw ParseError(std::string(context) + ": non-finite number '" + field + "'");
    return value;
}

inline Mat4d matrix_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("JSON parse error: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("mueller"))
        throw ParseError("JSON input must be an object with key \"mueller\"");
    const auto& rows = doc["mueller"];
    if (!rows.is_array() || rows.size() != 4)
        throw ParseError("\"mueller\" must hold exactly 4 rows");
    Mat4d m{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != 4)
            throw ParseError("each \"mueller\" row must hold exactly 4 numbers");
        for (std::size_t j = 0; j < 4; ++j) {
            if (!row[j].is_number())
                throw ParseError("matrix entries must be numbers");
            const double v = row[j].get<double>();
            if (!std::isfinite(v)) throw ParseError("matrix entries must be finite");
            m[i][j] = v;
        }
    }
    return m;
}

inline Mat4d matrix_from_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) lines.push_back(line);
    }
    if (lines.size() != 4)
        throw ParseError("matrix file must hold exactly 4 non-empty rows, found " +
                         std::to_string(lines.size()));
    Mat4d m{};
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream row(lines[i]);
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 4)
            throw ParseError("row " + std::to_string(i + 1) + " must hold exactly 4 numbers");
        for (std::size_t j = 0; j < 4; ++j)
            m[i][j] = parse_number(fields[j], "matrix entry");
    }
    return m;
}

} // namespace detail

/// Parse a 4x4 matrix document (CSV or JSON, auto-detected) from a string.
inline Mat4d parse_matrix_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty matrix file");
    if (text[first] == '{') return detail::matrix_from_json(text);
    return detail::matrix_from_csv(text);
}

/// Read and parse a matrix file from disk.
inline Mat4d read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_text(buf.str());
}

/// Which side of an interior curve a point falls on: "above", "below",
/// "on" (within tol), or "n/a" when d is outside the curve's D-range.
inline std::string curve_side(CurveId c, double d, double e, double tol = 1e-9) {
    const auto [lo, hi] = curve_d_range(c);
    if (d < lo - tol || d > hi + tol) return "n/a";
    const double ec = curve_e_at(c, std::fmin(hi, std::fmax(lo, d)));
    if (std::abs(e - ec) <= tol) return "on";
    return e > ec ? "above" : "below";
}

/// State-diagram label of a (d, e) point relative to the interior curves.
inline std::string region_label(double d, double e) {
    return "C13:" + curve_side(CurveId::C13, d, e) + " C24:" + curve_side(CurveId::C24, d, e);
}

/// Full characterization of one Mueller matrix.
struct ResultReport {
    double d_m = 0.0;
    double e_m = 0.0;
    std::array<double, 4> eigenvalues{}; // raw H spectrum, descending
    bool physical = false;
    double min_eigenvalue = 0.0;
    std::string region;
};

/**
 * Characterize a (normalized) Mueller matrix.  Never throws on unphysical
 * input -- the verdict is part of the report; the eigenvalues are the raw H
 * spectrum and the entropy uses the 0*log(0) convention on them.
 */
inline ResultReport analyze_mueller(const MuellerMatrix& m, double tol = 1e-9) {
    ResultReport r;
    r.eigenvalues = jacobi_eigenvalues(h_from_mueller(m).h);
    r.min_eigenvalue = r.eigenvalues[3];
    r.physical = r.min_eigenvalue >= -tol;
    r.d_m = depolarization_index_from_m(m);
    double e = 0.0;
    for (double l : r.eigenvalues) e -= xlog4(l);
    r.e_m = std::fmin(1.0, std::fmax(0.0, e));
    r.region = region_label(r.d_m, r.e_m);
    return r;
}

/// Format with 12 significant digits, locale-independent.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace polscat
