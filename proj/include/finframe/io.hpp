#pragma once

// Matrix files. JSON: {"rows":R,"cols":C,"complex":false,"data":[...]} with
// row-major data, complex entries as [re, im]. CSV: real entries only, one
// matrix row per line, no header. Numbers are written with 17 significant
// digits so that a write/read cycle is exact.

#include "finframe/errors.hpp"
#include "finframe/numerics.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace finframe {

/// Unreadable file or malformed contents.
class FormatError : public Error {
public:
    using Error::Error;
};

enum class MatrixFormat { Json, Csv };

inline std::string format_number(double v) {
    if (v == 0.0) {
        return "0"; // also folds -0
    }
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

inline std::string to_json(const Matrix& m) {
    const bool cplx = !m.is_real();
    std::string out = "{\"rows\":" + std::to_string(m.rows()) + ",\"cols\":" + std::to_string(m.cols()) +
                      ",\"complex\":" + (cplx ? "true" : "false") + ",\"data\":[";
    bool first = true;
    for (const auto& z : m.data()) {
        if (!first) {
            out += ',';
        }
        first = false;
        if (cplx) {
            out += '[' + format_number(z.real()) + ',' + format_number(z.imag()) + ']';
        } else {
            out += format_number(z.real());
        }
    }
    out += "]}\n";
    return out;
}

inline std::string to_csv(const Matrix& m) {
    if (!m.is_real()) {
        throw FormatError("CSV matrices must be real");
    }
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += format_number(m(i, j).real());
        }
        out += '\n';
    }
    return out;
}

inline Matrix parse_json_matrix(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("matrix JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
        throw FormatError("matrix JSON: expected object with rows, cols, data");
    }
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["data"].is_array()) {
        throw FormatError("matrix JSON: rows/cols must be non-negative integers and data an array");
    }
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    const bool cplx = j.contains("complex") && j["complex"].is_boolean() && j["complex"].get<bool>();
    const auto& data = j["data"];
    if (data.size() != rows * cols) {
        throw FormatError("matrix JSON: data has " + std::to_string(data.size()) + " entries, expected " +
                          std::to_string(rows * cols));
    }
    std::vector<Scalar> z;
    z.reserve(data.size());
    for (const auto& e : data) {
        if (cplx) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw FormatError("matrix JSON: complex entries must be [re, im]");
            }
            z.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            if (!e.is_number()) {
                throw FormatError("matrix JSON: real entries must be numbers");
            }
            z.emplace_back(e.get<double>(), 0.0);
        }
    }
    try {
        return Matrix(rows, cols, std::move(z));
    } catch (const Error& e) {
        throw FormatError(std::string("matrix JSON: ") + e.what());
    }
}

inline Matrix parse_csv_matrix(std::string_view text) {
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            continue;
        }
        std::size_t fields = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            std::string_view field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
            while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
                field.remove_prefix(1);
            }
            while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) {
                field.remove_suffix(1);
            }
            if (!field.empty() && field.front() == '+') {
                field.remove_prefix(1);
            }
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
                throw FormatError("matrix CSV: bad number '" + std::string(field) + "' on row " +
                                  std::to_string(rows + 1));
            }
            values.push_back(v);
            ++fields;
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (rows == 0) {
            cols = fields;
        } else if (fields != cols) {
            throw FormatError("matrix CSV: row " + std::to_string(rows + 1) + " has " + std::to_string(fields) +
                              " fields, expected " + std::to_string(cols));
        }
        ++rows;
    }
    if (rows == 0) {
        throw FormatError("matrix CSV: no data");
    }
    try {
        return Matrix::from_real(rows, cols, values);
    } catch (const Error& e) {
        throw FormatError(std::string("matrix CSV: ") + e.what());
    }
}

/// JSON when the text starts with '{', otherwise CSV.
inline Matrix parse_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        return parse_json_matrix(text);
    }
    return parse_csv_matrix(text);
}

inline MatrixFormat format_for_path(const std::filesystem::path& p) {
    return p.extension() == ".csv" ? MatrixFormat::Csv : MatrixFormat::Json;
}

inline std::string serialize(const Matrix& m, MatrixFormat fmt) {
    return fmt == MatrixFormat::Csv ? to_csv(m) : to_json(m);
}

inline std::string read_text_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open " + p.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Matrix read_matrix(const std::filesystem::path& p) { return parse_matrix(read_text_file(p)); }

inline void write_text_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("cannot write " + p.string());
    }
    out << text;
    if (!out) {
        throw FormatError("write failed: " + p.string());
    }
}

inline void write_matrix(const std::filesystem::path& p, const Matrix& m) {
    write_text_file(p, serialize(m, format_for_path(p)));
}

/// Vectors are stored as N x 1 matrices; a 1 x N matrix is also accepted.
inline Vector matrix_to_vector(const Matrix& m) {
    if (m.cols() == 1) {
        return m.column(0);
    }
    if (m.rows() == 1) {
        return m.row(0);
    }
    throw FormatError("expected a vector (N x 1 or 1 x N), got " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()));
}

inline Matrix vector_to_matrix(std::span<const Scalar> v) { return Matrix(v.size(), 1, Vector(v.begin(), v.end())); }

} // namespace finframe
