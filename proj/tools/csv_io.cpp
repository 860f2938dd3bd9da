#include "csv_io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace fuzzy::io {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    std::istringstream is(s);
    is.imbue(std::locale::classic());
    is >> out;
    return !is.fail() && is.eof();
}

}  // namespace

Matrix parse_matrix_csv(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) lines.push_back(line);
    }
    std::size_t pos = 0;
    auto skip_blank = [&] {
        while (pos < lines.size() && trim(lines[pos]).empty()) ++pos;
    };
    skip_blank();
    bool labeled = false;
    Labels col_labels, row_labels;
    if (pos < lines.size() && trim(lines[pos]) == "#labels") {
        labeled = true;
        ++pos;
        skip_blank();
        if (pos >= lines.size()) throw ParseError("row " + std::to_string(pos + 1) + ": missing label header");
        auto header = split(lines[pos]);
        col_labels.assign(header.begin() + 1, header.end());
        ++pos;
    }
    std::vector<Vector> rows;
    std::size_t width = 0;
    for (; pos < lines.size(); ++pos) {
        if (trim(lines[pos]).empty()) continue;
        auto cells = split(lines[pos]);
        const std::size_t row_no = pos + 1;
        if (labeled) {
            row_labels.push_back(cells.front());
            cells.erase(cells.begin());
        }
        if (rows.empty()) {
            width = cells.size();
        } else if (cells.size() != width) {
            throw ParseError("row " + std::to_string(row_no) + ": expected " + std::to_string(width) +
                             " values, found " + std::to_string(cells.size()));
        }
        Vector row(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!parse_double(cells[c], row[c])) {
                throw ParseError("row " + std::to_string(row_no) + ", column " +
                                 std::to_string(c + 1 + (labeled ? 1 : 0)) + ": not a number: '" + cells[c] + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || width == 0) throw ParseError("matrix has no data rows");
    Matrix m = Matrix::from_rows(rows);
    if (labeled) {
        if (col_labels.size() != m.cols()) {
            throw ParseError("label header has " + std::to_string(col_labels.size()) + " labels for " +
                             std::to_string(m.cols()) + " columns");
        }
        m.set_col_labels(col_labels);
        m.set_row_labels(row_labels);
    }
    return m;
}

std::string format_number(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << v;
    // prefer the shortest form that reads back exactly
    for (int p = 1; p <= 17; ++p) {
        std::ostringstream t;
        t.imbue(std::locale::classic());
        t << std::setprecision(p) << v;
        double back = 0.0;
        if (parse_double(t.str(), back) && back == v) return t.str();
    }
    return os.str();
}

std::string serialize_matrix_csv(const Matrix& m) {
    std::ostringstream os;
    const bool labeled = !m.row_labels().empty() || !m.col_labels().empty();
    if (labeled) {
        os << "#labels\n";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << ',' << (m.col_labels().empty() ? "c" + std::to_string(j + 1) : m.col_labels()[j]);
        os << '\n';
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (labeled) os << (m.row_labels().empty() ? "r" + std::to_string(i + 1) : m.row_labels()[i]) << ',';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << format_number(m(i, j));
        os << '\n';
    }
    return os.str();
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix_csv(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Vector parse_number_list(const std::string& text) {
    Vector out;
    const auto cells = split(text);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        double v = 0.0;
        if (!parse_double(cells[i], v)) {
            throw ParseError("item " + std::to_string(i + 1) + ": not a number: '" + cells[i] + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty number list");
    return out;
}

Vector load_vector(const std::string& spec) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        Matrix m = read_matrix_file(spec);
        if (m.rows() != 1 && m.cols() != 1) {
            throw ParseError(spec + ": expected a single row or column, found " + m.shape());
        }
        return m.values();
    }
    return parse_number_list(spec);
}

}  // namespace fuzzy::io
