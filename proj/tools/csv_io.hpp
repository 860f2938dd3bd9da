#pragma once

#include "fuzzy/matrix.hpp"

#include <stdexcept>
#include <string>

namespace fuzzy::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Comma-separated numeric rows. A first line reading `#labels` means the next
// line holds column labels (after an empty corner cell) and every later row
// starts with its row label.
Matrix parse_matrix_csv(const std::string& text);
std::string serialize_matrix_csv(const Matrix& m);

Matrix read_matrix_file(const std::string& path);

Vector parse_number_list(const std::string& text);

// A comma list of numbers, or a path to a one-row or one-column CSV.
Vector load_vector(const std::string& spec);

std::string format_number(double v);

}  // namespace fuzzy::io
