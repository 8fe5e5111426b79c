#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bilin/rational.hpp"

namespace bilin {

/// Dense row-major matrix over double (default) or exact Rational scalars.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dims");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using MatrixD = Matrix<double>;
using MatrixQ = Matrix<Rational>;

/// Reads a CSV matrix (one row per line, ','-separated decimal numbers;
/// blank lines ignored). Dimensions inferred; ragged rows are an error.
MatrixD read_matrix_csv(std::istream& in);
MatrixD read_matrix_csv_file(const std::string& path);

/// Exact-mode CSV: entries are integers or p/q rationals.
MatrixQ read_matrix_csv_exact(std::istream& in);
MatrixQ read_matrix_csv_exact_file(const std::string& path);

/// Writes CSV with round-trippable precision (17 significant digits).
void write_matrix_csv(std::ostream& out, const MatrixD& m);
void write_matrix_csv(std::ostream& out, const MatrixQ& m);

}  // namespace bilin
