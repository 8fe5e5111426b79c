#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bilin/laurent.hpp"

namespace bilin {

/// Parse failure with 1-based line information for diagnostics.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Dense grid of Laurent polynomials (one coefficient matrix of one product).
class CoeffGrid {
public:
    CoeffGrid() = default;
    CoeffGrid(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    LaurentPoly& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
    const LaurentPoly& at(int r, int c) const { return cells_[static_cast<std::size_t>(r) * cols_ + c]; }
    friend bool operator==(const CoeffGrid&, const CoeffGrid&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> cells_;
};

/// A bilinear matrix-multiplication algorithm: T products, with gamma the
/// result-side coefficients (rows indexed by the row of C, columns by the
/// column of C), alpha the A-side and beta the B-side coefficients.
struct BilinearAlgorithm {
    std::string name;
    int n1 = 0, n2 = 0, n3 = 0;
    int length = 0;
    std::vector<CoeffGrid> gamma;  // length grids of n1 x n3
    std::vector<CoeffGrid> alpha;  // length grids of n1 x n2
    std::vector<CoeffGrid> beta;   // length grids of n2 x n3

    int N1() const { return n1 * n3; }
    int N2() const { return n1 * n2; }
    int N3() const { return n2 * n3; }

    /// Shape consistency; throws std::invalid_argument on violation.
    void validate() const;
};

struct MultiTermEntry {
    std::string tensor;  // "gamma" | "alpha" | "beta"
    int t = 0;           // 1-based product index
    int row = 0, col = 0;  // 1-based
    LaurentPoly poly;
    friend bool operator==(const MultiTermEntry&, const MultiTermEntry&) = default;
};

struct CoefficientCensus {
    std::int64_t total_slots = 0;
    std::int64_t nonzero = 0;
    std::int64_t monomials = 0;
    std::vector<MultiTermEntry> multi_term;
    std::map<int, std::int64_t> exponent_histogram;
    int order_span = 0;  // max exponent - min exponent over nonzero coefficients
};

enum class Encoding { Decimal, Poly };

/// Decodes one tableau entry in the decimal-at-x=0.1 encoding: each decimal
/// digit must be 0 or 1; a 1 at place value 10^e becomes the term x^-e, and
/// a leading '-' negates every term. Throws std::invalid_argument for any
/// digit outside {0,1} or malformed input.
LaurentPoly decode_decimal_entry(std::string_view text);

/// Inverse of decode_decimal_entry. Requires every coefficient in {-1,+1}
/// with a single shared sign; throws std::invalid_argument otherwise,
/// directing callers to the poly encoding.
std::string encode_decimal_entry(const LaurentPoly& poly);

/// Parses the "BILIN v1" tableau format. Distinct diagnostics (with line
/// numbers) for header problems, shape mismatches, bad entries, duplicate
/// or out-of-order t blocks and missing blocks.
BilinearAlgorithm parse_algorithm(std::string_view text);
BilinearAlgorithm parse_algorithm_file(const std::string& path);

/// Canonical serialization (single spaces, \n line endings). Decimal
/// encoding requires all entries encodable; failures carry tensor/t/row/col.
std::string serialize_algorithm(const BilinearAlgorithm& alg, Encoding enc);

/// Built-in algorithms:
///   "classical-<n1>x<n2>x<n3>"  (e.g. classical-2x2x2)
///   "strassen-2x2x2"
///   "smirnov-4x4x4-46"  (loaded from the data directory)
/// Throws std::invalid_argument for unknown names.
BilinearAlgorithm builtin(const std::string& name);

/// True if the name is recognized by builtin().
bool is_builtin_name(const std::string& name);

/// Directory containing the shipped tableau data files. Honors the
/// BILIN_DATA_DIR environment variable, falling back to the build-time
/// location of <repo>/data.
std::string data_directory();

CoefficientCensus census(const BilinearAlgorithm& alg);

}  // namespace bilin
