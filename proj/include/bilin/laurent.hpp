#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilin/rational.hpp"

namespace bilin {

/// Sparse Laurent polynomial in one indeterminate with exact 64-bit integer
/// coefficients. Exponents may be negative. Zero coefficients are never
/// stored; the zero polynomial has an empty term map. All arithmetic is
/// exact and throws std::overflow_error instead of wrapping.
class LaurentPoly {
public:
    using Terms = std::map<int, std::int64_t>;

    LaurentPoly() = default;

    /// Builds from (exponent, coefficient) pairs; duplicates are summed and
    /// zero terms dropped.
    explicit LaurentPoly(const std::vector<std::pair<int, std::int64_t>>& terms);

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly constant(std::int64_t c) { return monomial(0, c); }
    static LaurentPoly monomial(int exponent, std::int64_t coefficient);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    std::int64_t coefficient(int exponent) const;

    /// Minimum stored exponent; std::nullopt for the zero polynomial.
    std::optional<int> order() const;
    std::optional<int> max_exponent() const;

    /// Evaluates at x, summing terms in ascending exponent order. Throws
    /// std::domain_error when x == 0 and a negative exponent is present.
    double eval(double x) const;

    /// Exact evaluation at a rational point.
    Rational eval(const Rational& x) const;

    /// Truncates at an exponent bound: keeps terms with exponent < bound.
    LaurentPoly truncated_below(int bound) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

    /// Textual form per the `poly` grammar:
    ///   poly := term (('+'|'-') term)* ; term := uint | [uint] 'x' ['^' int]
    /// Examples: 0, 1, -1, x, -x^2, x^-1, x+x^2. No internal whitespace.
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);

private:
    void insert_term(int exponent, std::int64_t coefficient);
    Terms terms_;
};

/// x^e with checked integer exponentiation; e may be negative (x != 0).
double pow_int(double x, int e);

}  // namespace bilin
