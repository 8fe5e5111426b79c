#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bilin/algorithm.hpp"
#include "bilin/laurent.hpp"

namespace bilin {

/// One residual slot of Brent's system, 1-based indices:
/// (i1,i2) over C, (j1,j2) over A, (k1,k2) over B.
using ResidualIndex = std::array<int, 6>;

/// Symbolic verification result. is_exact <=> objective == 0; APA validity
/// means every residual has order >= 1 (vanishes as x -> 0).
struct VerificationReport {
    bool is_exact = false;
    bool is_apa_valid = false;
    bool min_order_finite = false;
    int min_residual_order = 0;  // meaningful when min_order_finite
    std::vector<ResidualIndex> worst_indices;
    LaurentPoly objective;  // S, exact
    std::int64_t residual_count_nonzero = 0;
};

/// The matrix-multiplication target tensor
/// L = delta(i1,j1) * delta(j2,k1) * delta(i2,k2), indices 1-based.
/// Throws std::out_of_range for indices outside the algorithm dims.
int target_tensor(const BilinearAlgorithm& alg, int i1, int i2, int j1, int j2, int k1,
                  int k2);

/// Exact residual sum_t gamma^t[i1,i2] * alpha^t[j1,j2] * beta^t[k1,k2] - L.
LaurentPoly residual(const BilinearAlgorithm& alg, int i1, int i2, int j1, int j2, int k1,
                     int k2);

/// Runs the full verification: all N1*N2*N3 residuals, exact objective
/// S = sum of squared residuals, validity flags and worst indices.
/// Honors BILIN_THREADS for parallel residual computation (the exact
/// integer reduction is order-independent).
VerificationReport verify(const BilinearAlgorithm& alg);

/// All nonzero residuals with their indices, for debugging transcriptions.
std::vector<std::pair<ResidualIndex, LaurentPoly>> nonzero_residuals(
    const BilinearAlgorithm& alg);

/// eval(S, x); domain error propagates from LaurentPoly::eval.
double objective_value(const BilinearAlgorithm& alg, double x);

/// Human-readable report; S truncated at exponent `s_truncate` (pass
/// a large bound for the full polynomial).
std::string format_report(const VerificationReport& report, const CoefficientCensus& cens,
                          int s_truncate = 8);

}  // namespace bilin
