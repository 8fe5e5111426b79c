#pragma once

#include <cstdint>
#include <vector>

#include "bilin/algorithm.hpp"
#include "bilin/matrix.hpp"

namespace bilin {

/// Instrumentation for the executor: counts scalar multiplications of
/// form pairs (the T products per base-case application).
struct MulCounters {
    std::int64_t form_products = 0;
};

/// One side's linear forms: element t = sum over the grid of
/// eval(coeff, x) * entry, summed in row-major grid order.
/// `side` selects the coefficient tensor: 'a' = alpha (shape n1 x n2),
/// 'b' = beta (shape n2 x n3). Shape mismatch throws std::invalid_argument.
std::vector<double> linear_forms(const BilinearAlgorithm& alg, char side, const MatrixD& m,
                                 double x);

/// Applies the algorithm once: A (n1 x n2) times B (n2 x n3) at parameter x.
/// Exactly T form-pair products are performed and counted.
MatrixD multiply_once(const BilinearAlgorithm& alg, const MatrixD& a, const MatrixD& b,
                      double x, MulCounters* counters = nullptr);

/// Block-recursive application on n1^k x n2^k by n2^k x n3^k matrices
/// (pad = false), or arbitrary shapes zero-padded up to those sizes
/// (pad = true; padding stripped from the result). levels >= 1;
/// levels == 1 is exactly multiply_once. The same x is used at every level.
MatrixD multiply_recursive(const BilinearAlgorithm& alg, const MatrixD& a, const MatrixD& b,
                           double x, int levels, bool pad = false,
                           MulCounters* counters = nullptr);

/// Exact-rational single application, same schedule as multiply_once.
MatrixQ multiply_exact(const BilinearAlgorithm& alg, const MatrixQ& a, const MatrixQ& b,
                       const Rational& x, MulCounters* counters = nullptr);

/// Plain classical triple-loop product (reference; no blocking, no
/// compensated summation).
MatrixD classical_multiply(const MatrixD& a, const MatrixD& b);
MatrixQ classical_multiply(const MatrixQ& a, const MatrixQ& b);

}  // namespace bilin
