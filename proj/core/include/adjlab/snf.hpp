// Elementary divisors of the Jacobian matrix along an arc: Smith normal
// form over truncated power series by fraction-free pivoting on the entry
// of minimal t-order, with unit-part inversion to precision.
#pragma once

#include "adjlab/jets.hpp"

namespace adjlab {

using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

struct SnfResult {
  std::vector<std::size_t> divisors;  // e_1 <= ... <= e_c
  SeriesMatrix left;                  // P, c x c, unimodular over k[[t]]
  SeriesMatrix right;                 // Q, N x N, unimodular over k[[t]]
  std::size_t valid_precision;        // P * Jac * Q = diag(t^e) holds mod t^this
};

SeriesMatrix series_matrix_mul(const SeriesMatrix& A, const SeriesMatrix& B);

/// Requires the arc to lie on Y; throws PrecisionError when some divisor
/// is not determined below the arc's precision.
SnfResult elementary_divisors_along_arc(const AffineSubscheme& Y,
                                        const TruncatedArc& arc);

}  // namespace adjlab
