// The jet-lifting fiber check: over a fixed level-n jet of an arc on an
// l.c.i. scheme, the level-m fiber is an affine space of dimension
// (m-n)d + e whenever m >= n+e >= 2e. The check solves the transformed
// lifting system triangularly with symbolic free coefficients and
// verifies every residual vanishes identically, which certifies the
// affine-space structure constructively.
#pragma once

#include "adjlab/snf.hpp"

namespace adjlab {

/// Raised when m >= n+e >= 2e fails; the operation refuses rather than
/// reporting a pass/fail.
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FiberCheckReport {
  std::size_t e = 0;
  std::vector<std::size_t> divisors;
  std::size_t expected_dim = 0;  // (m-n)d + e
  std::size_t measured_dim = 0;  // free symbols of the triangular solve
  bool affine_space = false;     // residuals vanished identically
  bool pass = false;
};

FiberCheckReport fiber_dimension_check(const AffineSubscheme& Y,
                                       const TruncatedArc& arc, std::size_t n,
                                       std::size_t m);

}  // namespace adjlab
