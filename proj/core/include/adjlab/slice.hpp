// General l.c.i. slices Y containing X: codimension-many random
// coefficient combinations of the generators of I_X, with genericity
// validated a posteriori (codimension, scheme-union, residual). The
// random source is the xorshift64* generator below; identical seeds give
// bit-identical slices on every platform.
#pragma once

#include "adjlab/subscheme.hpp"

namespace adjlab {

/// xorshift64* with uniform integers by rejection sampling.
class XorShift64 {
public:
  explicit XorShift64(std::uint64_t seed)
      : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_ * 0x2545f4914f6cdd1dull;
  }

  /// Uniform in [lo, hi], bias-free.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

private:
  std::uint64_t s_;
};

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LciSlice {
  Ideal slice_ideal;     // I_Y, codim-many combinations, codim(I_Y) = codim(X)
  Ideal residual_ideal;  // I_{C^Y} = (I_Y : I_X)
  std::uint64_t seed;    // 0 for an explicitly supplied slice
};

struct SliceOptions {
  int retries = 8;
  std::int64_t coeff_lo = -1000000;
  std::int64_t coeff_hi = 1000000;
  GroebnerBudget budget = {};
};

/// Seeded general slice with validation; throws GenericityError naming
/// the failed check after the configured retries.
LciSlice general_lci_slice(const AffineSubscheme& X, std::uint64_t seed,
                           const SliceOptions& opts = {});

/// Deterministic slice from explicit generators (must satisfy the same
/// validity checks as a random slice).
LciSlice explicit_slice(const AffineSubscheme& X, std::vector<Polynomial> gens,
                        const GroebnerBudget& budget = {});

}  // namespace adjlab
