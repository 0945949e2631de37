// Conductors of l.c.i. slices, divisorial powers O_X(-rD) as reflexive
// hulls, the slice-sum and colon constructions of the weak l.c.i. defect,
// and the self-certifying colon inversion recovering J_{r,X} from a slice.
// All ideals on X are ambient ideals containing I_X.
#pragma once

#include "adjlab/jacobian.hpp"
#include "adjlab/pfaffian.hpp"

namespace adjlab {

/// Image of the residual ideal in O_X: residual + I_X.
Ideal conductor_on_x(const AffineSubscheme& X, const LciSlice& Y);

struct NonzerodivisorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reflexive hull of a^r on X, computed as ((f) : ((f) : a^r)) in O_X for
/// a nonzerodivisor f in a^r; independence of f is spot-checked against a
/// second choice when one exists.
Ideal divisorial_power(const Ideal& a_on_x, std::uint32_t r,
                       const AffineSubscheme& X, const GroebnerBudget& budget = {});

struct WeakDefectSum {
  Ideal ideal;
  bool stabilized;
  std::size_t slices_used;
};

/// Sum over seeded general slices of O_X(-rD^Y); stops after two
/// consecutive equal partial sums or when the seeds run out.
WeakDefectSum weak_defect_sum(const AffineSubscheme& X, std::uint32_t r,
                              const std::vector<std::uint64_t>& seeds,
                              const SliceOptions& opts = {});

/// Same summation over explicitly supplied slices (all are used).
WeakDefectSum weak_defect_sum_slices(const AffineSubscheme& X, std::uint32_t r,
                                     const std::vector<LciSlice>& slices,
                                     const GroebnerBudget& budget = {});

/// [(J'_X)^r + I_X : J_rX] in O_X.
Ideal weak_defect_colon(const AffineSubscheme& X, std::uint32_t r,
                        const Ideal& j_rx, const GroebnerBudget& budget = {});

struct Eq3UndeterminedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct JrxResult {
  Ideal ideal;               // candidate J_{r,X} representative on X
  bool verified;             // re-multiplication matched up to saturation
  std::size_t slices_used;
};

/// Candidate J_{r,X} from one slice: ((J'_Y O_X)^r : O_X(-rD^Y)), verified
/// by re-multiplying up to saturation by O_X(-rD^Y). On failure,
/// candidates from extra seeded slices are intersected and re-verified;
/// throws Eq3UndeterminedError when every attempt fails.
JrxResult jrx_from_slice(const AffineSubscheme& X, const LciSlice& Y,
                         std::uint32_t r,
                         const std::vector<std::uint64_t>& extra_seeds = {},
                         const SliceOptions& opts = {});

}  // namespace adjlab
