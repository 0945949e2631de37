// Jacobian matrices and the Jacobian ideal (I_X plus the codim-size
// minors of the Jacobian of its generators). When full minor enumeration
// exceeds the budget the ideal is built from randomly sampled minors and
// accepted only after two stable enlargement rounds.
#pragma once

#include "adjlab/slice.hpp"
#include "adjlab/subscheme.hpp"

namespace adjlab {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Rows = generators, columns = ambient variables.
PolyMatrix jacobian_matrix(const Ideal& I);

/// Exact determinant by Laplace expansion along the sparsest row.
Polynomial poly_det(const PolyMatrix& M, const RingPtr& ring);

/// The k x k minor of M with the given rows and columns.
Polynomial poly_minor(const PolyMatrix& M, const RingPtr& ring,
                      const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols);

struct JacobianOptions {
  std::uint64_t max_minors = 100000;  // full enumeration above this samples
  std::size_t sample_round = 512;     // minors added per sampling round
  int stable_rounds = 2;              // consecutive no-growth rounds to accept
  int max_rounds = 64;
  std::uint64_t seed = 1;
  GroebnerBudget budget = {};
};

struct JacobianIdealResult {
  Ideal ideal;    // I_X + minors, an ideal on X in the ambient ring
  bool sampled;   // true when the minor set was sampled, not enumerated
  std::uint64_t minors_used;
};

JacobianIdealResult jacobian_ideal(const AffineSubscheme& X,
                                   const JacobianOptions& opts = {});

}  // namespace adjlab
