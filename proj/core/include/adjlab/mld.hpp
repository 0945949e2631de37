// Minimal log discrepancies of monomial pairs over the origin: exact
// piecewise-linear lattice optimization. The objective
//   f(w) = sum w_i - sum_j a_j * ord_w(I_j)
// is minimized over strictly positive (lattice) weight vectors by exact
// LP per linearity region plus branch-and-bound over lattice points;
// unboundedness below is detected on the homogeneous cross-section and
// certified by an explicit negative direction.
#pragma once

#include "adjlab/lp.hpp"
#include "adjlab/qideal.hpp"

namespace adjlab {

struct MonomialPair {
  // smooth case: arity N of the ambient affine space (quotient_order = 1);
  // quotient case: chart dimension N for A^N / (1/m)(a_1..a_N)
  std::size_t arity = 0;
  std::uint32_t quotient_order = 1;
  std::vector<std::int64_t> quotient_weights;  // size = arity when order > 1
  // boundary factors: monomial generator exponents with rational exponents
  struct Factor {
    Rational exponent;
    std::vector<ExponentVec> gens;
  };
  std::vector<Factor> boundary;

  void validate() const;
  bool is_quotient() const { return quotient_order > 1; }
};

MonomialPair pair_from_qideal(std::size_t arity, const QIdeal& Q);

struct MldResult {
  bool minus_infinity = false;
  Rational value;                       // meaningful unless minus_infinity
  std::vector<Rational> witness;        // lattice weight attaining the value
  std::vector<Rational> neg_direction;  // homogeneous direction with f < 0
  bool log_canonical = false;           // mld >= 0
  bool klt_possible = false;            // mld > 0 (necessary for klt only)
  std::vector<std::string> certificates;  // per-region LP lower bounds
};

/// f at a given strictly positive rational weight (quotient case: the
/// weight must lie in the chart lattice).
Rational log_discrepancy_at_weight(const std::vector<Rational>& w,
                                   const MonomialPair& pair);

struct MldOptions {
  std::size_t max_regions = 200000;
  std::size_t max_nodes = 200000;
};

/// Exact infimum over strictly positive lattice weights (the monomial
/// valuations); smooth-ambient case.
MldResult mld_monomial(const MonomialPair& pair, const MldOptions& opts = {});

/// Cyclic-quotient chart: infimum over strictly positive points of
/// Z^N + Z*(a/m).
MldResult mld_toric_quotient(const MonomialPair& pair, const MldOptions& opts = {});

struct InversionReport {
  Rational left;    // mld of (X, defect boundary)
  Rational right;   // mld of (A, I_X^c)
  bool left_minus_infinity = false;
  bool right_minus_infinity = false;
  bool equal = false;
  std::string detail;
};

/// The comparison identity on exactly computable instances:
/// coordinate subspaces V(x_1..x_c) in A^(d+c).
InversionReport inversion_check_subspace(std::size_t d, std::size_t c,
                                         const GroebnerBudget& budget = {});

/// ... and the node-in-plane case X = V(x-y) in A^2 (the engine applies
/// the linear change of coordinates that makes the boundary monomial).
InversionReport inversion_check_node(const GroebnerBudget& budget = {});

}  // namespace adjlab
