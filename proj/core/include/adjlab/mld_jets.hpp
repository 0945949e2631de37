// Finite-level jet-dimension estimator for mld upper bounds on a smooth
// ambient space: a contact stratum of unambiguous dimension at level n
// and order p yields the witness quantity
//   (dim - (n+1)N) + p * (boundary exponent),
// and any witness above -a certifies mld < a. Only strict upper bounds
// are ever certified; lower bounds are out of scope by design.
#pragma once

#include "adjlab/contact.hpp"
#include "adjlab/mld.hpp"

namespace adjlab {

struct JetWitness {
  std::size_t level;       // n
  std::size_t order;       // p
  int dim;                 // dim of the exact-order-p stratum closure
  Rational quantity;       // (dim - (n+1)N) + p*exponent
  bool ambiguous;          // exact-order dimension not separated
};

struct JetEstimateReport {
  bool any_witness = false;
  Rational best_quantity;          // max over unambiguous witnesses
  Rational implied_upper_bound;    // mld <= -best_quantity
  bool certifies_below_probe = false;  // best > -a_probe
  std::vector<JetWitness> witnesses;
};

/// Q must be a single-factor (or equal-exponent) monomial Q-ideal; Z cuts
/// out the centre through the base point of the jets.
JetEstimateReport mld_jet_estimate(std::size_t arity, const QIdeal& Q,
                                   const Ideal& Z, std::size_t n_max,
                                   const Rational& a_probe,
                                   const GroebnerBudget& budget = {});

}  // namespace adjlab
