// Fast exact paths for monomial ideals (colon, intersection, membership,
// minimal generators) and the Newton-polyhedron integral closure, which
// decides closure membership by rational LP over convex combinations of
// generator exponents.
#pragma once

#include "adjlab/ideal.hpp"
#include "adjlab/ideal_ops.hpp"

namespace adjlab {

/// Every generator is a single term.
bool is_monomial_ideal(const Ideal& I);

/// Exponents of the generators (requires monomial input).
std::vector<ExponentVec> monomial_exponents(const Ideal& I);

/// Drop exponents divisible by another; result sorted.
std::vector<ExponentVec> minimalize_monomials(std::vector<ExponentVec> es);

Ideal make_monomial_ideal(const RingPtr& ring, std::vector<ExponentVec> es);

Ideal monomial_intersection(const Ideal& I, const Ideal& J);
Ideal monomial_quotient_by_monomial(const Ideal& I, const ExponentVec& u);

/// u inside the Newton polyhedron conv(gens) + R_{>=0}^n?
bool newton_polyhedron_contains(const std::vector<ExponentVec>& gens,
                                const ExponentVec& u);

/// Integral closure of a monomial ideal: the monomial ideal of all
/// lattice points of the Newton polyhedron, minimally generated.
Ideal monomial_integral_closure(const Ideal& I);

struct SandwichCertificate {
  bool lower_contained = false;   // lower subset of I
  bool upper_contains = false;    // I subset of upper
  bool closures_equal = false;    // closure(lower) == closure(upper), when checked
  bool closure_checked = false;
  std::string failure_witness;    // offending generator, when a containment fails
  bool passed() const {
    return lower_contained && upper_contains && (!closure_checked || closures_equal);
  }
};

/// Checks lower subset of I subset of upper by membership; when both lower
/// and upper are monomial, additionally compares their integral closures.
SandwichCertificate sandwich_certificate(const Ideal& I, const Ideal& lower,
                                         const Ideal& upper,
                                         const GroebnerBudget& budget = {});

}  // namespace adjlab
