// Ideal-level operations: sum, product, power, intersection (single
// auxiliary variable + elimination), colon, saturation (iterated colon
// with reported stabilization exponent), elimination, Krull dimension.
#pragma once

#include <cstdint>

#include "adjlab/ideal.hpp"

namespace adjlab {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, std::uint32_t k);

Ideal ideal_intersection(const Ideal& I, const Ideal& J,
                         const GroebnerBudget& budget = {});

/// (I : J) = { f : f*J contained in I }, computed per generator of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J,
                     const GroebnerBudget& budget = {});

struct SaturationResult {
  Ideal ideal;
  int exponent;  // least k with (I : J^k) = (I : J^(k+1))
};

/// (I : J^infinity) as the stable value of the iterated colon.
SaturationResult saturation(const Ideal& I, const Ideal& J,
                            const GroebnerBudget& budget = {}, int max_iter = 256);

/// Generators of I not involving the given variables (the elimination
/// ideal), returned in the original ring.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars,
                const GroebnerBudget& budget = {});

/// Krull dimension of the quotient ring by I; kDimEmpty for the unit
/// ideal (empty variety).
constexpr int kDimEmpty = -1;
int krull_dimension(const Ideal& I, const GroebnerBudget& budget = {});

/// Equality after saturating both sides by S.
bool equal_mod_saturation(const Ideal& I, const Ideal& J, const Ideal& S,
                          const GroebnerBudget& budget = {});

/// The same ideal presented by its reduced basis (smaller generator sets
/// for downstream colon/intersection work).
Ideal compressed(const Ideal& I, const GroebnerBudget& budget = {});

/// Quotient f/g when g divides f exactly; throws otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace adjlab
