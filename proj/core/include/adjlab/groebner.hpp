// Buchberger's algorithm with the Gebauer-Moeller product and chain
// criteria, sugar-tiebroken normal pair selection, and explicit budgets.
// Exceeding a budget throws; the algorithm never returns a wrong basis.
#pragma once

#include <cstdint>
#include <vector>

#include "adjlab/polynomial.hpp"

namespace adjlab {

struct GroebnerBudget {
  std::int64_t max_degree = 96;      // cap on S-pair lcm total degree
  std::int64_t max_pairs = 2000000;  // cap on S-pairs processed
  std::int64_t max_basis = 50000;    // cap on intermediate basis size
};

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis in the ring's order: self-reduced, monic
/// leading terms, sorted descending by leading monomial. Deterministic
/// for fixed input and order.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const GroebnerBudget& budget = {});

/// Full normal form of f modulo a (not necessarily reduced) basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

}  // namespace adjlab
