// Exact rational linear programming: two-phase dictionary simplex with
// Bland's rule. No floating point; every optimum is a certified vertex.
#pragma once

#include <optional>
#include <vector>

#include "adjlab/field.hpp"

namespace adjlab {

enum class Rel { Le, Ge, Eq };

struct LinConstraint {
  std::vector<Rational> a;
  Rel rel;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rational value;           // optimal objective (including the constant)
  std::vector<Rational> x;  // optimal point in original coordinates
};

/// Minimize c.x + c0 over the given constraints with componentwise lower
/// bounds x >= lower (every variable must be bounded below).
LpResult lp_minimize(const std::vector<Rational>& c, const Rational& c0,
                     const std::vector<LinConstraint>& constraints,
                     const std::vector<Rational>& lower);

/// Feasibility of the system alone.
bool lp_feasible(const std::vector<LinConstraint>& constraints,
                 const std::vector<Rational>& lower);

}  // namespace adjlab
