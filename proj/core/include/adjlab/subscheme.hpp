// Closed affine subschemes of a smooth ambient space. Ideals "on X" are
// represented throughout as ambient ideals containing I_X; operations in
// the coordinate ring of X are ambient operations followed by adding I_X.
#pragma once

#include <optional>

#include "adjlab/ideal_ops.hpp"

namespace adjlab {

class AffineSubscheme {
public:
  explicit AffineSubscheme(Ideal defining, const GroebnerBudget& budget = {});

  const RingPtr& ambient() const { return ideal_.ring(); }
  const Ideal& ideal() const { return ideal_; }
  int dimension() const { return dim_; }
  int codimension() const { return static_cast<int>(ambient()->arity()) - dim_; }

  /// Image of an ambient ideal in O_X: the ambient ideal plus I_X.
  Ideal on_x(const Ideal& J) const { return ideal_sum(J, ideal_); }

private:
  Ideal ideal_;
  int dim_;
};

}  // namespace adjlab
