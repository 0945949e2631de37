#include "adjlab/subscheme.hpp"

namespace adjlab {

AffineSubscheme::AffineSubscheme(Ideal defining, const GroebnerBudget& budget)
    : ideal_(std::move(defining)), dim_(0) {
  if (ideal_.is_unit(budget))
    throw std::invalid_argument("AffineSubscheme: defining ideal is the unit ideal");
  dim_ = krull_dimension(ideal_, budget);
}

}  // namespace adjlab
