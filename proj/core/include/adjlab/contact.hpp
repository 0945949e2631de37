// Contact loci in jet space, the truncation-image stabilization probe,
// and the order-additivity check along arcs on a sliced subscheme.
#pragma once

#include "adjlab/defect.hpp"
#include "adjlab/fiber.hpp"

namespace adjlab {

struct ContactDimReport {
  int dim_ge_p = kDimEmpty;    // dim of { ord >= p }, kDimEmpty when empty
  int dim_ge_p1 = kDimEmpty;   // dim of { ord >= p+1 }; meaningful iff p+1 <= n+1
  bool next_known = false;     // p+1 <= n+1, so dim_ge_p1 was computed
  bool exact_unambiguous = false;  // dim_ge_p > dim_ge_p1
};

/// Dimension of the locus of level-n jets of the ambient space with
/// ord(I) >= p and base point in V(Z). Monomial inputs take an exact
/// stratification fast path; the general path is the Groebner dimension
/// of the truncated coefficient ideal.
ContactDimReport contact_locus_dim(const Ideal& I, std::size_t p, std::size_t n,
                                   const Ideal& Z, const GroebnerBudget& budget = {},
                                   bool allow_fast_path = true);

struct StabilizationReport {
  bool observed = false;
  std::size_t stable_at = 0;  // least m with image(m) == image(m+1)
  std::vector<std::string> image_strings;  // canonical strings of the stable image
};

/// Elimination images pi_nm(J_m Y) in the level-n jet ring for
/// m = n..m_hi; reports the first m whose image equals the next one.
StabilizationReport image_stabilization_probe(const AffineSubscheme& Y,
                                              std::size_t n, std::size_t m_hi,
                                              const GroebnerBudget& budget = {});

/// Ideal of the image pi_nm(J_m Y) inside the level-n jet ring.
Ideal truncation_image(const AffineSubscheme& Y, std::size_t n, std::size_t m,
                       const GroebnerBudget& budget = {});

enum class CheckStatus { Pass, Fail, Inconclusive };

struct AdditivityReport {
  OrderValue lhs;       // ord of J'_Y O_X along the arc
  OrderValue rhs;       // ord(J_rX-candidate)/r + ord(O_X(-rD^Y))/r
  CheckStatus status = CheckStatus::Inconclusive;
};

/// ord_{J'_Y} = ord_{J_X} + ord_{D^Y} along arcs on X, at the declared
/// precision; truncation-limited comparisons report Inconclusive.
AdditivityReport order_additivity_check(const AffineSubscheme& X,
                                        const LciSlice& Y, std::uint32_t r,
                                        const TruncatedArc& arc,
                                        const SliceOptions& opts = {});

}  // namespace adjlab
